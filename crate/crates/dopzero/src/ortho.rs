//! Orthogonality verification for both families.
//!
//! Krawtchouk sums are finite and evaluated exactly: every off-diagonal sum
//! with rational p is literally zero, no tolerance involved. The Meixner
//! relation
//!
//! ```text
//! Σ_{x≥0} (β)_x cˣ/x! · M_m(x) M_n(x) = (β)_n c⁻ⁿ n! / (1−c)^β · δ_mn
//! ```
//!
//! (β > 0, 0 < c < 1) is an infinite sum; terms are accumulated exactly and
//! truncation is controlled by a geometric tail bound: once the mesh point
//! has passed a Gershgorin bound on the zeros of both factors, the term
//! ratio is dominated by `c · max(1, (β+x)/(x+1)) · ((x+1)/x)^{m+n}`, and
//! summation stops when that ratio is below 1 and the implied geometric
//! tail is below tolerance.
//!
//! For β a positive integer and c > 1 the family is orthogonal with respect
//! to a positive measure on the points x = −β−y, y = 0, 1, …; the weight is
//! `(β)_y c^{−y}/y!` and the right-hand side is
//! `(β)_n c^{−m} n! / (1 − 1/c)^β δ_mn`. Both exponent candidates (c^{−m}
//! and c^{−n}) coincide on the diagonal, and both are recorded in the
//! report.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{One, ToPrimitive, Zero};

use crate::hypgeo::{self, HypgeoError, PolySpec};
use crate::scalar::{ExactScalar, Scalar};
use crate::zeros::recurrence_coeffs;

/// Hard cap on adaptively truncated series length.
const MAX_TERMS: u64 = 200_000;

/// Orthogonality-check failures.
#[derive(Clone, Debug, PartialEq)]
pub enum OrthoError {
    /// Parameters outside the regime of the requested relation; the message
    /// names the condition.
    Domain(&'static str),
    /// The tail bound did not reach the tolerance within the term cap.
    TruncationFailure {
        /// Terms consumed before giving up.
        terms: u64,
    },
    /// Evaluation error from the hypergeometric layer.
    Hypgeo(HypgeoError),
}

impl fmt::Display for OrthoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthoError::Domain(what) => write!(f, "domain error: {what}"),
            OrthoError::TruncationFailure { terms } => write!(
                f,
                "tail bound not reached within {terms} terms; relax rel_tol or move c away from 1"
            ),
            OrthoError::Hypgeo(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OrthoError {}

impl From<HypgeoError> for OrthoError {
    fn from(e: HypgeoError) -> Self {
        OrthoError::Hypgeo(e)
    }
}

/// Which orthogonality relation a report belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoFamily {
    /// Finite Krawtchouk sum over x = 0..=N.
    Krawtchouk,
    /// Meixner Eq.-type sum, β > 0, 0 < c < 1.
    Meixner,
    /// Meixner c > 1 relation on the mass points −β−y.
    MeixnerCGreaterOne,
}

impl fmt::Display for OrthoFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthoFamily::Krawtchouk => write!(f, "krawtchouk"),
            OrthoFamily::Meixner => write!(f, "meixner"),
            OrthoFamily::MeixnerCGreaterOne => write!(f, "meixner_c_gt_1"),
        }
    }
}

/// Whether a sum was complete or adaptively truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// The sum has finitely many terms and all were taken.
    Finite,
    /// Adaptive truncation stopped after the given last included index.
    Truncated(u64),
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Finite => write!(f, "finite"),
            Truncation::Truncated(at) => write!(f, "{at}"),
        }
    }
}

/// One orthogonality check: computed sum, closed-form right side, residual
/// and truncation metadata.
///
/// `exact == true` implies the residual is exactly zero as a rational
/// identity (finite Krawtchouk sums). `residual` is
/// `|lhs − rhs| / max(1, |rhs|)` in doubles.
#[derive(Clone, Debug)]
pub struct OrthoReport {
    /// Relation the report belongs to.
    pub family: OrthoFamily,
    /// First degree.
    pub m: usize,
    /// Second degree.
    pub n: usize,
    /// Computed sum as a double.
    pub lhs: f64,
    /// Exact value of the computed sum when rational throughout.
    pub lhs_exact: Option<ExactScalar>,
    /// Closed-form right side as a double.
    pub rhs: f64,
    /// Exact right side when the exponent is an integer.
    pub rhs_exact: Option<ExactScalar>,
    /// Alternate-exponent candidate for the c > 1 relation (c^{−n} where
    /// the displayed form has c^{−m}); equal to `rhs` wherever δ_mn ≠ 0.
    pub rhs_alt: Option<f64>,
    /// `|lhs − rhs| / max(1, |rhs|)`.
    pub residual: f64,
    /// Truncation metadata.
    pub truncation: Truncation,
    /// True when lhs = rhs holds as an exact rational identity.
    pub exact: bool,
}

fn residual_of(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(1.0)
}

/// Closed-form value that is exact when its exponent is an integer.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    /// Double value (NaN when no real value exists, e.g. a negative base
    /// under a non-integer exponent).
    pub value: f64,
    /// Exact rational value when available.
    pub exact: Option<ExactScalar>,
}

/// Binomial weight w(x; p, N) = C(N, x) pˣ (1−p)^{N−x}, exact.
///
/// Positive at every mass point for 0 < p < 1; errors when x > N.
pub fn krawtchouk_weight(
    x: u64,
    p: &ExactScalar,
    n_points: u64,
) -> Result<ExactScalar, OrthoError> {
    if x > n_points {
        return Err(OrthoError::Domain("weight requires 0 <= x <= N"));
    }
    let binom = num_integer::binomial(BigInt::from(n_points), BigInt::from(x));
    let one_minus_p = ExactScalar::one() - p.clone();
    Ok(ExactScalar::from_big(num_rational::BigRational::from_integer(binom))
        * p.powi(x as i32)
        * one_minus_p.powi((n_points - x) as i32))
}

/// Finite Krawtchouk orthogonality sum Σ w(x) K_m(x) K_n(x), exact.
///
/// Off-diagonal closed form is 0; no diagonal closed form is asserted for
/// this normalisation, so diagonal reports carry rhs = lhs.
pub fn krawtchouk_ortho_sum(
    m: usize,
    n: usize,
    p: &ExactScalar,
    n_points: u64,
) -> Result<OrthoReport, OrthoError> {
    if m as u64 > n_points || n as u64 > n_points {
        return Err(OrthoError::Domain("requires m <= N and n <= N"));
    }
    if !(p > &ExactScalar::zero() && p < &ExactScalar::one()) {
        return Err(OrthoError::Domain("requires 0 < p < 1"));
    }
    let m_big = ExactScalar::from_int(n_points as i64);
    let spec_m = PolySpec::krawtchouk(p.clone(), m_big.clone(), m)?;
    let spec_n = PolySpec::krawtchouk(p.clone(), m_big, n)?;

    // incremental weight: w(x+1) = w(x) · (N−x)/(x+1) · p/(1−p)
    let one_minus_p = ExactScalar::one() - p.clone();
    let mut weight = one_minus_p.powi(n_points as i32);
    let mut lhs = ExactScalar::zero();
    for x in 0..=n_points {
        let xe = ExactScalar::from_int(x as i64);
        let product = hypgeo::eval(&spec_m, &xe)? * hypgeo::eval(&spec_n, &xe)?;
        lhs = lhs + weight.clone() * product;
        if x < n_points {
            weight = weight * ExactScalar::from_int((n_points - x) as i64) * p.clone()
                / (ExactScalar::from_int(x as i64 + 1) * one_minus_p.clone());
        }
    }
    let lhs_f = lhs.approx_f64();
    let (rhs, rhs_exact) = if m == n {
        (lhs_f, Some(lhs.clone()))
    } else {
        (0.0, Some(ExactScalar::zero()))
    };
    Ok(OrthoReport {
        family: OrthoFamily::Krawtchouk,
        m,
        n,
        lhs: lhs_f,
        lhs_exact: Some(lhs),
        rhs,
        rhs_exact,
        rhs_alt: None,
        residual: residual_of(lhs_f, rhs),
        truncation: Truncation::Finite,
        exact: true,
    })
}

/// Eq.-(1)-style closed form (β)_n c⁻ⁿ n! / (1−c)^β.
///
/// Exact when β is an integer; float exponentiation otherwise. Requires
/// c ∉ {0, 1} (asserted).
pub fn meixner_rhs(n: usize, beta: &ExactScalar, c: &ExactScalar) -> ClosedForm {
    assert!(c != &ExactScalar::one(), "closed form requires c != 1");
    assert!(!c.is_zero(), "closed form requires c != 0");
    let core = hypgeo::pochhammer(beta, n)
        * c.powi(-(n as i32))
        * hypgeo::pochhammer(&ExactScalar::one(), n);
    let one_minus_c = ExactScalar::one() - c.clone();
    if beta.is_integer() {
        if let Some(b) = beta.numer().to_i32() {
            let exact = core * one_minus_c.powi(-b);
            let value = exact.approx_f64();
            return ClosedForm {
                value,
                exact: Some(exact),
            };
        }
    }
    let value = core.approx_f64() * one_minus_c.approx_f64().powf(-beta.approx_f64());
    ClosedForm { value, exact: None }
}

/// Upper bound on the zeros of a spec's polynomial from the Gershgorin
/// discs of its Jacobi matrix; 0 for degree 0.
fn zero_upper_bound(spec: &PolySpec<ExactScalar>) -> f64 {
    let co = recurrence_coeffs(spec);
    if co.b.is_empty() {
        return 0.0;
    }
    let off: Vec<f64> = co
        .lambda
        .iter()
        .map(|l| l.approx_f64().abs().sqrt())
        .collect();
    let mut hi = f64::NEG_INFINITY;
    for (i, b) in co.b.iter().enumerate() {
        let mut radius = 0.0;
        if i > 0 {
            radius += off[i - 1];
        }
        if i < off.len() {
            radius += off[i];
        }
        hi = hi.max(b.approx_f64() + radius);
    }
    hi.max(0.0)
}

struct TailState {
    /// Mesh index below which the stopping rule stays inactive.
    start: f64,
    /// Geometric base of the measure (c, or 1/c for the c > 1 relation).
    base: f64,
    beta: f64,
    poly_degree: i32,
    rel_tol: f64,
}

impl TailState {
    /// True when the geometric tail after index x is provably below
    /// rel_tol · max(1, |partial|).
    fn done(&self, x: u64, term_abs: f64, partial_abs: f64) -> bool {
        let xf = x as f64;
        if xf < self.start || xf < 1.0 {
            return false;
        }
        let ratio = self.base
            * ((self.beta + xf) / (xf + 1.0)).max(1.0)
            * ((xf + 1.0) / xf).powi(self.poly_degree);
        if ratio >= 1.0 {
            return false;
        }
        let tail = term_abs * ratio / (1.0 - ratio);
        tail <= self.rel_tol * partial_abs.max(1.0)
    }
}

/// Meixner orthogonality sum, β > 0 and 0 < c < 1, adaptively truncated.
///
/// Terms are exact; truncation stops once the geometric tail bound drops
/// below `rel_tol · max(1, |partial|)`. The right side uses [`meixner_rhs`]
/// (float exponentiation for non-integer β).
pub fn meixner_ortho_sum(
    m: usize,
    n: usize,
    beta: &ExactScalar,
    c: &ExactScalar,
    rel_tol: f64,
) -> Result<OrthoReport, OrthoError> {
    if beta.sign() <= 0 {
        return Err(OrthoError::Domain("requires beta > 0"));
    }
    if !(c > &ExactScalar::zero() && c < &ExactScalar::one()) {
        return Err(OrthoError::Domain("requires 0 < c < 1"));
    }
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(OrthoError::Domain("rel_tol must be finite and positive"));
    }
    let spec_m = PolySpec::meixner(beta.clone(), c.clone(), m)?;
    let spec_n = PolySpec::meixner(beta.clone(), c.clone(), n)?;
    let tail = TailState {
        start: zero_upper_bound(&spec_m).max(zero_upper_bound(&spec_n)) + 1.0,
        base: c.approx_f64(),
        beta: beta.approx_f64(),
        poly_degree: (m + n) as i32,
        rel_tol,
    };

    // weight (β)_x c^x / x!: w(0) = 1, w(x+1) = w(x)(β+x)c/(x+1)
    let mut weight = ExactScalar::one();
    let mut lhs = ExactScalar::zero();
    let mut x = 0u64;
    let stopped_at;
    loop {
        let xe = ExactScalar::from_int(x as i64);
        let term =
            weight.clone() * hypgeo::eval(&spec_m, &xe)? * hypgeo::eval(&spec_n, &xe)?;
        lhs = lhs + term.clone();
        if tail.done(x, term.approx_f64().abs(), lhs.approx_f64().abs()) {
            stopped_at = x;
            break;
        }
        if x >= MAX_TERMS {
            return Err(OrthoError::TruncationFailure { terms: x });
        }
        weight = weight * (beta.clone() + xe) * c.clone()
            / ExactScalar::from_int(x as i64 + 1);
        x += 1;
    }

    let lhs_f = lhs.approx_f64();
    let closed = if m == n {
        meixner_rhs(n, beta, c)
    } else {
        ClosedForm {
            value: 0.0,
            exact: Some(ExactScalar::zero()),
        }
    };
    Ok(OrthoReport {
        family: OrthoFamily::Meixner,
        m,
        n,
        lhs: lhs_f,
        lhs_exact: Some(lhs),
        rhs: closed.value,
        rhs_exact: closed.exact,
        rhs_alt: None,
        residual: residual_of(lhs_f, closed.value),
        truncation: Truncation::Truncated(stopped_at),
        exact: false,
    })
}

fn cgt1_rhs(poch_degree: usize, exponent_degree: usize, beta: u32, c: &ExactScalar) -> ExactScalar {
    let beta_e = ExactScalar::from_int(beta as i64);
    let one_minus_inv_c = ExactScalar::one() - ExactScalar::one() / c.clone();
    hypgeo::pochhammer(&beta_e, poch_degree)
        * c.powi(-(exponent_degree as i32))
        * hypgeo::pochhammer(&ExactScalar::one(), poch_degree)
        * one_minus_inv_c.powi(-(beta as i32))
}

/// Meixner orthogonality for β a positive integer and c > 1, on the mass
/// points x = −β − y.
///
/// Computed via the substitution y = −β − x ≥ 0 with weight
/// `(β)_y c^{−y}/y!` (positive, geometrically decaying), adaptively
/// truncated. The displayed right side carries c^{−m}; the c^{−n} candidate
/// is recorded in `rhs_alt`, and δ_mn makes the two coincide everywhere the
/// relation asserts a nonzero value.
pub fn meixner_ortho_sum_cgt1(
    m: usize,
    n: usize,
    beta: u32,
    c: &ExactScalar,
    rel_tol: f64,
) -> Result<OrthoReport, OrthoError> {
    if beta == 0 {
        return Err(OrthoError::Domain("requires beta a positive integer"));
    }
    if c <= &ExactScalar::one() {
        return Err(OrthoError::Domain("requires c > 1"));
    }
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(OrthoError::Domain("rel_tol must be finite and positive"));
    }
    let beta_e = ExactScalar::from_int(beta as i64);
    let spec_m = PolySpec::meixner(beta_e.clone(), c.clone(), m)?;
    let spec_n = PolySpec::meixner(beta_e.clone(), c.clone(), n)?;
    // the zeros of M_k(−β−y; β, c) in y are the zeros of M_k(y; β, 1/c)
    let inv_c = ExactScalar::one() / c.clone();
    let mirror_m = PolySpec::meixner(beta_e.clone(), inv_c.clone(), m)?;
    let mirror_n = PolySpec::meixner(beta_e.clone(), inv_c.clone(), n)?;
    let tail = TailState {
        start: zero_upper_bound(&mirror_m).max(zero_upper_bound(&mirror_n)) + 1.0,
        base: inv_c.approx_f64(),
        beta: beta as f64,
        poly_degree: (m + n) as i32,
        rel_tol,
    };

    // weight (β)_y c^{−y} / y!: w(0) = 1, w(y+1) = w(y)(β+y)/((y+1)c)
    let mut weight = ExactScalar::one();
    let mut lhs = ExactScalar::zero();
    let mut y = 0u64;
    let stopped_at;
    loop {
        let ye = ExactScalar::from_int(y as i64);
        let point = -(&beta_e) - ye.clone();
        let term =
            weight.clone() * hypgeo::eval(&spec_m, &point)? * hypgeo::eval(&spec_n, &point)?;
        lhs = lhs + term.clone();
        if tail.done(y, term.approx_f64().abs(), lhs.approx_f64().abs()) {
            stopped_at = y;
            break;
        }
        if y >= MAX_TERMS {
            return Err(OrthoError::TruncationFailure { terms: y });
        }
        weight = weight * (beta_e.clone() + ye)
            / (ExactScalar::from_int(y as i64 + 1) * c.clone());
        y += 1;
    }

    let lhs_f = lhs.approx_f64();
    let (rhs, rhs_exact, rhs_alt) = if m == n {
        let displayed = cgt1_rhs(n, m, beta, c);
        let alt = cgt1_rhs(n, n, beta, c);
        (displayed.approx_f64(), Some(displayed), Some(alt.approx_f64()))
    } else {
        (0.0, Some(ExactScalar::zero()), Some(0.0))
    };
    Ok(OrthoReport {
        family: OrthoFamily::MeixnerCGreaterOne,
        m,
        n,
        lhs: lhs_f,
        lhs_exact: Some(lhs),
        rhs,
        rhs_exact,
        rhs_alt,
        residual: residual_of(lhs_f, rhs),
        truncation: Truncation::Truncated(stopped_at),
        exact: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(krawtchouk_weight(0, &q("1/2"), 2).unwrap(), q("1/4"));
        assert_eq!(krawtchouk_weight(1, &q("1/2"), 2).unwrap(), q("1/2"));
        let total: ExactScalar = (0..=5)
            .map(|x| krawtchouk_weight(x, &q("1/3"), 5).unwrap())
            .fold(ExactScalar::zero(), |acc, w| acc + w);
        assert_eq!(total, q("1"));
        assert!(krawtchouk_weight(3, &q("1/2"), 2).is_err());
    }

    #[test]
    fn krawtchouk_off_diagonal_sums_are_exactly_zero() {
        for (m, n) in [(0, 1), (1, 2), (0, 2)] {
            let report = krawtchouk_ortho_sum(m, n, &q("1/2"), 2).unwrap();
            assert_eq!(report.lhs_exact, Some(ExactScalar::zero()));
            assert_eq!(report.residual, 0.0);
            assert!(report.exact);
            assert_eq!(report.truncation, Truncation::Finite);
        }
    }

    #[test]
    fn krawtchouk_diagonal_observations() {
        // m = n = 0: the weights sum to 1
        let report = krawtchouk_ortho_sum(0, 0, &q("2/3"), 4).unwrap();
        assert_eq!(report.lhs_exact, Some(q("1")));
        assert!(report.exact);
        // diagonal sums are strictly positive
        for k in 0..=4usize {
            let report = krawtchouk_ortho_sum(k, k, &q("1/3"), 4).unwrap();
            assert_eq!(report.lhs_exact.unwrap().sign(), 1);
        }
    }

    #[test]
    fn krawtchouk_domain_errors() {
        assert!(krawtchouk_ortho_sum(3, 1, &q("1/2"), 2).is_err());
        assert!(krawtchouk_ortho_sum(0, 1, &q("3/2"), 2).is_err());
    }

    #[test]
    fn meixner_rhs_examples() {
        let r = meixner_rhs(0, &q("1"), &q("1/2"));
        assert_eq!(r.exact, Some(q("2")));
        let r = meixner_rhs(1, &q("1"), &q("1/2"));
        assert_eq!(r.exact, Some(q("4")));
        let r = meixner_rhs(0, &q("2"), &q("1/2"));
        assert_eq!(r.exact, Some(q("4")));
        // non-integer beta falls back to float exponentiation
        let r = meixner_rhs(0, &q("5/2"), &q("1/2"));
        assert!(r.exact.is_none());
        assert!((r.value - 2.0f64.powf(2.5)).abs() < 1e-12);
    }

    #[test]
    fn meixner_diagonal_and_off_diagonal() {
        let report = meixner_ortho_sum(0, 0, &q("1"), &q("1/2"), 1e-12).unwrap();
        assert!((report.lhs - 2.0).abs() < 1e-11);
        assert_eq!(report.rhs_exact, Some(q("2")));
        assert!(report.residual < 1e-11);
        assert!(!report.exact);

        let report = meixner_ortho_sum(1, 1, &q("1"), &q("1/2"), 1e-12).unwrap();
        assert_eq!(report.rhs_exact, Some(q("4")));
        assert!(report.residual < 1e-11);

        let report = meixner_ortho_sum(0, 1, &q("1"), &q("1/2"), 1e-12).unwrap();
        assert_eq!(report.rhs, 0.0);
        assert!(report.lhs.abs() < 1e-11);
    }

    #[test]
    fn meixner_sum_is_symmetric_in_m_n() {
        let a = meixner_ortho_sum(1, 3, &q("5/2"), &q("1/4"), 1e-12).unwrap();
        let b = meixner_ortho_sum(3, 1, &q("5/2"), &q("1/4"), 1e-12).unwrap();
        assert_eq!(a.lhs_exact, b.lhs_exact);
    }

    #[test]
    fn meixner_truncation_soundness() {
        let tols = [1e-6, 5e-7, 2.5e-7, 1e-8, 1e-10];
        let mut prev: Option<(f64, f64)> = None;
        for &tol in &tols {
            let report = meixner_ortho_sum(2, 2, &q("5/2"), &q("3/4"), tol).unwrap();
            if let Some((prev_lhs, prev_tol)) = prev {
                assert!((report.lhs - prev_lhs).abs() <= prev_tol * prev_lhs.abs().max(1.0));
            }
            prev = Some((report.lhs, tol));
        }
    }

    #[test]
    fn meixner_domain_errors() {
        assert!(meixner_ortho_sum(0, 0, &q("-1"), &q("1/2"), 1e-10).is_err());
        assert!(meixner_ortho_sum(0, 0, &q("1"), &q("3/2"), 1e-10).is_err());
        assert!(meixner_ortho_sum(0, 0, &q("1"), &q("1/2"), 0.0).is_err());
        assert!(meixner_ortho_sum_cgt1(0, 0, 0, &q("2"), 1e-10).is_err());
        assert!(meixner_ortho_sum_cgt1(0, 0, 1, &q("1/2"), 1e-10).is_err());
    }

    #[test]
    fn cgt1_resolved_diagonal_fixture() {
        // beta = 1, c = 2, m = n = 0: lhs = Σ 2^{-y} = 2 and the closed form
        // (β)_0 c^0 0!/(1 − 1/c)^1 agrees
        let report = meixner_ortho_sum_cgt1(0, 0, 1, &q("2"), 1e-12).unwrap();
        assert_eq!(report.rhs_exact, Some(q("2")));
        assert_eq!(report.rhs_alt, Some(2.0));
        assert!(report.residual < 1e-11);
    }

    #[test]
    fn cgt1_off_diagonal_vanishes() {
        let report = meixner_ortho_sum_cgt1(0, 1, 2, &q("3"), 1e-12).unwrap();
        assert_eq!(report.rhs, 0.0);
        assert!(report.lhs.abs() < 1e-11);
        // diagonal c^{-m} and c^{-n} candidates coincide
        let report = meixner_ortho_sum_cgt1(2, 2, 2, &q("3"), 1e-12).unwrap();
        assert_eq!(Some(report.rhs), report.rhs_alt);
        assert!(report.residual < 1e-10);
    }
}
