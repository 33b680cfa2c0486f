//! Certified real-zero isolation for Krawtchouk (real parameter M) and
//! Meixner (c < 0) polynomials.
//!
//! The sturm route scans the integer mesh 0..⌈γ⌉−1 (γ = M + 1), counts sign
//! variations exactly, converts each variation into an isolating bracket
//! with a strict exact sign change, and refines by bisection: exact
//! rational midpoints while the bracket is wider than 10⁻⁶, floats below.
//! Interior mesh points that are themselves zeros are handled by splitting
//! at i ± 1/2: the sign-variation structure guarantees both half signs are
//! strict and opposite.
//!
//! The jacobi route builds the monic three-term recurrence, checks the
//! product coefficients λ_k > 0 exactly, and computes the eigenvalues of the
//! symmetrised tridiagonal matrix by bisection on its Sturm pivot count.
//! `Method::Both` runs the two routes and enforces elementwise agreement
//! within 10⁻⁹.

use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{One, ToPrimitive, Zero};

use crate::hypgeo::{self, Family, HypgeoError, PolySpec};
use crate::scalar::{ExactScalar, Scalar, ScalarError};

/// Agreement required between the sturm and jacobi routes under
/// [`Method::Both`].
pub const CROSS_CHECK_TOL: f64 = 1e-9;

/// Bracket width below which bisection switches from exact rational
/// midpoints to floats.
const FLOAT_HANDOFF_NUM: i64 = 1;
const FLOAT_HANDOFF_DEN: i64 = 1_000_000;

/// Half-width of the informational brackets attached to jacobi-route zeros.
const JACOBI_BRACKET_PAD: f64 = 1e-10;

/// Zero-finding failures.
#[derive(Clone, Debug, PartialEq)]
pub enum ZerosError {
    /// The spec violates the regime whose guarantees the operation relies
    /// on; the message names the condition.
    Regime {
        /// Human-readable regime condition, e.g. `requires c<0 and beta<1-n`.
        condition: &'static str,
    },
    /// The default mesh exceeds the scan guard; the jacobi method has no
    /// mesh and should be used instead.
    MeshTooLarge {
        /// Mesh size the spec would need.
        mesh: u64,
        /// Active guard value.
        limit: u64,
    },
    /// The mesh scan found a different number of sign variations than the
    /// degree; the spec is outside the theorem regime or an internal
    /// invariant was broken.
    VariationCountMismatch {
        /// Degree n (expected variation count).
        expected: usize,
        /// Variations actually counted.
        found: usize,
    },
    /// The sign sequence violated generalised-Sturmian structure
    /// (vanishing end value, two consecutive zero entries, an undecidable
    /// half-point split, or stalled refinement).
    SturmStructure(&'static str),
    /// A recurrence product λ_k is not strictly positive, so the
    /// Jacobi-matrix route does not guarantee real roots.
    NonPositiveLambda {
        /// 1-based index k of the offending λ_k.
        index: usize,
    },
    /// Sturm and jacobi results disagree beyond [`CROSS_CHECK_TOL`].
    CrossCheck {
        /// 0-based zero index.
        index: usize,
        /// Sturm-refined value.
        sturm: f64,
        /// Jacobi eigenvalue.
        jacobi: f64,
    },
    /// The bracket handed to `refine` has no strict exact sign change.
    InvalidBracket,
    /// Tolerance is not a finite positive number, or a step is not positive.
    InvalidTolerance,
    /// An exact value escaped the finite double range.
    Overflow,
    /// Evaluation error bubbled up from the hypergeometric layer.
    Hypgeo(HypgeoError),
}

impl fmt::Display for ZerosError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZerosError::Regime { condition } => write!(f, "regime violation: {condition}"),
            ZerosError::MeshTooLarge { mesh, limit } => write!(
                f,
                "mesh of {mesh} points exceeds the scan guard {limit}; use the jacobi method"
            ),
            ZerosError::VariationCountMismatch { expected, found } => write!(
                f,
                "expected {expected} sign variations on the default mesh, found {found}"
            ),
            ZerosError::SturmStructure(what) => {
                write!(f, "sign sequence violates Sturmian structure: {what}")
            }
            ZerosError::NonPositiveLambda { index } => write!(
                f,
                "recurrence product lambda_{index} is not positive; jacobi route refused"
            ),
            ZerosError::CrossCheck { index, sturm, jacobi } => write!(
                f,
                "methods disagree at zero {index}: sturm {sturm} vs jacobi {jacobi}"
            ),
            ZerosError::InvalidBracket => {
                write!(f, "bracket endpoints do not have a strict exact sign change")
            }
            ZerosError::InvalidTolerance => write!(f, "tolerance must be finite and positive"),
            ZerosError::Overflow => write!(f, "value escaped the finite double range"),
            ZerosError::Hypgeo(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ZerosError {}

impl From<HypgeoError> for ZerosError {
    fn from(e: HypgeoError) -> Self {
        ZerosError::Hypgeo(e)
    }
}

impl From<ScalarError> for ZerosError {
    fn from(_: ScalarError) -> Self {
        ZerosError::Overflow
    }
}

/// Zero-finding method selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Mesh scan + certified bisection (exact signs).
    Sturm,
    /// Jacobi-matrix eigenvalues (floats, exact λ positivity check).
    Jacobi,
    /// Both, cross-checked within [`CROSS_CHECK_TOL`]; the sturm result is
    /// returned, decorated with the jacobi values.
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Sturm => write!(f, "sturm"),
            Method::Jacobi => write!(f, "jacobi"),
            Method::Both => write!(f, "both"),
        }
    }
}

/// Tuning knobs for the zero finder.
#[derive(Clone, Debug)]
pub struct ZeroOptions {
    /// Bisection stops when the bracket is narrower than this (absolute).
    pub tol: f64,
    /// Refuse sturm mesh scans longer than this many points.
    pub max_mesh: u64,
}

impl Default for ZeroOptions {
    fn default() -> Self {
        ZeroOptions {
            tol: 1e-12,
            max_mesh: 1_000_000,
        }
    }
}

/// Polynomial values on the integer mesh 0..=N plus the variation count.
///
/// `variations` counts strict sign changes, skipping zero entries; in the
/// theorem regime Lemma 1 rules out two consecutive zero entries.
#[derive(Clone, Debug)]
pub struct SignSequence<S> {
    /// K_n(i) for i = 0..=mesh_end.
    pub values: Vec<S>,
    /// V(γ), the number of strict sign changes with zeros skipped.
    pub variations: usize,
}

impl<S> SignSequence<S> {
    /// Last mesh index N.
    pub fn mesh_end(&self) -> u64 {
        self.values.len() as u64 - 1
    }
}

/// An isolating interval with a strict exact sign change at its endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    /// Lower endpoint.
    pub lo: ExactScalar,
    /// Upper endpoint.
    pub hi: ExactScalar,
}

/// One certified zero: an exact bracket with verified opposite signs, the
/// float refinement inside it, and the Lemma-1 sign product at refined ± 1.
#[derive(Clone, Debug)]
pub struct CertifiedZero {
    /// Exact lower bracket endpoint (strict sign change against `bracket_hi`).
    pub bracket_lo: ExactScalar,
    /// Exact upper bracket endpoint.
    pub bracket_hi: ExactScalar,
    /// Bisection refinement of the zero.
    pub refined: f64,
    /// sign(K(r−1))·sign(K(r+1)) evaluated exactly at the rationalised
    /// refinement; `None` when not computed (jacobi-route zeros). Lemma 1
    /// predicts −1 at a true zero in regime.
    pub lemma1_product_sign: Option<i8>,
}

/// Certified zeros of one spec, ascending.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    /// The spec the zeros belong to (the original Meixner spec when the
    /// query was routed through the Krawtchouk substitution).
    pub spec: PolySpec<ExactScalar>,
    /// Zeros in ascending order with pairwise-disjoint brackets.
    pub zeros: Vec<CertifiedZero>,
    /// Route that produced the result.
    pub method: Method,
    /// Jacobi eigenvalues recorded by the `Both` cross-check.
    pub jacobi_cross: Option<Vec<f64>>,
}

impl ZeroSet {
    /// Refined zero values, ascending.
    pub fn refined(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.refined).collect()
    }
}

/// Monic three-term recurrence coefficients
/// `p_{k+1}(x) = (x − b_k) p_k(x) − λ_k p_{k−1}(x)`.
///
/// For Krawtchouk, λ_k = k·p·(1−p)·(M+1−k), the product whose positivity
/// the Favard argument needs; for Meixner, λ_k = k(k+β−1)c/(1−c)². Both are
/// validated against the series evaluator by the test suites.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoeffs<S> {
    /// Diagonal b_0..b_{n−1}.
    pub b: Vec<S>,
    /// Products λ_1..λ_{n−1}.
    pub lambda: Vec<S>,
}

/// Result of the n = N interlacing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterlacingOutcome {
    /// Every zero satisfies i−1 < x_i < i.
    Holds,
    /// Some zero escapes its unit interval (names the 1-based index).
    Violated {
        /// First offending 1-based zero index.
        index: usize,
    },
    /// Preconditions not met (needs Krawtchouk, integer M = N, n = N);
    /// deliberately distinct from a `false` verdict.
    NotApplicable {
        /// Which precondition failed.
        reason: &'static str,
    },
}

/// Default mesh end ⌈γ⌉ − 1 for a Krawtchouk spec (γ = M + 1), guarded by
/// `max_mesh`.
pub fn default_mesh_end(
    spec: &PolySpec<ExactScalar>,
    max_mesh: u64,
) -> Result<u64, ZerosError> {
    let Family::Krawtchouk { m, .. } = spec.family() else {
        return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" }.into());
    };
    let gamma = m.clone() + ExactScalar::one();
    let end = gamma.ceil_int() - num_bigint::BigInt::one();
    if end.sign() == num_bigint::Sign::Minus {
        return Err(ZerosError::SturmStructure("mesh is empty (gamma < 1)"));
    }
    let end = end.to_u64().ok_or(ZerosError::MeshTooLarge {
        mesh: u64::MAX,
        limit: max_mesh,
    })?;
    if end > max_mesh {
        return Err(ZerosError::MeshTooLarge {
            mesh: end,
            limit: max_mesh,
        });
    }
    Ok(end)
}

/// Values of K_n on the integer mesh 0..=mesh_end with the variation count
/// V(γ). Exact under [`ExactScalar`]; float signs in sweep mode.
pub fn sturm_sequence<S: Scalar>(
    spec: &PolySpec<S>,
    mesh_end: u64,
) -> Result<SignSequence<S>, ZerosError> {
    if !matches!(spec.family(), Family::Krawtchouk { .. }) {
        return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" }.into());
    }
    let mut values = Vec::with_capacity(mesh_end as usize + 1);
    for i in 0..=mesh_end {
        values.push(hypgeo::eval(spec, &S::from_int(i as i64))?);
    }
    let variations = count_sign_variations(&values);
    Ok(SignSequence { values, variations })
}

/// Strict sign changes in a sequence, zero entries skipped.
pub fn count_sign_variations<S: Scalar>(values: &[S]) -> usize {
    let mut variations = 0;
    let mut last: Option<i8> = None;
    for v in values {
        let s = v.sign();
        if s != 0 {
            if let Some(prev) = last {
                if prev != s {
                    variations += 1;
                }
            }
            last = Some(s);
        }
    }
    variations
}

/// Exactly n pairwise-disjoint isolating brackets for a Krawtchouk spec in
/// the theorem regime.
///
/// Each bracket is an integer unit interval, or an i ± 1/2 interval around
/// a mesh point that is itself a zero. Every bracket endpoint pair has a
/// strict exact sign change.
pub fn isolate(
    spec: &PolySpec<ExactScalar>,
    opts: &ZeroOptions,
) -> Result<Vec<Bracket>, ZerosError> {
    if !matches!(spec.family(), Family::Krawtchouk { .. }) {
        return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" }.into());
    }
    if !spec.theorem_regime() {
        return Err(ZerosError::Regime {
            condition: "requires 0<p<1 and M>n-1",
        });
    }
    let n = spec.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mesh_end = default_mesh_end(spec, opts.max_mesh)?;
    let seq = sturm_sequence(spec, mesh_end)?;
    if seq.variations != n {
        return Err(ZerosError::VariationCountMismatch {
            expected: n,
            found: seq.variations,
        });
    }
    let signs: Vec<i8> = seq.values.iter().map(|v| v.sign()).collect();
    let last = signs.len() - 1;
    if signs[0] == 0 || signs[last] == 0 {
        return Err(ZerosError::SturmStructure("end value of the mesh is zero"));
    }

    let half = ExactScalar::from_ratio(1, 2).expect("2 != 0");
    let mut brackets = Vec::with_capacity(n);
    let mut i = 0usize;
    while i < last {
        if signs[i + 1] == 0 {
            // zero exactly at mesh point i+1 (interior: ends are nonzero)
            if i + 2 > last || signs[i + 2] == 0 {
                return Err(ZerosError::SturmStructure("two consecutive mesh zeros"));
            }
            if signs[i] == signs[i + 2] {
                return Err(ZerosError::SturmStructure(
                    "neighbors of a mesh zero do not differ in sign",
                ));
            }
            let center = ExactScalar::from_int((i + 1) as i64);
            let lo = &center - &half;
            let hi = &center + &half;
            let s_lo = hypgeo::eval(spec, &lo)?.sign();
            let s_hi = hypgeo::eval(spec, &hi)?.sign();
            if s_lo == 0 || s_hi == 0 || s_lo == s_hi {
                return Err(ZerosError::SturmStructure(
                    "half-point split is not a strict sign change",
                ));
            }
            brackets.push(Bracket { lo, hi });
            i += 2;
        } else if signs[i] != signs[i + 1] {
            brackets.push(Bracket {
                lo: ExactScalar::from_int(i as i64),
                hi: ExactScalar::from_int((i + 1) as i64),
            });
            i += 1;
        } else {
            i += 1;
        }
    }
    if brackets.len() != n {
        return Err(ZerosError::VariationCountMismatch {
            expected: n,
            found: brackets.len(),
        });
    }
    Ok(brackets)
}

fn lemma1_product_sign(
    spec: &PolySpec<ExactScalar>,
    at: &ExactScalar,
) -> Result<i8, ZerosError> {
    let one = ExactScalar::one();
    let left = hypgeo::eval(spec, &(at - &one))?.sign();
    let right = hypgeo::eval(spec, &(at + &one))?.sign();
    Ok(left * right)
}

/// Bisection refinement inside a certified bracket.
///
/// Endpoint signs are re-verified exactly at every rational midpoint while
/// the bracket is wider than 10⁻⁶; float signs take over below, down to
/// `tol` (default 10⁻¹²). A rational midpoint that is itself a zero is
/// returned exactly, with a shrunken symmetric bracket re-certified around
/// it. The Lemma-1 product sign is filled by exact evaluation at
/// refined ± 1.
pub fn refine(
    spec: &PolySpec<ExactScalar>,
    bracket: &Bracket,
    tol: f64,
) -> Result<CertifiedZero, ZerosError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(ZerosError::InvalidTolerance);
    }
    let mut lo = bracket.lo.clone();
    let mut hi = bracket.hi.clone();
    if lo >= hi {
        return Err(ZerosError::InvalidBracket);
    }
    let s_lo = hypgeo::eval(spec, &lo)?.sign();
    let s_hi = hypgeo::eval(spec, &hi)?.sign();
    if s_lo == 0 || s_hi == 0 || s_lo == s_hi {
        return Err(ZerosError::InvalidBracket);
    }

    let tol_exact = ExactScalar::from_f64_exact(tol).ok_or(ZerosError::InvalidTolerance)?;
    let handoff = ExactScalar::from_ratio(FLOAT_HANDOFF_NUM, FLOAT_HANDOFF_DEN).expect("nonzero");
    let half = ExactScalar::from_ratio(1, 2).expect("nonzero");

    // exact phase
    let mut exact_zero: Option<ExactScalar> = None;
    while {
        let width = &hi - &lo;
        width > handoff && width > tol_exact
    } {
        let mid = (&lo + &hi) * half.clone();
        let s = hypgeo::eval(spec, &mid)?.sign();
        if s == 0 {
            exact_zero = Some(mid);
            break;
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    if let Some(zero) = exact_zero {
        // the midpoint is the zero, exactly: re-certify a symmetric bracket
        let quarter = ExactScalar::from_ratio(1, 4).expect("nonzero");
        let mut delta = (&hi - &lo) * quarter;
        let tol_half = &tol_exact * &half;
        for _ in 0..10_000 {
            if delta <= tol_half {
                let lo = &zero - &delta;
                let hi = &zero + &delta;
                let s_l = hypgeo::eval(spec, &lo)?.sign();
                let s_r = hypgeo::eval(spec, &hi)?.sign();
                if s_l != 0 && s_r != 0 && s_l != s_r {
                    let refined = zero.to_real()?;
                    let lemma1 = lemma1_product_sign(spec, &zero)?;
                    return Ok(CertifiedZero {
                        bracket_lo: lo,
                        bracket_hi: hi,
                        refined,
                        lemma1_product_sign: Some(lemma1),
                    });
                }
            }
            delta = delta * half.clone();
        }
        return Err(ZerosError::SturmStructure(
            "refinement stalled around an exact rational zero",
        ));
    }

    // float phase inside the certified exact bracket; the series cancels
    // catastrophically near a zero, so a float sign is only trusted when the
    // value clears the rounding-noise bound, and the sign decision falls
    // back to exact evaluation at the (rational) midpoint otherwise
    let spec_f = spec.approx();
    let mut lo_f = lo.to_real()?;
    let mut hi_f = hi.to_real()?;
    while hi_f - lo_f > tol {
        let mid = 0.5 * (lo_f + hi_f);
        if mid <= lo_f || mid >= hi_f {
            break; // ulp floor
        }
        let (value, noise) = eval_with_noise_bound(&spec_f, mid);
        let s = if value.abs() > noise {
            value.sign()
        } else {
            let mid_exact = ExactScalar::from_f64_exact(mid).ok_or(ZerosError::Overflow)?;
            hypgeo::eval(spec, &mid_exact)?.sign()
        };
        if s == 0 {
            lo_f = mid;
            hi_f = mid;
            break;
        }
        if s == s_lo {
            lo_f = mid;
        } else {
            hi_f = mid;
        }
    }
    let refined = 0.5 * (lo_f + hi_f);
    let rationalised =
        ExactScalar::from_f64_exact(refined).ok_or(ZerosError::Overflow)?;
    let lemma1 = lemma1_product_sign(spec, &rationalised)?;
    Ok(CertifiedZero {
        bracket_lo: lo,
        bracket_hi: hi,
        refined,
        lemma1_product_sign: Some(lemma1),
    })
}

/// Float Krawtchouk value together with a bound on its accumulated rounding
/// noise (a multiple of ε times the series' absolute-term mass); when the
/// value is inside the noise band its sign cannot be trusted.
fn eval_with_noise_bound(spec: &PolySpec<f64>, x: f64) -> (f64, f64) {
    let Family::Krawtchouk { p, m } = spec.family() else {
        return (f64::NAN, f64::INFINITY);
    };
    let n = spec.degree();
    let z = 1.0 / p;
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut abs_mass = 1.0f64;
    let mut term = 1.0f64;
    for i in 0..n {
        let denom = -m + i as f64;
        term = term * (i as f64 - n as f64) * (-x + i as f64) * z / (denom * (i as f64 + 1.0));
        Scalar::add_assign_compensated(&mut sum, &mut comp, term);
        abs_mass += term.abs();
    }
    let mut prefactor = 1.0f64;
    for i in 0..n {
        prefactor *= -m + i as f64;
    }
    (prefactor * sum, 32.0 * f64::EPSILON * prefactor.abs() * abs_mass)
}

/// Monic recurrence coefficients for either family (empty for n = 0).
pub fn recurrence_coeffs<S: Scalar>(spec: &PolySpec<S>) -> RecurrenceCoeffs<S> {
    let n = spec.degree();
    let mut b = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n.saturating_sub(1));
    match spec.family() {
        Family::Krawtchouk { p, m } => {
            let one = S::one();
            for k in 0..n {
                let kk = S::from_int(k as i64);
                b.push(p.clone() * (m.clone() - kk.clone()) + kk * (one.clone() - p.clone()));
            }
            for k in 1..n {
                let kk = S::from_int(k as i64);
                lambda.push(
                    kk.clone()
                        * p.clone()
                        * (one.clone() - p.clone())
                        * (m.clone() + one.clone() - kk),
                );
            }
        }
        Family::Meixner { beta, c } => {
            let one = S::one();
            let one_minus_c = one.clone() - c.clone();
            for k in 0..n {
                let kk = S::from_int(k as i64);
                b.push(
                    (kk * (one.clone() + c.clone()) + beta.clone() * c.clone())
                        / one_minus_c.clone(),
                );
            }
            let denom = one_minus_c.clone() * one_minus_c.clone();
            for k in 1..n {
                let kk = S::from_int(k as i64);
                lambda.push(
                    kk.clone() * (kk + beta.clone() - one.clone()) * c.clone() / denom.clone(),
                );
            }
        }
    }
    RecurrenceCoeffs { b, lambda }
}

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal, by bisection on the Sturm pivot count.
fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64], rel_tol: f64) -> Vec<f64> {
    let n = diag.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut radius = 0.0;
        if i > 0 {
            radius += off[i - 1].abs();
        }
        if i < n - 1 {
            radius += off[i].abs();
        }
        lo = lo.min(diag[i] - radius);
        hi = hi.max(diag[i] + radius);
    }
    let pad = 1e-10 * (1.0 + lo.abs().max(hi.abs()));
    lo -= pad;
    hi += pad;
    for k in 0..n {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            if b - a <= rel_tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE) {
                break;
            }
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if count_eigenvalues_below(diag, off, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Number of eigenvalues strictly below x: negative pivots of the LDLᵀ
/// factorisation of T − xI.
fn count_eigenvalues_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0f64;
    for i in 0..diag.len() {
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        pivot = (diag[i] - x) - e2 / pivot;
        if pivot == 0.0 {
            pivot = -f64::MIN_POSITIVE;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Zeros as eigenvalues of the symmetrised Jacobi matrix (diagonal b_k,
/// off-diagonal √λ_k), each to relative accuracy 10⁻¹².
///
/// λ_k positivity is checked exactly first; a non-positive product means
/// the Favard argument does not apply and the route refuses.
pub fn jacobi_zeros(spec: &PolySpec<ExactScalar>) -> Result<ZeroSet, ZerosError> {
    let n = spec.degree();
    if n == 0 {
        return Ok(ZeroSet {
            spec: spec.clone(),
            zeros: Vec::new(),
            method: Method::Jacobi,
            jacobi_cross: None,
        });
    }
    let coeffs = recurrence_coeffs(spec);
    for (i, lk) in coeffs.lambda.iter().enumerate() {
        if lk.sign() <= 0 {
            return Err(ZerosError::NonPositiveLambda { index: i + 1 });
        }
    }
    let mut diag = Vec::with_capacity(n);
    for bk in &coeffs.b {
        let v = bk.to_real()?;
        diag.push(v);
    }
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for lk in &coeffs.lambda {
        off.push(lk.to_real()?.sqrt());
    }
    // a decade under the published 1e-12 relative contract, so downstream
    // absolute comparisons on moderate eigenvalues keep headroom
    let eigen = tridiagonal_eigenvalues(&diag, &off, 1e-13);
    let pad = ExactScalar::from_f64_exact(JACOBI_BRACKET_PAD).expect("finite pad");
    let zeros = eigen
        .iter()
        .map(|&v| {
            // exact padding keeps the brackets strict even where the float
            // spacing exceeds the pad
            let center = ExactScalar::from_f64_exact(v).ok_or(ZerosError::Overflow)?;
            Ok(CertifiedZero {
                bracket_lo: &center - &pad,
                bracket_hi: &center + &pad,
                refined: v,
                lemma1_product_sign: None,
            })
        })
        .collect::<Result<Vec<_>, ZerosError>>()?;
    Ok(ZeroSet {
        spec: spec.clone(),
        zeros,
        method: Method::Jacobi,
        jacobi_cross: None,
    })
}

fn regime_gate(spec: &PolySpec<ExactScalar>) -> Result<PolySpec<ExactScalar>, ZerosError> {
    match spec.family() {
        Family::Krawtchouk { .. } => {
            if !spec.theorem_regime() {
                return Err(ZerosError::Regime {
                    condition: "requires 0<p<1 and M>n-1",
                });
            }
            Ok(spec.clone())
        }
        Family::Meixner { .. } => {
            if !spec.corollary_regime() {
                return Err(ZerosError::Regime {
                    condition: "requires c<0 and beta<1-n",
                });
            }
            Ok(spec.to_krawtchouk()?)
        }
    }
}

/// Certified zeros with default options (tol 10⁻¹², mesh guard 10⁶).
pub fn zeros_of(spec: &PolySpec<ExactScalar>, method: Method) -> Result<ZeroSet, ZerosError> {
    zeros_of_opts(spec, method, &ZeroOptions::default())
}

/// Certified zeros of a spec in the theorem regime (Krawtchouk) or the
/// corollary regime (Meixner, routed through the parameter substitution).
pub fn zeros_of_opts(
    spec: &PolySpec<ExactScalar>,
    method: Method,
    opts: &ZeroOptions,
) -> Result<ZeroSet, ZerosError> {
    let scan_spec = regime_gate(spec)?;
    match method {
        Method::Sturm => {
            let zeros = sturm_route(&scan_spec, opts)?;
            Ok(ZeroSet {
                spec: spec.clone(),
                zeros,
                method: Method::Sturm,
                jacobi_cross: None,
            })
        }
        Method::Jacobi => jacobi_zeros(spec),
        Method::Both => {
            let sturm = sturm_route(&scan_spec, opts)?;
            let jacobi = jacobi_zeros(spec)?;
            let eigen: Vec<f64> = jacobi.zeros.iter().map(|z| z.refined).collect();
            for (i, (s, j)) in sturm.iter().zip(eigen.iter()).enumerate() {
                if (s.refined - j).abs() > CROSS_CHECK_TOL {
                    return Err(ZerosError::CrossCheck {
                        index: i,
                        sturm: s.refined,
                        jacobi: *j,
                    });
                }
            }
            Ok(ZeroSet {
                spec: spec.clone(),
                zeros: sturm,
                method: Method::Both,
                jacobi_cross: Some(eigen),
            })
        }
    }
}

fn sturm_route(
    spec: &PolySpec<ExactScalar>,
    opts: &ZeroOptions,
) -> Result<Vec<CertifiedZero>, ZerosError> {
    let brackets = isolate(spec, opts)?;
    brackets
        .iter()
        .map(|b| refine(spec, b, opts.tol))
        .collect()
}

/// n = N interlacing check against the chain 0 < x_1 < 1 < … < x_n < n.
///
/// Applicable only to Krawtchouk specs with integer M = N and degree
/// n = N; anything else reports `NotApplicable` rather than a verdict.
pub fn check_interlacing(zs: &ZeroSet) -> InterlacingOutcome {
    let Family::Krawtchouk { m, .. } = zs.spec.family() else {
        return InterlacingOutcome::NotApplicable {
            reason: "interlacing chain is stated for Krawtchouk specs",
        };
    };
    if !m.is_integer() {
        return InterlacingOutcome::NotApplicable {
            reason: "requires integer M = N",
        };
    }
    let n = zs.spec.degree();
    if m != &ExactScalar::from_int(n as i64) {
        return InterlacingOutcome::NotApplicable {
            reason: "requires degree n equal to N",
        };
    }
    for (idx, zero) in zs.zeros.iter().enumerate() {
        let i = (idx + 1) as f64;
        if !(zero.refined > i - 1.0 && zero.refined < i) {
            return InterlacingOutcome::Violated { index: idx + 1 };
        }
    }
    InterlacingOutcome::Holds
}

/// V(γ) sampled over γ = from, from+step, …, ≤ to (empty for from > to).
///
/// Each sample scans the mesh 0..⌈γ⌉−1 exactly. The range must lie in
/// (n, ∞) and p in (0, 1); constancy of V per unit interval is a test-level
/// assertion, not enforced here.
pub fn variation_profile(
    p: &ExactScalar,
    n: usize,
    from: &ExactScalar,
    to: &ExactScalar,
    step: &ExactScalar,
) -> Result<Vec<(ExactScalar, usize)>, ZerosError> {
    if from > to {
        return Ok(Vec::new());
    }
    if step.sign() <= 0 {
        return Err(ZerosError::InvalidTolerance);
    }
    if !(p > &ExactScalar::zero() && p < &ExactScalar::one()) {
        return Err(ZerosError::Regime {
            condition: "requires 0<p<1",
        });
    }
    if from <= &ExactScalar::from_int(n as i64) {
        return Err(ZerosError::Regime {
            condition: "gamma range must lie in (n, inf)",
        });
    }
    let guard = ZeroOptions::default().max_mesh;
    let one = ExactScalar::one();
    let mut out = Vec::new();
    let mut gamma = from.clone();
    while &gamma <= to {
        let spec = PolySpec::krawtchouk(p.clone(), &gamma - &one, n)?;
        let mesh_end = default_mesh_end(&spec, guard)?;
        let seq = sturm_sequence(&spec, mesh_end)?;
        out.push((gamma.clone(), seq.variations));
        gamma = &gamma + step;
    }
    Ok(out)
}
