//! Pochhammer symbols, terminating ₂F₁ series and the two polynomial
//! families.
//!
//! Meixner and Krawtchouk polynomials are evaluated from their
//! hypergeometric representations
//!
//! ```text
//! M_n(x; β, c) = (β)_n · ₂F₁(−n, −x; β; 1 − 1/c)
//! K_n(x; p, M) = (−M)_n · ₂F₁(−n, −x; −M; 1/p)
//! ```
//!
//! where `M` is the (possibly non-integer) Krawtchouk parameter, written
//! γ − 1 elsewhere in the crate. Three independent evaluation routes are
//! provided: the direct series ([`eval`]), propagation along the
//! second-order difference equation ([`eval_by_difference`]) and the Pfaff
//! reflection ([`pfaff_reflect`]). Under [`ExactScalar`][crate::ExactScalar]
//! arithmetic all three agree exactly, which the test suites exploit.
//!
//! The terminating-series convention: the sum runs i = 0..=n and the
//! denominator Pochhammer must be nonzero only through its first n factors
//! (`b + i ≠ 0` for `0 ≤ i ≤ n−1`). This resolves the 0/0 ambiguity when
//! both the degree and the denominator parameter are negative integers, as
//! happens for integer `M = N` with `n ≤ N`.

use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;

/// Errors from spec construction and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypgeoError {
    /// A family parameter takes a value the representation cannot evaluate
    /// (`p = 0` for Krawtchouk, `c ∈ {0, 1}` for Meixner).
    InvalidParameter(&'static str),
    /// The denominator Pochhammer vanishes before the truncation index.
    PochhammerDenominatorZero {
        /// First offset `i < n` with `b + i = 0`.
        index: usize,
    },
    /// The difference-equation coefficient `A(x)` vanished on the
    /// propagation path (`x = M` was crossed).
    PropagationSingular {
        /// Offset from the seed point at which propagation broke down.
        offset: usize,
    },
    /// The operation is defined for the other family.
    WrongFamily {
        /// Family the operation requires.
        expected: &'static str,
    },
    /// Parameter substitution left the admissible range
    /// (`meixner_to_krawtchouk` needs `c < 0` so that `p ∈ (0,1)`).
    SubstitutionOutOfRange,
    /// Floating evaluation overflowed to a non-finite value.
    NonFinite,
}

impl fmt::Display for HypgeoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypgeoError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            HypgeoError::PochhammerDenominatorZero { index } => write!(
                f,
                "denominator Pochhammer vanishes at offset {index} before the truncation index"
            ),
            HypgeoError::PropagationSingular { offset } => write!(
                f,
                "difference propagation singular: A(x) = 0 at offset {offset} (x = M on path)"
            ),
            HypgeoError::WrongFamily { expected } => {
                write!(f, "operation requires a {expected} spec")
            }
            HypgeoError::SubstitutionOutOfRange => write!(
                f,
                "substitution requires c < 0 (p = c/(c-1) must land in (0,1))"
            ),
            HypgeoError::NonFinite => write!(f, "floating evaluation overflowed"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HypgeoError {}

/// Polynomial family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family<S> {
    /// Meixner M_n(x; β, c).
    Meixner {
        /// Pochhammer parameter β.
        beta: S,
        /// Series parameter c; the representation needs c ∉ {0, 1}.
        c: S,
    },
    /// Krawtchouk K_n(x; p, M) with real parameter M = γ − 1.
    Krawtchouk {
        /// Bernoulli-style parameter p ≠ 0; the theorem regime is 0 < p < 1.
        p: S,
        /// Real mesh parameter M = γ − 1.
        m: S,
    },
}

/// A polynomial family tag plus its degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpec<S> {
    family: Family<S>,
    n: usize,
}

impl<S: Scalar> PolySpec<S> {
    /// Meixner spec. Requires c ∉ {0, 1} (the representation needs 1 − 1/c
    /// and the recurrence needs 1/(1 − c)).
    pub fn meixner(beta: S, c: S, n: usize) -> Result<Self, HypgeoError> {
        if c.is_zero() || c == S::one() {
            return Err(HypgeoError::InvalidParameter("Meixner requires c not in {0, 1}"));
        }
        Ok(PolySpec {
            family: Family::Meixner { beta, c },
            n,
        })
    }

    /// Krawtchouk spec. Requires p ≠ 0 (evaluation needs 1/p).
    pub fn krawtchouk(p: S, m: S, n: usize) -> Result<Self, HypgeoError> {
        if p.is_zero() {
            return Err(HypgeoError::InvalidParameter("Krawtchouk requires p != 0"));
        }
        Ok(PolySpec {
            family: Family::Krawtchouk { p, m },
            n,
        })
    }

    /// Family tag and parameters.
    pub fn family(&self) -> &Family<S> {
        &self.family
    }

    /// Degree n.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Theorem regime for Krawtchouk: 0 < p < 1 and M > n − 1. Always false
    /// for Meixner specs.
    pub fn theorem_regime(&self) -> bool {
        match &self.family {
            Family::Krawtchouk { p, m } => {
                let zero = S::zero();
                let one = S::one();
                *p > zero && *p < one && *m > S::from_int(self.n as i64) - one
            }
            Family::Meixner { .. } => false,
        }
    }

    /// Corollary regime for Meixner: c < 0 and β < 1 − n. Always false for
    /// Krawtchouk specs.
    pub fn corollary_regime(&self) -> bool {
        match &self.family {
            Family::Meixner { beta, c } => {
                c.sign() < 0 && *beta < S::one() - S::from_int(self.n as i64)
            }
            Family::Krawtchouk { .. } => false,
        }
    }

    /// Leading coefficient of the degree-n polynomial in x:
    /// p^(−n) for Krawtchouk, (1 − 1/c)^n for Meixner.
    pub fn leading_coefficient(&self) -> S {
        match &self.family {
            Family::Krawtchouk { p, .. } => p.powi(-(self.n as i32)),
            Family::Meixner { c, .. } => {
                (S::one() - S::one() / c.clone()).powi(self.n as i32)
            }
        }
    }

    /// The Krawtchouk spec sharing this Meixner spec's zero set (and, since
    /// β = 1 − γ makes the prefactors coincide, its values): p = c/(c−1),
    /// M = −β, same degree. Errors unless c < 0.
    pub fn to_krawtchouk(&self) -> Result<PolySpec<S>, HypgeoError> {
        match &self.family {
            Family::Meixner { beta, c } => {
                let (p, m) = meixner_to_krawtchouk(beta, c)?;
                PolySpec::krawtchouk(p, m, self.n)
            }
            Family::Krawtchouk { .. } => Err(HypgeoError::WrongFamily { expected: "Meixner" }),
        }
    }

    /// Same spec with parameters rounded to doubles.
    pub fn approx(&self) -> PolySpec<f64> {
        let family = match &self.family {
            Family::Meixner { beta, c } => Family::Meixner {
                beta: beta.approx_f64(),
                c: c.approx_f64(),
            },
            Family::Krawtchouk { p, m } => Family::Krawtchouk {
                p: p.approx_f64(),
                m: m.approx_f64(),
            },
        };
        PolySpec { family, n: self.n }
    }
}

/// Coefficients of the difference equation
/// `A(x) K_n(x+1) + C(x) K_n(x−1) = B(x) K_n(x)`:
/// A(x) = p(x − γ + 1), C(x) = x(p − 1), B(x) = n + A(x) + C(x).
///
/// For 0 < p < 1 and x ∈ (0, γ−1) both A(x) and C(x) are negative.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceCoeffs<S> {
    /// A(x) = p(x − M), the coefficient of K_n(x+1).
    pub a: S,
    /// B(x) = n + A(x) + C(x), the coefficient of K_n(x).
    pub b: S,
    /// C(x) = x(p − 1), the coefficient of K_n(x−1).
    pub c: S,
}

impl<S: Scalar> DifferenceCoeffs<S> {
    /// Coefficients at the point x for a Krawtchouk spec.
    pub fn at(spec: &PolySpec<S>, x: &S) -> Result<Self, HypgeoError> {
        let Family::Krawtchouk { p, m } = spec.family() else {
            return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" });
        };
        let a = p.clone() * (x.clone() - m.clone());
        let c = x.clone() * (p.clone() - S::one());
        let b = S::from_int(spec.degree() as i64) + a.clone() + c.clone();
        Ok(DifferenceCoeffs { a, b, c })
    }
}

/// Rising factorial (a)_k = a(a+1)···(a+k−1); the empty product is 1.
pub fn pochhammer<S: Scalar>(a: &S, k: usize) -> S {
    let mut acc = S::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc = acc * factor.clone();
        if acc.is_zero() {
            break;
        }
        factor = factor + S::one();
    }
    acc
}

/// Terminating Gauss series Σ_{i=0}^{n} (−n)_i (a2)_i / ((b)_i i!) zⁱ.
///
/// The denominator Pochhammer must be nonzero through the truncation index:
/// `b + i ≠ 0` for `0 ≤ i ≤ n−1`, otherwise a parameter error is returned.
/// Floating accumulation is compensated; exact accumulation is plain.
pub fn hyp2f1_terminating<S: Scalar>(
    n: usize,
    a2: &S,
    b: &S,
    z: &S,
) -> Result<S, HypgeoError> {
    let mut sum = S::one();
    let mut comp = S::zero();
    let mut term = S::one();
    for i in 0..n {
        let denom = b.clone() + S::from_int(i as i64);
        if denom.is_zero() {
            return Err(HypgeoError::PochhammerDenominatorZero { index: i });
        }
        if !term.is_zero() {
            let rising = S::from_int(i as i64) - S::from_int(n as i64);
            let numer = rising * (a2.clone() + S::from_int(i as i64));
            term = term * numer * z.clone() / (denom * S::from_int(i as i64 + 1));
            S::add_assign_compensated(&mut sum, &mut comp, term.clone());
        }
    }
    if sum.is_finite_value() {
        Ok(sum)
    } else {
        Err(HypgeoError::NonFinite)
    }
}

/// Polynomial value at x from the hypergeometric representation.
pub fn eval<S: Scalar>(spec: &PolySpec<S>, x: &S) -> Result<S, HypgeoError> {
    let minus_x = -x.clone();
    let value = match spec.family() {
        Family::Meixner { beta, c } => {
            let z = S::one() - S::one() / c.clone();
            let series = hyp2f1_terminating(spec.degree(), &minus_x, beta, &z)?;
            pochhammer(beta, spec.degree()) * series
        }
        Family::Krawtchouk { p, m } => {
            let z = S::one() / p.clone();
            let b = -m.clone();
            let series = hyp2f1_terminating(spec.degree(), &minus_x, &b, &z)?;
            pochhammer(&b, spec.degree()) * series
        }
    };
    if value.is_finite_value() {
        Ok(value)
    } else {
        Err(HypgeoError::NonFinite)
    }
}

/// Values K_n(x0), K_n(x0+1), …, K_n(x0+count−1) by seeding two direct
/// evaluations and propagating
/// `K_n(x+1) = [B(x) K_n(x) − C(x) K_n(x−1)] / A(x)`.
///
/// Under exact arithmetic the propagated values agree exactly with [`eval`].
/// Errors if A(x) vanishes on the path (x = M crossed); for 0 < p < 1 this
/// cannot happen strictly left of γ − 1.
pub fn eval_by_difference<S: Scalar>(
    spec: &PolySpec<S>,
    x0: &S,
    count: usize,
) -> Result<Vec<S>, HypgeoError> {
    if !matches!(spec.family(), Family::Krawtchouk { .. }) {
        return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" });
    }
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(eval(spec, x0)?);
    if count == 1 {
        return Ok(out);
    }
    out.push(eval(spec, &(x0.clone() + S::one()))?);
    for k in 1..count - 1 {
        let x = x0.clone() + S::from_int(k as i64);
        let coeffs = DifferenceCoeffs::at(spec, &x)?;
        if coeffs.a.is_zero() {
            return Err(HypgeoError::PropagationSingular { offset: k });
        }
        let next =
            (coeffs.b * out[k].clone() - coeffs.c * out[k - 1].clone()) / coeffs.a;
        if !next.is_finite_value() {
            return Err(HypgeoError::NonFinite);
        }
        out.push(next);
    }
    Ok(out)
}

/// Value at x through the Pfaff reflection
/// `K_n(x; p, M) = (1 − 1/p)ⁿ K_n(M − x; 1−p, M)`.
///
/// Identical to [`eval`] as a rational function; requires p ∉ {0, 1} so the
/// reflected spec exists.
pub fn pfaff_reflect<S: Scalar>(spec: &PolySpec<S>, x: &S) -> Result<S, HypgeoError> {
    let Family::Krawtchouk { p, m } = spec.family() else {
        return Err(HypgeoError::WrongFamily { expected: "Krawtchouk" });
    };
    if *p == S::one() {
        return Err(HypgeoError::InvalidParameter("Pfaff reflection requires p != 1"));
    }
    let factor = (S::one() - S::one() / p.clone()).powi(spec.degree() as i32);
    let reflected = PolySpec::krawtchouk(S::one() - p.clone(), m.clone(), spec.degree())?;
    let value = factor * eval(&reflected, &(m.clone() - x.clone()))?;
    if value.is_finite_value() {
        Ok(value)
    } else {
        Err(HypgeoError::NonFinite)
    }
}

/// The parameter substitution behind the corollary: replacing β with 1 − γ
/// and 1 − 1/c with 1/p maps M_n(x; β, c) onto K_n(x; p, M) with
/// p = c/(c−1) and M = −β.
///
/// Requires c < 0, which is exactly when p lands in (0, 1).
pub fn meixner_to_krawtchouk<S: Scalar>(beta: &S, c: &S) -> Result<(S, S), HypgeoError> {
    if (c.clone() - S::one()).is_zero() {
        return Err(HypgeoError::InvalidParameter("substitution requires c != 1"));
    }
    let p = c.clone() / (c.clone() - S::one());
    if !(p > S::zero() && p < S::one()) {
        return Err(HypgeoError::SubstitutionOutOfRange);
    }
    Ok((p, -beta.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;
    use alloc::vec;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    fn kraw(p: &str, m: &str, n: usize) -> PolySpec<ExactScalar> {
        PolySpec::krawtchouk(q(p), q(m), n).unwrap()
    }

    fn meix(beta: &str, c: &str, n: usize) -> PolySpec<ExactScalar> {
        PolySpec::meixner(q(beta), q(c), n).unwrap()
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&q("5"), 0), q("1"));
        assert_eq!(pochhammer(&q("-2"), 2), q("2"));
        assert_eq!(pochhammer(&q("-2"), 3), q("0"));
        assert_eq!(pochhammer(&q("1/2"), 3), q("15/8"));
    }

    #[test]
    fn hyp2f1_hand_summed_values() {
        // single term
        assert_eq!(
            hyp2f1_terminating(0, &q("3"), &q("7"), &q("9")).unwrap(),
            q("1")
        );
        // 2F1(-2, -1; -2; 2) = 1 - 2 + 0 = -1
        assert_eq!(
            hyp2f1_terminating(2, &q("-1"), &q("-2"), &q("2")).unwrap(),
            q("-1")
        );
        // 1 + (-1)(-3)/(2*1) * (-1) = -1/2   (x = 3, beta = 2, c = 1/2)
        assert_eq!(
            hyp2f1_terminating(1, &q("-3"), &q("2"), &q("-1")).unwrap(),
            q("-1/2")
        );
    }

    #[test]
    fn hyp2f1_denominator_error() {
        // b = -2 vanishes at offset 2 < n = 4
        let err = hyp2f1_terminating(4, &q("5"), &q("-2"), &q("1")).unwrap_err();
        assert_eq!(err, HypgeoError::PochhammerDenominatorZero { index: 2 });
        // the check applies even when the numerator Pochhammer dies first
        let err = hyp2f1_terminating(4, &q("-1"), &q("-2"), &q("1")).unwrap_err();
        assert_eq!(err, HypgeoError::PochhammerDenominatorZero { index: 2 });
    }

    #[test]
    fn eval_matches_hand_expansions() {
        // K1(x; 1/2, 4) = -4 + 2x vanishes at x = 2
        assert_eq!(eval(&kraw("1/2", "4", 1), &q("2")).unwrap(), q("0"));
        // K2(x; 1/2, 2) = 4x^2 - 8x + 2
        assert_eq!(eval(&kraw("1/2", "2", 2), &q("0")).unwrap(), q("2"));
        assert_eq!(eval(&kraw("1/2", "2", 2), &q("1")).unwrap(), q("-2"));
        assert_eq!(eval(&kraw("1/2", "2", 2), &q("1/2")).unwrap(), q("-1"));
        // K_n(0) = (-M)_n
        let spec = kraw("1/3", "7/2", 3);
        assert_eq!(
            eval(&spec, &q("0")).unwrap(),
            pochhammer(&q("-7/2"), 3)
        );
        // M_n(0) = (beta)_n
        let spec = meix("-5", "-1", 3);
        assert_eq!(eval(&spec, &q("0")).unwrap(), pochhammer(&q("-5"), 3));
    }

    #[test]
    fn difference_propagation_matches_eval() {
        assert_eq!(
            eval_by_difference(&kraw("1/2", "4", 1), &q("0"), 5).unwrap(),
            vec![q("-4"), q("-2"), q("0"), q("2"), q("4")]
        );
        assert_eq!(
            eval_by_difference(&kraw("1/2", "2", 2), &q("0"), 3).unwrap(),
            vec![q("2"), q("-2"), q("2")]
        );
        // count = 1 short-circuits to a single direct evaluation
        let spec = kraw("2/7", "13/3", 3);
        assert_eq!(
            eval_by_difference(&spec, &q("5/4"), 1).unwrap(),
            vec![eval(&spec, &q("5/4")).unwrap()]
        );
        assert!(eval_by_difference(&spec, &q("0"), 0).unwrap().is_empty());
        // only Krawtchouk has the propagation form
        assert_eq!(
            eval_by_difference(&meix("-5", "-1", 2), &q("0"), 3).unwrap_err(),
            HypgeoError::WrongFamily { expected: "Krawtchouk" }
        );
    }

    #[test]
    fn difference_propagation_singular_at_m() {
        // x0 = 2, so the step at x = 3 = M divides by A(3) = 0
        let spec = kraw("1/2", "3", 2);
        let err = eval_by_difference(&spec, &q("2"), 4).unwrap_err();
        assert_eq!(err, HypgeoError::PropagationSingular { offset: 1 });
    }

    #[test]
    fn pfaff_reflection_is_the_identity() {
        let spec = kraw("1/2", "2", 2);
        assert_eq!(pfaff_reflect(&spec, &q("0")).unwrap(), q("2"));
        // degree 0 is the constant 1
        let spec0 = kraw("1/3", "9/2", 0);
        assert_eq!(pfaff_reflect(&spec0, &q("17/5")).unwrap(), q("1"));
        // exact equality at a rational off-mesh point
        let spec = kraw("1/3", "7/2", 2);
        assert_eq!(
            pfaff_reflect(&spec, &q("5/4")).unwrap(),
            eval(&spec, &q("5/4")).unwrap()
        );
    }

    #[test]
    fn substitution_examples() {
        let (p, m) = meixner_to_krawtchouk(&q("-5"), &q("-1")).unwrap();
        assert_eq!((p, m), (q("1/2"), q("5")));
        let (p, m) = meixner_to_krawtchouk(&q("-9/2"), &q("-1/3")).unwrap();
        assert_eq!((p, m), (q("1/4"), q("9/2")));
        // boundary beta = 1 - n gives M = n - 1, outside the theorem regime
        let (_, m) = meixner_to_krawtchouk(&q("-2"), &q("-1")).unwrap();
        let spec = PolySpec::krawtchouk(q("1/2"), m, 3).unwrap();
        assert!(!spec.theorem_regime());
        // c in [0, 1) and c > 1 are rejected
        assert_eq!(
            meixner_to_krawtchouk(&q("1/2"), &q("1/2")).unwrap_err(),
            HypgeoError::SubstitutionOutOfRange
        );
        assert_eq!(
            meixner_to_krawtchouk(&q("1/2"), &q("2")).unwrap_err(),
            HypgeoError::SubstitutionOutOfRange
        );
    }

    #[test]
    fn meixner_krawtchouk_bridge_is_exact() {
        let m_spec = meix("-9/2", "-1/3", 3);
        let k_spec = m_spec.to_krawtchouk().unwrap();
        for x in ["0", "1", "7/3", "-2/5", "22/7"] {
            assert_eq!(
                eval(&m_spec, &q(x)).unwrap(),
                eval(&k_spec, &q(x)).unwrap()
            );
        }
    }

    #[test]
    fn constructors_reject_excluded_parameters() {
        assert!(PolySpec::krawtchouk(q("0"), q("4"), 1).is_err());
        assert!(PolySpec::meixner(q("1"), q("0"), 1).is_err());
        assert!(PolySpec::meixner(q("1"), q("1"), 1).is_err());
    }

    #[test]
    fn difference_coeffs_signs_in_regime() {
        // A(x) < 0 and C(x) < 0 for 0 < p < 1, x in (0, M)
        let spec = kraw("1/3", "4", 2);
        let co = DifferenceCoeffs::at(&spec, &q("3/2")).unwrap();
        assert_eq!(co.a.sign(), -1);
        assert_eq!(co.c.sign(), -1);
        let b_rebuilt = ExactScalar::from_int(2) + co.a.clone() + co.c.clone();
        assert_eq!(co.b, b_rebuilt);
    }

    #[test]
    fn float_overflow_reports_non_finite() {
        let spec = PolySpec::krawtchouk(1e-300f64, 5.5, 8).unwrap();
        assert_eq!(eval(&spec, &1e300f64).unwrap_err(), HypgeoError::NonFinite);
    }

    mod props {
        use super::*;
        use num_traits::Zero;
        use proptest::prelude::*;

        fn arb_q(lo: i64, hi: i64, den: i64) -> impl Strategy<Value = ExactScalar> {
            (lo * den..hi * den).prop_map(move |n| ExactScalar::from_ratio(n, den).unwrap())
        }

        /// M strictly above n−1 and never an integer, so the terminating
        /// series is defined for degree n.
        fn valid_m(n: usize, k: i64) -> ExactScalar {
            ExactScalar::from_ratio(8 * (n as i64 - 1) + 2 * k + 1, 8).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn difference_equation_residual_is_zero(
                n in 0usize..6,
                pn in 1i64..16,
                x in arb_q(-3, 8, 12),
                mk in 0i64..16,
            ) {
                let p = ExactScalar::from_ratio(pn, 16).unwrap();
                let spec = PolySpec::krawtchouk(p, valid_m(n, mk), n).unwrap();
                let co = DifferenceCoeffs::at(&spec, &x).unwrap();
                let one = ExactScalar::from_int(1);
                let up = eval(&spec, &(&x + &one)).unwrap();
                let down = eval(&spec, &(&x - &one)).unwrap();
                let here = eval(&spec, &x).unwrap();
                let residual = co.a * up + co.c * down - co.b * here;
                prop_assert!(residual.is_zero());
            }

            #[test]
            fn finite_difference_of_order_n_plus_one_vanishes(
                n in 0usize..6,
                pn in 1i64..16,
                mk in 0i64..16,
            ) {
                let p = ExactScalar::from_ratio(pn, 16).unwrap();
                let spec = PolySpec::krawtchouk(p.clone(), valid_m(n, mk), n).unwrap();
                // forward differences over 0..=n+1
                let mut vals: alloc::vec::Vec<ExactScalar> = (0..=n as i64 + 1)
                    .map(|i| eval(&spec, &ExactScalar::from_int(i)).unwrap())
                    .collect();
                let mut order = 0;
                loop {
                    if order == n {
                        // order-n difference equals n! times the leading coefficient
                        let lc = spec.leading_coefficient();
                        let fact = pochhammer(&ExactScalar::from_int(1), n);
                        prop_assert_eq!(vals[0].clone(), fact * lc);
                    }
                    if vals.len() == 1 {
                        break;
                    }
                    vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
                    order += 1;
                }
                prop_assert_eq!(order, n + 1);
                prop_assert!(vals[0].is_zero());
            }
        }
    }
}
