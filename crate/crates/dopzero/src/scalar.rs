//! Exact rational arithmetic and the floating-point layer.
//!
//! [`ExactScalar`] is an arbitrary-precision rational kept in canonical form
//! (positive denominator, gcd 1). It is the ground truth for every sign
//! decision on a certification path: mesh values, Lemma-1 products and
//! orthogonality sums are all computed here. [`RealScalar`] (an alias for
//! `f64`) is reserved for sweeps, bisection below the rational-cost
//! threshold and the Jacobi-matrix oracle.
//!
//! Parsing accepts `"a/b"` (integers, the sign is normalised onto the
//! numerator) and decimal strings with exact semantics: `"0.3"` means
//! exactly 3/10. Display mirrors the same grammar.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, Num, One, Pow, Signed, ToPrimitive, Zero};

/// Double-precision floating layer. Public operations that produce a
/// `RealScalar` guarantee a finite value; overflow is reported as an error.
pub type RealScalar = f64;

/// Errors from scalar conversions and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// The magnitude does not fit in a finite double.
    Overflow,
    /// The input string is not a valid rational.
    Parse(ParseRationalError),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::Overflow => write!(f, "magnitude exceeds the finite double range"),
            ScalarError::Parse(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ScalarError {}

/// Reasons a rational string fails to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    /// Empty input (or an empty numerator/denominator/digit group).
    Empty,
    /// A character outside the `[+-]?digits`, `digits.digits`, `a/b` grammar.
    InvalidDigit,
    /// Denominator is zero.
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::InvalidDigit => {
                write!(f, "expected \"a/b\" or a decimal like \"0.3\"")
            }
            ParseRationalError::ZeroDenominator => write!(f, "denominator is zero"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseRationalError {}

/// Arbitrary-precision rational in canonical form.
///
/// The denominator is always positive and gcd(|numerator|, denominator) = 1;
/// both are maintained by the underlying representation on every operation.
/// Arithmetic is closed and exact. Division by zero panics, as for the
/// primitive integer types; evaluation-level code validates parameters
/// (p ≠ 0, c ∉ {0,1}) before dividing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    /// Builds `numer/denom`, normalising to canonical form.
    ///
    /// Returns an error if `denom` is zero.
    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        if denom == 0 {
            return Err(ScalarError::Parse(ParseRationalError::ZeroDenominator));
        }
        Ok(ExactScalar(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// Builds the integer `v`.
    pub fn from_int(v: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(v)))
    }

    /// Exact conversion of a finite double (every finite `f64` is rational).
    ///
    /// Returns `None` for NaN and infinities.
    pub fn from_f64_exact(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(ExactScalar)
    }

    /// Wraps an already-canonical big rational.
    pub fn from_big(r: BigRational) -> Self {
        ExactScalar(r)
    }

    /// The underlying big rational.
    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Numerator of the canonical form (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the canonical form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact mathematical sign: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Nearest-double rounding.
    ///
    /// Errors with [`ScalarError::Overflow`] when the magnitude exceeds the
    /// finite double range.
    pub fn to_real(&self) -> Result<RealScalar, ScalarError> {
        let v = self.0.to_f64().ok_or(ScalarError::Overflow)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ScalarError::Overflow)
        }
    }

    /// Integer power. Negative exponents require a nonzero base (panics
    /// otherwise, like integer division by zero).
    pub fn powi(&self, exp: i32) -> Self {
        ExactScalar(Pow::pow(&self.0, exp))
    }

    /// True when the value is an integer (denominator 1).
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Smallest integer ≥ self.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    fn parse_decimal(s: &str) -> Result<Self, ParseRationalError> {
        let (int_part, frac_part) = match s.split_once('.') {
            Some(pair) => pair,
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let digits_ok = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
        if !int_part.is_empty() && !digits_ok(int_part) {
            return Err(ParseRationalError::InvalidDigit);
        }
        if !frac_part.is_empty() && !digits_ok(frac_part) {
            return Err(ParseRationalError::InvalidDigit);
        }
        let int: BigInt = if int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| ParseRationalError::InvalidDigit)?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().map_err(|_| ParseRationalError::InvalidDigit)?
        };
        Ok(ExactScalar(BigRational::new(int * &scale + frac, scale)))
    }

    fn parse_signed_int(s: &str) -> Result<BigInt, ParseRationalError> {
        let body = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(if body.is_empty() {
                ParseRationalError::Empty
            } else {
                ParseRationalError::InvalidDigit
            });
        }
        s.parse().map_err(|_| ParseRationalError::InvalidDigit)
    }
}

impl FromStr for ExactScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse(ParseRationalError::Empty));
        }
        if let Some((num, den)) = s.split_once('/') {
            let num = Self::parse_signed_int(num).map_err(ScalarError::Parse)?;
            let den = Self::parse_signed_int(den).map_err(ScalarError::Parse)?;
            if den.is_zero() {
                return Err(ScalarError::Parse(ParseRationalError::ZeroDenominator));
            }
            return Ok(ExactScalar(BigRational::new(num, den)));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let v = Self::parse_decimal(body).map_err(ScalarError::Parse)?;
        Ok(if neg { -v } else { v })
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_int(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl core::ops::Rem for ExactScalar {
    type Output = ExactScalar;
    fn rem(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar(self.0 % rhs.0)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar(BigRational::one())
    }
}

impl Num for ExactScalar {
    type FromStrRadixErr = <BigRational as Num>::FromStrRadixErr;
    fn from_str_radix(str: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(str, radix).map(ExactScalar)
    }
}

impl Signed for ExactScalar {
    fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }
    fn abs_sub(&self, other: &Self) -> Self {
        ExactScalar(self.0.abs_sub(&other.0))
    }
    fn signum(&self) -> Self {
        ExactScalar(self.0.signum())
    }
    fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Arithmetic abstraction shared by the exact and floating layers.
///
/// The polynomial evaluators are generic over this trait so that the same
/// series code serves both certification (exact) and sweep (float) paths.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Signed + fmt::Debug + fmt::Display + 'static
{
    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self;

    /// Sign as -1, 0 or +1. Exact for [`ExactScalar`]; IEEE comparison
    /// (assuming a finite value) for floats.
    fn sign(&self) -> i8;

    /// Lossy double approximation (used for reports and truncation bounds;
    /// may be infinite on overflow).
    fn approx_f64(&self) -> f64;

    /// Integer power; negative exponents require a nonzero base.
    fn powi(&self, exp: i32) -> Self;

    /// False only for floating non-finite values.
    fn is_finite_value(&self) -> bool;

    /// Accumulates `term` into `sum`. The float layer uses Kahan
    /// compensation (the `compensation` slot); exact types add directly.
    fn add_assign_compensated(sum: &mut Self, compensation: &mut Self, term: Self) {
        let _ = compensation;
        *sum = sum.clone() + term;
    }
}

impl Scalar for ExactScalar {
    fn from_int(v: i64) -> Self {
        ExactScalar::from_int(v)
    }

    fn sign(&self) -> i8 {
        ExactScalar::sign(self)
    }

    fn approx_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn powi(&self, exp: i32) -> Self {
        ExactScalar::powi(self, exp)
    }

    fn is_finite_value(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn sign(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }

    fn approx_f64(&self) -> f64 {
        *self
    }

    fn powi(&self, exp: i32) -> Self {
        Float::powi(*self, exp)
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn add_assign_compensated(sum: &mut Self, compensation: &mut Self, term: Self) {
        let y = term - *compensation;
        let t = *sum + y;
        *compensation = (t - *sum) - y;
        *sum = t;
    }
}

/// Parses a rational from `"a/b"` or exact-decimal notation.
///
/// Convenience wrapper over the `FromStr` impl.
pub fn parse_rational(s: &str) -> Result<ExactScalar, ScalarError> {
    s.parse()
}

/// Renders a rational in the same grammar `parse_rational` accepts.
pub fn format_rational(v: &ExactScalar) -> String {
    alloc::format!("{v}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn values_transfer_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ExactScalar>();
        assert_send_sync::<RealScalar>();
    }

    #[test]
    fn sign_of_zero_negative_positive() {
        assert_eq!(q("0/1").sign(), 0);
        assert_eq!(q("-3/7").sign(), -1);
        assert_eq!(q("22/7").sign(), 1);
    }

    #[test]
    fn to_real_rounds_to_nearest_double() {
        assert_eq!(q("1/2").to_real().unwrap(), 0.5);
        assert_eq!(q("1/3").to_real().unwrap(), 0.3333333333333333);
    }

    #[test]
    fn to_real_overflow_is_an_error() {
        let huge = ExactScalar::from_int(10).powi(400);
        assert_eq!(huge.to_real(), Err(ScalarError::Overflow));
        assert_eq!((-huge).to_real(), Err(ScalarError::Overflow));
    }

    #[test]
    fn canonical_form() {
        let v = ExactScalar::from_ratio(4, 8).unwrap();
        assert_eq!(v.numer(), &BigInt::from(1));
        assert_eq!(v.denom(), &BigInt::from(2));
        let w = ExactScalar::from_ratio(3, -6).unwrap();
        assert_eq!(w.numer(), &BigInt::from(-1));
        assert_eq!(w.denom(), &BigInt::from(2));
    }

    #[test]
    fn decimal_strings_are_exact() {
        assert_eq!(q("0.3"), ExactScalar::from_ratio(3, 10).unwrap());
        assert_eq!(q("-12.375"), ExactScalar::from_ratio(-99, 8).unwrap());
        assert_eq!(q("2."), ExactScalar::from_int(2));
        assert_eq!(q("+0.25"), ExactScalar::from_ratio(1, 4).unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<ExactScalar>().is_err());
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("a/b".parse::<ExactScalar>().is_err());
        assert!("1.2.3".parse::<ExactScalar>().is_err());
        assert!("1e3".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn display_mirrors_parsing() {
        assert_eq!(format!("{}", q("-3/7")), "-3/7");
        assert_eq!(format!("{}", q("0.3")), "3/10");
        assert_eq!(format!("{}", q("4/2")), "2");
        assert_eq!(q("1/-2"), q("-1/2"));
    }

    #[test]
    fn powi_handles_negative_exponents() {
        assert_eq!(q("2/3").powi(-2), q("9/4"));
        assert_eq!(q("5").powi(0), q("1"));
    }

    #[test]
    fn kahan_accumulation_for_floats() {
        let mut sum = 0.0f64;
        let mut c = 0.0f64;
        for _ in 0..10 {
            f64::add_assign_compensated(&mut sum, &mut c, 0.1);
        }
        assert!((sum - 1.0).abs() < 1e-15);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rational() -> impl Strategy<Value = ExactScalar> {
            (-10_000i64..10_000, 1i64..1_000)
                .prop_map(|(n, d)| ExactScalar::from_ratio(n, d).unwrap())
        }

        proptest! {
            #[test]
            fn sign_is_multiplicative(a in arb_rational(), b in arb_rational()) {
                prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
            }

            #[test]
            fn sign_of_sum_matches_float_when_not_tiny(a in arb_rational(), b in arb_rational()) {
                let s = &a + &b;
                let f = s.to_real().unwrap();
                if f.abs() > 1e-300 {
                    prop_assert_eq!(s.sign() as i32, f.sign() as i32);
                }
            }

            #[test]
            fn display_parse_round_trip(a in arb_rational()) {
                let shown = format!("{a}");
                let back: ExactScalar = shown.parse().unwrap();
                prop_assert_eq!(back, a);
            }

            #[test]
            fn canonical_gcd_is_one(a in arb_rational()) {
                use num_integer::Integer;
                let g = a.numer().gcd(a.denom());
                prop_assert!(g == BigInt::from(1) || a.is_zero());
            }
        }
    }
}
