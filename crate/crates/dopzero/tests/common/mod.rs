//! Shared helpers for the integration suites: seeded rational sampling in
//! open intervals and regime-respecting random specs.

use dopzero::{ExactScalar, PolySpec};
use rand::Rng;

/// Random rational strictly inside (lo, hi), denominator in 8..=64.
pub fn rational_in(rng: &mut impl Rng, lo: f64, hi: f64) -> ExactScalar {
    let den = rng.gen_range(8i64..=64);
    let lo_n = (lo * den as f64).floor() as i64 + 1;
    let hi_n = (hi * den as f64).ceil() as i64 - 1;
    let num = if hi_n < lo_n {
        ((lo + hi) / 2.0 * den as f64).round() as i64
    } else {
        rng.gen_range(lo_n..=hi_n)
    };
    ExactScalar::from_ratio(num, den).unwrap()
}

/// Krawtchouk spec in the theorem regime: n in 1..=n_max, p in (0.05, 0.95),
/// M in (n−1+0.05, n+9).
pub fn random_theorem_spec(rng: &mut impl Rng, n_max: usize) -> PolySpec<ExactScalar> {
    let n = rng.gen_range(1..=n_max);
    let p = rational_in(rng, 0.05, 0.95);
    let m = ExactScalar::from_int(n as i64 - 1) + rational_in(rng, 0.05, 10.0);
    PolySpec::krawtchouk(p, m, n).unwrap()
}

/// Meixner spec in the corollary regime: c in (−5, −0.05), β < 1 − n.
pub fn random_corollary_spec(rng: &mut impl Rng, n_max: usize) -> PolySpec<ExactScalar> {
    let n = rng.gen_range(1..=n_max);
    let c = rational_in(rng, -5.0, -0.05);
    let beta = ExactScalar::from_int(1 - n as i64) - rational_in(rng, 0.05, 10.0);
    PolySpec::meixner(beta, c, n).unwrap()
}
