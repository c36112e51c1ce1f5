//! Seeded random streams and small-coefficient sampling.
//!
//! All randomized operations in the crate draw from named sub-streams of a
//! single seed, so any run is reproducible from `(seed, label)` alone.
//! Coefficients are sampled from small rational boxes to keep coefficient
//! growth in the exact arithmetic under control.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::Scalar;
use crate::linalg::Matrix;

/// Derives a deterministic random stream for `label` from a base seed.
///
/// Distinct labels give independent streams, so commands can re-run a single
/// sub-task without replaying everything before it.
pub fn substream(seed: u64, label: &str) -> ChaCha8Rng {
    // FNV-1a over the label, mixed into the base seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in label.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// A rational with numerator in `[-bound, bound]` and denominator in
/// `[1, bound]`, reduced.
pub fn random_rational<R: Rng>(rng: &mut R, bound: u32) -> BigRational {
    assert!(bound >= 1, "coefficient bound must be at least 1");
    let num = rng.gen_range(-i64::from(bound)..=i64::from(bound));
    let den = rng.gen_range(1..=i64::from(bound));
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A Gaussian rational with both parts drawn by [`random_rational`].
pub fn random_scalar<R: Rng>(rng: &mut R, bound: u32) -> Scalar {
    let re = random_rational(rng, bound);
    let im = random_rational(rng, bound);
    Scalar::new(re, im)
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, bound: u32) -> Scalar {
    loop {
        let s = random_scalar(rng, bound);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A dense matrix with entries drawn by [`random_scalar`].
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: u32) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng, bound))
}

/// An invertible n-by-n matrix, sampled by rejection.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, bound: u32) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, bound);
        if !m.det().is_zero() {
            return m;
        }
    }
}
