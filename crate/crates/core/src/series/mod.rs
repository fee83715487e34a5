//! Exact arithmetic kernel: rational polynomials, truncated power series in
//! `t`, and bivariate series in an auxiliary `x` over those.

mod bivariate;
mod poly;
mod ratfn;
mod trunc;

pub use bivariate::BiSeries;
pub use num::BigRational;
pub use poly::Poly;
pub use ratfn::RatFn;
pub use trunc::{expand_rational, TruncSeries};

use num::{BigInt, One, Zero};

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
