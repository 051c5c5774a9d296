//! Exact combinatorics: rationals, binomials, and the Bernoulli ladder.

mod bernoulli;
mod rational;

pub use bernoulli::{bernoulli_table, verify_binomial_identity, verify_recurrence, BernoulliTable};
pub use rational::{ExactRational, ParseRationalError};

use num_bigint::BigInt;
use num_traits::One;

/// `C(n, k)` by the running product `prod_{i=1..k} (n-k+i)/i`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // each partial product is itself a binomial, so the division is exact
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `2^e` as an exact rational; `e` may be negative.
pub(crate) fn pow2(e: i64) -> ExactRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(1, p)
    }
}
