use num_bigint::BigInt;

use super::{binomial, ExactRational};
use crate::error::{Error, Result};

/// Bernoulli numbers `B_0 ..= B_max_index` with the convention `B_1 = -1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    /// Wraps arbitrary values as a table, without checking them. Meant for
    /// exercising the verifiers on tables that are deliberately wrong.
    pub fn from_values(values: Vec<ExactRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain(
                "BernoulliTable::from_values",
                "table must hold B_0",
            ));
        }
        Ok(BernoulliTable { values })
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    /// `B_k`, or `TableTooShort` if `k` is past the end.
    pub fn get(&self, k: usize) -> Result<&ExactRational> {
        self.values.get(k).ok_or(Error::TableTooShort {
            have: self.max_index(),
            need: k,
        })
    }

    pub(crate) fn require(&self, need: usize) -> Result<()> {
        if need > self.max_index() {
            Err(Error::TableTooShort {
                have: self.max_index(),
                need,
            })
        } else {
            Ok(())
        }
    }
}

impl std::ops::Index<usize> for BernoulliTable {
    type Output = ExactRational;
    fn index(&self, k: usize) -> &ExactRational {
        &self.values[k]
    }
}

/// Builds the table by solving `sum_{k<=m} C(m+1,k) B_k = 0` for `B_m`:
///
/// `B_m = -(1/(m+1)) * sum_{k=0}^{m-1} C(m+1,k) B_k`.
///
/// Every index is solved for, odd ones included; their vanishing is a
/// consequence, not an input.
pub fn bernoulli_table(max_index: usize) -> BernoulliTable {
    let mut values: Vec<ExactRational> = Vec::with_capacity(max_index + 1);
    values.push(ExactRational::one());
    // row of Pascal's triangle for m + 1, advanced in place
    let mut row = vec![BigInt::from(1), BigInt::from(1)];
    for m in 1..=max_index {
        row = next_pascal_row(&row);
        let mut acc = ExactRational::zero();
        for (b, c) in values.iter().zip(&row) {
            if !b.is_zero() {
                acc += ExactRational::from_integer(c.clone()) * b;
            }
        }
        values.push(-acc / ExactRational::from_integer(BigInt::from(m + 1)));
    }
    BernoulliTable { values }
}

fn next_pascal_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::from(1));
    next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
    next.push(BigInt::from(1));
    next
}

/// Checks `sum_{k=0}^{n-1} C(n,k) B_k = 0` exactly. Valid for `n >= 2`.
pub fn verify_recurrence(n: usize, table: &BernoulliTable) -> Result<bool> {
    if n < 2 {
        return Err(Error::domain(
            "verify_recurrence",
            format!("the recurrence holds for n >= 2, got n = {n}"),
        ));
    }
    table.require(n - 1)?;
    let mut c = BigInt::from(1);
    let mut sum = ExactRational::zero();
    for k in 0..n {
        sum += ExactRational::from_integer(c.clone()) * &table[k];
        c = c * (n - k) / (k + 1);
    }
    Ok(sum.is_zero())
}

/// Checks `C(n,2k) / ((k+1)(2k+1)) = C(n+2,2k+2) * 2 / ((n+1)(n+2))` exactly.
pub fn verify_binomial_identity(n: u64, k: u64) -> Result<bool> {
    if n < 1 || 2 * k > n {
        return Err(Error::domain(
            "verify_binomial_identity",
            format!("need n >= 1 and 2k <= n, got n = {n}, k = {k}"),
        ));
    }
    let lhs = ExactRational::new(binomial(n, 2 * k), BigInt::from((k + 1) * (2 * k + 1)));
    let rhs = ExactRational::new(
        binomial(n + 2, 2 * k + 2) * 2,
        BigInt::from((n + 1) * (n + 2)),
    );
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    #[test]
    fn initial_conditions() {
        let t = bernoulli_table(1);
        assert_eq!(t.values(), &[r(1, 1), r(-1, 2)]);
        assert_eq!(bernoulli_table(0).values(), &[r(1, 1)]);
    }

    #[test]
    fn small_values() {
        let t = bernoulli_table(12);
        assert_eq!(t[2], r(1, 6));
        assert_eq!(t[3], 0);
        assert_eq!(t[4], r(-1, 30));
        assert_eq!(t[6], r(1, 42));
        assert_eq!(t[8], r(-1, 30));
        assert_eq!(t[10], r(5, 66));
        assert_eq!(t[12], r(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        let t = bernoulli_table(41);
        for m in (3..=41).step_by(2) {
            assert!(t[m].is_zero(), "B_{m}");
        }
    }

    #[test]
    fn recurrence_small_cases() {
        let t = bernoulli_table(10);
        assert!(verify_recurrence(2, &t).unwrap());
        assert!(verify_recurrence(3, &t).unwrap());
        assert!(verify_recurrence(11, &t).unwrap());
    }

    #[test]
    fn recurrence_rejects_bad_input() {
        let t = bernoulli_table(4);
        assert!(matches!(
            verify_recurrence(1, &t),
            Err(Error::Domain { .. })
        ));
        assert_eq!(
            verify_recurrence(7, &t),
            Err(Error::TableTooShort { have: 4, need: 6 })
        );
    }

    #[test]
    fn corrupted_table_fails_recurrence() {
        let mut t = bernoulli_table(6);
        t.values[4] = r(1, 30);
        assert!(verify_recurrence(4, &t).unwrap());
        assert!(!verify_recurrence(5, &t).unwrap());
    }

    #[test]
    fn binomial_identity_examples() {
        assert!(verify_binomial_identity(2, 0).unwrap());
        assert!(verify_binomial_identity(3, 1).unwrap());
        assert!(verify_binomial_identity(1, 0).unwrap());
        assert!(verify_binomial_identity(3, 2).is_err());
        assert!(verify_binomial_identity(0, 0).is_err());
    }

    #[test]
    fn signs_alternate_on_even_indices() {
        let t = bernoulli_table(60);
        for m in 1..15 {
            assert!(t[4 * m + 2].is_positive());
            assert!(t[4 * m].is_negative());
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(bernoulli_table(50), bernoulli_table(50));
    }
}
