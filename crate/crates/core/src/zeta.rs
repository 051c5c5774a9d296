//! Riemann zeta values for real arguments `s > 1`.
//!
//! Even arguments are exact: `zeta(2k) = (-1)^(k+1) (2 pi)^(2k) B_2k / (2 (2k)!)`,
//! stored as a rational multiple of `pi^(2k)`.
//!
//! Integer arguments are also evaluated numerically. The partial sum is
//! completed by the Euler-Maclaurin tail
//!
//! ```text
//! zeta(s) = sum_{l<N} l^-s + N^(1-s)/(s-1) + N^-s/2
//!         + sum_{j=1..p} B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j) + R
//! ```
//!
//! where for real `s` the remainder satisfies `|R| <= |T_(p+1)|`, the first
//! omitted term. Everything up to the final conversion is exact rational
//! arithmetic, so the only floating error is one double-double rounding.
//! The double-double constants for pi and log 2 carry about 32 significant
//! digits.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::approx::{rounding, widen, ExtendedApprox, RealApprox};
use crate::dd::{DoubleDouble, DD_EPS};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_table, factorial, pow2, BernoulliTable, ExactRational};

/// `zeta(2k) = coefficient * pi^(2k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEvenValue {
    pub k: u32,
    pub pi_power: u32,
    pub coefficient: ExactRational,
}

impl ZetaEvenValue {
    /// Double-double evaluation of `coefficient * pi^(2k)`.
    pub fn to_dd(&self) -> DoubleDouble {
        self.coefficient.to_dd() * DoubleDouble::PI.powi(self.pi_power)
    }
}

pub fn zeta_even_exact(k: u32, table: &BernoulliTable) -> Result<ZetaEvenValue> {
    if k < 1 {
        return Err(Error::domain("zeta_even_exact", "k must be at least 1"));
    }
    let index = 2 * k as usize;
    let b = table.get(index)?;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let coefficient = ExactRational::from_integer(sign) * pow2(2 * k as i64) * b
        / ExactRational::from_integer(factorial(2 * k as u64) * 2);
    Ok(ZetaEvenValue {
        k,
        pi_power: 2 * k,
        coefficient,
    })
}

/// `sum_{l=1}^{terms} l^-s`, accumulated from the largest term down.
pub fn zeta_series_partial(s: f64, terms: u64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::domain(
            "zeta_series_partial",
            format!("need s > 1, got {s}"),
        ));
    }
    if terms == 0 {
        return Err(Error::domain(
            "zeta_series_partial",
            "terms must be positive",
        ));
    }
    Ok((1..=terms).map(|l| (l as f64).powf(-s)).sum())
}

const MAX_CORRECTIONS: usize = 60;

const EM_TARGET_CAP: f64 = 1e-24;

fn shared_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_table(2 * MAX_CORRECTIONS + 2))
}

/// `s (s+1) ... (s+m-1)`.
fn rising(s: u32, m: u32) -> BigInt {
    (0..m).fold(BigInt::from(1), |acc, i| acc * BigInt::from(s + i))
}

/// `|T_j|` in the Euler-Maclaurin expansion, as an exact rational.
fn correction_term(s: u32, n: u32, j: u32, table: &BernoulliTable) -> ExactRational {
    let b = &table[2 * j as usize];
    let scale = ExactRational::from_integer(rising(s, 2 * j - 1)) * b
        / ExactRational::from_integer(factorial(2 * j as u64));
    scale * ExactRational::new(1, BigInt::from(n).pow(s + 2 * j - 1))
}

/// Exact rational approximation of `zeta(s)` and a rational remainder bound.
fn euler_maclaurin(s: u32, target: f64) -> Option<(ExactRational, ExactRational)> {
    let table = shared_table();
    let target = ExactRational::from_f64(target)?;
    let mut n = 10u32;
    while n <= 640 {
        let mut last: Option<ExactRational> = None;
        for p in 0..MAX_CORRECTIONS as u32 {
            let next = correction_term(s, n, p + 1, table).abs();
            if next <= target {
                let mut acc: ExactRational = (1..n)
                    .map(|l| ExactRational::new(1, BigInt::from(l).pow(s)))
                    .sum();
                let n_pow = BigInt::from(n).pow(s - 1);
                acc += ExactRational::new(1, n_pow.clone() * BigInt::from(s - 1));
                acc += ExactRational::new(1, n_pow * BigInt::from(n) * 2);
                for j in 1..=p {
                    acc += correction_term(s, n, j, table);
                }
                return Some((acc, next));
            }
            if last.as_ref().is_some_and(|prev| &next > prev) {
                break;
            }
            last = Some(next);
        }
        n *= 2;
    }
    None
}

/// `zeta(s)` in double-double with a certified bound `<= target_abs_error`.
pub fn zeta_extended(s: u32, target_abs_error: f64) -> Result<ExtendedApprox> {
    if s < 2 {
        return Err(Error::domain(
            "zeta_numeric",
            format!("need integer s >= 2, got {s}"),
        ));
    }
    if target_abs_error <= 0.0 || !target_abs_error.is_finite() {
        return Err(Error::domain(
            "zeta_numeric",
            format!("tolerance must be positive and finite, got {target_abs_error}"),
        ));
    }
    // zeta(s) <= zeta(2) < 2, so this is the double-double precision floor.
    let floor = 16.0 * DD_EPS;
    if target_abs_error < floor {
        return Err(Error::Certification {
            operation: "zeta_numeric",
            requested: target_abs_error,
            achieved: floor,
        });
    }
    // a few more correction terms cost little, so never stop at a loose target
    let em_target = (target_abs_error / 2.0).min(EM_TARGET_CAP);
    let (sum, remainder) = euler_maclaurin(s, em_target).ok_or(Error::Certification {
        operation: "zeta_numeric",
        requested: target_abs_error,
        achieved: f64::NAN,
    })?;
    let value = sum.to_dd();
    let abs_error = widen(remainder.to_f64()) + rounding(value, 2);
    Ok(ExtendedApprox::new(value, abs_error))
}

/// `zeta(s)` rounded to `f64`, certified within `target_abs_error`.
pub fn zeta_numeric(s: u32, target_abs_error: f64) -> Result<RealApprox> {
    zeta_extended(s, target_abs_error / 2.0)?.certify("zeta_numeric", target_abs_error)
}
