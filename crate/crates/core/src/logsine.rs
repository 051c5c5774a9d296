//! Closed form of the log-sine integrals
//!
//! ```text
//! I_n = integral_0^pi x^n log(sin x) dx
//!     = -pi^(n+1)/(n+1) log 2
//!       + n!/2^(n+1) sum_{k=1}^{floor(n/2)} (-1)^k (2 pi)^(n-2k+1)/(n-2k+1)! zeta(2k+1)
//! ```
//!
//! kept symbolically as exact rational coefficients over the basis
//! `pi^(n+1) log 2` and `pi^(n-2k+1) zeta(2k+1)`. Numeric evaluation always
//! goes through that form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::approx::{rounding, ExtendedApprox, RealApprox};
use crate::dd::DoubleDouble;
use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRational};
use crate::zeta::zeta_extended;

/// `I_n` as `log2_coefficient * pi^(n+1) log 2 + sum coeff * pi^(n+2-arg) zeta(arg)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicLogSine {
    pub n: u32,
    pub log2_coefficient: ExactRational,
    /// Odd zeta argument `2k+1` to its coefficient, in increasing order.
    pub zeta_terms: BTreeMap<u32, ExactRational>,
}

impl SymbolicLogSine {
    pub fn log2_pi_power(&self) -> u32 {
        self.n + 1
    }

    /// Power of pi multiplying `zeta(arg)`: `n - 2k + 1` for `arg = 2k + 1`.
    pub fn zeta_pi_power(&self, arg: u32) -> u32 {
        self.n + 2 - arg
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// Numeric value in double-double; each summand is given an equal share
    /// of `target_abs_error`.
    pub fn evaluate_extended(&self, target_abs_error: f64) -> Result<ExtendedApprox> {
        if target_abs_error <= 0.0 || !target_abs_error.is_finite() {
            return Err(Error::domain(
                "logsine_numeric",
                format!("tolerance must be positive, got {target_abs_error}"),
            ));
        }
        let share = target_abs_error / (self.zeta_terms.len() + 1) as f64;

        let log2_factor = self.log2_coefficient.to_dd() * DoubleDouble::PI.powi(self.n + 1);
        let log2_term = log2_factor * DoubleDouble::LN_2;
        let mut total = ExtendedApprox::new(log2_term, rounding(log2_term, self.n + 8));
        if total.abs_error > share {
            return Err(Error::Certification {
                operation: "logsine_numeric",
                requested: target_abs_error,
                achieved: total.abs_error,
            });
        }

        for (&arg, coeff) in &self.zeta_terms {
            let pi_power = self.zeta_pi_power(arg);
            let factor = coeff.to_dd() * DoubleDouble::PI.powi(pi_power);
            let magnitude = factor.abs().hi();
            // leave a sliver of the share for the product's own rounding
            let zeta = zeta_extended(arg, 0.5 * share / magnitude)?;
            let term = zeta.scale(factor, pi_power + 4);
            if term.abs_error > share {
                return Err(Error::Certification {
                    operation: "logsine_numeric",
                    requested: target_abs_error,
                    achieved: term.abs_error,
                });
            }
            total = total + term;
        }
        Ok(total)
    }
}

impl Serialize for SymbolicLogSine {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a SymbolicLogSine);
        struct Term<'a> {
            arg: u32,
            coeff: &'a ExactRational,
            pi_power: u32,
        }
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(3))?;
                map.serialize_entry("arg", &self.arg)?;
                map.serialize_entry("coeff", self.coeff)?;
                map.serialize_entry("pi_power", &self.pi_power)?;
                map.end()
            }
        }
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.zeta_terms.len()))?;
                for (&arg, coeff) in &self.0.zeta_terms {
                    seq.serialize_element(&Term {
                        arg,
                        coeff,
                        pi_power: self.0.zeta_pi_power(arg),
                    })?;
                }
                seq.end()
            }
        }

        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("log2_coeff", &self.log2_coefficient)?;
        map.serialize_entry("pi_power_log2", &self.log2_pi_power())?;
        map.serialize_entry("zeta_terms", &Terms(self))?;
        map.end()
    }
}

/// Exact coefficients of `I_n`. The `zeta(2k+1)` coefficient is
/// `(-1)^k n! / (4^k (n-2k+1)!)`, the reduced form of
/// `(-1)^k n! 2^(n-2k+1) / (2^(n+1) (n-2k+1)!)`.
pub fn logsine_symbolic(n: u32) -> SymbolicLogSine {
    let log2_coefficient = ExactRational::new(-1, n as i64 + 1);
    let n_fact = factorial(n as u64);
    let zeta_terms = (1..=n / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let den = (BigInt::from(1) << (2 * k)) * factorial((n - 2 * k + 1) as u64);
            (2 * k + 1, ExactRational::new(&n_fact * sign, den))
        })
        .collect();
    SymbolicLogSine {
        n,
        log2_coefficient,
        zeta_terms,
    }
}

/// `I_n` from the closed form, in double-double.
pub fn logsine_numeric_extended(n: u32, target_abs_error: f64) -> Result<ExtendedApprox> {
    logsine_symbolic(n).evaluate_extended(target_abs_error)
}

/// `I_n` from the closed form, certified within `target_abs_error`.
pub fn logsine_numeric(n: u32, target_abs_error: f64) -> Result<RealApprox> {
    logsine_numeric_extended(n, target_abs_error / 2.0)?
        .certify("logsine_numeric", target_abs_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    #[test]
    fn low_orders_have_no_zeta_terms() {
        let s0 = logsine_symbolic(0);
        assert_eq!(s0.log2_coefficient, -1);
        assert!(s0.zeta_terms.is_empty());
        let s1 = logsine_symbolic(1);
        assert_eq!(s1.log2_coefficient, r(-1, 2));
        assert!(s1.zeta_terms.is_empty());
    }

    #[test]
    fn second_order() {
        let s = logsine_symbolic(2);
        assert_eq!(s.log2_coefficient, r(-1, 3));
        assert_eq!(s.zeta_terms.len(), 1);
        assert_eq!(s.zeta_terms[&3], r(-1, 2));
        assert_eq!(s.zeta_pi_power(3), 1);
    }

    #[test]
    fn coefficients_match_unreduced_formula() {
        for n in 0..=20u32 {
            let s = logsine_symbolic(n);
            assert_eq!(s.zeta_terms.len(), (n / 2) as usize);
            for k in 1..=n / 2 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let num = factorial(n as u64) * sign * (BigInt::from(1) << (n - 2 * k + 1));
                let den = (BigInt::from(1) << (n + 1)) * factorial((n - 2 * k + 1) as u64);
                assert_eq!(s.zeta_terms[&(2 * k + 1)], ExactRational::new(num, den));
            }
        }
    }

    #[test]
    fn entry_added_only_on_even_steps() {
        for n in 1..=20u32 {
            let grew =
                logsine_symbolic(n).zeta_terms.len() - logsine_symbolic(n - 1).zeta_terms.len();
            assert_eq!(grew, if n % 2 == 0 { 1 } else { 0 }, "n = {n}");
        }
    }

    #[test]
    fn json_layout() {
        let json = logsine_symbolic(2).to_json();
        assert_eq!(
            json,
            serde_json::json!({
                "n": 2,
                "log2_coeff": "-1/3",
                "pi_power_log2": 3,
                "zeta_terms": [{"arg": 3, "coeff": "-1/2", "pi_power": 1}]
            })
        );
        let empty = logsine_symbolic(0).to_json();
        assert_eq!(empty["zeta_terms"], serde_json::json!([]));
        assert_eq!(empty["log2_coeff"], "-1");
    }

    #[test]
    fn numeric_low_orders() {
        let i0 = logsine_numeric(0, 1e-12).unwrap();
        assert!((i0.value + PI * LN_2).abs() <= 1e-12);
        assert!(i0.contains(-2.177586090303602));
        let i1 = logsine_numeric(1, 1e-12).unwrap();
        assert!(i1.contains(-3.420544231928558));
        let i2 = logsine_numeric(2, 1e-10).unwrap();
        assert!((i2.value + 9.05215).abs() < 1e-5);
    }

    #[test]
    fn unreachable_tolerance() {
        assert!(matches!(
            logsine_numeric(0, 1e-30),
            Err(Error::Certification { .. })
        ));
        assert!(matches!(
            logsine_numeric(6, 1e-30),
            Err(Error::Certification { .. })
        ));
        assert!(matches!(
            logsine_numeric(3, -1.0),
            Err(Error::Domain { .. })
        ));
    }
}
