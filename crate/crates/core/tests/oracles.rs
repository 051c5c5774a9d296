//! Checks against values computed by routes that share no code with the
//! library: direct summation with integral tail brackets, and exact
//! rational series for the double-double constants.

use logsine_core::{zeta_numeric, DoubleDouble, ExactRational};
use num_bigint::BigInt;

/// `sum_{l<=n} l^-s` plus the integral tail from `n+1` (lower) and from `n` (upper).
fn zeta_bracket(s: u32, n: u64) -> (f64, f64) {
    let sf = s as f64;
    let partial: f64 = (1..=n).rev().map(|l| (l as f64).powf(-sf)).sum();
    let tail = |from: f64| from.powf(1.0 - sf) / (sf - 1.0);
    (partial + tail(n as f64 + 1.0), partial + tail(n as f64))
}

#[test]
fn zeta_inside_integral_bracket() {
    for s in 3..=12u32 {
        let (lo, hi) = zeta_bracket(s, 200_000);
        // the summation itself carries a few ulps of rounding
        let slack = 4.0 * f64::EPSILON;
        for tol in [1e-12, 1e-15] {
            let z = zeta_numeric(s, tol).unwrap();
            assert!(
                z.upper() >= lo - slack && z.lower() <= hi + slack,
                "s = {s}: {z:?} misses [{lo}, {hi}]"
            );
        }
    }
}

fn int(x: i64) -> ExactRational {
    ExactRational::from(x)
}

/// `atan(1/x)` by its alternating series, to `terms` terms.
fn arctan_inv(x: i64, terms: u32) -> ExactRational {
    let x2 = int(x * x);
    let mut power = int(x);
    let mut acc = ExactRational::zero();
    for k in 0..terms {
        let term = ExactRational::new(1, 2 * k as i64 + 1) / power.clone();
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        power *= &x2;
    }
    acc
}

fn dd_as_rational(x: DoubleDouble) -> ExactRational {
    ExactRational::from_f64(x.hi()).unwrap() + ExactRational::from_f64(x.lo()).unwrap()
}

fn close(x: DoubleDouble, exact: &ExactRational, rel: f64) -> bool {
    let diff = (dd_as_rational(x) - exact.clone()).abs();
    diff <= ExactRational::from_f64(rel).unwrap() * exact.abs()
}

#[test]
fn pi_matches_machin() {
    let pi = (int(4) * arctan_inv(5, 30) - arctan_inv(239, 30)) * int(4);
    assert!(close(DoubleDouble::PI, &pi, 1e-32));
    let half = pi / int(2);
    assert!(close(DoubleDouble::FRAC_PI_2, &half, 1e-32));
}

#[test]
fn ln2_matches_series() {
    // log 2 = sum_k 1 / (k 2^k)
    let ln2: ExactRational = (1..=120u32)
        .map(|k| ExactRational::new(BigInt::from(1), BigInt::from(k) << k))
        .sum();
    assert!(close(DoubleDouble::LN_2, &ln2, 1e-32));
}
