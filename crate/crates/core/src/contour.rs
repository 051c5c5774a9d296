//! The null quadrature of `z^n log(1 - e^(2iz))` around the half-strip
//! `0 <= Re z <= pi, Im z >= 0`, split into its three legs:
//!
//! ```text
//! L_n = i^(n+1) n!/2^(n+1) zeta(n+2)                                   (left, descending)
//! R_n = -i sum_k C(n,k) pi^(n-k) i^k k!/2^(k+1) zeta(k+2)              (right, ascending)
//! H_n = pi^(n+1) log2/(n+1) + I_n + i pi^(n+2) (1/(n+2) - 1/(2(n+1)))  (bottom)
//! ```
//!
//! `K_n = L_n + H_n + R_n` must vanish. The vertical legs come from their
//! zeta series; `H_n` takes `I_n` from the quadrature oracle so that a
//! vanishing `K_n` is an independent check of the closed form.
//!
//! The imaginary part of `K_n = 0`, after Euler's zeta/Bernoulli
//! substitution, is an exact rational statement and is verified as such
//! together with its reduction to the plain Bernoulli recurrence.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::approx::{rounding, widen, ComplexApprox, ExtendedApprox, RealApprox};
use crate::dd::DoubleDouble;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, pow2, BernoulliTable, ExactRational};
use crate::logsine::logsine_numeric_extended;
use crate::quadrature::{integrate_logsine_extended, QuadratureSettings};
use crate::zeta::{zeta_even_exact, zeta_extended};

/// `i^m` as exact `(re, im)` components.
fn i_power(m: u32) -> (i8, i8) {
    match m % 4 {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

#[derive(Debug, Clone, Copy)]
struct ExtendedComplex {
    re: ExtendedApprox,
    im: ExtendedApprox,
}

impl ExtendedComplex {
    fn zero() -> Self {
        ExtendedComplex {
            re: ExtendedApprox::exact(DoubleDouble::ZERO),
            im: ExtendedApprox::exact(DoubleDouble::ZERO),
        }
    }

    /// `unit * x` for a unit `unit` among `+-1, +-i`.
    fn along(unit: (i8, i8), x: ExtendedApprox) -> Self {
        let signed = |s: i8| match s {
            0 => ExtendedApprox::exact(DoubleDouble::ZERO),
            1 => x,
            _ => ExtendedApprox::new(-x.value, x.abs_error),
        };
        ExtendedComplex {
            re: signed(unit.0),
            im: signed(unit.1),
        }
    }

    fn round(self) -> ComplexApprox {
        ComplexApprox::new(self.re.round(), self.im.round())
    }
}

impl std::ops::Add for ExtendedComplex {
    type Output = ExtendedComplex;
    fn add(self, other: ExtendedComplex) -> ExtendedComplex {
        ExtendedComplex {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }
}

fn check_tolerance(operation: &'static str, tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            operation,
            format!("tolerance must be positive, got {tol}"),
        ))
    }
}

/// `factor * zeta(s)` with the zeta tolerance scaled so the product's error
/// stays within `budget`.
fn scaled_zeta(s: u32, factor: DoubleDouble, budget: f64) -> Result<ExtendedApprox> {
    let zeta = zeta_extended(s, 0.5 * budget / factor.abs().hi())?;
    Ok(zeta.scale(factor, 4))
}

fn leg_l_extended(n: u32, tol: f64) -> Result<ExtendedComplex> {
    let c = ExactRational::from_integer(factorial(n as u64)) * pow2(-(n as i64 + 1));
    let magnitude = scaled_zeta(n + 2, c.to_dd(), tol)?;
    Ok(ExtendedComplex::along(i_power(n + 1), magnitude))
}

/// The `k`-th summand of `R_n`, i.e. `-i^(k+1) C(n,k) pi^(n-k) k!/2^(k+1) zeta(k+2)`.
fn leg_r_term_extended(n: u32, k: u32, budget: f64) -> Result<ExtendedComplex> {
    let c = ExactRational::from_integer(binomial(n as u64, k as u64) * factorial(k as u64))
        * pow2(-(k as i64 + 1));
    let factor = c.to_dd() * DoubleDouble::PI.powi(n - k);
    let magnitude = scaled_zeta(k + 2, factor, budget)?;
    let (re, im) = i_power(k + 1);
    Ok(ExtendedComplex::along((-re, -im), magnitude))
}

fn leg_r_extended(n: u32, tol: f64) -> Result<ExtendedComplex> {
    let budget = tol / (n + 1) as f64;
    (0..=n).try_fold(ExtendedComplex::zero(), |acc, k| {
        Ok(acc + leg_r_term_extended(n, k, budget)?)
    })
}

/// Exact rational `1/(n+2) - 1/(2(n+1))`, the imaginary part of `H_n` over `pi^(n+2)`.
pub fn leg_h_imag_coefficient(n: u32) -> ExactRational {
    ExactRational::new(1, n as i64 + 2) - ExactRational::new(1, 2 * (n as i64 + 1))
}

fn leg_h_from(n: u32, log_sine: ExtendedApprox) -> ExtendedComplex {
    let pi_power = DoubleDouble::PI.powi(n + 1);
    let log2_part = pi_power * DoubleDouble::LN_2 / DoubleDouble::from((n + 1) as f64);
    let re = ExtendedApprox::new(log2_part, rounding(log2_part, n + 6)) + log_sine;
    let im_value = leg_h_imag_coefficient(n).to_dd() * pi_power * DoubleDouble::PI;
    let im = ExtendedApprox::new(im_value, rounding(im_value, n + 6));
    ExtendedComplex { re, im }
}

fn leg_h_extended(n: u32, settings: &QuadratureSettings) -> Result<ExtendedComplex> {
    let log_sine = integrate_logsine_extended(n, settings)?;
    Ok(leg_h_from(n, log_sine))
}

/// Left leg `L_n = i^(n+1) n!/2^(n+1) zeta(n+2)`.
pub fn leg_l(n: u32, tol: f64) -> Result<ComplexApprox> {
    check_tolerance("leg_l", tol)?;
    Ok(leg_l_extended(n, tol)?.round())
}

/// Right leg `R_n`; every zeta value is requested at the accuracy that keeps
/// each of the `n+1` summands within `tol/(n+1)`.
pub fn leg_r(n: u32, tol: f64) -> Result<ComplexApprox> {
    check_tolerance("leg_r", tol)?;
    Ok(leg_r_extended(n, tol)?.round())
}

/// One summand of the right leg; the `k = n` summand cancels `L_n`.
pub fn leg_r_term(n: u32, k: u32, tol: f64) -> Result<ComplexApprox> {
    check_tolerance("leg_r_term", tol)?;
    if k > n {
        return Err(Error::domain(
            "leg_r_term",
            format!("need k <= n, got k = {k}, n = {n}"),
        ));
    }
    Ok(leg_r_term_extended(n, k, tol)?.round())
}

/// Bottom leg `H_n`, with `I_n` from the quadrature oracle.
pub fn leg_h(n: u32, settings: &QuadratureSettings) -> Result<ComplexApprox> {
    Ok(leg_h_extended(n, settings)?.round())
}

/// Outcome of one null-quadrature check.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourReport {
    pub n: u32,
    pub left: ComplexApprox,
    pub right: ComplexApprox,
    pub bottom: ComplexApprox,
    /// `left + bottom + right`.
    pub total: ComplexApprox,
    pub residual_modulus: f64,
    pub certified_bound: f64,
    pub passed: bool,
    /// Why the legs could not be evaluated, if they could not.
    pub failure: Option<Error>,
}

impl ContourReport {
    fn failed(n: u32, cause: Error) -> Self {
        let zero = ComplexApprox::new(RealApprox::exact(0.0), RealApprox::exact(0.0));
        ContourReport {
            n,
            left: zero,
            right: zero,
            bottom: zero,
            total: zero,
            residual_modulus: f64::INFINITY,
            certified_bound: 0.0,
            passed: false,
            failure: Some(cause),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl Serialize for ContourReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("L", &self.left.pair())?;
        map.serialize_entry("R", &self.right.pair())?;
        map.serialize_entry("H", &self.bottom.pair())?;
        map.serialize_entry("K", &self.total.pair())?;
        map.serialize_entry("residual", &finite_or_null(self.residual_modulus))?;
        map.serialize_entry("bound", &self.certified_bound)?;
        map.serialize_entry("pass", &self.passed)?;
        if let Some(cause) = &self.failure {
            map.serialize_entry("error", &cause.to_string())?;
        }
        map.end()
    }
}

fn finite_or_null(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Exact sum of three floats, rounded once; returns the value and the
/// rounding error.
fn sum3(a: f64, b: f64, c: f64) -> RealApprox {
    let s = DoubleDouble::from(a) + DoubleDouble::from(b) + DoubleDouble::from(c);
    RealApprox::new(s.to_f64(), s.lo().abs())
}

/// Evaluates the three legs at tolerance `tol` and checks `K_n = 0`.
///
/// Passes iff `|K_n|` is within the summed leg bounds and that bound is at
/// most `10 tol`.
pub fn verify_null(n: u32, tol: f64) -> ContourReport {
    let legs = (|| -> Result<_> {
        check_tolerance("verify_null", tol)?;
        let half = tol / 2.0;
        let left = leg_l_extended(n, half)?.round();
        let right = leg_r_extended(n, half)?.round();
        let bottom = leg_h_extended(n, &QuadratureSettings::with_tolerance(half))?.round();
        Ok((left, right, bottom))
    })();
    let (left, right, bottom) = match legs {
        Ok(legs) => legs,
        Err(e) => return ContourReport::failed(n, e),
    };

    let re = sum3(left.re.value, bottom.re.value, right.re.value);
    let im = sum3(left.im.value, bottom.im.value, right.im.value);
    let leg_bounds: f64 = [left, right, bottom]
        .iter()
        .map(|c| c.re.abs_error + c.im.abs_error)
        .sum();
    let total = ComplexApprox::new(
        RealApprox::new(re.value, leg_bounds),
        RealApprox::new(im.value, leg_bounds),
    );
    let certified_bound = widen(leg_bounds + re.abs_error + im.abs_error);
    let residual_modulus = total.modulus();
    ContourReport {
        n,
        left,
        right,
        bottom,
        total,
        residual_modulus,
        certified_bound,
        passed: residual_modulus <= certified_bound && certified_bound <= 10.0 * tol,
        failure: None,
    }
}

/// `Re K_n` with `I_n` taken from the closed form instead of the oracle.
/// The true value is zero, so the result should contain 0.
pub fn verify_real_part(n: u32, tol: f64) -> Result<RealApprox> {
    check_tolerance("verify_real_part", tol)?;
    let quarter = tol / 4.0;
    let left = leg_l_extended(n, quarter)?;
    let right = leg_r_extended(n, quarter)?;
    let closed = logsine_numeric_extended(n, quarter)?;
    let bottom = leg_h_from(n, closed);
    Ok((left.re + right.re + bottom.re).round())
}

fn check_table(
    operation: &'static str,
    n: u32,
    table: &BernoulliTable,
    need: fn(usize) -> usize,
) -> Result<()> {
    if n < 1 {
        return Err(Error::domain(operation, "n must be at least 1"));
    }
    table.require(need(n as usize))
}

/// Largest Bernoulli index used by the imaginary-part identity.
fn imag_identity_need(n: usize) -> usize {
    2 * ((n - 1) / 2) + 2
}

fn c(n: u32, k: u32) -> ExactRational {
    ExactRational::from_integer(binomial(n as u64, k as u64))
}

/// `Im K_n / pi^(n+2)` after writing each `zeta(2k+2)` as an exact rational
/// multiple of `pi^(2k+2)`. Zero for every `n >= 1`.
pub fn imaginary_part_residual(n: u32, table: &BernoulliTable) -> Result<ExactRational> {
    check_table("imaginary_part_residual", n, table, imag_identity_need)?;
    let mut acc = leg_h_imag_coefficient(n);
    for k in 0..=(n - 1) / 2 {
        let q = zeta_even_exact(k + 1, table)?.coefficient;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = c(n, 2 * k)
            * ExactRational::from_integer(factorial(2 * k as u64) * sign)
            * pow2(-(2 * k as i64 + 1))
            * q;
        acc -= &term;
    }
    Ok(acc)
}

/// `sum_{k=0}^{floor((n-1)/2)} C(n,2k) B_(2k+2) / ((k+1)(2k+1)) = n / ((n+1)(n+2))`.
pub fn verify_imag_identity_exact(n: u32, table: &BernoulliTable) -> Result<bool> {
    check_table("verify_imag_identity_exact", n, table, imag_identity_need)?;
    let lhs: ExactRational = (0..=(n - 1) / 2)
        .map(|k| {
            c(n, 2 * k) * &table[2 * k as usize + 2]
                / ExactRational::from_integer(BigInt::from((k + 1) * (2 * k + 1)))
        })
        .sum();
    let n_big = n as i64;
    Ok(lhs == ExactRational::new(n_big, (n_big + 1) * (n_big + 2)))
}

/// The four rewriting steps that turn the imaginary-part identity into the
/// Bernoulli recurrence at index `n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStep {
    /// `sum_k C(n+2, 2k+2) B_(2k+2) = n/2` over `2k+2 <= n+1`.
    EvenIndexSum,
    /// `sum_{k=2}^{n+1} C(n+2, k) B_k = n/2`, odd indices intercalated.
    IntercalatedSum,
    /// `C(n+2,0) B_0 + C(n+2,1) B_1 = -n/2`.
    LeadingTerms,
    /// `sum_{k=0}^{n+1} C(n+2, k) B_k = 0`.
    FullRecurrence,
}

impl ReductionStep {
    pub const ALL: [ReductionStep; 4] = [
        ReductionStep::EvenIndexSum,
        ReductionStep::IntercalatedSum,
        ReductionStep::LeadingTerms,
        ReductionStep::FullRecurrence,
    ];
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionStep::EvenIndexSum => "(a) even-index sum equals n/2",
            ReductionStep::IntercalatedSum => "(b) intercalated sum equals n/2",
            ReductionStep::LeadingTerms => "(c) leading terms equal -n/2",
            ReductionStep::FullRecurrence => "(d) full recurrence vanishes",
        };
        f.write_str(s)
    }
}

/// Result of [`verify_reduction_chain`], one flag per step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCheck {
    pub n: u32,
    pub steps: [bool; 4],
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|&ok| ok)
    }

    pub fn first_broken(&self) -> Option<ReductionStep> {
        ReductionStep::ALL
            .into_iter()
            .zip(self.steps)
            .find_map(|(step, ok)| (!ok).then_some(step))
    }
}

pub fn verify_reduction_chain(n: u32, table: &BernoulliTable) -> Result<ReductionCheck> {
    check_table("verify_reduction_chain", n, table, |n| n + 1)?;
    let m = n + 2;
    let half_n = ExactRational::new(n as i64, 2);
    let term = |k: u32| c(m, k) * &table[k as usize];

    let even: ExactRational = (0..=(n - 1) / 2).map(|k| term(2 * k + 2)).sum();
    let intercalated: ExactRational = (2..=n + 1).map(term).sum();
    let leading = term(0) + term(1);
    let full: ExactRational = (0..=n + 1).map(term).sum();

    Ok(ReductionCheck {
        n,
        steps: [
            even == half_n,
            intercalated == half_n,
            leading == -&half_n,
            full.is_zero(),
        ],
    })
}
