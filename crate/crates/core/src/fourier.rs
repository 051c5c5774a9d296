//! Fourier-series route to the log-sine integrals.
//!
//! On the unit circle `log(1 - e^(i theta))` splits into
//!
//! ```text
//! log(2|sin(theta/2)|) = -sum_l cos(l theta)/l
//! (theta - pi)/2       = -sum_l sin(l theta)/l
//! ```
//!
//! for `theta` in `(0, 2 pi)`. Substituting `theta = 2x` into the first and
//! integrating against `x^n` over `(0, pi)` reduces `I_n` to the moments
//! `J_n(l) = integral_0^pi x^n cos(2lx) dx`, which integration by parts
//! resolves in cos -> sin -> cos couplets:
//!
//! ```text
//! J_p(l) = p pi^(p-1)/(2l)^2 - p(p-1)/(2l)^2 J_(p-2)(l),    J_0(l) = J_1(l) = 0
//! ```

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::logsine::SymbolicLogSine;

/// Distance from `0 mod 2 pi` inside which the series are not evaluated.
pub const LATTICE_EXCLUSION: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// `-sum cos(l theta)/l`, converging to `log(2|sin(theta/2)|)`.
    LogSin,
    /// `-sum sin(l theta)/l`, converging to `(theta - pi)/2`.
    Sawtooth,
}

impl Series {
    /// Value the series converges to at `theta`.
    pub fn limit(self, theta: f64) -> f64 {
        match self {
            Series::LogSin => (2.0 * (theta / 2.0).sin().abs()).ln(),
            Series::Sawtooth => (theta - PI) / 2.0,
        }
    }
}

/// A truncation of one of the two series after `terms` summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourierPartialSum {
    series: Series,
    terms: u64,
}

impl FourierPartialSum {
    pub fn new(series: Series, terms: u64) -> Result<Self> {
        if terms == 0 {
            return Err(Error::domain(
                "fourier_partial_sum",
                "terms must be positive",
            ));
        }
        Ok(FourierPartialSum { series, terms })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// Partial sum at `theta`, accumulated from the smallest summand up.
    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        check_angle(theta)?;
        let term: fn(f64) -> f64 = match self.series {
            Series::LogSin => f64::cos,
            Series::Sawtooth => f64::sin,
        };
        let sum: f64 = (1..=self.terms)
            .rev()
            .map(|l| term(l as f64 * theta) / l as f64)
            .sum();
        Ok(-sum)
    }
}

fn check_angle(theta: f64) -> Result<()> {
    if (LATTICE_EXCLUSION..=TAU - LATTICE_EXCLUSION).contains(&theta) {
        Ok(())
    } else {
        Err(Error::domain(
            "fourier_partial_sum",
            format!("theta must lie in (0, 2 pi) away from the endpoints, got {theta}"),
        ))
    }
}

/// `-sum_{l=1}^{terms} cos(l theta)/l`.
pub fn logsin_series_partial(theta: f64, terms: u64) -> Result<f64> {
    FourierPartialSum::new(Series::LogSin, terms)?.evaluate(theta)
}

/// `-sum_{l=1}^{terms} sin(l theta)/l`.
pub fn sawtooth_series_partial(theta: f64, terms: u64) -> Result<f64> {
    FourierPartialSum::new(Series::Sawtooth, terms)?.evaluate(theta)
}

/// `(pi/4) sum_{l=1}^{terms} 1/l^2`, the term-by-term square of the log-sine
/// series integrated over `(0, pi/2)`. Tends to `pi^3/24` from below.
pub fn parseval_logsquared(terms: u64) -> Result<f64> {
    if terms == 0 {
        return Err(Error::domain(
            "parseval_logsquared",
            "terms must be positive",
        ));
    }
    let mut acc = DoubleDouble::ZERO;
    for l in (1..=terms).rev() {
        let l = DoubleDouble::from(l as f64);
        acc += (l * l).recip();
    }
    Ok((acc * DoubleDouble::PI).ldexp(-2).to_f64())
}

/// One summand `coefficient * pi^pi_power / l^inv_l_power` of `J_n(l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTerm {
    pub coefficient: ExactRational,
    pub pi_power: u32,
    pub inv_l_power: u32,
}

/// Exact expansion of `J_n(l)` in powers of `1/l`, from the integration by
/// parts cadence. The cosine beat contributes no endpoint term since
/// `sin(2lx)` vanishes at both ends; the sine beat leaves `-pi^p/(2l)`.
pub fn cosine_moment_terms(n: u32) -> Vec<MomentTerm> {
    let mut terms = Vec::new();
    let mut scale = ExactRational::one();
    let mut inv_l_power = 0;
    let mut p = n;
    while p >= 2 {
        // cos beat: x^p cos(2lx) -> -(p/2l) x^(p-1) sin(2lx)
        scale *= ExactRational::new(-(p as i64), 2);
        inv_l_power += 1;
        // sin beat: x^(p-1) sin(2lx) -> -pi^(p-1)/(2l) + ((p-1)/2l) x^(p-2) cos(2lx)
        terms.push(MomentTerm {
            coefficient: &scale * ExactRational::new(-1, 2),
            pi_power: p - 1,
            inv_l_power: inv_l_power + 1,
        });
        scale *= ExactRational::new(p as i64 - 1, 2);
        inv_l_power += 1;
        p -= 2;
    }
    terms
}

/// Power of the moment `integral_0^pi x^p cos(2lx) dx` at which the cadence
/// for `I_n` stops; that moment vanishes for every `l`.
pub fn cadence_terminal_power(n: u32) -> u32 {
    n % 2
}

/// `I_n` assembled from the Fourier route:
/// `I_n = -log 2 pi^(n+1)/(n+1) - sum_l J_n(l)/l`.
pub fn logsine_via_fourier(n: u32) -> SymbolicLogSine {
    let zeta_terms: BTreeMap<u32, ExactRational> = cosine_moment_terms(n)
        .into_iter()
        .map(|t| {
            debug_assert_eq!(t.pi_power + t.inv_l_power, n + 1);
            (t.inv_l_power + 1, -t.coefficient)
        })
        .collect();
    SymbolicLogSine {
        n,
        log2_coefficient: ExactRational::new(-1, n as i64 + 1),
        zeta_terms,
    }
}
