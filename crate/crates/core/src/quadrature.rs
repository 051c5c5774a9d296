//! Independent numerical integration of the definite integrals whose closed
//! forms the rest of the crate derives.
//!
//! Every integral goes through one tanh-sinh (double-exponential) rule run
//! in double-double arithmetic. The substitution
//! `x = c + h tanh(pi/2 sinh t)` crowds nodes into both endpoints fast
//! enough that the integrable logarithmic singularities of `log(sin x)` and
//! `log(1 - e^-2y)` need no special treatment. Nodes carry their distance
//! to each endpoint computed directly, so `sin` and `expm1` are never fed a
//! cancelled difference.
//!
//! Refinement halves the step each level and reuses earlier nodes. The
//! reported bound is the sum of
//! * the rule estimate `|S_j - S_(j-1)|` (the level difference; tanh-sinh
//!   converges roughly quadratically so this overstates the error of `S_j`),
//! * the truncation of the `t` range, estimated from the first dropped node,
//! * a rounding allowance for the double-double evaluation,
//! * for `[0, inf)` integrals, a rigorous bound on the discarded tail.

use crate::approx::{widen, ExtendedApprox, RealApprox};
use crate::dd::{DoubleDouble, DD_EPS};
use crate::error::{Error, Result};

/// Rule for choosing the truncation point `Y` of `integral_0^inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CutoffPolicy {
    /// Smallest integer `Y >= max(n, 1)` whose tail bound is below half the
    /// target.
    TailBound,
    /// A fixed cutoff; its tail bound is charged to the result.
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub target_abs_error: f64,
    /// Number of step-halving levels after the initial unit step.
    pub max_refinement_depth: u32,
    pub semi_infinite_cutoff: CutoffPolicy,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            target_abs_error: 1e-10,
            max_refinement_depth: 10,
            semi_infinite_cutoff: CutoffPolicy::TailBound,
        }
    }
}

impl QuadratureSettings {
    pub fn with_tolerance(target_abs_error: f64) -> Self {
        QuadratureSettings {
            target_abs_error,
            ..Default::default()
        }
    }

    pub fn max_depth(mut self, depth: u32) -> Self {
        self.max_refinement_depth = depth;
        self
    }

    pub fn cutoff(mut self, policy: CutoffPolicy) -> Self {
        self.semi_infinite_cutoff = policy;
        self
    }

    fn validate(&self, operation: &'static str) -> Result<()> {
        if self.target_abs_error <= 0.0 || !self.target_abs_error.is_finite() {
            return Err(Error::domain(
                operation,
                format!(
                    "target_abs_error must be positive, got {}",
                    self.target_abs_error
                ),
            ));
        }
        if self.max_refinement_depth == 0 {
            return Err(Error::domain(
                operation,
                "max_refinement_depth must be positive",
            ));
        }
        Ok(())
    }

    fn halved(&self) -> Self {
        QuadratureSettings {
            target_abs_error: self.target_abs_error / 2.0,
            ..*self
        }
    }

    /// Truncation point for the vertical-leg integrand `y^n log(1 - e^-2y)`.
    pub fn truncation_point(&self, n: u32) -> f64 {
        match self.semi_infinite_cutoff {
            CutoffPolicy::Fixed(y) => y,
            CutoffPolicy::TailBound => {
                let mut y = (n as f64).max(1.0);
                while vertical_tail_bound(n, y) >= self.target_abs_error / 2.0 {
                    y += 1.0;
                }
                y
            }
        }
    }
}

/// Bound on `|integral_Y^inf y^n log(1 - e^-2y) dy|`.
///
/// Uses `-log(1-u) <= u/(1-u)` and `y^n e^-2y <= Y^n e^-2Y e^-(2-n/Y)(y-Y)`
/// for `y >= Y > n/2`. Infinite when `Y <= n/2`.
pub fn vertical_tail_bound(n: u32, y: f64) -> f64 {
    let n = n as f64;
    if y.is_nan() || y <= n / 2.0 {
        return f64::INFINITY;
    }
    let decay = 2.0 - n / y;
    let log_peak = if n == 0.0 {
        -2.0 * y
    } else {
        n * y.ln() - 2.0 * y
    };
    widen(log_peak.exp() / (decay * -(-2.0 * y).exp_m1()))
}

/// A quadrature node with its distance to either endpoint.
pub(crate) struct Node {
    pub x: DoubleDouble,
    pub from_left: DoubleDouble,
    pub from_right: DoubleDouble,
}

impl Node {
    /// Distance to the nearer endpoint.
    pub fn nearest(&self) -> DoubleDouble {
        if self.from_left <= self.from_right {
            self.from_left
        } else {
            self.from_right
        }
    }
}

/// Nodes whose weight falls below this fraction of the half-width are dropped.
const WEIGHT_FLOOR: f64 = 1e-40;
/// Never accept a result before the step has been halved this many times.
const MIN_LEVEL: u32 = 4;

/// Distance from the nearer endpoint and weight at abscissa `t >= 0`.
fn abscissa(t: f64, half_width: DoubleDouble) -> Option<(DoubleDouble, DoubleDouble)> {
    let et = DoubleDouble::from(t).exp();
    let ei = et.recip();
    let sinh = (et - ei).ldexp(-1);
    let cosh = (et + ei).ldexp(-1);
    let u = DoubleDouble::FRAC_PI_2 * sinh;
    if u.hi() > 300.0 {
        return None;
    }
    let q = (-u.ldexp(1)).exp();
    let one_q = DoubleDouble::ONE + q;
    let d = half_width * q.ldexp(1) / one_q;
    let w = half_width * DoubleDouble::FRAC_PI_2 * cosh * q.ldexp(2) / one_q.sqr();
    Some((d, w))
}

struct Accumulator<'a> {
    lo: DoubleDouble,
    hi: DoubleDouble,
    half_width: DoubleDouble,
    f: &'a dyn Fn(&Node) -> DoubleDouble,
    sum: DoubleDouble,
    l1: f64,
    nodes: usize,
    tail_term: f64,
}

impl Accumulator<'_> {
    fn eval(&mut self, node: Node) -> DoubleDouble {
        self.nodes += 1;
        (self.f)(&node)
    }

    fn centre(&mut self) {
        let mid = self.lo + self.half_width;
        let node = Node {
            x: mid,
            from_left: self.half_width,
            from_right: self.half_width,
        };
        let w = self.half_width * DoubleDouble::FRAC_PI_2;
        let term = w * self.eval(node);
        self.sum += term;
        self.l1 += term.hi().abs();
    }

    /// Adds the symmetric pair at `+-t`. Returns false once the weights have
    /// become negligible; the first rejected pair is still evaluated so its
    /// size can stand in for the whole discarded tail.
    fn pair(&mut self, t: f64) -> bool {
        let Some((d, w)) = abscissa(t, self.half_width) else {
            return false;
        };
        if d.hi() == 0.0 {
            return false;
        }
        let far = self.half_width.ldexp(1) - d;
        let left = Node {
            x: self.lo + d,
            from_left: d,
            from_right: far,
        };
        let right = Node {
            x: self.hi - d,
            from_left: far,
            from_right: d,
        };
        let fl = self.eval(left);
        let fr = self.eval(right);
        let size = w.hi().abs() * (fl.hi().abs() + fr.hi().abs());
        if w.hi() < WEIGHT_FLOOR * self.half_width.hi() {
            self.tail_term = self.tail_term.max(size);
            return false;
        }
        self.sum += w * (fl + fr);
        self.l1 += size;
        true
    }
}

/// Tanh-sinh quadrature of `f` over `[lo, hi]` to absolute error `target`.
pub(crate) fn tanh_sinh(
    lo: DoubleDouble,
    hi: DoubleDouble,
    f: &dyn Fn(&Node) -> DoubleDouble,
    target: f64,
    max_depth: u32,
) -> Result<ExtendedApprox> {
    let half_width = (hi - lo).ldexp(-1);
    let mut acc = Accumulator {
        lo,
        hi,
        half_width,
        f,
        sum: DoubleDouble::ZERO,
        l1: 0.0,
        nodes: 0,
        tail_term: 0.0,
    };

    acc.centre();
    let mut k = 1u32;
    while acc.pair(k as f64) {
        k += 1;
    }
    let mut previous = acc.sum;
    let mut estimate = f64::INFINITY;

    for level in 1..=max_depth {
        let h = 0.5f64.powi(level as i32);
        let mut k = 1u32;
        while acc.pair(k as f64 * h) {
            k += 2;
        }
        let current = acc.sum.mul_f64(h);
        let rule = (current - previous).abs().hi();
        // later terms shrink double-exponentially; 2x covers their sum
        let truncation = 2.0 * h * acc.tail_term;
        let round_off = (256.0 + acc.nodes as f64) * DD_EPS * h * acc.l1;
        estimate = widen(rule + truncation + round_off);
        if level >= MIN_LEVEL && estimate <= target {
            return Ok(ExtendedApprox::new(current, estimate));
        }
        previous = current;
    }
    Err(Error::DepthExhausted {
        depth: max_depth,
        estimate,
        target,
    })
}

fn logsine_integrand(n: u32) -> impl Fn(&Node) -> DoubleDouble {
    move |node: &Node| node.x.powi(n) * node.nearest().sin().ln()
}

/// `I_n = integral_0^pi x^n log(sin x) dx` in double-double.
pub fn integrate_logsine_extended(n: u32, settings: &QuadratureSettings) -> Result<ExtendedApprox> {
    settings.validate("integrate_logsine")?;
    tanh_sinh(
        DoubleDouble::ZERO,
        DoubleDouble::PI,
        &logsine_integrand(n),
        settings.target_abs_error,
        settings.max_refinement_depth,
    )
}

/// `I_n = integral_0^pi x^n log(sin x) dx`.
pub fn integrate_logsine(n: u32, settings: &QuadratureSettings) -> Result<RealApprox> {
    integrate_logsine_extended(n, &settings.halved())?
        .certify("integrate_logsine", settings.target_abs_error)
}

/// `integral_0^(pi/2) log(2 sin x)^2 dx`, whose value is `pi^3/24`.
pub fn integrate_logsquared(settings: &QuadratureSettings) -> Result<RealApprox> {
    settings.validate("integrate_logsquared")?;
    let f = |node: &Node| node.from_left.sin().mul_f64(2.0).ln().sqr();
    tanh_sinh(
        DoubleDouble::ZERO,
        DoubleDouble::FRAC_PI_2,
        &f,
        settings.target_abs_error / 2.0,
        settings.max_refinement_depth,
    )?
    .certify("integrate_logsquared", settings.target_abs_error)
}

/// `integral_0^inf y^n log(1 - e^-2y) dy` in double-double, truncated at the
/// point chosen by the cutoff policy with the tail bound added to the error.
pub fn integrate_vertical_leg_extended(
    n: u32,
    settings: &QuadratureSettings,
) -> Result<ExtendedApprox> {
    settings.validate("integrate_vertical_leg")?;
    let cutoff = settings.truncation_point(n);
    let tail = vertical_tail_bound(n, cutoff);
    if tail.is_nan() || tail >= settings.target_abs_error {
        return Err(Error::Certification {
            operation: "integrate_vertical_leg",
            requested: settings.target_abs_error,
            achieved: tail,
        });
    }
    let f = move |node: &Node| {
        let y = node.from_left;
        // 1 - e^-2y without cancellation near y = 0
        let one_minus = -(-y.ldexp(1)).exp_m1();
        y.powi(n) * one_minus.ln()
    };
    let body = tanh_sinh(
        DoubleDouble::ZERO,
        DoubleDouble::from(cutoff),
        &f,
        settings.target_abs_error - tail,
        settings.max_refinement_depth,
    )?;
    Ok(ExtendedApprox::new(
        body.value,
        widen(body.abs_error + tail),
    ))
}

/// `integral_0^inf y^n log(1 - e^-2y) dy`; exact value `-n! zeta(n+2) / 2^(n+1)`.
pub fn integrate_vertical_leg(n: u32, settings: &QuadratureSettings) -> Result<RealApprox> {
    integrate_vertical_leg_extended(n, &settings.halved())?
        .certify("integrate_vertical_leg", settings.target_abs_error)
}

/// `integral_0^pi theta^power cos(2 l theta) d theta` for `power` in {0, 1};
/// both vanish for every `l >= 1`.
pub fn cosine_moment(l: u32, power: u32) -> Result<RealApprox> {
    cosine_moment_with(l, power, &QuadratureSettings::with_tolerance(1e-13))
}

pub fn cosine_moment_with(l: u32, power: u32, settings: &QuadratureSettings) -> Result<RealApprox> {
    settings.validate("cosine_moment")?;
    if l == 0 {
        return Err(Error::domain("cosine_moment", "l must be at least 1"));
    }
    if power > 1 {
        return Err(Error::domain(
            "cosine_moment",
            format!("power must be 0 or 1, got {power}"),
        ));
    }
    let freq = 2.0 * l as f64;
    let f = move |node: &Node| node.x.powi(power) * node.x.mul_f64(freq).cos();
    tanh_sinh(
        DoubleDouble::ZERO,
        DoubleDouble::PI,
        &f,
        settings.target_abs_error / 2.0,
        settings.max_refinement_depth,
    )?
    .certify("cosine_moment", settings.target_abs_error)
}

/// `integral_0^pi cos(2 l theta) cos(2 l' theta) d theta = (pi/2) delta_(l,l')`.
pub fn cosine_orthogonality(l: u32, l_prime: u32) -> Result<RealApprox> {
    cosine_orthogonality_with(l, l_prime, &QuadratureSettings::with_tolerance(1e-13))
}

pub fn cosine_orthogonality_with(
    l: u32,
    l_prime: u32,
    settings: &QuadratureSettings,
) -> Result<RealApprox> {
    settings.validate("cosine_orthogonality")?;
    if l == 0 || l_prime == 0 {
        return Err(Error::domain(
            "cosine_orthogonality",
            "indices must be at least 1",
        ));
    }
    let (a, b) = (2.0 * l as f64, 2.0 * l_prime as f64);
    let f = move |node: &Node| node.x.mul_f64(a).cos() * node.x.mul_f64(b).cos();
    tanh_sinh(
        DoubleDouble::ZERO,
        DoubleDouble::PI,
        &f,
        settings.target_abs_error / 2.0,
        settings.max_refinement_depth,
    )?
    .certify("cosine_orthogonality", settings.target_abs_error)
}
