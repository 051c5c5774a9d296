//! Numeric results carrying an absolute error bound.

use serde::Serialize;

use crate::dd::{DoubleDouble, DD_EPS};
use crate::error::{Error, Result};

/// A float together with a bound on its absolute error: the true quantity
/// lies in `[value - abs_error, value + abs_error]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealApprox {
    pub value: f64,
    pub abs_error: f64,
}

impl RealApprox {
    pub fn new(value: f64, abs_error: f64) -> Self {
        debug_assert!(abs_error >= 0.0 && abs_error.is_finite());
        RealApprox { value, abs_error }
    }

    pub fn exact(value: f64) -> Self {
        RealApprox::new(value, 0.0)
    }

    pub fn lower(&self) -> f64 {
        self.value - self.abs_error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.abs_error
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.abs_error
    }

    /// True when the two certified intervals overlap, i.e. the difference
    /// is within the sum of both bounds.
    pub fn agrees_with(&self, other: &RealApprox) -> bool {
        (self.value - other.value).abs() <= self.abs_error + other.abs_error
    }
}

/// A double-double value with an absolute error bound. Intermediate form of
/// every numeric routine; rounded to [`RealApprox`] at the public boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedApprox {
    pub value: DoubleDouble,
    pub abs_error: f64,
}

impl ExtendedApprox {
    pub fn new(value: DoubleDouble, abs_error: f64) -> Self {
        ExtendedApprox { value, abs_error }
    }

    pub fn exact(value: DoubleDouble) -> Self {
        ExtendedApprox::new(value, 0.0)
    }

    /// Rounds to `f64`; the rounding error `|lo|` is added to the bound.
    pub fn round(self) -> RealApprox {
        RealApprox::new(
            self.value.to_f64(),
            widen(self.abs_error + self.value.lo().abs()),
        )
    }

    /// Rounds and checks the result against `target`.
    pub(crate) fn certify(self, operation: &'static str, target: f64) -> Result<RealApprox> {
        let r = self.round();
        if r.abs_error <= target {
            Ok(r)
        } else {
            Err(Error::Certification {
                operation,
                requested: target,
                achieved: r.abs_error,
            })
        }
    }

    /// Scales by an exactly known double-double factor.
    pub fn scale(self, factor: DoubleDouble, factor_ops: u32) -> ExtendedApprox {
        let value = self.value * factor;
        ExtendedApprox::new(
            value,
            self.abs_error * factor.abs().hi() * (1.0 + 1e-15) + rounding(value, factor_ops + 2),
        )
    }
}

/// Sum of two results, charging the rounding of the addition itself.
impl std::ops::Add for ExtendedApprox {
    type Output = ExtendedApprox;
    fn add(self, other: ExtendedApprox) -> ExtendedApprox {
        let value = self.value + other.value;
        ExtendedApprox::new(value, self.abs_error + other.abs_error + rounding(value, 2))
    }
}

/// Error charged for `ops` double-double operations producing `value`.
pub(crate) fn rounding(value: DoubleDouble, ops: u32) -> f64 {
    4.0 * (ops as f64 + 1.0) * DD_EPS * value.hi().abs()
}

/// Inflates a bound computed in floating point so it stays an upper bound.
pub(crate) fn widen(x: f64) -> f64 {
    x * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE
}

/// Real and imaginary parts with independent bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexApprox {
    pub re: RealApprox,
    pub im: RealApprox,
}

impl ComplexApprox {
    pub fn new(re: RealApprox, im: RealApprox) -> Self {
        ComplexApprox { re, im }
    }

    pub fn modulus(&self) -> f64 {
        self.re.value.hypot(self.im.value)
    }

    pub fn modulus_bound(&self) -> f64 {
        self.re.abs_error.hypot(self.im.abs_error)
    }

    /// `[re, im]` values, the layout used by the JSON reports.
    pub fn pair(&self) -> [f64; 2] {
        [self.re.value, self.im.value]
    }
}
