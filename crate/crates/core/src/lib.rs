//! Exact Bernoulli numbers, zeta values and log-sine integrals, together
//! with the numerical machinery that cross-checks them: a double-exponential
//! quadrature oracle, the three-leg null contour quadrature, and the
//! Fourier-series route to the same closed forms.

pub mod approx;
pub mod contour;
pub mod dd;
pub mod error;
pub mod exact;
pub mod fourier;
pub mod logsine;
pub mod quadrature;
pub mod zeta;

pub use approx::{ComplexApprox, ExtendedApprox, RealApprox};
pub use contour::{verify_null, ContourReport};
pub use dd::DoubleDouble;
pub use error::{Error, Result};
pub use exact::{
    bernoulli_table, binomial, verify_binomial_identity, verify_recurrence, BernoulliTable,
    ExactRational,
};
pub use fourier::{logsine_via_fourier, parseval_logsquared};
pub use logsine::{logsine_numeric, logsine_symbolic, SymbolicLogSine};
pub use quadrature::{integrate_logsine, QuadratureSettings};
pub use zeta::{zeta_even_exact, zeta_numeric, zeta_series_partial, ZetaEvenValue};
