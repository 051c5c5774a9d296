use std::f64::consts::PI;

use logsine_core::contour::{
    imaginary_part_residual, verify_imag_identity_exact, verify_real_part, verify_reduction_chain,
};
use logsine_core::exact::factorial;
use logsine_core::fourier::{cadence_terminal_power, logsin_series_partial, Series};
use logsine_core::quadrature::{
    cosine_moment, cosine_orthogonality, integrate_logsine, integrate_logsquared,
    integrate_vertical_leg, QuadratureSettings,
};
use logsine_core::{
    bernoulli_table, logsine_numeric, logsine_symbolic, logsine_via_fourier, parseval_logsquared,
    verify_binomial_identity, verify_null, verify_recurrence, zeta_numeric, Error, ExactRational,
    Result,
};
use serde_json::{json, Value};

use crate::args::Suite;
use crate::table::{cell, Table};

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    /// The check could not be carried out.
    Error(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub n: Option<u32>,
    pub outcome: Outcome,
}

impl Check {
    fn new(
        suite: Suite,
        name: &'static str,
        n: Option<u32>,
        result: Result<(bool, String)>,
    ) -> Self {
        let outcome = match result {
            Ok((true, detail)) => Outcome::Pass(detail),
            Ok((false, detail)) => Outcome::Fail(detail),
            Err(e) => Outcome::Error(e),
        };
        Check {
            suite,
            name,
            n,
            outcome,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass(_))
    }
}

fn exact(ok: bool) -> Result<(bool, String)> {
    Ok((ok, if ok { "exact" } else { "exact mismatch" }.to_string()))
}

fn recurrence(n_max: u32) -> Vec<Check> {
    let table = bernoulli_table(n_max.max(1) as usize);
    let mut checks = Vec::new();
    for n in 2..=n_max {
        let result = verify_recurrence(n as usize, &table).and_then(exact);
        checks.push(Check::new(Suite::Recurrence, "recurrence", Some(n), result));
    }
    for k in (3..=n_max).step_by(2) {
        let ok = table[k as usize].is_zero();
        checks.push(Check::new(
            Suite::Recurrence,
            "odd_vanishes",
            Some(k),
            exact(ok),
        ));
    }
    checks
}

fn identities(n_max: u32) -> Vec<Check> {
    let table = bernoulli_table(n_max as usize + 1);
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let s = Suite::Identities;
        let identity = verify_imag_identity_exact(n, &table).and_then(exact);
        checks.push(Check::new(s, "imag_identity", Some(n), identity));

        let residual =
            imaginary_part_residual(n, &table).map(|r| (r.is_zero(), format!("residual {r}")));
        checks.push(Check::new(s, "imag_residual", Some(n), residual));

        let chain = verify_reduction_chain(n, &table).map(|c| match c.first_broken() {
            None => (true, "steps (a)-(d) hold".to_string()),
            Some(step) => (false, format!("broken at {step}")),
        });
        checks.push(Check::new(s, "reduction_chain", Some(n), chain));

        let binomial = (0..=n as u64 / 2)
            .try_fold(true, |ok, k| {
                Ok(ok && verify_binomial_identity(n as u64, k)?)
            })
            .and_then(exact);
        checks.push(Check::new(s, "binomial_identity", Some(n), binomial));
    }
    checks
}

fn within(diff: f64, bound: f64) -> (bool, String) {
    (diff <= bound, format!("|diff| {diff:e} bound {bound:e}"))
}

fn contour(n_max: u32, tol: f64) -> Vec<Check> {
    let settings = QuadratureSettings::with_tolerance(tol);
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let s = Suite::Contour;
        let report = verify_null(n, tol);
        let null = match report.failure {
            Some(e) => Err(e),
            None => Ok((
                report.passed,
                format!(
                    "residual {:e} bound {:e}",
                    report.residual_modulus, report.certified_bound
                ),
            )),
        };
        checks.push(Check::new(s, "null", Some(n), null));

        let real = verify_real_part(n, tol).map(|r| {
            (
                r.contains(0.0),
                format!("re K {:e} bound {:e}", r.value, r.abs_error),
            )
        });
        checks.push(Check::new(s, "real_part", Some(n), real));

        let closed = logsine_numeric(n, tol).and_then(|closed| {
            let oracle = integrate_logsine(n, &settings)?;
            Ok(within(
                (closed.value - oracle.value).abs(),
                closed.abs_error + oracle.abs_error,
            ))
        });
        checks.push(Check::new(s, "closed_form", Some(n), closed));

        let interchange = series_interchange(n, tol, &settings);
        checks.push(Check::new(s, "series_interchange", Some(n), interchange));
    }
    checks
}

/// Raw vertical-leg integral against `-n!/2^(n+1) zeta(n+2)`.
fn series_interchange(n: u32, tol: f64, settings: &QuadratureSettings) -> Result<(bool, String)> {
    let leg = integrate_vertical_leg(n, settings)?;
    let c = (ExactRational::from_integer(factorial(n as u64))
        / ExactRational::from(2).pow(n as i32 + 1))
    .to_f64();
    let z = zeta_numeric(n + 2, tol / c.max(1.0))?;
    let series = -c * z.value;
    let bound = leg.abs_error + c * z.abs_error + 4.0 * f64::EPSILON * series.abs();
    Ok(within((leg.value - series).abs(), bound))
}

fn fourier(n_max: u32) -> Vec<Check> {
    let s = Suite::Fourier;
    let mut checks = Vec::new();

    let moments = (|| {
        let mut worst = 0.0f64;
        for l in 1..=10 {
            for p in [0, 1] {
                worst = worst.max(cosine_moment(l, p)?.value.abs());
            }
        }
        Ok(within(worst, 1e-12))
    })();
    checks.push(Check::new(s, "cosine_moments", None, moments));

    let orthogonality = (|| {
        let mut worst = 0.0f64;
        for l in 1..=6 {
            for m in 1..=6 {
                let want = if l == m { PI / 2.0 } else { 0.0 };
                worst = worst.max((cosine_orthogonality(l, m)?.value - want).abs());
            }
        }
        Ok(within(worst, 1e-12))
    })();
    checks.push(Check::new(s, "orthogonality", None, orthogonality));

    let terms = 100_000u64;
    let pointwise = (|| {
        let mut worst = 0.0f64;
        for theta in [PI / 6.0, PI / 4.0, PI / 2.0, PI, 1.5 * PI] {
            let partial = logsin_series_partial(theta, terms)?;
            worst = worst.max((partial - Series::LogSin.limit(theta)).abs());
        }
        Ok(within(worst, 10.0 / terms as f64))
    })();
    checks.push(Check::new(s, "pointwise", None, pointwise));

    let parseval = (|| {
        let exact = PI.powi(3) / 24.0;
        let quad = integrate_logsquared(&QuadratureSettings::default())?;
        let sum = parseval_logsquared(1_000_000)?;
        let ok = (quad.value - exact).abs() <= 1e-10 && (sum - exact).abs() <= 1e-6;
        Ok((ok, format!("quadrature {} series {}", quad.value, sum)))
    })();
    checks.push(Check::new(s, "parseval", None, parseval));

    for n in 0..=n_max {
        let same = logsine_via_fourier(n) == logsine_symbolic(n);
        checks.push(Check::new(s, "route_equivalence", Some(n), exact(same)));

        let terminal = (|| {
            let p = cadence_terminal_power(n);
            let mut worst = 0.0f64;
            for l in 1..=10 {
                worst = worst.max(cosine_moment(l, p)?.value.abs());
            }
            Ok(within(worst, 1e-12))
        })();
        checks.push(Check::new(s, "terminal_moment", Some(n), terminal));
    }
    checks
}

/// Runs the requested suites; within a suite checks are ordered by `n`,
/// then by check name.
pub fn run(suite: Suite, n_max: u32, tol: f64) -> Vec<Check> {
    let mut all = Vec::new();
    for one in suite.expand() {
        let mut checks = match one {
            Suite::Recurrence => recurrence(n_max),
            Suite::Identities => identities(n_max),
            Suite::Contour => contour(n_max, tol),
            Suite::Fourier => fourier(n_max),
            Suite::All => unreachable!("expanded above"),
        };
        checks.sort_by(|a, b| (a.n, a.name).cmp(&(b.n, b.name)));
        all.extend(checks);
    }
    all
}

fn plain_line(row: &[Value]) -> String {
    let status = if row[3] == Value::Bool(true) {
        "PASS"
    } else {
        "FAIL"
    };
    let n = match &row[2] {
        Value::Null => String::new(),
        v => format!(" n={v}"),
    };
    format!(
        "{status} {}/{}{n}: {}",
        cell(&row[0], ""),
        cell(&row[1], ""),
        cell(&row[4], "")
    )
}

pub fn to_table(checks: &[Check]) -> Table {
    let mut table =
        Table::new(vec!["suite", "check", "n", "pass", "detail"]).with_plain_line(plain_line);
    for c in checks {
        let detail = match &c.outcome {
            Outcome::Pass(d) | Outcome::Fail(d) => d.clone(),
            Outcome::Error(e) => format!("error: {e}"),
        };
        table.push(vec![
            json!(c.suite.name()),
            json!(c.name),
            c.n.map_or(Value::Null, |n| json!(n)),
            json!(c.passed()),
            json!(detail),
        ]);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Format;

    #[test]
    fn exact_suites_pass() {
        for suite in [Suite::Recurrence, Suite::Identities] {
            let checks = run(suite, 30, 1e-10);
            assert!(!checks.is_empty());
            assert!(checks.iter().all(Check::passed), "{suite:?}");
        }
    }

    #[test]
    fn ordering_by_n_then_name() {
        let checks = run(Suite::Identities, 3, 1e-10);
        let keys: Vec<_> = checks.iter().map(|c| (c.n, c.name)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(checks[0].name, "binomial_identity");
    }

    #[test]
    fn unreachable_tolerance_is_an_error_not_a_failure() {
        let checks = run(Suite::Contour, 1, 1e-30);
        assert!(checks
            .iter()
            .all(|c| matches!(&c.outcome, Outcome::Error(e) if e.is_certification())));
    }

    #[test]
    fn plain_lines() {
        let checks = run(Suite::Recurrence, 3, 1e-10);
        let text = to_table(&checks).render(Format::Plain).unwrap();
        assert_eq!(
            text,
            "PASS recurrence/recurrence n=2: exact\n\
             PASS recurrence/odd_vanishes n=3: exact\n\
             PASS recurrence/recurrence n=3: exact\n"
        );
    }
}
