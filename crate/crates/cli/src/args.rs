use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "logsine",
    version,
    about = "Bernoulli numbers, zeta values and log-sine integrals, with cross-checks"
)]
pub struct Cli {
    /// Accepted for interface stability; output is always deterministic.
    #[arg(long, global = true)]
    pub deterministic: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Bernoulli numbers B_0 ..= B_n-max.
    Bernoulli(RunConfig),
    /// zeta(s) for s = 2 ..= n-max, exact for even s.
    Zeta(RunConfig),
    /// Closed form and certified value of integral_0^pi x^n log(sin x) dx for n = 0 ..= n-max.
    Logsine(RunConfig),
    /// Run verification checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        config: RunConfig,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Recurrence,
    Identities,
    Contour,
    Fourier,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Identities => "identities",
            Suite::Contour => "contour",
            Suite::Fourier => "fourier",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Recurrence,
                Suite::Identities,
                Suite::Contour,
                Suite::Fourier,
            ],
            one => vec![one],
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest index to evaluate.
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,

    /// Absolute error to certify.
    #[arg(long, env = "LOGSINE_TOLERANCE", default_value_t = 1e-10, value_parser = parse_tolerance)]
    pub tolerance: f64,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}
