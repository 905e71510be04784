//! Command-line front end for `qbound-core`.
//!
//! [`Cli`] is the clap definition, [`RunConfig`] the validated
//! configuration and [`run`] produces the report text. `main` only writes
//! the report and maps errors to exit codes.

pub mod format;
mod report;

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use qbound_core::Su2Params;

pub use report::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] qbound_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Quantum and classical bounds of Bell-type inequalities.
#[derive(Debug, Parser)]
#[command(name = "qbound", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default: csv for sweep, text otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Significant digits of printed numbers (1..=17).
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: usize,

    /// Print a fixed number of decimals instead of significant digits.
    #[arg(long, global = true)]
    pub decimals: Option<usize>,

    /// Interpret every angle argument in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantum bound (largest eigenvalue) against the classical bound.
    Bound(BoundArgs),
    /// Eigenvalues of the symmetric operator over an angle grid.
    Sweep(SweepArgs),
    /// Maximize the violation over the symmetric angle θ.
    Maximize(MaximizeArgs),
    /// Classical range by vertex enumeration.
    Classical(ClassicalArgs),
    /// Apply local SU(2) rotations to a Bell state.
    Prepare(PrepareArgs),
    /// Multiport parameters preparing a real target state.
    Multiport(MultiportArgs),
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Settings per side.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Symmetric setup {0, θ, …, (m-1)θ} on both sides.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Explicit left angles (m values).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub angles: Option<Vec<f64>>,
    /// Explicit right angles (m values; defaults to --angles).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub right_angles: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub theta_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = PI)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 181)]
    pub steps: usize,
    /// Only the largest eigenvalue, one column per settings count.
    #[arg(long)]
    pub max_only: bool,
    /// Settings counts for --max-only (defaults to --m).
    #[arg(long, value_delimiter = ',')]
    pub ms: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct MaximizeArgs {
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub bracket_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = PI)]
    pub bracket_max: f64,
}

#[derive(Debug, Args)]
pub struct ClassicalArgs {
    #[arg(long, default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct PrepareArgs {
    /// Left rotation as ω,θ,φ.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.0, 0.0, 0.0])]
    pub u1: Vec<f64>,
    /// Right rotation as ω,θ,φ.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.0, 0.0, 0.0])]
    pub u2: Vec<f64>,
    /// Input Bell state: phi+, psi+, psi- or phi-.
    #[arg(long, default_value = "psi+")]
    pub bell: String,
    /// Compare with the top eigenvector of the symmetric operator at
    /// --theta for this settings count.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MultiportArgs {
    /// Real target amplitudes over |00⟩,|01⟩,|10⟩,|11⟩; normalized before
    /// solving.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub target: Vec<f64>,
}

/// Validated command with angles in radians.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum CommandConfig {
    Bound {
        m: usize,
        left: Vec<f64>,
        right: Vec<f64>,
    },
    Sweep {
        m: usize,
        theta_min: f64,
        theta_max: f64,
        steps: usize,
        max_only: bool,
        ms: Vec<usize>,
    },
    Maximize {
        m: usize,
        bracket: (f64, f64),
    },
    Classical {
        m: usize,
    },
    Prepare {
        u1: [f64; 3],
        u2: [f64; 3],
        bell: usize,
        compare: Option<(usize, f64)>,
    },
    Multiport {
        target: [f64; 4],
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: CommandConfig,
    pub format: Format,
    pub precision: usize,
    pub decimals: Option<usize>,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

pub const BELL_NAMES: [&str; 4] = ["phi+", "psi+", "psi-", "phi-"];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn triple(name: &str, v: &[f64], to_rad: impl Fn(f64) -> f64) -> Result<[f64; 3], CliError> {
    match v {
        [a, b, c] => Ok([to_rad(*a), to_rad(*b), to_rad(*c)]),
        _ => Err(usage(format!("--{name} needs three values ω,θ,φ, got {}", v.len()))),
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        if !(1..=17).contains(&cli.precision) {
            return Err(usage(format!("--precision must be in 1..=17, got {}", cli.precision)));
        }
        let to_rad = |x: f64| if cli.degrees { x.to_radians() } else { x };
        let default_format = match cli.command {
            Command::Sweep(_) => Format::Csv,
            _ => Format::Text,
        };
        let command = match cli.command {
            Command::Bound(a) => {
                let (left, right) = match (a.theta, a.angles) {
                    (Some(_), Some(_)) => {
                        return Err(usage("give either --theta or --angles, not both"))
                    }
                    (Some(t), None) => {
                        let setup = qbound_core::symmetric_setup(a.m, to_rad(t));
                        (setup.left, setup.right)
                    }
                    (None, Some(left)) => {
                        let right = a.right_angles.unwrap_or_else(|| left.clone());
                        (left.into_iter().map(to_rad).collect(), right.into_iter().map(to_rad).collect())
                    }
                    (None, None) => return Err(usage("bound needs --theta or --angles")),
                };
                for side in [&left, &right] {
                    if side.len() != a.m {
                        return Err(usage(format!(
                            "expected {} angles per side, got {}",
                            a.m,
                            side.len()
                        )));
                    }
                }
                CommandConfig::Bound { m: a.m, left, right }
            }
            Command::Sweep(a) => {
                if a.steps < 2 {
                    return Err(usage(format!("--steps must be at least 2, got {}", a.steps)));
                }
                CommandConfig::Sweep {
                    m: a.m,
                    theta_min: to_rad(a.theta_min),
                    theta_max: to_rad(a.theta_max),
                    steps: a.steps,
                    max_only: a.max_only,
                    ms: a.ms.unwrap_or_else(|| vec![a.m]),
                }
            }
            Command::Maximize(a) => CommandConfig::Maximize {
                m: a.m,
                bracket: (to_rad(a.bracket_min), to_rad(a.bracket_max)),
            },
            Command::Classical(a) => CommandConfig::Classical { m: a.m },
            Command::Prepare(a) => {
                let bell = BELL_NAMES
                    .iter()
                    .position(|&n| n == a.bell)
                    .ok_or_else(|| usage(format!("unknown Bell state {:?}", a.bell)))?;
                let compare = match (a.m, a.theta) {
                    (Some(m), Some(t)) => Some((m, to_rad(t))),
                    (None, None) => None,
                    _ => return Err(usage("--m and --theta go together")),
                };
                CommandConfig::Prepare {
                    u1: triple("u1", &a.u1, to_rad)?,
                    u2: triple("u2", &a.u2, to_rad)?,
                    bell,
                    compare,
                }
            }
            Command::Multiport(a) => match a.target[..] {
                [x0, x1, x2, x3] => CommandConfig::Multiport {
                    target: [x0, x1, x2, x3],
                },
                _ => return Err(usage(format!("--target needs 4 values, got {}", a.target.len()))),
            },
        };
        Ok(RunConfig {
            command,
            format: cli.format.unwrap_or(default_format),
            precision: cli.precision,
            decimals: cli.decimals,
            output: cli.output,
        })
    }
}

impl RunConfig {
    /// Parses and validates a full argument vector (program name first).
    pub fn from_args<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| usage(e.to_string()))?;
        cli.try_into()
    }
}

pub(crate) fn su2_params(p: [f64; 3]) -> Su2Params {
    Su2Params::new(p[0], p[1], p[2])
}
