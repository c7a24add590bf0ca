mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use commands::{BoundsArgs, OracleArgs, Usage};
use output::{Format, Report};

/// Distance vectors, shared-subspace distances and bounds for flag codes.
#[derive(Parser)]
#[command(name = "flagbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit CSV instead of aligned text.
    #[arg(long, global = true, conflicts_with = "json_lines")]
    csv: bool,

    /// Emit one JSON record per row.
    #[arg(long = "json-lines", global = true)]
    json_lines: bool,

    /// Exit with status 3 when any warning was printed.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Ambient dimension.
    #[arg(short = 'n', long = "n")]
    n: usize,

    /// Full type (1, ..., n-1). The default.
    #[arg(long, conflicts_with = "types")]
    full: bool,

    /// Type vector as a comma list, e.g. 1,3,5,6.
    #[arg(short = 't', long = "type")]
    types: Option<String>,
}

impl TypeArgs {
    fn resolve(&self) -> Result<flagbound::distvec::TypeVector> {
        let types = if self.full { None } else { self.types.as_deref() };
        commands::select_type(self.n, types)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Values D(i_1, ..., i_M) of flags sharing prescribed subspaces.
    Dvalues {
        #[command(flatten)]
        ty: TypeArgs,
        /// Number of shared positions.
        #[arg(short = 'M', long = "m")]
        m: Option<usize>,
        /// A single pattern of positions, e.g. 2,3.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// All distance vectors with a given flag distance.
    Enumerate {
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Upper bounds for flag codes with their justification.
    Bounds {
        #[command(flatten)]
        ty: TypeArgs,
        /// A single flag distance; every even distance when omitted.
        #[arg(short = 'd', long = "d")]
        d: Option<usize>,
        /// Evaluate at this prime power instead of printing polynomials.
        #[arg(long = "q")]
        q: Option<u64>,
        /// File of subspace code bounds `n,d,k,<polynomial>,<citation>`.
        #[arg(long = "override", env = "FLAGBOUND_BOUNDS_FILE")]
        overrides: Option<String>,
        /// Separate variety and refined bounds, with equal variety rows merged.
        #[arg(long)]
        per_theorem: bool,
    },
    /// Analyze a flag code file.
    Verify {
        file: String,
        /// Disjointness pattern to check; repeatable.
        #[arg(long = "pattern")]
        patterns: Vec<String>,
    },
    /// Build two flags with a prescribed distance vector.
    Realize {
        /// Distance vector as a comma list.
        #[arg(short = 'v', long = "vector", allow_hyphen_values = true)]
        v: String,
        #[command(flatten)]
        ty: TypeArgs,
        /// Prime field size.
        #[arg(short = 'q', long = "q", default_value_t = 2)]
        q: u64,
    },
    /// Compare brute force over F_q with the characterization.
    OracleCheck {
        #[command(flatten)]
        ty: TypeArgs,
        /// Prime field size.
        #[arg(short = 'q', long = "q", default_value_t = 2)]
        q: u64,
        /// exhaustive, anchored or sampled; chosen by size when omitted.
        #[arg(long)]
        mode: Option<String>,
        /// Pairs drawn in sampled mode.
        #[arg(long, default_value_t = 1_000_000)]
        pairs: u64,
        /// Seed for sampled mode.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Reproduce every table of the worked example on F_q^7.
    Tables,
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Dvalues { ty, m, pattern } => commands::dvalues(&ty.resolve()?, *m, pattern.as_deref()),
        Command::Enumerate { d, ty } => commands::enumerate(*d, &ty.resolve()?),
        Command::Bounds {
            ty,
            d,
            q,
            overrides,
            per_theorem,
        } => {
            let t = ty.resolve()?;
            let overrides = match overrides {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("cannot read override file {path}"))?;
                    Some((path.clone(), text))
                }
                None => None,
            };
            commands::bounds(BoundsArgs {
                t: &t,
                d: *d,
                q: *q,
                overrides,
                per_theorem: *per_theorem,
            })
        }
        Command::Verify { file, patterns } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {file}"))?;
            commands::verify(file, &text, patterns)
        }
        Command::Realize { v, ty, q } => commands::realize(v, &ty.resolve()?, *q),
        Command::OracleCheck {
            ty,
            q,
            mode,
            pairs,
            seed,
        } => commands::oracle(
            &ty.resolve()?,
            OracleArgs {
                q: *q,
                mode: mode.clone(),
                pairs: *pairs,
                seed: *seed,
            },
        ),
        Command::Tables => commands::tables(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.csv {
        Format::Csv
    } else if cli.json_lines {
        Format::JsonLines
    } else {
        Format::Human
    };
    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(format).as_bytes());
            let _ = stdout.flush();
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if report.failed {
                ExitCode::from(1)
            } else if cli.strict && !report.warnings.is_empty() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
