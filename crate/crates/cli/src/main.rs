use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use partfac::{Composition, PrecisionCap, SlopeValue, Word};
use partfac_cli::check::{self, Scope};
use partfac_cli::commands::{self, Counts, Failure, VarietySource};
use partfac_cli::report::{render, CheckBounds, OutputFormat, Report};

/// Christoffel and Sturmian words under ordered partitions of their factors.
#[derive(Parser)]
#[command(name = "partfac", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Most bits of precision spent certifying a comparison.
    #[arg(long, default_value_t = 4096, global = true)]
    precision_cap: u32,

    #[command(subcommand)]
    command: Command,
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: partfac::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: partfac::Error| e.to_string())
}

fn parse_slope(s: &str) -> Result<SlopeValue, String> {
    s.parse().map_err(|e: partfac::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print the Christoffel word with P letters a and Q letters b.
    Christoffel {
        p: usize,
        q: usize,
        /// The upper word instead of the lower one.
        #[arg(long)]
        upper: bool,
        /// Print the sorted conjugates, one per line.
        #[arg(long)]
        bwt: bool,
    },
    /// Varieties of circular factors and their multiplicities.
    Varieties {
        /// A circular word over a, b.
        #[arg(long, value_parser = parse_word, required_unless_present = "slope", conflicts_with = "slope")]
        word: Option<Word>,
        /// Christoffel counts P/Q; runs the closed form against brute force.
        #[arg(long)]
        slope: Option<Counts>,
        #[arg(short)]
        m: usize,
        /// Composition of m, e.g. 1,2,1. Defaults to m itself.
        #[arg(short = 'P', long = "parts", value_parser = parse_composition)]
        parts: Option<Composition>,
    },
    /// Exact frequencies of the varieties of a Sturmian word.
    Frequencies {
        /// p/q, log2_3_2, golden, sqrt2m1, or value@error.
        #[arg(long, value_parser = parse_slope)]
        slope: SlopeValue,
        #[arg(short)]
        m: usize,
        #[arg(short = 'P', long = "parts", value_parser = parse_composition)]
        parts: Option<Composition>,
        /// Also count varieties over this many factors of the word.
        #[arg(long)]
        empirical: Option<usize>,
    },
    /// Draw the circle cut by the points of the rotation orbit.
    Diagram {
        #[arg(long, value_parser = parse_slope)]
        slope: SlopeValue,
        #[arg(short)]
        m: usize,
        /// Merge arcs of the same variety.
        #[arg(short = 'P', long = "parts", value_parser = parse_composition)]
        parts: Option<Composition>,
    },
    /// Run the property sweeps.
    Check {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long, default_value_t = 60)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        max_m: usize,
        #[arg(long, default_value_t = 12)]
        max_part_m: usize,
    },
}

fn emit<R: Report>(report: &R, cli: &Cli) -> Result<(), Failure> {
    let text = render(report, cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Validation(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cap = PrecisionCap(cli.precision_cap);
    match &cli.command {
        Command::Christoffel { p, q, upper, bwt } => {
            emit(&commands::christoffel(*p, *q, *upper, *bwt)?, cli)
        }
        Command::Varieties {
            word,
            slope,
            m,
            parts,
        } => {
            let source = match (word, slope) {
                (Some(w), _) => VarietySource::Word(w.clone()),
                (None, Some(c)) => VarietySource::Counts(*c),
                (None, None) => unreachable!("clap requires one input"),
            };
            emit(&commands::varieties(source, *m, parts.clone())?, cli)
        }
        Command::Frequencies {
            slope,
            m,
            parts,
            empirical,
        } => emit(
            &commands::frequencies(slope, *m, parts.clone(), *empirical, cap)?,
            cli,
        ),
        Command::Diagram { slope, m, parts } => {
            emit(&commands::diagram(slope, *m, parts.clone(), cap)?, cli)
        }
        Command::Check {
            scope,
            max_n,
            max_m,
            max_part_m,
        } => {
            let bounds = CheckBounds {
                max_n: *max_n,
                max_m: *max_m,
                max_part_m: *max_part_m,
            };
            let report = check::run(*scope, bounds, cap);
            emit(&report, cli)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Property(format!("scope {}", report.scope)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("partfac: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
