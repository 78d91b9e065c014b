//! `primechi` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 domain
//! error.

use crate::basel::{self, RootSet};
use crate::character::{self, CharacterAssignment};
use crate::fmt::{complex, fixed};
use crate::primes;
use crate::series::{self, ExpansionOrder, FixedSum, PartialSumReport, SeriesPoint};
use crate::tables::{self, AnomalyList, Format, TableKind};
use crate::{Complex64, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

const DEFAULT_SERIES_DEPTH: u64 = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "primechi",
    version,
    about = "Prime property values on the unit circle and their series"
)]
struct Cli {
    /// Directory holding prime_table.tsv, composite_table.tsv and anomalies.tsv
    /// (defaults to the copies compiled into the binary).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print χ(n).
    Chi { n: u64 },
    /// Print the first primes with their 1-based indices.
    Primes {
        #[arg(long, default_value_t = 180)]
        count: usize,
    },
    /// Generate a table of χ values.
    Table {
        #[arg(value_enum)]
        which: Which,
        /// Number of prime rows.
        #[arg(long)]
        count: Option<usize>,
        /// Largest composite.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value = "tsv", value_parser = parse_format)]
        format: Format,
    },
    /// Regenerate a table and diff it against the reference transcription.
    Diff {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Partial sums and products, emitted as CSV.
    Series(SeriesArgs),
    /// Basel-problem and sin(x)/x checks.
    Basel(BaselArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Primes,
    Composites,
}

impl Which {
    fn kind(self) -> TableKind {
        match self {
            Which::Primes => TableKind::Prime,
            Which::Composites => TableKind::Composite,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    #[value(name = "omega-inner")]
    OmegaInner,
    Omega,
    #[value(name = "L")]
    L,
    Lambda,
    Euler,
    Loglemma,
    Group3,
    Corollary,
    Refchar,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesKind,
    /// Point s as "RE,IM".
    #[arg(long = "s", value_parser = parse_point, allow_hyphen_values = true, conflicts_with = "critical")]
    s: Option<SeriesPoint>,
    /// Shorthand for s = (0.5, T).
    #[arg(long, allow_hyphen_values = true)]
    critical: Option<f64>,
    /// Terms, primes or factors, depending on the series.
    #[arg(long, default_value_t = DEFAULT_SERIES_DEPTH)]
    depth: u64,
    /// Emit a row every STEP depths (default: depth/100, rounded up).
    #[arg(long)]
    step: Option<u64>,
    /// Power for group3.
    #[arg(long, default_value_t = 2)]
    mu: u32,
    /// Modulus for refchar.
    #[arg(long, default_value_t = 4)]
    modulus: u64,
    /// Primes in the refchar Euler product (default: all primes <= depth).
    #[arg(long)]
    primes: Option<u64>,
    /// Argument z of the log expansion, as "RE,IM".
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0.5,0")]
    z: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaselKind {
    Sum,
    Product,
    Coeff,
    Demo,
}

#[derive(Debug, Args)]
struct BaselArgs {
    #[arg(value_enum)]
    kind: BaselKind,
    #[arg(long, default_value_t = 1000)]
    depth: u64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2, allow_hyphen_values = true)]
    x: f64,
    /// Comma-separated positive roots for coeff.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "3.141592653589793,6.283185307179586,9.42477796076938"
    )]
    roots: Vec<f64>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_point(s: &str) -> Result<SeriesPoint, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let p = parse_point(s)?;
    Ok(Complex64::new(p.sigma, p.t))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) | Error::RowMismatch { .. } | Error::KindMismatch(_) => EXIT_VERIFY,
        Error::Parse(_) | Error::UnknownFormat(_) | Error::Io(_) => EXIT_USAGE,
        Error::OutOfDomain { .. }
        | Error::NotPrime(_)
        | Error::Overflow(_)
        | Error::RatioDomain { .. }
        | Error::TrigDomain { .. }
        | Error::EulerFactorSingular { .. }
        | Error::UnsupportedModulus(_) => EXIT_DOMAIN,
    }
}

/// Result of a subcommand: text for the output sink, plus an optional
/// verification verdict.
struct Outcome {
    text: String,
    verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, verified: true }
    }
}

/// Runs the CLI with `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let outcome = match dispatch(&cli, err) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };

    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text).map_err(Error::from),
        None => out.write_all(outcome.text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.verified {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> crate::Result<Outcome> {
    match &cli.command {
        Command::Chi { n } => Ok(Outcome::ok(format!("{}\n", complex(character::chi(*n)?)))),
        Command::Primes { count } => {
            let mut text = String::from("index\tvalue\n");
            for e in primes::first_primes(*count) {
                text.push_str(&format!("{}\t{}\n", e.index, e.value));
            }
            Ok(Outcome::ok(text))
        }
        Command::Table {
            which,
            count,
            limit,
            format,
        } => {
            let rows = match which {
                Which::Primes => tables::generate_prime_table(count.unwrap_or(tables::PRIME_TABLE_COUNT))?,
                Which::Composites => tables::generate_composite_table(limit.unwrap_or(tables::COMPOSITE_TABLE_LIMIT))?,
            };
            Ok(Outcome::ok(tables::render(&rows, *format)))
        }
        Command::Diff { which, tol } => {
            let kind = which.kind();
            let (reference, anomalies) = match &cli.data_dir {
                Some(dir) => (tables::load_reference(dir, kind)?, AnomalyList::load(dir)?),
                None => (tables::bundled_reference(kind), AnomalyList::bundled()),
            };
            let generated = match kind {
                TableKind::Prime => tables::generate_prime_table(reference.len().max(1))?,
                TableKind::Composite => {
                    let limit = reference.iter().map(|r| r.n).max().unwrap_or(4);
                    tables::generate_composite_table(limit)?
                }
            };
            let report =
                tables::diff_against_reference(&generated, &reference, &anomalies, tol.unwrap_or(kind.tolerance()))?;
            Ok(Outcome {
                text: report.summary(),
                verified: report.passes(),
            })
        }
        Command::Series(args) => series_command(args, err),
        Command::Basel(args) => basel_command(args),
    }
}

fn series_command(args: &SeriesArgs, err: &mut dyn Write) -> crate::Result<Outcome> {
    let s = match (args.s, args.critical) {
        (Some(s), _) => s,
        (None, Some(t)) => SeriesPoint::critical(t)?,
        (None, None) => SeriesPoint::default(),
    };
    let depth = args.depth;
    let step = args.step.unwrap_or_else(|| depth.div_ceil(100).max(1));
    let assignment = || CharacterAssignment::new(depth.max(1) as usize);
    let reports: Vec<PartialSumReport> = match args.kind {
        SeriesKind::OmegaInner => series::omega_inner_reports(depth, step)?,
        SeriesKind::Omega => series::fixed_sum_reports(&assignment()?, FixedSum::Omega, s, depth, step)?,
        SeriesKind::L => series::fixed_sum_reports(&assignment()?, FixedSum::Dirichlet, s, depth, step)?,
        SeriesKind::Lambda => series::fixed_sum_reports(&assignment()?, FixedSum::Lambda, s, depth, step)?,
        SeriesKind::Euler => series::euler_reports(s, depth, step)?,
        SeriesKind::Loglemma => series::log_expansion_reports(args.z, depth, step)?,
        SeriesKind::Group3 => series::power_sum_reports(&assignment()?, s, ExpansionOrder::new(args.mu)?, depth, step)?,
        SeriesKind::Corollary => {
            let report = series::corollary_report(&assignment()?, s, depth)?;
            let mut text = format!("series,{}\n", PartialSumReport::CSV_HEADER);
            for (name, r) in ["omega", "L", "lambda"].iter().zip(report.reports()) {
                text.push_str(&format!("{name},{}\n", r.csv_row()));
            }
            let _ = writeln!(
                err,
                "partition residual {:.3e} (scale {:.3e})",
                report.partition_residual, report.partition_scale
            );
            return Ok(Outcome::ok(text));
        }
        SeriesKind::Refchar => {
            let primes = match args.primes {
                Some(m) => m,
                None => primes::sieve_up_to(depth).len() as u64,
            };
            let r = series::reference_character_l(args.modulus, s, depth, primes)?;
            let text = format!(
                "modulus,sigma,t,series_terms,product_primes,series_re,series_im,product_re,product_im,residual\n\
                 {},{},{},{},{},{},{},{},{},{}\n",
                args.modulus,
                fixed(s.sigma),
                fixed(s.t),
                depth,
                primes,
                fixed(r.series.re),
                fixed(r.series.im),
                fixed(r.product.re),
                fixed(r.product.im),
                fixed(r.residual)
            );
            return Ok(Outcome::ok(text));
        }
    };
    Ok(Outcome::ok(series::reports_to_csv(&reports)))
}

fn basel_command(args: &BaselArgs) -> crate::Result<Outcome> {
    let depth = args.depth;
    match args.kind {
        BaselKind::Sum => {
            let value = basel::basel_partial(depth)?;
            let limit = std::f64::consts::PI.powi(2) / 6.0;
            Ok(Outcome::ok(format!(
                "depth,value,limit,gap\n{depth},{},{},{}\n",
                fixed(value),
                fixed(limit),
                fixed(limit - value)
            )))
        }
        BaselKind::Product => {
            let value = basel::sin_product_partial(args.x, depth);
            let exact = basel::sinc(args.x);
            let bound = basel::sin_product_relative_bound(args.x, depth)
                .map(fixed)
                .unwrap_or_else(|| "NA".into());
            Ok(Outcome::ok(format!(
                "depth,x,product,sinc,abs_error,relative_bound\n{depth},{},{},{},{},{bound}\n",
                fixed(args.x),
                fixed(value),
                fixed(exact),
                fixed((value - exact).abs())
            )))
        }
        BaselKind::Coeff => {
            let roots = RootSet::new(args.roots.clone())?;
            let coeffs = basel::expand_even_product(&roots);
            let residual = basel::coefficient_identity_check(&roots);
            let mut text = String::from("power_of_x,coefficient\n");
            for (k, c) in coeffs.iter().enumerate() {
                text.push_str(&format!("{},{:.16e}\n", 2 * k, c));
            }
            text.push_str(&format!("residual,{residual:.3e}\n"));
            Ok(Outcome {
                text,
                verified: residual < 1e-10,
            })
        }
        BaselKind::Demo => {
            let report = basel::sin_series_root_demo(depth)?;
            let mut text = String::from("x,sinc,series,product,series_error,product_error\n");
            for p in &report.points {
                text.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    fixed(p.x),
                    fixed(p.exact),
                    fixed(p.series),
                    fixed(p.product),
                    fixed(p.series_error()),
                    fixed(p.product_error())
                ));
            }
            Ok(Outcome {
                text,
                verified: depth < 1000 || report.within(1e-3),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("primechi").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chi_six() {
        let (code, out, _) = run_str(&["chi", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-0.5527707984-0.8333333333i\n");
    }

    #[test]
    fn chi_zero_is_domain_error() {
        let (code, _, err) = run_str(&["chi", "0"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("out of domain"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, out, err) = run_str(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("series"));
    }
}
