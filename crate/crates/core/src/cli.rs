//! The `frobrad` command line.
//!
//! Every subcommand prints exactly one machine-readable value (a number,
//! `true`/`false`, or one JSON document) on stdout; diagnostics go to stderr.
//! Exit status is 0 on success, 1 on domain errors (bad reduction, cap
//! exceeded, I/O, ...) and 2 on usage errors.
//!
//! | subcommand   | stdout                                             |
//! |--------------|----------------------------------------------------|
//! | `count`      | `a_p` for elliptic curves, `{"n1":..,"n2":..}` for genus 2 |
//! | `frobpoly`   | JSON array of coefficients, lowest degree first    |
//! | `radical`    | `rad_lambda(n)`                                     |
//! | `compare`    | `true` or `false`                                   |
//! | `experiment` | the summary JSON object (full report if no output file) |
//! | `weilcheck`  | `{"count":..,"bound":..,"error_term":..,"dz1":..,"dz2":..}` |

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::curves::{count_record, CountRecord, CurveSpec, DEFAULT_GENUS2_CAP};
use crate::error::{Error, Result};
use crate::experiments::{self, ExperimentConfig};
use crate::frobenius::{compare, frobpoly_from_record, frobpoly_product, AbelianVarietySpec, CompareMode, FrobPoly};
use crate::radicals::{rad_lambda, PrimeFilter};
use crate::weilcheck::{brute_count, dz2_check, AffineVarietySpec};

/// Environment variable naming the default count cache.
pub const CACHE_ENV: &str = "FROBRAD_CACHE";
/// Cache used by `experiment` when neither the config, the flag nor the
/// environment names one.
pub const DEFAULT_CACHE: &str = "frobrad-cache.csv";

#[derive(Debug, Parser)]
#[command(name = "frobrad", version, about = "Frobenius polynomials, point counts and radicals of group orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Trace of Frobenius (elliptic) or (N1, N2) (genus 2) at a good prime.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        curve: CurveSpec,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_GENUS2_CAP)]
        genus2_cap: u64,
    },
    /// Frobenius polynomial of a product of curve Jacobians.
    Frobpoly {
        #[arg(long, allow_hyphen_values = true)]
        av: AbelianVarietySpec,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_GENUS2_CAP)]
        genus2_cap: u64,
        /// Print `x^2 + 2*x + 5` instead of a JSON array.
        #[arg(long)]
        pretty: bool,
    },
    /// Product of the distinct primes of n lying in the filter.
    Radical {
        #[arg(long)]
        n: u128,
        #[arg(long, default_value = "all")]
        lambda: PrimeFilter,
    },
    /// Compare the Frobenius polynomials of two varieties at p.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        a: AbelianVarietySpec,
        #[arg(long, allow_hyphen_values = true)]
        b: AbelianVarietySpec,
        /// equal, rad_poly_equal, rad_poly_divides, coprime, rad_order_equal, rad_order_divides
        #[arg(long)]
        mode: CompareMode,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        lambda: Option<PrimeFilter>,
        #[arg(long, default_value_t = DEFAULT_GENUS2_CAP)]
        genus2_cap: u64,
    },
    /// Run a batch experiment from a config file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's cache (and FROBRAD_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache")]
        no_cache: bool,
        /// Overrides the config's output path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force count of an affine variety and its Weil bounds.
    Weilcheck {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            // help and version go to stdout, like any clap program
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidFilter(_) | Error::Config(_) | Error::FilterRequired => 2,
        _ => 1,
    }
}

fn counts_for(av: &AbelianVarietySpec, p: u64, cap: u64) -> Result<HashMap<String, FrobPoly>> {
    av.curves()
        .into_iter()
        .map(|c| Ok((c.id().to_string(), frobpoly_from_record(&count_record(c, p, cap)?)?)))
        .collect()
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Count { curve, p, genus2_cap } => match count_record(&curve, p, genus2_cap)? {
            CountRecord::Elliptic { a_p, .. } => Ok(a_p.to_string()),
            CountRecord::Genus2 { n1, n2, .. } => {
                Ok(serde_json::json!({ "n1": n1, "n2": n2 }).to_string())
            }
        },
        Command::Frobpoly { av, p, genus2_cap, pretty } => {
            let poly = frobpoly_product(&av, p, &counts_for(&av, p, genus2_cap)?)?;
            Ok(if pretty { poly.to_string() } else { serde_json::to_string(poly.coeffs())? })
        }
        Command::Radical { n, lambda } => Ok(rad_lambda(n, &lambda).to_string()),
        Command::Compare { a, b, mode, p, lambda, genus2_cap } => {
            if mode.needs_filter() && lambda.is_none() {
                return Err(Error::FilterRequired);
            }
            let mut polys = counts_for(&a, p, genus2_cap)?;
            polys.extend(counts_for(&b, p, genus2_cap)?);
            let pa = frobpoly_product(&a, p, &polys)?;
            let pb = frobpoly_product(&b, p, &polys)?;
            Ok(compare(&pa, &pb, mode, lambda.as_ref())?.to_string())
        }
        Command::Experiment { config, cache, no_cache, output } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            cfg.cache = if no_cache {
                None
            } else {
                cache.or(cfg.cache).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)).or_else(|| Some(DEFAULT_CACHE.into()))
            };
            if output.is_some() {
                cfg.output = output;
            }
            let report = experiments::run(&cfg)?;
            if cfg.output.is_some() {
                Ok(serde_json::to_string(&report.summary())?)
            } else {
                Ok(report.to_jsonl()?.trim_end().to_string())
            }
        }
        Command::Weilcheck { spec } => {
            let v: AffineVarietySpec = std::fs::read_to_string(&spec)?.parse()?;
            let count = brute_count(&v)?;
            let bound = v.dz1_bound();
            Ok(serde_json::json!({
                "count": count,
                "bound": bound,
                "error_term": v.error_term(),
                "dz1": (count as f64) <= bound,
                "dz2": dz2_check(&v)?,
            })
            .to_string())
        }
    }
}
