//! Command-line front end.
//!
//! ```text
//! classnum compute --p 29 [--algorithm alg3]
//! classnum table --primes 7,11,29
//! classnum selftest --max-p 1000
//! classnum bench --primes 10000019,100000007,1000000007
//! ```
//!
//! Global flags: `--json`, `--verbose`, `--threads N|auto`. Exit status is 0
//! on success, 1 on a usage error and 2 when a computation fails.

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::ThreadPool;

use crate::bench::{loglog_slope, time_algorithm3, BenchRow};
use crate::classpoly::ClassPolyCache;
use crate::error::{Error, Result};
use crate::pipeline::{
    algorithm1_with, forms_report, run as run_pipeline, ClassNumberReport, PairSearch,
};
use crate::pipeline::{PipelineOptions, DEFAULT_ALGORITHM1_BOUND};
use crate::selftest::run_selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Alg1,
    Alg2,
    Alg3,
    Forms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Threads::Fixed(n)),
            _ => Err(format!(
                "expected a positive integer or \"auto\", got {s:?}"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Class number of Q(sqrt(-p)) for one prime.
    Compute {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "alg3")]
        algorithm: Algorithm,
    },
    /// One row (p, h, seconds) per prime.
    Table {
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        primes: Vec<u64>,
    },
    /// Cross-check against the brute-force oracles for all primes up to max_p.
    Selftest {
        #[arg(long)]
        max_p: u64,
    },
    /// Time the pipeline and fit a log-log slope.
    Bench {
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        primes: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "classnum",
    version,
    about = "Class numbers of Q(sqrt(-p)) by counting supersingular j-invariants"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print s_p, t, T, witnesses and timing.
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Worker threads: a positive integer or "auto".
    #[arg(long, global = true, default_value = "auto")]
    pub threads: Threads,
}

/// Class numbers of `Q(sqrt(-p))` for the primes below the pipeline's range.
pub fn small_prime_class_number(p: u64) -> Option<u64> {
    match p {
        2 => Some(1),
        3 => Some(1),
        5 => Some(2),
        _ => None,
    }
}

/// Parses `args` (program name first), runs, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_args(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            EXIT_OK
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let threads = match cfg.threads {
        Threads::Auto => 0,
        Threads::Fixed(n) => n,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_FAILURE;
        }
    };
    let status = match &cfg.command {
        Command::Compute { p, algorithm } => cmd_compute(cfg, &pool, *p, *algorithm, out, err),
        Command::Table { primes } => cmd_table(cfg, &pool, primes, out, err),
        Command::Selftest { max_p } => cmd_selftest(cfg, &pool, *max_p, out),
        Command::Bench { primes } => cmd_bench(cfg, &pool, primes, out),
    };
    match status {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NotPrime(_) | Error::MaxPTooSmall(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            }
        }
    }
}

fn io_error(e: io::Error) -> Error {
    Error::Report(e.to_string())
}

/// Report for `p` by the chosen method.
pub fn compute_report(p: u64, algorithm: Algorithm) -> Result<ClassNumberReport> {
    let opts = PipelineOptions::default();
    match algorithm {
        Algorithm::Alg3 => Ok(run_pipeline(p, PairSearch::Congruence, &opts)?.0),
        Algorithm::Alg2 => Ok(run_pipeline(p, PairSearch::Quadratic, &opts)?.0),
        Algorithm::Forms => forms_report(p),
        Algorithm::Alg1 => {
            let cache = ClassPolyCache::from_env()?;
            let r = algorithm1_with(p, &cache, DEFAULT_ALGORITHM1_BOUND)?;
            let count = r.supersingular.len() as u64;
            Ok(ClassNumberReport {
                p,
                s_p: count,
                pair_count: 0,
                branch: p % 8,
                supersingular_count: count,
                h: r.h,
                members_of_t: vec![],
                witnesses: vec![],
                elapsed: r.elapsed,
            })
        }
    }
}

fn write_report(cfg: &RunConfig, r: &ClassNumberReport, out: &mut dyn Write) -> io::Result<()> {
    if cfg.json {
        return writeln!(out, "{}", r.to_json());
    }
    writeln!(out, "h = {}", r.h)?;
    if cfg.verbose {
        writeln!(out, "p = {} (p mod 8 = {})", r.p, r.branch)?;
        writeln!(out, "s_p = {}", r.s_p)?;
        writeln!(out, "t = {}", r.pair_count)?;
        writeln!(out, "#S_p = {}", r.supersingular_count)?;
        writeln!(out, "T = {:?}", r.members_of_t)?;
        for w in &r.witnesses {
            writeln!(out, "witness: {} * {} - {}^2 = 4p", w.d1, w.d2, w.x)?;
        }
        writeln!(out, "elapsed = {:.3} s", r.elapsed.as_secs_f64())?;
    }
    Ok(())
}

fn cmd_compute(
    cfg: &RunConfig,
    pool: &ThreadPool,
    p: u64,
    algorithm: Algorithm,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if let Some(h) = small_prime_class_number(p) {
        writeln!(
            err,
            "note: the counting pipeline requires p > 5; h for p = {p} is a tabulated constant"
        )
        .map_err(io_error)?;
        if cfg.json {
            writeln!(out, "{{\"schema\":1,\"p\":\"{p}\",\"h\":\"{h}\"}}").map_err(io_error)?;
        } else {
            writeln!(out, "h = {h}").map_err(io_error)?;
        }
        return Ok(EXIT_OK);
    }
    let r = pool.install(|| compute_report(p, algorithm))?;
    write_report(cfg, &r, out).map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_table(
    cfg: &RunConfig,
    pool: &ThreadPool,
    primes: &[u64],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let mut status = EXIT_OK;
    if !cfg.json {
        writeln!(out, "{:>20} {:>12} {:>10}", "p", "h", "time (s)").map_err(io_error)?;
    }
    for &p in primes {
        let start = Instant::now();
        match pool.install(|| compute_report(p, Algorithm::Alg3)) {
            Ok(r) if cfg.json => writeln!(out, "{}", r.to_json()).map_err(io_error)?,
            Ok(r) => writeln!(
                out,
                "{:>20} {:>12} {:>10.3}",
                p,
                r.h,
                start.elapsed().as_secs_f64()
            )
            .map_err(io_error)?,
            Err(e) => {
                writeln!(err, "error: p = {p}: {e}").map_err(io_error)?;
                status = EXIT_FAILURE;
            }
        }
    }
    Ok(status)
}

fn cmd_selftest(
    cfg: &RunConfig,
    pool: &ThreadPool,
    max_p: u64,
    out: &mut dyn Write,
) -> Result<i32> {
    if max_p < 7 {
        return Err(Error::MaxPTooSmall(max_p));
    }
    let cache = ClassPolyCache::from_env()?;
    let summary = pool.install(|| run_selftest(max_p, &cache))?;
    if cfg.json {
        let suites: Vec<_> = summary
            .suites
            .iter()
            .map(|s| {
                serde_json::json!({
                    "name": s.name,
                    "checked": s.checked,
                    "failures": s.failures,
                    "first_failure": s.first_failure,
                })
            })
            .collect();
        let doc =
            serde_json::json!({ "max_p": max_p, "passed": summary.passed(), "suites": suites });
        writeln!(out, "{doc}").map_err(io_error)?;
    } else {
        for s in &summary.suites {
            writeln!(out, "{s}").map_err(io_error)?;
        }
        let verdict = if summary.passed() {
            "all checks passed"
        } else {
            "selftest FAILED"
        };
        writeln!(out, "{verdict}").map_err(io_error)?;
    }
    Ok(if summary.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_bench(
    cfg: &RunConfig,
    pool: &ThreadPool,
    primes: &[u64],
    out: &mut dyn Write,
) -> Result<i32> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let opts = PipelineOptions::default();
    let rows = pool.install(|| {
        primes
            .iter()
            .map(|&p| time_algorithm3(p, &opts, 1))
            .collect::<Result<Vec<BenchRow>>>()
    })?;
    let slope = loglog_slope(&rows);
    if cfg.json {
        let rows: Vec<_> = rows
            .iter()
            .map(|r| serde_json::json!({ "p": r.p.to_string(), "h": r.h.to_string(), "seconds": r.seconds }))
            .collect();
        writeln!(
            out,
            "{}",
            serde_json::json!({ "rows": rows, "slope": slope })
        )
        .map_err(io_error)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{:>20} {:>12} {:>10}", "p", "h", "time (s)").map_err(io_error)?;
    for r in &rows {
        writeln!(out, "{:>20} {:>12} {:>10.3}", r.p, r.h, r.seconds).map_err(io_error)?;
    }
    if let Some(s) = slope {
        writeln!(out, "log-log slope = {s:.3}").map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["classnum"];
        full.extend_from_slice(args);
        let code = run_with_args(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_29() {
        for alg in ["alg1", "alg2", "alg3", "forms"] {
            let (code, out, _) = call(&["compute", "--p", "29", "--algorithm", alg]);
            assert_eq!((code, out.as_str()), (0, "h = 6\n"), "{alg}");
        }
    }

    #[test]
    fn not_prime() {
        let (code, _, err) = call(&["compute", "--p", "12"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("12 is not prime"));
    }

    #[test]
    fn small_primes_are_constants() {
        let (code, out, err) = call(&["compute", "--p", "5"]);
        assert_eq!((code, out.as_str()), (0, "h = 2\n"));
        assert!(err.contains("p > 5"));
        assert_eq!(call(&["compute", "--p", "3"]).1, "h = 1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["compute"]).0, EXIT_USAGE);
        assert_eq!(call(&["table"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["compute", "--p", "29", "--threads", "0"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["compute", "--p", "29", "--algorithm", "alg4"]).0,
            EXIT_USAGE
        );
        let (code, _, err) = call(&["selftest", "--max-p", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("max_p too small"));
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("compute"));
    }

    #[test]
    fn table_rows() {
        let (code, out, _) = call(&["table", "--primes", "7,11,29", "--threads", "2"]);
        assert_eq!(code, 0);
        let hs: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split_whitespace().nth(1).unwrap())
            .collect();
        assert_eq!(hs, ["1", "1", "6"]);
    }

    #[test]
    fn table_continues_after_failure() {
        let (code, out, err) = call(&["table", "--primes", "7,12,29"]);
        assert_eq!(code, EXIT_FAILURE);
        assert_eq!(out.lines().count(), 3);
        assert!(err.contains("12 is not prime"));
    }

    #[test]
    fn json_output_round_trips() {
        let (code, out, _) = call(&["compute", "--p", "29", "--json"]);
        assert_eq!(code, 0);
        let r = ClassNumberReport::from_json(out.trim()).unwrap();
        assert_eq!((r.h, r.s_p, r.pair_count), (6, 4, 1));
    }

    #[test]
    fn verbose_lists_witness() {
        let out = call(&["compute", "--p", "29", "--verbose"]).1;
        assert!(out.contains("witness: -11 * -12 - 4^2 = 4p"));
        assert!(out.contains("s_p = 4"));
    }

    #[test]
    fn bench_single_prime_has_no_slope() {
        let out = call(&["bench", "--primes", "1000003"]).1;
        assert!(!out.contains("slope"));
        let out = call(&["bench", "--primes", "1000003,10000019"]).1;
        assert!(out.contains("log-log slope"));
    }
}
