//! Command-line front end: `count`, `table`, `verify`, `convert` and `oracle`.
//!
//! Exit codes: 0 success, 1 consistency or verification failure, 2 usage or
//! input error, 3 domain violation (crossing number not below `k`, walk
//! leaving the chamber).

mod cache;
mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{diagram_to_walk, diagram_trace, walk_trace};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::numbers::Count;
use crate::oracle::{oracle_count, Variant, ORACLE_MAX_N};
use crate::transforms::{cached_table, WalkRoute, WalkTable};
use crate::walk::Walk;

pub use cache::{CacheEntry, CacheFile, TableCache, CACHE_ENV};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pseudoknot", version, about = "Exact counts of k-noncrossing RNA structures")]
pub struct Cli {
    /// Directory for persisted tables (overrides $PSEUDOKNOT_CACHE).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one exact count.
    Count(CountArgs),
    /// Print a table of counts for n = 0..=n-max.
    Table(TableArgs),
    /// Run an invariant suite and report pass/fail per check.
    Verify(VerifyArgs),
    /// Convert between diagram, walk and oscillating-tableau text forms (stdin -> stdout).
    Convert(ConvertArgs),
    /// Count by exhaustive enumeration of diagrams (n <= 14).
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Circular,
    Restricted,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Plain => Variant::Plain,
            VariantArg::Circular => Variant::Circular,
            VariantArg::Restricted => Variant::Restricted,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Transform,
    Walk,
    Series,
    Reflection,
    Oracle,
}

#[derive(clap::Args, Debug)]
pub struct CountArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
    pub variant: VariantArg,
    /// Count only structures with exactly this many unpaired vertices.
    #[arg(long)]
    pub isolated: Option<usize>,
    #[arg(long, value_enum, default_value_t = RouteArg::Transform)]
    pub route: RouteArg,
}

#[derive(clap::Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
    pub variant: VariantArg,
    #[arg(long)]
    pub isolated: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// One row per (n, l) instead of one per n.
    #[arg(long)]
    pub by_isolated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PaperTables,
    Routes,
    Recursions,
    Bijection,
    Oracle,
    All,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Diagram,
    Walk,
    Tableau,
}

#[derive(clap::Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub from: Repr,
    #[arg(long, value_enum)]
    pub to: Repr,
}

/// Failure carrying its exit code and message.
#[derive(Debug)]
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn from_error(err: Error) -> Self {
        let code = match err {
            Error::Precondition(_) | Error::Parse { .. } | Error::OracleCap { .. } | Error::InvalidDiagram(_) => {
                EXIT_USAGE
            }
            Error::CrossingTooLarge { .. } | Error::LeavesChamber { .. } | Error::NotClosed => EXIT_DOMAIN,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::from_error(err)
    }
}

/// One output row of `table`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(serialize_with = "serialize_count")]
    pub count: Count,
}

fn serialize_count<S: serde::Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let cache = TableCache::from_flag_or_env(cli.cache_dir.clone(), std::env::var_os(CACHE_ENV));
    let result = match &cli.command {
        Command::Count(args) => cmd_count(args, cache.as_ref(), stdout, stderr),
        Command::Table(args) => cmd_table(args, cache.as_ref(), stdout, stderr),
        Command::Verify(args) => verify::cmd_verify(args, cache.as_ref(), stdout, stderr),
        Command::Convert(args) => cmd_convert(args, stdin, stdout),
        Command::Oracle(args) => {
            let as_count = CountArgs {
                k: args.k,
                n: args.n,
                variant: args.variant,
                isolated: args.isolated,
                route: RouteArg::Oracle,
            };
            cmd_count(&as_count, None, stdout, stderr)
        }
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::usage(format!("i/o error: {e}"))
}

fn check_k(k: usize) -> Result<(), Failure> {
    if k < 2 {
        return Err(Failure::usage(format!("--k must be at least 2, got {k}")));
    }
    Ok(())
}

fn cmd_count(
    args: &CountArgs,
    cache: Option<&TableCache>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, Failure> {
    check_k(args.k)?;
    let variant = Variant::from(args.variant);
    let value = match args.route {
        RouteArg::Oracle => {
            if args.n > ORACLE_MAX_N {
                return Err(Failure::usage(format!(
                    "--route oracle supports n <= {ORACLE_MAX_N}, got {}",
                    args.n
                )));
            }
            oracle_count(args.n, args.k, variant, args.isolated)?
        }
        RouteArg::Transform => {
            let rows = table_rows(args.k, variant, &[(args.n, args.isolated)], cache, stderr)?;
            rows.into_iter().next().expect("one row requested").count
        }
        route => {
            let walk_route = match route {
                RouteArg::Walk => WalkRoute::Chamber,
                RouteArg::Series => WalkRoute::Series,
                _ => WalkRoute::Reflection,
            };
            WalkTable::build(args.k, args.n, walk_route)?.structures(variant, args.n, args.isolated)?
        }
    };
    writeln!(stdout, "{value}").map_err(io_failure)?;
    Ok(EXIT_OK)
}

/// Counts for the requested `(n, l)` keys via the inclusion-exclusion
/// route, reading and updating the on-disk cache when one is configured.
pub(crate) fn table_rows(
    k: usize,
    variant: Variant,
    keys: &[(usize, Option<usize>)],
    cache: Option<&TableCache>,
    stderr: &mut dyn Write,
) -> Result<Vec<Row>, Failure> {
    if variant == Variant::Restricted && k <= 2 {
        return Err(Failure::usage("restricted structures need --k greater than 2"));
    }
    let mut stored = match cache {
        Some(c) => c.load(k, variant, stderr),
        None => Default::default(),
    };
    let missing: Vec<(usize, Option<usize>)> = keys.iter().filter(|key| !stored.contains_key(*key)).copied().collect();
    if !missing.is_empty() {
        let n_top = missing.iter().map(|(n, _)| *n).max().unwrap_or(0);
        let table = cached_table(k, n_top)?;
        for &(n, l) in &missing {
            stored.insert((n, l), table.structures(variant, n, l)?);
        }
        if let Some(c) = cache {
            if let Err(e) = c.store(k, variant, &stored) {
                let _ = writeln!(stderr, "warning: could not write cache: {e}");
            }
        }
    }
    Ok(keys
        .iter()
        .map(|&(n, l)| Row {
            n,
            l,
            count: stored[&(n, l)].clone(),
        })
        .collect())
}

pub(crate) fn table_keys(n_max: usize, by_isolated: bool) -> Vec<(usize, Option<usize>)> {
    if by_isolated {
        (0..=n_max).flat_map(|n| (0..=n).map(move |l| (n, Some(l)))).collect()
    } else {
        (0..=n_max).map(|n| (n, None)).collect()
    }
}

/// Renders rows as CSV (`n,count` or `n,l,count`, LF endings).
pub fn render_csv(rows: &[Row], by_isolated: bool) -> String {
    let mut out = String::from(if by_isolated { "n,l,count\n" } else { "n,count\n" });
    for r in rows {
        match r.l {
            Some(l) if by_isolated => out.push_str(&format!("{},{},{}\n", r.n, l, r.count)),
            _ => out.push_str(&format!("{},{}\n", r.n, r.count)),
        }
    }
    out
}

pub fn render_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialise");
    s.push('\n');
    s
}

fn cmd_table(
    args: &TableArgs,
    cache: Option<&TableCache>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, Failure> {
    check_k(args.k)?;
    let keys = table_keys(args.n_max, args.by_isolated);
    let rows = table_rows(args.k, args.variant.into(), &keys, cache, stderr)?;
    let text = match args.format {
        Format::Csv => render_csv(&rows, args.by_isolated),
        Format::Json => render_json(&rows),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?
        }
        None => stdout.write_all(text.as_bytes()).map_err(io_failure)?,
    }
    Ok(EXIT_OK)
}

fn cmd_convert(args: &ConvertArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<u8, Failure> {
    check_k(args.k)?;
    let mut input = String::new();
    stdin.read_to_string(&mut input).map_err(io_failure)?;
    let input = input.trim();
    let (trace, diagram, walk) = match args.from {
        Repr::Diagram => {
            let d: Diagram = input.parse()?;
            let walk = diagram_to_walk(args.k, &d)?;
            (diagram_trace(&d), d, walk)
        }
        Repr::Walk => {
            let walk = Walk::parse_steps(args.k, input)?;
            let (trace, d) = walk_trace(&walk)?;
            (trace, d, walk)
        }
        Repr::Tableau => return Err(Failure::usage("--from tableau is not supported; use diagram or walk")),
    };
    let text = match args.to {
        Repr::Diagram => diagram.to_string(),
        Repr::Walk => walk.to_string(),
        Repr::Tableau => trace.shape_sequence_string(),
    };
    writeln!(stdout, "{text}").map_err(io_failure)?;
    Ok(EXIT_OK)
}
