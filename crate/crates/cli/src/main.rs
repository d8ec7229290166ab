use std::collections::BTreeMap;
use std::fmt::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use downsets::dedekind::{dedekind, DedekindRun, Method};
use downsets::engine::{
    count_within, pivot_downsets, try_count_downsets, try_count_within, Count, CountOptions,
};
use downsets::format::{parse_poset, to_dot};
use downsets::tables::{compute_table, render, TableFormat, TableKind};
use downsets::verify::{self, Expectations, VerifyOptions};
use downsets::{Error, PointSet, Poset};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "downsets",
    version,
    about = "Count down-sets of finite posets and compute Dedekind numbers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> TableFormat {
        match f {
            Format::Text => TableFormat::Text,
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

fn method_arg(s: &str) -> Result<Method, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn table_arg(s: &str) -> Result<TableKind, String> {
    s.parse()
        .map_err(|_| "expected one of nu, gamma, mu, iso".to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the down-sets of a poset file.
    Count {
        file: String,
        /// Pivot set as comma-separated point indices; prints term statistics.
        #[arg(long)]
        pivot: Option<String>,
        /// Print the Hasse diagram as DOT instead of counting.
        #[arg(long)]
        dot: bool,
        /// Maximum number of pivot down-sets to enumerate.
        #[arg(long, default_value_t = 1 << 24)]
        limit: usize,
    },
    /// Compute the Dedekind number b(n).
    Dedekind {
        n: usize,
        #[arg(long, default_value = "theorem2", value_parser = method_arg)]
        method: Method,
    },
    /// Emit a coefficient table.
    Tables {
        #[arg(value_parser = table_arg)]
        which: TableKind,
    },
    /// Run every self-check and print a pass/fail ledger.
    Verify {
        /// Also check every copy of every class and the γ invariance.
        #[arg(long)]
        strict: bool,
    },
}

/// Errors with their exit codes.
enum Failure {
    Lib(Error),
    Io(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Checks => 1,
            Failure::Io(_) => 2,
            Failure::Lib(e) => match e {
                Error::Parse { .. }
                | Error::Cycle(_)
                | Error::Index { .. }
                | Error::NotADownSet
                | Error::TraceMismatch => 2,
                Error::Capacity(_) => 3,
                Error::Unsupported(_) | Error::Domain(_) | Error::MissingInput(_) => 4,
                Error::Shape(_) | Error::Structure(_) => 1,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Checks => {}
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Count {
            file,
            pivot,
            dot,
            limit,
        } => {
            let text =
                std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("{file}: {e}")))?;
            let p = parse_poset(&text)?;
            if *dot {
                return Ok(to_dot(&p));
            }
            cmd_count(&p, pivot.as_deref(), *limit, cli.format)
        }
        Command::Dedekind { n, method } => cmd_dedekind(*n, *method, cli.format),
        Command::Tables { which } => cmd_tables(*which, cli.format),
        Command::Verify { strict } => {
            let opts = VerifyOptions {
                strict: *strict,
                ..VerifyOptions::default()
            };
            let report = verify::run(&Expectations::default(), &opts);
            let out = match cli.format {
                Format::Json => {
                    let checks: Vec<_> = report
                        .checks
                        .iter()
                        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                        .collect();
                    format!(
                        "{:#}\n",
                        json!({"passed": report.passed(), "checks": checks})
                    )
                }
                Format::Csv => {
                    let mut s = String::from("check,passed\n");
                    for c in &report.checks {
                        writeln!(s, "{},{}", c.name, c.passed).unwrap();
                    }
                    s
                }
                Format::Text => report.ledger(),
            };
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Checks)
            }
        }
    }
}

fn parse_pivot(spec: &str, n: usize) -> Result<PointSet, Error> {
    let mut m = PointSet::EMPTY;
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad pivot index `{tok}`"),
        })?;
        if i >= n {
            return Err(Error::Index { index: i, len: n });
        }
        m = m.with(i);
    }
    Ok(m)
}

fn cmd_count(
    p: &Poset,
    pivot: Option<&str>,
    limit: usize,
    format: Format,
) -> Result<String, Failure> {
    let d = try_count_downsets(p)?;
    let stats = match pivot {
        None => None,
        Some(spec) => {
            let m = parse_pivot(spec, p.len())?;
            let expected = try_count_within(p, m, CountOptions::default())?;
            if expected > limit as Count {
                return Err(Error::Capacity(format!(
                    "{expected} pivot down-sets exceed the limit of {limit}"
                ))
                .into());
            }
            let pivots = pivot_downsets(p, m)?;
            let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
            let mut total: Count = 0;
            for n in &pivots {
                let residual = p.carrier().difference(p.updown(m, *n)?);
                *histogram.entry(residual.len()).or_insert(0) += 1;
                total += count_within(p, residual);
            }
            if total != d {
                return Err(Error::Structure(format!(
                    "decomposition gives {total}, direct count {d}"
                ))
                .into());
            }
            Some((pivots.len(), histogram))
        }
    };
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "d(P) = {d}").unwrap();
            if let Some((terms, histogram)) = &stats {
                writeln!(out, "terms = {terms}").unwrap();
                writeln!(out, "residual sizes:").unwrap();
                for (size, count) in histogram {
                    writeln!(out, "  {size:>3}: {count}").unwrap();
                }
            }
        }
        Format::Csv => {
            writeln!(out, "d,terms").unwrap();
            let terms = stats.as_ref().map(|s| s.0.to_string()).unwrap_or_default();
            writeln!(out, "{d},{terms}").unwrap();
        }
        Format::Json => {
            let value = match &stats {
                None => json!({"d": d.to_string()}),
                Some((terms, histogram)) => json!({
                    "d": d.to_string(),
                    "terms": terms,
                    "residual_sizes": histogram,
                }),
            };
            writeln!(out, "{value:#}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_dedekind(n: usize, method: Method, format: Format) -> Result<String, Failure> {
    let DedekindRun { value, report, .. } = dedekind(n, method)?;
    let name = method.name();
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "b({n}) = {value}").unwrap();
            writeln!(out, "method = {name}").unwrap();
            if let Some(r) = &report {
                writeln!(out, "b⁻⁻({n}) = {}", r.value).unwrap();
                writeln!(out, "evaluations = {}", r.evaluations).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,method,value,bmm,evaluations").unwrap();
            let (bmm, evals) = report
                .as_ref()
                .map(|r| (r.value.to_string(), r.evaluations.to_string()))
                .unwrap_or_default();
            writeln!(out, "{n},{name},{value},{bmm},{evals}").unwrap();
        }
        Format::Json => {
            let value = json!({
                "n": n,
                "method": name,
                "value": value.to_string(),
                "report": report,
            });
            writeln!(out, "{value:#}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_tables(which: TableKind, format: Format) -> Result<String, Failure> {
    Ok(render(&compute_table(which)?, format.into())?)
}
