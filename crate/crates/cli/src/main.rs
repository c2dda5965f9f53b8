mod output;

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use tkc_core::arith::coprime;
use tkc_core::bredon_wood::n_genus_trace;
use tkc_core::cf::{convergents, expand, BracketExpr};
use tkc_core::exec::{map_ordered, Execution};
use tkc_core::knot::{connected_sum_crosscap, normalize, Knot, TorusKnot};
use tkc_core::verify::{run_suite_with, Suite, SuiteOptions, DEFAULT_K_MAX, DEFAULT_K_MIN};

use crate::output::{write_csv, write_json, OutputRecord};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
/// Failures listed individually before the rest are summarized.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Parser)]
#[command(name = "tkc", version, about = "Crosscap numbers of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of T(p, q) after normalization.
    #[command(allow_negative_numbers = true)]
    Invariants {
        p: BigInt,
        q: BigInt,
        #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
        format: RecordFormat,
    },
    /// N(x, y) with its expansion, b-sequence and skip-sum.
    Nxy { x: BigInt, y: BigInt },
    /// Canonical continued fraction of x/y and its convergents.
    Cf { x: BigInt, y: BigInt },
    /// Crosscap number of a connected sum, given as p:q pairs.
    #[command(allow_negative_numbers = true)]
    Sum {
        #[arg(required = true, value_name = "P:Q", allow_hyphen_values = true)]
        knots: Vec<String>,
    },
    /// One record per distinct nontrivial knot with 2 <= p <= P, 2 <= q <= Q.
    Sweep {
        #[arg(value_name = "MAX_P", conflicts_with = "max_p_flag")]
        max_p: Option<u64>,
        #[arg(value_name = "MAX_Q", conflicts_with = "max_q_flag")]
        max_q: Option<u64>,
        #[arg(long = "max-p", id = "max_p_flag", value_name = "P")]
        max_p_flag: Option<u64>,
        #[arg(long = "max-q", id = "max_q_flag", value_name = "Q")]
        max_q_flag: Option<u64>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        #[arg(long)]
        sequential: bool,
    },
    /// Run an identity suite over all odd knots with p <= P.
    Verify {
        #[arg(value_name = "SUITE", conflicts_with = "suite_flag")]
        suite: Option<String>,
        #[arg(value_name = "MAX_P", conflicts_with = "max_p_flag")]
        max_p: Option<u64>,
        #[arg(long = "suite", id = "suite_flag", value_name = "NAME")]
        suite_flag: Option<String>,
        #[arg(long = "max-p", id = "max_p_flag", value_name = "P")]
        max_p_flag: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_K_MIN, allow_negative_numbers = true)]
        k_min: i64,
        #[arg(long, default_value_t = DEFAULT_K_MAX, allow_negative_numbers = true)]
        k_max: i64,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

/// A failed command: message for stderr plus exit status.
struct Failed(u8, String);

impl Failed {
    fn input(msg: impl ToString) -> Self {
        Failed(EXIT_INPUT, msg.to_string())
    }
}

impl From<tkc_core::Error> for Failed {
    fn from(e: tkc_core::Error) -> Self {
        Failed::input(e)
    }
}

impl From<io::Error> for Failed {
    fn from(e: io::Error) -> Self {
        Failed::input(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failed::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("tkc: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failed> {
    match command {
        Command::Invariants { p, q, format } => cmd_invariants(out, &p, &q, format),
        Command::Nxy { x, y } => cmd_nxy(out, &x, &y),
        Command::Cf { x, y } => cmd_cf(out, &x, &y),
        Command::Sum { knots } => cmd_sum(out, &knots),
        Command::Sweep {
            max_p,
            max_q,
            max_p_flag,
            max_q_flag,
            out: path,
            format,
            sequential,
        } => {
            let max_p = max_p
                .or(max_p_flag)
                .ok_or_else(|| Failed::input("sweep needs MAX_P"))?;
            let max_q = max_q
                .or(max_q_flag)
                .ok_or_else(|| Failed::input("sweep needs MAX_Q"))?;
            let records = sweep(max_p, max_q, execution(sequential))?;
            match path {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| Failed::input(format!("{}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    write_sweep(&mut w, &records, format)?;
                    w.flush()?;
                    Ok(())
                }
                None => write_sweep(out, &records, format),
            }
        }
        Command::Verify {
            suite,
            max_p,
            suite_flag,
            max_p_flag,
            k_min,
            k_max,
            sequential,
        } => {
            let suite = suite
                .or(suite_flag)
                .ok_or_else(|| Failed::input("verify needs a suite name"))?;
            let max_p = max_p
                .or(max_p_flag)
                .ok_or_else(|| Failed::input("verify needs MAX_P"))?;
            if k_min > k_max {
                return Err(Failed::input(format!("empty k window [{k_min}, {k_max}]")));
            }
            let options = SuiteOptions {
                k_min,
                k_max,
                execution: execution(sequential),
            };
            cmd_verify(out, suite.parse()?, max_p, &options)
        }
    }
}

fn cmd_invariants(
    out: &mut impl Write,
    p: &BigInt,
    q: &BigInt,
    format: RecordFormat,
) -> Result<(), Failed> {
    let record = OutputRecord::for_knot(&normalize(p, q)?, p, q);
    match format {
        RecordFormat::Text => out.write_all(record.render_text().as_bytes())?,
        RecordFormat::Json => write_json(out, std::slice::from_ref(&record))?,
        RecordFormat::Csv => {
            write_csv(out, std::slice::from_ref(&record)).map_err(Failed::input)?
        }
    }
    Ok(())
}

fn cmd_nxy(out: &mut impl Write, x: &BigInt, y: &BigInt) -> Result<(), Failed> {
    let (trace, n) = n_genus_trace(x, y)?;
    writeln!(out, "x/y     {x}/{y}")?;
    writeln!(out, "cf      {}", trace.source())?;
    writeln!(out, "b       {}", BracketExpr::new(trace.b().to_vec()))?;
    writeln!(out, "sigma   {}", trace.sigma())?;
    writeln!(out, "N       {n}")?;
    Ok(())
}

fn cmd_cf(out: &mut impl Write, x: &BigInt, y: &BigInt) -> Result<(), Failed> {
    let cf = expand(x, y)?;
    let table = convergents(&cf);
    writeln!(out, "{x}/{y} = {cf}")?;
    writeln!(
        out,
        "{:>4}  {:>8}  {:>12}  {:>12}",
        "i", "a_i", "numerator", "denominator"
    )?;
    for (i, (a, c)) in cf.terms().iter().zip(table.entries()).enumerate() {
        writeln!(
            out,
            "{i:>4}  {a:>8}  {:>12}  {:>12}",
            c.numerator, c.denominator
        )?;
    }
    Ok(())
}

fn parse_pair(s: &str) -> Result<(BigInt, BigInt), Failed> {
    let bad = || Failed::input(format!("expected P:Q with nonzero integers, got `{s}`"));
    let (p, q) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_sum(out: &mut impl Write, pairs: &[String]) -> Result<(), Failed> {
    let mut knots = Vec::with_capacity(pairs.len());
    for s in pairs {
        let (p, q) = parse_pair(s)?;
        let knot = normalize(&p, &q).map_err(|e| Failed::input(format!("{s}: {e}")))?;
        knots.push((s, knot));
    }
    for (s, knot) in &knots {
        writeln!(
            out,
            "{s:<12} {:<14} crosscap {}",
            knot.to_string(),
            knot.crosscap()
        )?;
    }
    let parts: Vec<Knot> = knots.into_iter().map(|(_, k)| k).collect();
    writeln!(out, "total {}", connected_sum_crosscap(&parts)?)?;
    Ok(())
}

/// Distinct nontrivial normalized knots from raw `2 <= p <= max_p`,
/// `2 <= q <= max_q`, in lexicographic order.
fn sweep_knots(max_p: u64, max_q: u64) -> Vec<TorusKnot> {
    let mut set = BTreeSet::new();
    for p in 2..=max_p {
        for q in 2..=max_q {
            let (p, q) = (BigInt::from(p), BigInt::from(q));
            if !coprime(&p, &q) || p.is_one() || q.is_one() {
                continue;
            }
            if let Ok(Knot::Torus(k)) = normalize(&p, &q) {
                set.insert(k);
            }
        }
    }
    set.into_iter().collect()
}

fn sweep(max_p: u64, max_q: u64, execution: Execution) -> Result<Vec<OutputRecord>, Failed> {
    if max_p < 2 || max_q < 2 {
        return Err(Failed::input("sweep bounds must be at least 2"));
    }
    let knots = sweep_knots(max_p, max_q);
    Ok(map_ordered(execution, &knots, |k| {
        OutputRecord::from_report(&k.report())
    }))
}

fn write_sweep(
    out: &mut impl Write,
    records: &[OutputRecord],
    format: SweepFormat,
) -> Result<(), Failed> {
    match format {
        SweepFormat::Csv => write_csv(out, records).map_err(Failed::input),
        SweepFormat::Json => Ok(write_json(out, records)?),
    }
}

fn cmd_verify(
    out: &mut impl Write,
    suite: Suite,
    max_p: u64,
    options: &SuiteOptions,
) -> Result<(), Failed> {
    let report = run_suite_with(suite, max_p, options);
    writeln!(
        out,
        "suite {} max_p {} k in [{}, {}]",
        report.suite, report.max_p, report.k_window.0, report.k_window.1
    )?;
    for s in &report.sections {
        writeln!(
            out,
            "  {:<10} checked {:>8}  skipped {:>6}  failures {}",
            s.suite.name(),
            s.checked,
            s.skipped,
            s.failures
        )?;
    }
    for f in report.failures.iter().take(MAX_LISTED_FAILURES) {
        writeln!(out, "FAIL {f}")?;
    }
    if report.failures.len() > MAX_LISTED_FAILURES {
        writeln!(
            out,
            "... {} more failures",
            report.failures.len() - MAX_LISTED_FAILURES
        )?;
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict}: {} checked, {} skipped, {} failures",
        report.checked,
        report.skipped,
        report.failures.len()
    )?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failed(EXIT_VERIFY, String::new()))
    }
}
