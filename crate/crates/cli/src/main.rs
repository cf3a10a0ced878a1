//! Command-line front end of the `qmcount` library.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qmcount::coeff::{Coefficient, IntCode, RatCode};
use qmcount::gen::{bench_list, Workload};
use qmcount::group_min::{decide_cohomologous, decide_equivalent_group, find_minimal_list_group_with, CohomologyError};
use qmcount::lists::{parse_list, render_dot, serialize_list, AnyList, EncodedList, ListError};
use qmcount::monoid_min::{decide_equivalent, find_minimal_list_with};
use qmcount::oracle::{oracle_equivalent, oracle_minimal_depth, OracleError};
use qmcount::trace::{FrameLog, Observer};
use qmcount::words::{Alphabet, Mode};

#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

#[derive(Parser, Debug)]
#[command(name = "qmcount", version, about = "Minimal forms of counting functions on free monoids and free groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a minimal list equivalent to the input
    Minimize {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output file (standard output if omitted)
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Write the working list before each level as a sequence of DOT graphs
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
    },
    /// Decide whether two lists define equivalent counting functions
    Equiv { first: PathBuf, second: PathBuf },
    /// Decide whether two antisymmetric group lists are cohomologous
    Cohom { first: PathBuf, second: PathBuf },
    /// Evaluate the counting function of a list on words
    Eval {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Words to evaluate on ("1" is the empty word)
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Render the weighted tree of a list as DOT
    Render {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Answer by exact linear algebra instead of the minimization pipeline
    Oracle {
        #[command(subcommand)]
        kind: OracleKind,
    },
    /// Time minimization on generated lists and write one CSV row per trial
    Bench(BenchArgs),
}

#[derive(Subcommand, Debug)]
enum OracleKind {
    /// Decide equivalence of two lists
    Equiv { first: PathBuf, second: PathBuf },
    /// Print the minimal depth of a list
    Depth {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Monoid)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = CoeffArg::Int)]
    coeff: CoeffArg,
    /// Rank of the free monoid or group
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Total input sizes: "2^14..2^20" doubles between the bounds; comma-separated items are allowed
    #[arg(long, default_value = "2^14..2^20", value_parser = parse_ladder)]
    sizes: Ladder,
    /// Trials per size
    #[arg(long, default_value_t = 5)]
    trials: u64,
    /// Seed of the first trial; trial i uses seed + i
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output file (standard output if omitted)
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Input family: uniform words at one depth, or lists that collapse through every level
    #[arg(long, default_value = "uniform", value_parser = clap::value_parser!(Workload))]
    workload: Workload,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Monoid,
    Group,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoeffArg {
    Int,
    Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Ladder(Vec<u64>);

fn parse_size(text: &str) -> Result<u64, String> {
    let text = text.trim();
    let value = match text.split_once('^') {
        Some(("2", e)) => {
            let e: u32 = e.parse().map_err(|_| format!("bad exponent in {text:?}"))?;
            1u64.checked_shl(e).filter(|_| e < 64).ok_or_else(|| format!("{text:?} is too large"))?
        }
        Some(_) => return Err(format!("only powers of 2 are supported, found {text:?}")),
        None => text.parse().map_err(|_| format!("bad size {text:?}"))?,
    };
    if value == 0 {
        return Err("sizes must be positive".into());
    }
    Ok(value)
}

fn parse_ladder(text: &str) -> Result<Ladder, String> {
    let mut sizes = Vec::new();
    for item in text.split(',') {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (mut n, hi) = (parse_size(lo)?, parse_size(hi)?);
                if n > hi {
                    return Err(format!("empty range {item:?}"));
                }
                while n <= hi {
                    sizes.push(n);
                    n = match n.checked_mul(2) {
                        Some(next) => next,
                        None => break,
                    };
                }
            }
            None => sizes.push(parse_size(item)?),
        }
    }
    Ok(Ladder(sizes))
}

/// How a command ended, with its exit status.
enum Verdict {
    Done,
    Yes,
    No,
}

enum Failure {
    /// Bad input files or arguments.
    Usage(anyhow::Error),
    /// Well-formed input that the operation does not accept.
    Precondition(anyhow::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<ListError> for Failure {
    fn from(e: ListError) -> Self {
        Failure::Precondition(e.into())
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        Failure::Precondition(e.into())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { .. } => Failure::Usage(e.into()),
            OracleError::List(e) => e.into(),
        }
    }
}

type Outcome = Result<Verdict, Failure>;

fn read_list(path: &Path) -> Result<AnyList, Failure> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(Failure::Usage)?;
    parse_list(&text).map_err(|e| Failure::Usage(anyhow!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())).map_err(Failure::Usage),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn verdict(yes: bool) -> Verdict {
    println!("{}", if yes { "yes" } else { "no" });
    if yes {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

/// Applies a generic function to two lists of the same coefficient domain.
macro_rules! with_pair {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (AnyList::Int($x), AnyList::Int($y)) => $body,
            (AnyList::Rat($x), AnyList::Rat($y)) => $body,
            _ => return Err(ListError::DomainMismatch.into()),
        }
    };
}

macro_rules! with_list {
    ($a:expr, |$x:ident| $body:expr) => {
        match $a {
            AnyList::Int($x) => $body,
            AnyList::Rat($x) => $body,
        }
    };
}

fn find_minimal<C: Coefficient, O: Observer<C>>(l: &EncodedList<C>, obs: &mut O) -> EncodedList<C> {
    match l.alphabet.mode() {
        Mode::Monoid => find_minimal_list_with(l, obs),
        Mode::Group => find_minimal_list_group_with(l, obs),
    }
}

fn equivalent<C: Coefficient>(l1: &EncodedList<C>, l2: &EncodedList<C>) -> Result<bool, ListError> {
    match l1.alphabet.mode() {
        Mode::Monoid => decide_equivalent(l1, l2),
        Mode::Group => decide_equivalent_group(l1, l2),
    }
}

fn minimize<C: Coefficient>(l: &EncodedList<C>, trace: bool) -> (EncodedList<C>, String) {
    if !trace {
        return (find_minimal(l, &mut ()), String::new());
    }
    let mut log = FrameLog::default();
    let m = find_minimal(l, &mut log);
    let mut dot = String::new();
    for (label, frame) in log.frames.iter().chain([&("result".to_string(), m.clone())]) {
        let _ = writeln!(dot, "// {label}");
        dot.push_str(&render_dot(frame));
    }
    (m, dot)
}

fn run_minimize(input: &Path, output: Option<&Path>, trace: Option<&Path>) -> Outcome {
    let list = read_list(input)?;
    let (text, dot) = with_list!(&list, |l| {
        let (m, dot) = minimize(l, trace.is_some());
        (serialize_list(&m), dot)
    });
    write_output(output, &text)?;
    if let Some(path) = trace {
        write_output(Some(path), &dot)?;
    }
    Ok(Verdict::Done)
}

fn run_equiv(first: &Path, second: &Path) -> Outcome {
    let (a, b) = (read_list(first)?, read_list(second)?);
    Ok(verdict(with_pair!(&a, &b, |x, y| equivalent(x, y)?)))
}

fn run_cohom(first: &Path, second: &Path) -> Outcome {
    let (a, b) = (read_list(first)?, read_list(second)?);
    Ok(verdict(with_pair!(&a, &b, |x, y| decide_cohomologous(x, y)?)))
}

fn run_eval(input: &Path, words: &[String]) -> Outcome {
    let list = read_list(input)?;
    let alphabet = list.alphabet();
    let mut out = String::new();
    for text in words {
        let w = alphabet.parse_word(text).map_err(|e| Failure::Usage(e.into()))?;
        let value = with_list!(&list, |l| l.evaluate(w.letters()));
        let _ = writeln!(out, "{text} {value}");
    }
    write_output(None, &out)?;
    Ok(Verdict::Done)
}

fn run_render(input: &Path, output: Option<&Path>) -> Outcome {
    let list = read_list(input)?;
    write_output(output, &with_list!(&list, |l| render_dot(l)))?;
    Ok(Verdict::Done)
}

fn run_oracle(kind: &OracleKind) -> Outcome {
    match kind {
        OracleKind::Equiv { first, second } => {
            let (a, b) = (read_list(first)?, read_list(second)?);
            Ok(verdict(with_pair!(&a, &b, |x, y| oracle_equivalent(x, y)?)))
        }
        OracleKind::Depth { input } => {
            let list = read_list(input)?;
            println!("{}", with_list!(&list, |l| oracle_minimal_depth(l)?));
            Ok(Verdict::Done)
        }
    }
}

#[derive(Serialize)]
struct BenchRecord {
    mode: &'static str,
    coeff: &'static str,
    n: usize,
    input_total: u64,
    seed: u64,
    runtime_ns: u64,
    output_total: u64,
}

const BENCH_HEADER: [&str; 7] = ["mode", "coeff", "n", "input_total", "seed", "runtime_ns", "output_total"];

fn bench_domain<C: Coefficient, W: Write>(
    args: &BenchArgs,
    alphabet: Alphabet,
    csv: &mut csv::Writer<W>,
) -> anyhow::Result<()> {
    for &size in &args.sizes.0 {
        let mut times = Vec::new();
        for trial in 0..args.trials {
            let seed = args.seed.wrapping_add(trial);
            let list: EncodedList<C> = bench_list(alphabet, args.workload, size, seed);
            let start = Instant::now();
            let m = find_minimal(&list, &mut ());
            let elapsed = start.elapsed();
            times.push(elapsed);
            csv.serialize(BenchRecord {
                mode: alphabet.mode().name(),
                coeff: C::DOMAIN.name(),
                n: alphabet.rank(),
                input_total: list.total_size(),
                seed,
                runtime_ns: u64::try_from(elapsed.as_nanos()).unwrap_or(u64::MAX),
                output_total: m.total_size(),
            })?;
        }
        if !times.is_empty() {
            times.sort();
            eprintln!("N={size}: median {:?} over {} trials", times[times.len() / 2], times.len());
        }
    }
    Ok(())
}

fn run_bench(args: &BenchArgs) -> Outcome {
    let mode = match args.mode {
        ModeArg::Monoid => Mode::Monoid,
        ModeArg::Group => Mode::Group,
    };
    let alphabet = Alphabet::new(args.n, mode).map_err(|e| Failure::Usage(e.into()))?;
    let sink: Box<dyn Write> = match &args.csv {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("cannot write {}", p.display())).map_err(Failure::Usage)?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(sink);
    let result = (|| -> anyhow::Result<()> {
        csv.write_record(BENCH_HEADER)?;
        match args.coeff {
            CoeffArg::Int => bench_domain::<IntCode, _>(args, alphabet, &mut csv)?,
            CoeffArg::Rat => bench_domain::<RatCode, _>(args, alphabet, &mut csv)?,
        }
        csv.flush()?;
        Ok(())
    })();
    result.map_err(Failure::Usage)?;
    Ok(Verdict::Done)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Minimize { input, output, trace } => run_minimize(input, output.as_deref(), trace.as_deref()),
        Command::Equiv { first, second } => run_equiv(first, second),
        Command::Cohom { first, second } => run_cohom(first, second),
        Command::Eval { input, words } => run_eval(input, words),
        Command::Render { input, output } => run_render(input, output.as_deref()),
        Command::Oracle { kind } => run_oracle(kind),
        Command::Bench(args) => run_bench(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Done | Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(3),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(4)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladders() {
        assert_eq!(parse_ladder("2^14..2^16").unwrap(), Ladder(vec![1 << 14, 1 << 15, 1 << 16]));
        assert_eq!(parse_ladder("100,2^3").unwrap(), Ladder(vec![100, 8]));
        assert_eq!(parse_ladder("3..20").unwrap(), Ladder(vec![3, 6, 12]));
        for bad in ["", "0", "3^2", "2^64", "2^5..2^4", "x"] {
            assert!(parse_ladder(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn command_line_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
