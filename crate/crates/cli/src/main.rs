//! `hallway`: batch front end for the lecture hall / affine window engine.

mod render;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hallway::affine::{enumerate_reps, from_lhp, max_window_for_weight, LengthOracle, OracleConfig};
use hallway::identities::{self, CheckParams, IdentityId, Verdict};
use hallway::invseq::{enumerate_invseq, psi, psi_inverse};
use hallway::lecturehall::for_each_by_weight;
use hallway::notation::{format_list, parse_list};
use hallway::perms::{enumerate_cn, enumerate_sn};
use hallway::{CosetRep, Error, InversionSequence, LectureHallPartition, Limits, SSequence, SignedPermutation};

use render::{Format, Record, Table, Text};

const DEFAULT_MAX_N: usize = 6;
const MAX_QCAP: u32 = 24;

const STATS_COLUMNS: &[&str] = &[
    "n", "window", "c", "sigma", "e", "lambda", "inv_tilde", "neg", "alpha", "beta", "last", "max", "odd_inv",
    "even_inv",
];
const MAP_COLUMNS: &[&str] = &["n", "window", "c", "sigma", "e", "lambda"];
const CN_COLUMNS: &[&str] = &["sigma", "inv_c", "neg", "des", "comaj", "lhp_c"];
const SN_COLUMNS: &[&str] = &["pi", "inv", "des", "lhp"];
const LHP_COLUMNS: &[&str] = &["lambda", "weight", "ceiling", "excess"];
const INVSEQ_COLUMNS: &[&str] = &["e", "s", "weight", "asc", "amaj", "lhp"];
const PSI_COLUMNS: &[&str] = &["sigma", "e", "inv_c", "des", "asc"];
const ORACLE_COLUMNS: &[&str] = &["window", "length", "word", "s0_count", "sn_count"];

#[derive(Parser)]
#[command(name = "hallway", version, about = "Lecture hall partitions and affine C windows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a window and its lecture hall partition.
    Map {
        direction: Direction,
        input: String,
        /// Expected rank; checked against the input length.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Window statistics for one or more coset representatives.
    Stats {
        #[arg(required = true)]
        windows: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream combinatorial objects.
    Enumerate(EnumerateArgs),
    /// Check a generating-function identity.
    Verify(VerifyArgs),
    /// Coxeter length and a reduced word by breadth-first search.
    LengthOracle {
        window: String,
        #[arg(long, default_value_t = 14)]
        depth_cap: u32,
        #[arg(long, default_value_t = 5_000_000)]
        node_cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The encoding of a signed permutation as an inversion sequence.
    Psi {
        input: String,
        /// Treat the input as an inversion sequence and decode it.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    WindowToLhp,
    LhpToWindow,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "Cn", alias = "cn")]
    Cn,
    #[value(name = "Sn", alias = "sn")]
    Sn,
    Lhp,
    Windows,
    Invseq,
}

#[derive(Args)]
struct EnumerateArgs {
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Largest weight (`lhp`), or largest Coxeter length (`windows`).
    #[arg(long)]
    weight: Option<i64>,
    /// Largest last window entry (`windows`).
    #[arg(long)]
    max_wn: Option<i64>,
    /// Keep only windows with exactly `k` entries above `n`.
    #[arg(long)]
    k: Option<usize>,
    /// Keep only windows with `w_n ≤ (2t + 1)(n + 1)`.
    #[arg(long)]
    t: Option<u32>,
    /// Denominator sequence for `lhp` and `invseq`.
    #[arg(long)]
    s: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    id: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long)]
    qcap: Option<u32>,
    /// Per-variable caps, e.g. `x=10,y=10`.
    #[arg(long)]
    caps: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Failures carrying their exit status.
enum Failure {
    Engine(Error),
    Usage(String),
    Io(io::Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Usage(_) => 2,
            Failure::Engine(e) => match e {
                Error::Parse(_) | Error::Precondition(_) => 2,
                Error::ResourceCap(_) | Error::ExceedsDepth(_) => 4,
                _ => 3,
            },
            Failure::Io(_) => 3,
        }
    }
}

type Outcome = Result<(), Failure>;

fn limits() -> Result<Limits, Failure> {
    let max_n = match std::env::var("HALLWAY_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("HALLWAY_MAX_N must be a nonnegative integer, got {v:?}")))?,
        Err(_) => DEFAULT_MAX_N,
    };
    Ok(Limits::with_max_rank(max_n))
}

fn window_record(w: &CosetRep, with_stats: bool) -> Record {
    let (c, sigma) = w.decompose();
    let e = psi(&sigma);
    let lambda = w.to_lhp();
    let mut r = Record::default();
    r.push("n", w.rank())
        .push("window", w)
        .push("c", format_list(&c))
        .push("sigma", &sigma)
        .push("e", format_list(e.entries()))
        .push("lambda", &lambda);
    if with_stats {
        let s = w.stats();
        r.push("inv_tilde", s.inv_tilde)
            .push("neg", s.neg)
            .push("alpha", s.alpha)
            .push("beta", s.beta)
            .push("last", s.last)
            .push("max", s.max)
            .push("odd_inv", s.odd_inv)
            .push("even_inv", s.even_inv);
    }
    r
}

fn parse_partition(input: &str) -> Result<LectureHallPartition, Error> {
    LectureHallPartition::standard(parse_list(input)?)
}

fn run_map(direction: Direction, input: &str, n: Option<usize>, format: Format) -> Outcome {
    let w = match direction {
        Direction::WindowToLhp => input.parse::<CosetRep>()?,
        Direction::LhpToWindow => from_lhp(&parse_partition(input)?)?,
    };
    if let Some(n) = n.filter(|&n| n != w.rank()) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: w.rank(),
        }
        .into());
    }
    let mut table = Table::new(io::stdout().lock(), format, MAP_COLUMNS, Text::Labelled)?;
    table.row(&window_record(&w, false))?;
    table.finish(false)?;
    Ok(())
}

fn run_stats(windows: &[String], format: Format) -> Outcome {
    let reps = windows
        .iter()
        .map(|s| s.parse::<CosetRep>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(io::stdout().lock(), format, STATS_COLUMNS, Text::Labelled)?;
    for w in &reps {
        table.row(&window_record(w, true))?;
    }
    table.finish(false)?;
    Ok(())
}

fn parse_s(s: &Option<String>, n: usize, default: SSequence) -> Result<SSequence, Error> {
    match s {
        None => Ok(default),
        Some(text) => {
            let seq = SSequence::new(parse_list(text)?)?;
            if seq.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: seq.len(),
                });
            }
            Ok(seq)
        }
    }
}

fn run_enumerate(args: &EnumerateArgs) -> Outcome {
    let lim = limits()?;
    lim.check_rank(args.n)?;
    let n = args.n;
    let out = io::stdout().lock();
    match args.kind {
        Kind::Cn => {
            let mut table = Table::new(out, args.format, CN_COLUMNS, Text::Only("sigma"))?;
            for sigma in enumerate_cn(n, &lim)? {
                let mut r = Record::default();
                r.push("sigma", &sigma)
                    .push("inv_c", sigma.inv_c())
                    .push("neg", sigma.neg())
                    .push("des", format_indices(&sigma.des_set()))
                    .push("comaj", sigma.comaj())
                    .push("lhp_c", sigma.lhp_c());
                table.row(&r)?;
            }
            table.finish(true)?;
        }
        Kind::Sn => {
            let mut table = Table::new(out, args.format, SN_COLUMNS, Text::Only("pi"))?;
            for pi in enumerate_sn(n, &lim)? {
                let mut r = Record::default();
                r.push("pi", &pi)
                    .push("inv", pi.inv())
                    .push("des", format_indices(&pi.des_set()))
                    .push("lhp", pi.lhp());
                table.row(&r)?;
            }
            table.finish(true)?;
        }
        Kind::Lhp => {
            let weight = args
                .weight
                .ok_or_else(|| Failure::Usage("enumerate lhp needs --weight".into()))?;
            let s = parse_s(&args.s, n, SSequence::type_a(n))?;
            let mut table = Table::new(out, args.format, LHP_COLUMNS, Text::Only("lambda"))?;
            let mut failure = None;
            for_each_by_weight(&s, weight, &lim, |parts| {
                if failure.is_some() {
                    return;
                }
                let lambda = LectureHallPartition::new(parts.to_vec(), s.clone()).expect("enumerated partitions are valid");
                let mut r = Record::default();
                r.push("lambda", &lambda)
                    .push("weight", lambda.weight())
                    .push("ceiling", format_list(&lambda.ceiling()))
                    .push("excess", format_list(lambda.excess().entries()));
                if let Err(e) = table.row(&r) {
                    failure = Some(e);
                }
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
            table.finish(true)?;
        }
        Kind::Windows => {
            let max_wn = match (args.max_wn, args.weight) {
                (Some(m), _) => m,
                (None, Some(w)) => max_window_for_weight(n, w),
                (None, None) => return Err(Failure::Usage("enumerate windows needs --max-wn or --weight".into())),
            };
            let mut table = Table::new(out, args.format, STATS_COLUMNS, Text::Only("window"))?;
            for w in enumerate_reps(n, max_wn, &lim)? {
                if args.weight.is_some_and(|q| w.class_inv().inv_tilde() > q)
                    || args.k.is_some_and(|k| !w.in_tnk(k))
                    || args.t.is_some_and(|t| !w.in_snt(t))
                {
                    continue;
                }
                table.row(&window_record(&w, true))?;
            }
            table.finish(true)?;
        }
        Kind::Invseq => {
            let s = parse_s(&args.s, n, SSequence::type_c(n))?;
            let mut table = Table::new(out, args.format, INVSEQ_COLUMNS, Text::Only("e"))?;
            for e in enumerate_invseq(&s, &lim)? {
                table.row(&invseq_record(&e))?;
            }
            table.finish(true)?;
        }
    }
    Ok(())
}

fn format_indices(values: &[usize]) -> String {
    format_list(&values.iter().map(|&v| v as i64).collect::<Vec<_>>())
}

fn invseq_record(e: &InversionSequence) -> Record {
    let mut r = Record::default();
    r.push("e", format_list(e.entries()))
        .push("s", e.context())
        .push("weight", e.weight())
        .push("asc", format_indices(&e.asc_set()))
        .push("amaj", e.amaj())
        .push("lhp", e.lhp());
    r
}

fn parse_caps(text: &str) -> Result<BTreeMap<String, u32>, Failure> {
    let mut caps = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (var, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("cap {item:?} is not of the form var=degree")))?;
        let value: u32 = value
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("cap {item:?} needs a nonnegative degree")))?;
        caps.insert(var.trim().to_string(), value);
    }
    Ok(caps)
}

fn run_verify(args: &VerifyArgs) -> Outcome {
    let id: IdentityId = args.id.parse()?;
    let lim = limits()?;
    let caps = match &args.caps {
        Some(text) => parse_caps(text)?,
        None => BTreeMap::new(),
    };
    if let Some(q) = args.qcap.into_iter().chain(caps.values().copied()).find(|&q| q > MAX_QCAP) {
        return Err(Error::ResourceCap(format!("cap {q} exceeds the maximum {MAX_QCAP}")).into());
    }
    let params = CheckParams {
        n: args.n,
        k: args.k,
        t: args.t,
        j: args.j,
        qcap: args.qcap,
        caps,
    };
    let check = identities::run(id, &params, &lim)?;
    let mut out = io::stdout().lock();
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&check.report()).map_err(io::Error::other)?)?,
        Format::Text | Format::Csv => {
            let report = check.report();
            writeln!(out, "id      {}", report.id)?;
            let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "params  {}", params.join(" "))?;
            let caps: Vec<String> = report
                .caps
                .iter()
                .map(|(k, v)| format!("{k}={}", v.as_deref().unwrap_or("none")))
                .collect();
            writeln!(out, "caps    {}", caps.join(" "))?;
            writeln!(out, "lhs     {}", check.lhs)?;
            writeln!(out, "rhs     {}", check.rhs)?;
            match &check.verdict {
                Verdict::Equal => writeln!(out, "verdict equal")?,
                Verdict::Mismatch { stage, lhs, rhs, .. } => {
                    let m = report.mismatch.as_ref().expect("mismatch details");
                    writeln!(
                        out,
                        "verdict mismatch ({stage}) at {}: lhs {lhs}, rhs {rhs}",
                        format_list(&m.exps.iter().map(|&e| e as i64).collect::<Vec<_>>())
                    )?
                }
                Verdict::FormulaError(msg) => writeln!(out, "verdict formula-error: {msg}")?,
            }
        }
    }
    out.flush()?;
    if check.is_equal() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run_length_oracle(window: &str, depth_cap: u32, node_cap: usize, format: Format) -> Outcome {
    let w: CosetRep = window.parse()?;
    limits()?.check_rank(w.rank())?;
    let mut oracle = LengthOracle::new(w.rank(), OracleConfig { depth_cap, node_cap });
    let report = oracle.query(&w, depth_cap)?;
    let word: Vec<i64> = report.word.iter().map(|&g| g as i64).collect();
    let mut r = Record::default();
    r.push("window", &w)
        .push("length", report.length)
        .push("word", format_list(&word))
        .push("s0_count", report.s0_count)
        .push("sn_count", report.sn_count);
    let mut table = Table::new(io::stdout().lock(), format, ORACLE_COLUMNS, Text::Labelled)?;
    table.row(&r)?;
    table.finish(false)?;
    Ok(())
}

fn run_psi(input: &str, inverse: bool, format: Format) -> Outcome {
    let (sigma, e) = if inverse {
        let values = parse_list(input)?;
        let e = InversionSequence::new(values.clone(), SSequence::type_c(values.len()))?;
        (psi_inverse(&e)?, e)
    } else {
        let sigma: SignedPermutation = input.parse()?;
        let e = psi(&sigma);
        (sigma, e)
    };
    let mut r = Record::default();
    r.push("sigma", &sigma)
        .push("e", format_list(e.entries()))
        .push("inv_c", sigma.inv_c())
        .push("des", format_indices(&sigma.des_set()))
        .push("asc", format_indices(&e.asc_set()));
    let mut table = Table::new(io::stdout().lock(), format, PSI_COLUMNS, Text::Labelled)?;
    table.row(&r)?;
    table.finish(false)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Map {
            direction,
            input,
            n,
            format,
        } => run_map(*direction, input, *n, *format),
        Command::Stats { windows, format } => run_stats(windows, *format),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
        Command::LengthOracle {
            window,
            depth_cap,
            node_cap,
            format,
        } => run_length_oracle(window, *depth_cap, *node_cap, *format),
        Command::Psi { input, inverse, format } => run_psi(input, *inverse, *format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Engine(e) => eprintln!("error: {e}"),
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Mismatch => {}
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
