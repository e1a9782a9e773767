//! `ftsnd`: command-line tools for fault-tolerant simple nanowire decoders.
//!
//! Subcommands: verify, bounds, construct, search, certify, table,
//! simulate, infobits. Exit codes: 0 success, 1 verification negative,
//! 2 usage error, 3 budget-exhausted bracket where exactness was asked for.

mod table;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ftsnd::bounds::{self, AggregateOptions};
use ftsnd::constructors::{self, GreedyOrder};
use ftsnd::decoder::{ActivationPattern, Decoder, FaultEvent};
use ftsnd::format::{self, AndTable};
use ftsnd::search::{self, SearchBudget, SearchOptions, SearchStatus};
use ftsnd::{Block, Error, SetSystem};

/// Environment variable overriding the default per-cell search budget, in
/// seconds (fractional allowed).
pub const BUDGET_ENV: &str = "FTSND_BUDGET_SECS";

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BRACKET: u8 = 3;

#[derive(Parser)]
#[command(name = "ftsnd", version, about = "Fault-tolerant simple nanowire decoder tools")]
struct Cli {
    /// Output style for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Suppress informational output; keep results and errors.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a set-system file is an (m, n, e)-FTSND.
    Verify(VerifyArgs),
    /// Print every applicable bound on N(m, e) and the resulting bracket.
    Bounds(BoundsArgs),
    /// Emit a witness construction as a set-system file.
    Construct(ConstructArgs),
    /// Compute N(m, e) exactly by clique search, or bracket it on budget.
    Search(SearchArgs),
    /// Verify a witness file and report the certified lower bound.
    Certify(CertifyArgs),
    /// Render the N(m, e) table (rows m, columns e).
    Table(table::TableArgs),
    /// Report addressing under an activation pattern, before/after faults.
    Simulate(SimulateArgs),
    /// Compare information bits of certified codes against reference data.
    Infobits(InfobitsArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Set-system file (text or JSON form).
    file: PathBuf,
    /// Number of tolerated errors.
    #[arg(long)]
    e: usize,
    /// Force the brute-force fault-enumeration oracle instead of the
    /// one-sided-difference criterion.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    e: usize,
    /// File of best-known A(n, d) values, lines `n d value`.
    #[arg(long)]
    andw_table: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    variant: ConstructVariant,
    /// Re-run the matching verifier before emitting.
    #[arg(long, global = true)]
    verify: bool,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit the JSON form instead of the text form.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum ConstructVariant {
    /// All floor(m/2)-subsets of [m]: the maximum antichain.
    MiddleLayer {
        #[arg(long)]
        m: usize,
    },
    /// Greedy constant-weight code of length n, min distance 2d, weight w.
    Greedy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        w: usize,
        /// Enumeration order: lex, colex, or seed=K.
        #[arg(long, default_value = "lex")]
        order: GreedyOrder,
    },
    /// The (4e+2, 2e+2, e)-FTSND from a Hadamard matrix of order 4(e+1).
    Hadamard {
        #[arg(long)]
        e: usize,
    },
    /// Dual of the complete k-uniform system on [n].
    CompleteUniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The Steiner-system decoder at order m in {4, 7, 8, 11, 12}.
    Steiner {
        #[arg(long)]
        m: usize,
    },
    /// Two disjoint (e+1)-blocks on [m].
    DisjointPair {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        e: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    e: usize,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Branch-and-bound node limit.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Write the witness system to this file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// Fix the first clique block to {1..k}, one branch per cardinality.
    #[arg(long)]
    canonical_first_block: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// Number of tolerated errors the certificate claims.
    #[arg(long)]
    e: usize,
    /// Witness set-system file.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct SimulateArgs {
    /// Set-system file.
    file: PathBuf,
    /// Activation pattern: comma/space-separated mesowire points, or
    /// "none" for the empty pattern.
    #[arg(long, default_value = "none")]
    activate: String,
    /// Fault events as nanowire:mesowire pairs; repeatable.
    #[arg(long = "fault")]
    faults: Vec<String>,
}

#[derive(Args)]
struct InfobitsArgs {
    /// Number of tolerated errors each file must certify.
    #[arg(long)]
    e: usize,
    /// Reference data file with lines `e m k` of claimed info-bit counts.
    #[arg(long)]
    reference: Option<PathBuf>,
    /// Certified witness files.
    files: Vec<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Bounds(args) => cmd_bounds(cli, args),
        Command::Construct(args) => cmd_construct(cli, args),
        Command::Search(args) => cmd_search(cli, args),
        Command::Certify(args) => cmd_certify(cli, args),
        Command::Table(args) => table::run(cli.format == Format::Tsv, cli.quiet, args),
        Command::Simulate(args) => cmd_simulate(cli, args),
        Command::Infobits(args) => cmd_infobits(cli, args),
    }
}

fn read_system(path: &PathBuf) -> Result<SetSystem, Error> {
    let text = std::fs::read_to_string(path)?;
    format::parse_system(&text)
}

/// Default search budget: 10 minutes, overridable via FTSND_BUDGET_SECS.
pub fn default_budget_secs() -> f64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(600.0)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, Error> {
    let system = read_system(&args.file)?;
    let decoder = Decoder::new(system);
    let ok = if args.oracle {
        decoder.tolerates_errors_bruteforce(args.e, ftsnd::decoder::DEFAULT_FAULT_SET_CAP)?
    } else {
        decoder.is_ftsnd(args.e)
    };
    println!("FTSND: {}", if ok { "yes" } else { "no" });
    let min_diff = decoder.system().min_one_sided_difference();
    if decoder.size() < 2 {
        if !cli.quiet {
            println!("min one-sided difference: - (fewer than 2 blocks)");
        }
    } else {
        println!("min one-sided difference: {min_diff}");
    }
    if !ok {
        if let Some((i, j)) = decoder.system().violating_pair(args.e + 1) {
            let blocks = decoder.system().blocks();
            println!(
                "violating pair: |A_{} \\ A_{}| = {} < {} (A_{} = {:?}, A_{} = {:?})",
                i + 1,
                j + 1,
                blocks[i].difference_count(&blocks[j]),
                args.e + 1,
                i + 1,
                blocks[i].points(),
                j + 1,
                blocks[j].points(),
            );
        }
        return Ok(ExitCode::from(EXIT_NEGATIVE));
    }
    Ok(ExitCode::SUCCESS)
}

fn load_and_table(path: &Option<PathBuf>) -> Result<Option<AndTable>, Error> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            Ok(Some(AndTable::parse(&text)?))
        }
        None => Ok(None),
    }
}

fn cmd_bounds(cli: &Cli, args: &BoundsArgs) -> Result<ExitCode, Error> {
    let table = load_and_table(&args.andw_table)?;
    let options = AggregateOptions {
        and_table: table.as_ref(),
        ..AggregateOptions::default()
    };
    let bracket = bounds::aggregate(args.m, args.e, &options)?;
    let tsv = cli.format == Format::Tsv;
    for report in &bracket.reports {
        if tsv {
            let (kind, value) = match &report.outcome {
                bounds::Outcome::Value(v) => (kind_name(report.kind), v.to_string()),
                bounds::Outcome::Real(v) => (kind_name(report.kind), format!("{v:.3}")),
                bounds::Outcome::NotApplicable(r) => ("n/a", r.clone()),
            };
            println!("{}\t{kind}\t{value}", report.name);
        } else {
            println!("{report}");
        }
    }
    // Diagnostics that never enter the bracket, printed for orientation.
    if !cli.quiet {
        let env = bounds::katona_envelope(args.m, args.e)?;
        if tsv {
            println!("katona_envelope\tdiagnostic\t{:.3}\t{:.3}", env.lower, env.upper);
        } else {
            println!(
                "{:<16} {:<10} {:.3} .. {:.3}",
                "katona_envelope", "diagnostic", env.lower, env.upper
            );
        }
    }
    match bracket.exact {
        Some(v) => println!(
            "N({}, {}) = {} (lower: {}, upper: {})",
            args.m, args.e, v, bracket.lower_by, bracket.upper_by
        ),
        None => println!(
            "N({}, {}) in {}..{} (lower: {}, upper: {})",
            args.m, args.e, bracket.lower, bracket.upper, bracket.lower_by, bracket.upper_by
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn kind_name(kind: bounds::BoundKind) -> &'static str {
    match kind {
        bounds::BoundKind::Lower => "lower",
        bounds::BoundKind::Upper => "upper",
        bounds::BoundKind::Exact => "exact",
        bounds::BoundKind::Diagnostic => "diagnostic",
    }
}

fn cmd_construct(cli: &Cli, args: &ConstructArgs) -> Result<ExitCode, Error> {
    let (system, check): (SetSystem, Box<dyn Fn(&SetSystem) -> bool>) = match &args.variant {
        ConstructVariant::MiddleLayer { m } => (
            constructors::middle_layer(*m)?,
            Box::new(|s: &SetSystem| s.is_antichain()),
        ),
        ConstructVariant::Greedy { n, d, w, order } => {
            let code = constructors::greedy_constant_weight(*n, *d, *w, *order)?;
            let d = *d;
            (
                SetSystem::from_code(&code)?,
                Box::new(move |s: &SetSystem| s.min_one_sided_difference() >= d),
            )
        }
        ConstructVariant::Hadamard { e } => {
            let e = *e;
            (
                constructors::hadamard_ftsnd(e)?.system().clone(),
                Box::new(move |s: &SetSystem| Decoder::new(s.clone()).is_ftsnd(e)),
            )
        }
        ConstructVariant::CompleteUniform { n, k } => {
            let tolerated = ftsnd::combin::binomial(n.saturating_sub(2), k.saturating_sub(1));
            (
                constructors::complete_uniform_dual(*n, *k)?.system().clone(),
                Box::new(move |s: &SetSystem| {
                    tolerated == 0 || Decoder::new(s.clone()).is_ftsnd(tolerated as usize - 1)
                }),
            )
        }
        ConstructVariant::Steiner { m } => (
            constructors::steiner_ftsnd(*m)?.system().clone(),
            Box::new(|s: &SetSystem| Decoder::new(s.clone()).is_ftsnd(1)),
        ),
        ConstructVariant::DisjointPair { m, e } => {
            let e = *e;
            (
                constructors::disjoint_pair(*m, e)?.system().clone(),
                Box::new(move |s: &SetSystem| Decoder::new(s.clone()).is_ftsnd(e)),
            )
        }
    };
    if args.verify && !check(&system) {
        eprintln!("error: constructed system failed its verifier");
        return Ok(ExitCode::from(EXIT_NEGATIVE));
    }
    let rendered = if args.json {
        format::emit_system_json(&system)
    } else {
        format::emit_system_canonical(&system)
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => {
            std::io::stdout().write_all(rendered.as_bytes())?;
        }
    }
    if !cli.quiet {
        eprintln!(
            "system: m = {}, n = {}{}",
            system.order(),
            system.size(),
            if args.verify { ", verified" } else { "" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(cli: &Cli, args: &SearchArgs) -> Result<ExitCode, Error> {
    let budget = match (args.time_limit, args.node_limit) {
        (None, None) => SearchBudget::time_limit(default_budget_secs()),
        (time, nodes) => SearchBudget::new(time.map(std::time::Duration::from_secs_f64), nodes)?,
    };
    let result = search::max_ftsnd_exact_with(
        args.m,
        args.e,
        &SearchOptions {
            budget,
            canonical_first_block: args.canonical_first_block,
        },
    )?;
    match result.status {
        SearchStatus::Exact => println!("N({}, {}) = {}", args.m, args.e, result.lower),
        SearchStatus::Bracket => println!(
            "N({}, {}) in {}..{} (budget exhausted)",
            args.m, args.e, result.lower, result.upper
        ),
    }
    if !cli.quiet {
        println!(
            "nodes: {}  elapsed: {:.3}s  witness size: {}",
            result.nodes,
            result.elapsed.as_secs_f64(),
            result.witness.size()
        );
    }
    if let Some(path) = &args.witness_out {
        std::fs::write(path, format::emit_system_canonical(&result.witness))?;
        if !cli.quiet {
            println!("witness written to {}", path.display());
        }
    }
    Ok(match result.status {
        SearchStatus::Exact => ExitCode::SUCCESS,
        SearchStatus::Bracket => ExitCode::from(EXIT_BRACKET),
    })
}

fn cmd_certify(cli: &Cli, args: &CertifyArgs) -> Result<ExitCode, Error> {
    let system = read_system(&args.input)?;
    match search::certify(&system, args.e) {
        Ok(cert) => {
            println!(
                "certified: N({}, {}) >= {} ({})",
                cert.m,
                cert.e,
                cert.size,
                args.input.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(err) => {
            println!("rejected: {err}");
            if !cli.quiet {
                eprintln!("file: {}", args.input.display());
            }
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
    }
}

fn parse_activation(m: usize, spec: &str) -> Result<ActivationPattern, Error> {
    let spec = spec.trim();
    if spec.is_empty() || spec == "none" {
        return Ok(ActivationPattern(Block::empty(m)));
    }
    if spec == "all" {
        return Ok(ActivationPattern(Block::full(m)));
    }
    let points: Vec<usize> = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Usage(format!("invalid mesowire point {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    let mut sorted = points;
    sorted.sort_unstable();
    sorted.dedup();
    Ok(ActivationPattern(Block::new(m, &sorted)?))
}

fn parse_fault(spec: &str) -> Result<FaultEvent, Error> {
    let (i, j) = spec
        .split_once(':')
        .ok_or_else(|| Error::Usage(format!("fault {spec:?} is not nanowire:mesowire")))?;
    let parse = |t: &str, what: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Usage(format!("invalid {what} in fault {spec:?}")))
    };
    Ok(FaultEvent {
        nanowire: parse(i, "nanowire")?,
        mesowire: parse(j, "mesowire")?,
    })
}

fn print_addressing(label: &str, decoder: &Decoder, v: &ActivationPattern) {
    let addressed = decoder.addressed(v);
    println!(
        "{label}: addressed nanowires: {}",
        if addressed.is_empty() {
            "none".to_string()
        } else {
            addressed
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    );
    let not_independent: Vec<usize> = (1..=decoder.size())
        .filter(|&i| !decoder.independently_addressable(i).unwrap_or(false))
        .collect();
    if not_independent.is_empty() {
        println!("{label}: all nanowires independently addressable");
    } else {
        println!(
            "{label}: NOT independently addressable: {}",
            not_independent
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
}

fn cmd_simulate(_cli: &Cli, args: &SimulateArgs) -> Result<ExitCode, Error> {
    let system = read_system(&args.file)?;
    let decoder = Decoder::new(system);
    let v = parse_activation(decoder.order(), &args.activate)?;
    println!(
        "system: m = {}, n = {}; activation V = {:?}",
        decoder.order(),
        decoder.size(),
        v.0.points()
    );
    print_addressing("before", &decoder, &v);
    if args.faults.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    let faults: Vec<FaultEvent> = args
        .faults
        .iter()
        .map(|s| parse_fault(s))
        .collect::<Result<_, _>>()?;
    let faulted = decoder.apply_faults(&faults)?;
    for f in &faults {
        println!("fault: nanowire {} loses mesowire {}", f.nanowire, f.mesowire);
    }
    print_addressing("after", &faulted, &v);
    Ok(ExitCode::SUCCESS)
}

/// Reference rows `e m k` for the infobits comparison.
fn parse_reference(text: &str) -> Result<Vec<(usize, usize, u32)>, Error> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected `e m k`, got {line:?}"),
            });
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid integer {t:?}"),
            })
        };
        rows.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])? as u32));
    }
    Ok(rows)
}

fn cmd_infobits(cli: &Cli, args: &InfobitsArgs) -> Result<ExitCode, Error> {
    let reference = match &args.reference {
        Some(path) => parse_reference(&std::fs::read_to_string(path)?)?,
        None => Vec::new(),
    };
    let tsv = cli.format == Format::Tsv;
    if tsv {
        println!("file\te\tm\tn\tk\treference_k");
    } else {
        println!(
            "{:<28} {:>3} {:>4} {:>6} {:>4} {:>12}",
            "file", "e", "m", "n", "k", "reference k"
        );
    }
    let mut any_invalid = false;
    for path in &args.files {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let row = read_system(path)
            .map_err(|e| Error::Usage(e.to_string()))
            .and_then(|s| search::certify(&s, args.e));
        match row {
            Ok(cert) => {
                let k = bounds::info_bits(cert.size)?;
                let reference_k = reference
                    .iter()
                    .find(|&&(e, m, _)| e == cert.e && m == cert.m)
                    .map(|&(_, _, k)| k.to_string())
                    .unwrap_or_else(|| "-".into());
                if tsv {
                    println!("{name}\t{}\t{}\t{}\t{k}\t{reference_k}", cert.e, cert.m, cert.size);
                } else {
                    println!(
                        "{name:<28} {:>3} {:>4} {:>6} {k:>4} {reference_k:>12}",
                        cert.e, cert.m, cert.size
                    );
                }
            }
            Err(err) => {
                any_invalid = true;
                if tsv {
                    println!("{name}\tinvalid\t\t\t\t");
                } else {
                    println!("{name:<28} invalid");
                }
                if !cli.quiet {
                    eprintln!("  {err}");
                }
            }
        }
    }
    Ok(if any_invalid {
        ExitCode::from(EXIT_NEGATIVE)
    } else {
        ExitCode::SUCCESS
    })
}
