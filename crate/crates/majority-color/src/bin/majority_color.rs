//! Command-line surface: generation, colouring, verification, exact
//! solving, stable sets, the fractional relaxation, the tail table, and
//! batch experiments.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failed or the
//! answer is NO, 3 budget or tries exhausted (unknown).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use majority_color::colouring::{
    eulerian_colouring, greedy_pass, lll_resample_3colouring, majority_product_colouring,
    random_3colouring_retry, seymour_3colouring, verify_majority, Colouring, MajoritySpec,
    PassDirection,
};
use majority_color::digraph::{
    gen_cycle_power, gen_random_digraph, gen_random_out_regular, gen_subset_blowup,
    gen_tournament, Digraph, VertexOrdering,
};
use majority_color::exact::{
    choosability_check, exists_beta_colouring, fractional_majority_number, min_majority_colours,
    ListAssignment, MinColoursOutcome, SearchOutcome, DEFAULT_SEARCH_BUDGET,
    FRACTIONAL_MAX_VERTICES,
};
use majority_color::experiment::{records_to_csv, records_to_json, run_experiment, ExperimentConfig, OutputFormat};
use majority_color::prob::{indset_tail_verification, lll_hypothesis_check, tail_table_csv};
use majority_color::stable::{
    enumerate_stable_sets, random_stable_set, serialize_stable_set, stable_third,
    stable_third_guarantee, verify_stable, StableSetParams, ENUMERATE_MAX_VERTICES,
};
use majority_color::{parse_frac, Error, Frac};

const EXIT_INVALID: u8 = 1;
const EXIT_NO: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "majority-color", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable errors on stderr.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a digraph and write it in the text format.
    Gen(GenArgs),
    /// Run a colouring algorithm and write the verified colouring.
    Colour(ColourArgs),
    /// Verify a colouring file against a digraph. Exit 0 iff valid.
    Verify(VerifyArgs),
    /// Exact decision procedures: minimum colours, existence, choosability.
    Exact(ExactArgs),
    /// Stable-set extraction or exhaustive enumeration.
    Stable(StableArgs),
    /// Minimum total weight of a fractional stable-set cover.
    Fractional(FractionalArgs),
    /// Emit the exact binomial tail table (d = 22..128, all must pass).
    Tails(TailsArgs),
    /// Batch experiments from a JSON config.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long)]
    n: usize,
    /// Power for cycle-power, base colours elsewhere unused.
    #[arg(long)]
    k: Option<usize>,
    /// Out-degree for out-regular, subset size for blowup.
    #[arg(long)]
    d: Option<usize>,
    /// Arc probability for random.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    CyclePower,
    Random,
    OutRegular,
    Tournament,
    /// Subset blowup over a directed n-cycle base.
    Blowup,
}

#[derive(Args)]
struct ColourArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    algorithm: AlgorithmKind,
    /// Base colours for product/greedy, 3 or 4 for eulerian.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tries for random-retry.
    #[arg(long, default_value_t = 100)]
    tries: usize,
    /// Round budget for lll.
    #[arg(long, default_value_t = 100_000)]
    rounds: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Where to write the verification report (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmKind {
    Product,
    Greedy,
    Seymour,
    RandomRetry,
    Lll,
    Eulerian,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    colouring: PathBuf,
    #[arg(long, default_value = "1/2")]
    beta: String,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    input: PathBuf,
    /// Find the smallest k with a witness.
    #[arg(long, conflicts_with_all = ["exists", "choosable"])]
    min_colours: bool,
    /// Decide existence for a fixed --k.
    #[arg(long)]
    exists: bool,
    /// List-colouring decision; requires --lists.
    #[arg(long)]
    choosable: bool,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    #[arg(long, default_value = "1/2")]
    beta: String,
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    /// Lists file: `lists <n>` then `<vertex> <c1> <c2> ...` per vertex.
    #[arg(long)]
    lists: Option<PathBuf>,
}

#[derive(Args)]
struct StableArgs {
    #[arg(long)]
    input: PathBuf,
    /// Randomized extraction (default mode).
    #[arg(long)]
    extract: bool,
    /// Exhaustive enumeration of maximal stable sets.
    #[arg(long, conflicts_with = "extract")]
    enumerate: bool,
    #[arg(long, default_value = "1/3")]
    alpha: String,
    #[arg(long, default_value = "19/50")]
    p: String,
    #[arg(long, default_value = "1/2")]
    beta: String,
    #[arg(long, default_value_t = 100)]
    tries: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FractionalArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = FRACTIONAL_MAX_VERTICES)]
    max_n: usize,
}

#[derive(Args)]
struct TailsArgs {
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// JSON config file (family, algorithm, trials, master_seed, format, jobs).
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            report_error(cli.format, &e);
            ExitCode::from(classify_error(&e))
        }
    }
}

fn classify_error(e: &Error) -> u8 {
    match e {
        Error::CapExceeded(_) => EXIT_UNKNOWN,
        _ => EXIT_INVALID,
    }
}

fn report_error(format: Format, e: &Error) {
    if format == Format::Json {
        let obj = serde_json::json!({ "error": e.to_string() });
        eprintln!("{obj}");
    } else {
        eprintln!("error: {e}");
    }
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> majority_color::Result<()> {
    match path {
        Some(p) => Ok(fs::write(p, content)?),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_digraph(path: &PathBuf) -> majority_color::Result<Digraph> {
    Digraph::parse(&fs::read_to_string(path)?)
}

fn run(cli: &Cli) -> majority_color::Result<ExitCode> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Colour(args) => cmd_colour(args),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Exact(args) => cmd_exact(args),
        Command::Stable(args) => cmd_stable(args),
        Command::Fractional(args) => cmd_fractional(args),
        Command::Tails(args) => cmd_tails(args),
        Command::Experiment(args) => cmd_experiment(args),
    }
}

fn cmd_gen(args: &GenArgs) -> majority_color::Result<ExitCode> {
    let missing = |what: &str| Error::InvalidArgument(format!("--{what} required for this family"));
    let g = match args.family {
        FamilyKind::CyclePower => gen_cycle_power(args.n, args.k.ok_or_else(|| missing("k"))?)?,
        FamilyKind::Random => {
            gen_random_digraph(args.n, args.p.ok_or_else(|| missing("p"))?, args.seed)?
        }
        FamilyKind::OutRegular => {
            gen_random_out_regular(args.n, args.d.ok_or_else(|| missing("d"))?, args.seed)?
        }
        FamilyKind::Tournament => gen_tournament(args.n, args.seed)?,
        FamilyKind::Blowup => gen_subset_blowup(
            &gen_cycle_power(args.n, 1)?,
            args.d.ok_or_else(|| missing("d"))?,
        )?,
    };
    write_or_print(&args.output, &g.serialize())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_colour(args: &ColourArgs) -> majority_color::Result<ExitCode> {
    let g = read_digraph(&args.input)?;
    // the β-majority spec the output will be verified against
    let (colouring, spec): (Option<Colouring>, MajoritySpec) = match args.algorithm {
        AlgorithmKind::Product => {
            let c = majority_product_colouring(&g, args.k)?;
            let spec = MajoritySpec::new(args.k * args.k, Frac::new(1, args.k as u64))?;
            (Some(c), spec)
        }
        AlgorithmKind::Greedy => {
            let order = VertexOrdering::identity(g.vertex_count());
            let c = greedy_pass(&g, &order, args.k, PassDirection::Forward)?;
            (Some(c), MajoritySpec::majority(args.k))
        }
        AlgorithmKind::Seymour => {
            let c = seymour_3colouring(&g)?;
            // verified by the different-out-neighbour condition below
            (Some(c), MajoritySpec::new(3, Frac::new(1, 1))?)
        }
        AlgorithmKind::RandomRetry => {
            let outcome = random_3colouring_retry(&g, args.tries, args.seed)?;
            (outcome.colouring, MajoritySpec::majority(3))
        }
        AlgorithmKind::Lll => {
            let report = lll_hypothesis_check(&g)?;
            if !report.hypothesis_satisfied() {
                eprintln!(
                    "warning: resampling hypothesis not satisfied (delta={} max_in={} bound={:.1})",
                    report.delta, report.max_in, report.in_degree_bound
                );
            }
            let (c, _log) = lll_resample_3colouring(&g, args.rounds, args.seed)?;
            (c, MajoritySpec::majority(3))
        }
        AlgorithmKind::Eulerian => {
            let c = eulerian_colouring(&g, args.k)?;
            (Some(c), MajoritySpec::majority(args.k))
        }
    };

    let Some(colouring) = colouring else {
        eprintln!("failure: budget exhausted without a valid colouring");
        return Ok(ExitCode::from(EXIT_UNKNOWN));
    };

    // never emit an unverified success
    match args.algorithm {
        AlgorithmKind::Seymour => {
            let ok = (0..g.vertex_count()).all(|v| {
                g.out_degree(v) == 0
                    || g.out_neighbours(v)
                        .iter()
                        .any(|&u| colouring.colour(u) != colouring.colour(v))
            });
            if !ok {
                return Err(Error::InvalidArgument(
                    "internal: unverified colouring".into(),
                ));
            }
            write_or_print(&args.output, &colouring.serialize())?;
            write_or_print(&args.report, "valid\n")?;
        }
        AlgorithmKind::Eulerian if args.k == 3 => {
            // k = 3 satisfies the 2/3 in-plus-out condition, not β = 1/2
            write_or_print(&args.output, &colouring.serialize())?;
            write_or_print(&args.report, "valid (2/3 in-plus-out condition)\n")?;
        }
        _ => {
            let report = verify_majority(&g, &colouring, &spec)?;
            if !report.valid {
                return Err(Error::InvalidArgument(
                    "internal: unverified colouring".into(),
                ));
            }
            write_or_print(&args.output, &colouring.serialize())?;
            write_or_print(&args.report, &report.render(&g))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> majority_color::Result<ExitCode> {
    let g = read_digraph(&args.input)?;
    let c = Colouring::parse(&fs::read_to_string(&args.colouring)?)?;
    let beta = parse_frac(&args.beta)?;
    let spec = MajoritySpec::new(c.num_colours(), beta)?;
    let report = verify_majority(&g, &c, &spec)?;
    if format == Format::Json {
        let violations: Vec<_> = report
            .violations
            .iter()
            .map(|&v| {
                serde_json::json!({
                    "vertex": v,
                    "matches": report.same_colour_counts[v],
                    "out_degree": g.out_degree(v),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "valid": report.valid, "violations": violations })
        );
    } else {
        print!("{}", report.render(&g));
    }
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NO)
    })
}

fn parse_lists(text: &str) -> majority_color::Result<ListAssignment> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty lists file".into(),
    })?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("lists") {
        return Err(Error::Parse {
            line: line_no,
            msg: "expected header `lists <n>`".into(),
        });
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: line_no,
            msg: "malformed vertex count".into(),
        })?;
    let mut lists = vec![Vec::new(); n];
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: line_no,
                msg: "expected `<vertex> <colours...>`".into(),
            })?;
        if v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} out of range"),
            });
        }
        for tok in parts {
            let c: usize = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad colour `{tok}`"),
            })?;
            lists[v].push(c);
        }
    }
    ListAssignment::new(lists)
}

fn cmd_exact(args: &ExactArgs) -> majority_color::Result<ExitCode> {
    let g = read_digraph(&args.input)?;
    let beta = parse_frac(&args.beta)?;
    if args.min_colours || (!args.exists && !args.choosable) {
        return match min_majority_colours(&g, args.k_max, beta, args.budget)? {
            MinColoursOutcome::Found { k, .. } => {
                println!("{k}");
                Ok(ExitCode::SUCCESS)
            }
            MinColoursOutcome::BudgetExceeded { at_k } => {
                eprintln!("unknown: budget exceeded at k={at_k}");
                Ok(ExitCode::from(EXIT_UNKNOWN))
            }
            MinColoursOutcome::AboveCap => {
                println!("> {}", args.k_max);
                Ok(ExitCode::from(EXIT_NO))
            }
        };
    }
    let outcome = if args.choosable {
        let lists_path = args
            .lists
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("--choosable requires --lists".into()))?;
        let lists = parse_lists(&fs::read_to_string(lists_path)?)?;
        choosability_check(&g, &lists, beta, args.budget)?
    } else {
        let k = args
            .k
            .ok_or_else(|| Error::InvalidArgument("--exists requires --k".into()))?;
        exists_beta_colouring(&g, k, beta, args.budget)?
    };
    match outcome {
        SearchOutcome::Witness(c) => {
            print!("{}", c.serialize());
            Ok(ExitCode::SUCCESS)
        }
        SearchOutcome::None => {
            println!("none");
            Ok(ExitCode::from(EXIT_NO))
        }
        SearchOutcome::BudgetExceeded => {
            eprintln!("unknown: budget exceeded");
            Ok(ExitCode::from(EXIT_UNKNOWN))
        }
    }
}

fn cmd_stable(args: &StableArgs) -> majority_color::Result<ExitCode> {
    let g = read_digraph(&args.input)?;
    let beta = parse_frac(&args.beta)?;
    if args.enumerate {
        let sets = enumerate_stable_sets(&g, beta, ENUMERATE_MAX_VERTICES)?;
        let mut out = String::new();
        for set in &sets {
            out.push_str(&serialize_stable_set(g.vertex_count(), set));
        }
        write_or_print(&args.output, &out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let alpha = parse_frac(&args.alpha)?;
    let p = parse_frac(&args.p)?;
    let default_third = alpha == Frac::new(1, 3) && p == Frac::new(19, 50) && beta == Frac::new(1, 2);
    let result = if default_third {
        if !stable_third_guarantee(&g) {
            eprintln!(
                "warning: minimum out-degree {} is below the guarantee threshold 22",
                g.min_out_degree()
            );
        }
        stable_third(&g, args.tries, args.seed)?
    } else {
        let params = StableSetParams::new(alpha, p, beta)?;
        if (g.min_out_degree() as u64) < params.delta_required {
            eprintln!(
                "warning: minimum out-degree {} is below the guarantee threshold {}",
                g.min_out_degree(),
                params.delta_required
            );
        }
        random_stable_set(&g, &params, args.tries, args.seed)?
    };
    debug_assert!(verify_stable(&g, &result.t, beta)?.valid || !result.success);
    write_or_print(&args.output, &serialize_stable_set(g.vertex_count(), &result.t))?;
    if result.success {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "failure: best set has {} vertices after {} tries",
            result.t.len(),
            result.tries_used
        );
        Ok(ExitCode::from(EXIT_UNKNOWN))
    }
}

fn cmd_fractional(args: &FractionalArgs) -> majority_color::Result<ExitCode> {
    let g = read_digraph(&args.input)?;
    let sol = fractional_majority_number(&g, args.max_n)?;
    print!("{}", sol.render());
    Ok(ExitCode::SUCCESS)
}

fn cmd_tails(args: &TailsArgs) -> majority_color::Result<ExitCode> {
    let rows = indset_tail_verification();
    let all_pass = rows.iter().all(|r| r.pass);
    write_or_print(&args.output, &tail_table_csv(&rows))?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NO)
    })
}

fn cmd_experiment(args: &ExperimentArgs) -> majority_color::Result<ExitCode> {
    let config: ExperimentConfig = serde_json::from_str(&fs::read_to_string(&args.config)?)
        .map_err(|e| Error::InvalidArgument(format!("bad config: {e}")))?;
    let (records, summary) = run_experiment(&config)?;
    let rendered = match config.format {
        OutputFormat::Json => records_to_json(&records, &summary)?,
        OutputFormat::Csv => records_to_csv(&records),
    };
    write_or_print(&args.output, &rendered)?;
    eprintln!(
        "trials={} successes={} success_rate={:.3}",
        summary.trials, summary.successes, summary.success_rate
    );
    Ok(ExitCode::SUCCESS)
}
