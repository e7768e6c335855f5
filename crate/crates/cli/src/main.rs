use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use epsat::analysis::{self, ExponentReport};
use epsat::bench::{bench_corpus, level_summary, BenchRow, BenchSpec};
use epsat::detsearch::{bfs_solve, BranchingRule, MsAutarky, MsBasic, SearchConfig, SearchError};
use epsat::oracle::{self, InstanceSpec, OracleError};
use epsat::sampler2::{SampleError, Sampler2, Strategy};
use epsat::threesat::{schoening, solve3_prop, WalkConfig};
use epsat::twosat::{count_2sat, solve_2sat};
use epsat::vcover::{self, CoverError, Graph};
use epsat::{parse_dimacs, write_dimacs, CnfFormula, PartialAssignment};

const EXIT_NO_SOLUTION: u8 = 1;
const EXIT_UNSAT_TARGET: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("writing output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

type CmdResult = Result<u8, CliError>;

/// Solution-density parameterized SAT and vertex cover tools.
#[derive(Debug, Parser)]
#[command(name = "epsat", version)]
struct Cli {
    /// Seed for every randomized step; recorded in the output.
    #[arg(long, global = true, env = "EPSAT_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draw uniform satisfying assignments of a 2-CNF.
    Sample(SampleArgs),
    /// Count satisfying assignments.
    Count(CountArgs),
    /// Decide satisfiability.
    Solve(SolveArgs),
    /// Vertex cover, exact or under a density promise.
    Vc(VcArgs),
    /// Evaluate runtime exponents.
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// Generate random instances.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Work counters against measured density on a generated corpus, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct SampleArgs {
    /// DIMACS CNF file, `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1)]
    n_samples: usize,
    /// auto, rejection, warmup or family-enum=L.
    #[arg(long, default_value = "auto", value_parser = parse_strategy)]
    strategy: Strategy,
    /// Family depth.
    #[arg(long, default_value_t = 7)]
    k: usize,
    /// Work budget per sample.
    #[arg(long)]
    max_work: Option<u64>,
    /// Accept wider clauses, falling back to enumeration when propagation
    /// does not reduce the input to 2-CNF.
    #[arg(long)]
    warn_width: bool,
    /// Skip unit propagation; unit clauses then act as frozen family members.
    #[arg(long)]
    no_propagate: bool,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "auto" => Ok(Strategy::Auto),
        "rejection" => Ok(Strategy::Rejection),
        "warmup" => Ok(Strategy::Warmup),
        _ => {
            let level = s
                .strip_prefix("family-enum=")
                .ok_or_else(|| format!("unknown strategy `{s}`"))?;
            level
                .parse()
                .map(Strategy::Enumeration)
                .map_err(|_| format!("bad enumeration level `{level}`"))
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountMethod {
    Brute,
    Branch2sat,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = CountMethod::Branch2sat)]
    method: CountMethod,
    /// Variable limit for brute-force enumeration.
    #[arg(long, default_value_t = oracle::DEFAULT_MAX_VARS)]
    max_vars: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolveMethod {
    BfsMs,
    BfsBasic,
    Schoening,
    Prop33,
    Aspvall,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = SolveMethod::BfsMs)]
    method: SolveMethod,
    /// Promised solution density, for diagnostics.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Stored-node cap for the breadth-first search.
    #[arg(long, default_value_t = 5_000_000)]
    node_cap: usize,
    #[arg(long, default_value_t = 1_000_000)]
    max_restarts: u64,
    /// Flips per restart; defaults to 3n.
    #[arg(long)]
    flips: Option<u64>,
}

#[derive(Debug, Args)]
struct VcArgs {
    /// DIMACS edge-format graph.
    #[arg(long)]
    input: PathBuf,
    /// Cover size bound; without it a minimum cover is computed.
    #[arg(long)]
    k: Option<usize>,
    /// Fraction of k-sets that are covers; selects promise mode.
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = usize::MAX)]
    node_cap: usize,
}

#[derive(Debug, Subcommand)]
enum AnalyzeCmd {
    /// Branching number of a vector.
    Tau {
        #[arg(required = true, num_args = 1..)]
        vector: Vec<f64>,
    },
    /// Exponent B with floor bound (c/ε)^B; λ defaults to τ(1,2).
    #[command(name = "hirschB", alias = "hirsch-b")]
    HirschB {
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Sampling exponent from the linear program.
    Delta {
        #[arg(long, default_value_t = analysis::WAHLSTROM_C)]
        c: f64,
        #[arg(long, default_value_t = analysis::DEFAULT_LP_DEPTH)]
        k: usize,
    },
    /// Promise vertex cover exponent for a k/n ratio.
    Vcexp {
        #[arg(long)]
        ratio: f64,
    },
    /// Schöning exponent at solution density 2^{-δn}.
    SchoeningExp {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
    },
    /// Exponent of the warm-up sampler.
    Warmup,
    /// Exponent of the randomized 3-SAT algorithm.
    Threesat,
}

#[derive(Debug, Subcommand)]
enum GenCmd {
    /// Random k-CNF in DIMACS.
    Cnf {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Bias clauses towards a hidden satisfying assignment.
        #[arg(long)]
        planted: bool,
        /// Clause widths uniform in 1..=k.
        #[arg(long)]
        leq: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Erdős–Rényi graph in DIMACS edge format.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 14)]
    n: u32,
    #[arg(long, value_delimiter = ',', default_value = "4,8,12,16,20,24")]
    clause_counts: Vec<usize>,
    #[arg(long, default_value_t = 8)]
    instances: usize,
    #[arg(long, default_value_t = 7)]
    k: usize,
    /// Rejection samples averaged per instance.
    #[arg(long, default_value_t = 64)]
    draws: u64,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Sample(a) => cmd_sample(&a, cli.seed, &mut out),
        Command::Count(a) => cmd_count(&a, &mut out),
        Command::Solve(a) => cmd_solve(&a, cli.seed, &mut out),
        Command::Vc(a) => cmd_vc(&a, &mut out),
        Command::Analyze(a) => cmd_analyze(&a, &mut out),
        Command::Gen(a) => cmd_gen(&a, cli.seed, &mut out),
        Command::Bench(a) => cmd_bench(&a, cli.seed, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("epsat: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parse_dimacs(&read_input(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn cmd_sample(a: &SampleArgs, seed: u64, out: &mut dyn Write) -> CmdResult {
    let f = read_cnf(&a.input)?;
    let unsat = |out: &mut dyn Write| -> CmdResult {
        emit(out, &json!({ "seed": seed, "verdict": "unsatisfiable" }))?;
        Ok(EXIT_UNSAT_TARGET)
    };
    let (residual, forced) = if a.no_propagate {
        (f.clone(), PartialAssignment::new(f.num_vars()))
    } else {
        match f.unit_propagate() {
            Ok(pair) => pair,
            Err(_) => return unsat(out),
        }
    };
    if residual.max_width() > 2 && !a.warn_width {
        return Err(CliError::Input(format!(
            "clause width {} exceeds 2 (pass --warn-width to sample by enumeration)",
            residual.max_width()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    if residual.max_width() > 2 {
        warn!("width {} input: sampling by enumeration", residual.max_width());
        for index in 0..a.n_samples {
            let assignment = match oracle::brute_sample(&residual, &mut rng) {
                Ok(s) => s,
                Err(OracleError::Unsatisfiable) => return unsat(out),
                Err(e) => return Err(input_err(e)),
            };
            let mut full = assignment;
            full.merge(&forced);
            emit(
                out,
                &json!({
                    "seed": seed,
                    "index": index,
                    "assignment": full.to_bit_string(),
                    "strategy": "enumeration-oracle",
                }),
            )?;
        }
        return Ok(0);
    }

    let mut sampler = match Sampler2::new(&residual, a.k) {
        Ok(s) => s,
        Err(e) => return Err(input_err(e)),
    };
    for index in 0..a.n_samples {
        let mut report = match sampler.sample(a.strategy, &mut rng, a.max_work) {
            Ok(r) => r,
            Err(SampleError::Unsatisfiable) => return unsat(out),
            Err(e @ SampleError::WorkBudgetExceeded { .. }) => return Err(CliError::Budget(e.to_string())),
            Err(e) => return Err(input_err(e)),
        };
        // propagated variables are free in the residual; pin them back
        report.assignment.merge(&forced);
        debug_assert!(f.is_satisfied_by(&report.assignment));
        let mut line = serde_json::to_value(&report).expect("report serializes");
        line["seed"] = json!(seed);
        line["index"] = json!(index);
        emit(out, &line)?;
    }
    Ok(0)
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let f = read_cnf(&a.input)?;
    let mut line = json!({ "num_vars": f.num_vars() });
    match a.method {
        CountMethod::Brute => {
            let count = oracle::brute_count_with_limit(&f, a.max_vars).map_err(|e| match e {
                OracleError::TooLarge { .. } => CliError::Input(format!("{e}; raise --max-vars to override")),
                e => input_err(e),
            })?;
            line["method"] = json!("brute");
            line["count"] = json!(count.to_string());
        }
        CountMethod::Branch2sat => {
            let r = count_2sat(&f).map_err(input_err)?;
            line["method"] = json!("branch2sat");
            line["count"] = json!(r.count.to_string());
            line["nodes_expanded"] = json!(r.nodes_expanded);
        }
    }
    emit(out, &line)?;
    Ok(0)
}

fn solved(out: &mut dyn Write, method: &str, seed: u64, solution: Option<PartialAssignment>, report: Value) -> CmdResult {
    let (verdict, code) = if solution.is_some() { ("sat", 0) } else { ("unsat", EXIT_NO_SOLUTION) };
    emit(
        out,
        &json!({
            "seed": seed,
            "method": method,
            "verdict": verdict,
            "assignment": solution.map(|s| s.to_bit_string()),
            "report": report,
        }),
    )?;
    Ok(code)
}

fn cmd_solve(a: &SolveArgs, seed: u64, out: &mut dyn Write) -> CmdResult {
    let f = read_cnf(&a.input)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match a.method {
        SolveMethod::BfsMs | SolveMethod::BfsBasic => {
            let rule: &dyn BranchingRule = match a.method {
                SolveMethod::BfsMs => &MsAutarky,
                _ => &MsBasic,
            };
            let cfg = SearchConfig {
                node_cap: a.node_cap,
                epsilon: a.epsilon,
            };
            let r = bfs_solve(&f, rule, &cfg).map_err(|e| match e {
                SearchError::NodeCapExceeded(_) => CliError::Budget(e.to_string()),
                e => input_err(e),
            })?;
            if r.promise_violation {
                warn!("solution found below the floor limit implied by epsilon");
            }
            let report = serde_json::to_value(&r).expect("report serializes");
            solved(out, rule.name(), seed, r.solution, report)
        }
        SolveMethod::Schoening => {
            let cfg = WalkConfig {
                flips_per_restart: a.flips,
                max_restarts: Some(a.max_restarts),
            };
            let r = schoening(&f, &cfg, &mut rng);
            let report = serde_json::to_value(&r).expect("report serializes");
            if r.solution.is_none() {
                // a random walk never certifies unsatisfiability
                emit(
                    out,
                    &json!({ "seed": seed, "method": "schoening", "verdict": "unknown", "report": report }),
                )?;
                return Ok(EXIT_BUDGET);
            }
            solved(out, "schoening", seed, r.solution, report)
        }
        SolveMethod::Prop33 => {
            if f.max_width() > 3 {
                return Err(CliError::Input(format!("clause width {} exceeds 3", f.max_width())));
            }
            let r = solve3_prop(&f, &mut rng);
            let report = serde_json::to_value(&r).expect("report serializes");
            solved(out, "prop33", seed, r.solution, report)
        }
        SolveMethod::Aspvall => {
            let sol = solve_2sat(&f).map_err(input_err)?;
            solved(out, "aspvall", seed, sol, Value::Null)
        }
    }
}

fn one_based(cover: &[usize]) -> Vec<usize> {
    cover.iter().map(|v| v + 1).collect()
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    vcover::parse_graph(&read_input(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn cmd_vc(a: &VcArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input)?;
    let n = g.num_vertices();
    match (a.k, a.epsilon) {
        (None, Some(_)) => Err(CliError::Input("promise mode needs --k".into())),
        (None, None) => {
            let cover = vcover::vc_min(&g);
            emit(out, &json!({ "mode": "min", "n": n, "size": cover.len(), "cover": one_based(&cover) }))?;
            Ok(0)
        }
        (Some(k), None) => {
            let (cover, stats) = vcover::vc_branch_with_stats(&g, k);
            let code = if cover.is_some() { 0 } else { EXIT_NO_SOLUTION };
            emit(
                out,
                &json!({
                    "mode": "branch",
                    "n": n,
                    "k": k,
                    "verdict": if cover.is_some() { "cover" } else { "no-cover" },
                    "cover": cover.as_deref().map(one_based),
                    "stats": stats,
                }),
            )?;
            Ok(code)
        }
        (Some(k), Some(epsilon)) => match vcover::vc_bfs_promise_capped(&g, k, epsilon, a.node_cap) {
            Ok(r) => {
                let mut line = serde_json::to_value(&r).expect("report serializes");
                line["cover"] = json!(one_based(&r.cover));
                line["mode"] = json!("promise");
                line["verdict"] = json!("cover");
                line["n"] = json!(n);
                line["k"] = json!(k);
                line["epsilon"] = json!(epsilon);
                emit(out, &line)?;
                Ok(0)
            }
            Err(CoverError::PromiseViolated { .. }) => {
                emit(
                    out,
                    &json!({ "mode": "promise", "n": n, "k": k, "epsilon": epsilon, "verdict": "promise-violated" }),
                )?;
                Ok(EXIT_NO_SOLUTION)
            }
            Err(e @ CoverError::NodeCapExceeded(_)) => Err(CliError::Budget(e.to_string())),
            Err(e) => Err(input_err(e)),
        },
    }
}

fn cmd_analyze(cmd: &AnalyzeCmd, out: &mut dyn Write) -> CmdResult {
    let report = match cmd {
        AnalyzeCmd::Tau { vector } => {
            let tau = analysis::branching_number(vector).map_err(input_err)?;
            ExponentReport::new(
                "tau",
                tau,
                json!({ "vector": vector }),
                json!({ "residual": analysis::branching_residual(vector, tau) }),
            )
        }
        AnalyzeCmd::HirschB { lambda } => {
            let lambda = match lambda {
                Some(l) => *l,
                None => analysis::branching_number(&[1.0, 2.0]).map_err(input_err)?,
            };
            let b = analysis::hirsch_exponent(lambda).map_err(input_err)?;
            ExponentReport::new(
                "hirschB",
                b,
                json!({ "lambda": lambda }),
                json!({ "floor_constant": analysis::floor_constant(lambda) }),
            )
        }
        AnalyzeCmd::Delta { c, k } => {
            let lp = analysis::delta_lp(*c, *k).map_err(input_err)?;
            ExponentReport::new(
                "delta",
                lp.delta,
                json!({ "c": c, "k": k }),
                serde_json::to_value(&lp).expect("lp serializes"),
            )
        }
        AnalyzeCmd::Vcexp { ratio } => {
            let rho = vcover::vc_branching_number();
            let e = analysis::vc_exponent(rho, *ratio).map_err(input_err)?;
            ExponentReport::new("vcexp", e, json!({ "ratio": ratio }), json!({ "rho": rho }))
        }
        AnalyzeCmd::SchoeningExp { k, delta } => {
            let e = analysis::schoening_exponent(*k, *delta).map_err(input_err)?;
            ExponentReport::new("schoening-exp", e, json!({ "k": k, "delta": delta }), Value::Null)
        }
        AnalyzeCmd::Warmup => ExponentReport::new("warmup", analysis::warmup_exponent(), Value::Null, Value::Null),
        AnalyzeCmd::Threesat => ExponentReport::new(
            "threesat",
            analysis::threesat_exponent(),
            Value::Null,
            json!({ "schoening_crossover": analysis::schoening_crossover() }),
        ),
    };
    emit(out, &serde_json::to_value(&report).expect("report serializes"))?;
    Ok(0)
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn cmd_gen(cmd: &GenCmd, seed: u64, out: &mut dyn Write) -> CmdResult {
    match cmd {
        GenCmd::Cnf { n, m, k, planted, leq, output } => {
            let spec = InstanceSpec {
                n: *n,
                m: *m,
                k: *k,
                seed,
                planted: *planted,
            };
            let inst = if *leq { oracle::gen_random_leq_ksat(&spec) } else { oracle::gen_random_ksat(&spec) }
                .map_err(input_err)?;
            let text = format!("c epsat gen cnf\nc seed {seed}\n{}", write_dimacs(&inst.formula));
            write_output(output.as_deref(), &text, out)?;
        }
        GenCmd::Graph { n, p, output } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Input(format!("edge probability {p} outside [0, 1]")));
            }
            let g = oracle::gen_random_graph(*n, *p, seed);
            let text = format!("c epsat gen graph\nc seed {seed}\n{}", vcover::write_graph(&g));
            write_output(output.as_deref(), &text, out)?;
        }
    }
    Ok(0)
}

fn cmd_bench(a: &BenchArgs, seed: u64, out: &mut dyn Write) -> CmdResult {
    let spec = BenchSpec {
        n: a.n,
        clause_counts: a.clause_counts.clone(),
        instances_per_level: a.instances,
        k: a.k,
        draws: a.draws,
        seed,
    };
    let rows = bench_corpus(&spec).map_err(input_err)?;
    writeln!(out, "# seed {seed}")?;
    writeln!(out, "{}", BenchRow::CSV_HEADER)?;
    for row in &rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    for (m, log_eps, work) in level_summary(&spec, &rows) {
        info!("m = {m}: mean log2 eps {log_eps:.3}, mean rejection work {work:.1}");
    }
    Ok(0)
}
