use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twofactor::graph::{
    complete_bipartite, from_edge_list, from_graph6, to_edge_list, to_graph6, two_kk_join_complement, wheel, Graph,
    GraphError,
};
use twofactor::invariants::{connectivity, independence_number, sigma_m, sigma_t_m};
use twofactor::solver::{
    exact_cycle_packing, exact_two_factor, two_factor_via_proof, ProofResult, SolverError, StartMode,
};
use twofactor::theorem::{
    enumerated_corpus, read_graph6_corpus, sharpness_suite, verify_corpus_with, TheoremError, TheoremId,
    TheoremInstance, VerifyOptions,
};

#[derive(Parser)]
#[command(name = "twofactor", version, about = "2-factors with exactly k cycles: invariants, solvers, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, κ, α, δ and degree-sum invariants.
    Invariants {
        /// graph6 string or a file (graph6 or edge list)
        input: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Find a 2-factor with exactly k cycles.
    Solve {
        input: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Start::ExactMax)]
        start: Start,
        /// connectivity parameter for the proof engine (default κ)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        trace: bool,
    },
    /// Find k disjoint cycles.
    Pack {
        input: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_order: bool,
    },
    /// Check a theorem on every graph of a corpus.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
        corpus: Option<PathBuf>,
        #[arg(long)]
        enumerate: Option<usize>,
        #[arg(long, requires = "enumerate")]
        connected: bool,
        #[arg(long)]
        thorough: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// write one JSON object per report
        #[arg(long)]
        json: Option<PathBuf>,
        /// write the summary counts as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the extremal-example checks.
    Sharpness,
    /// Print a named graph.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        graph6: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Proof,
}

#[derive(Clone, Copy, ValueEnum)]
enum Start {
    Greedy,
    ExactMax,
}

#[derive(Subcommand)]
enum Family {
    /// K_{a,b}
    Kab { a: usize, b: usize },
    /// hub plus a cycle on n − 1 vertices
    Wheel { n: usize },
    /// 2K_k joined to k independent vertices
    Kky { k: usize },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let capacity = match self {
            CliError::Graph(GraphError::Capacity(_)) | CliError::Solver(SolverError::Capacity(_)) => true,
            CliError::Theorem(e) => e.is_capacity(),
            _ => false,
        };
        if capacity {
            3
        } else {
            2
        }
    }
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    let path = Path::new(input);
    if !path.is_file() {
        return Ok(from_graph6(input.trim())?);
    }
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    match from_graph6(first) {
        Ok(g) if !first.contains(char::is_whitespace) => Ok(g),
        _ => Ok(from_edge_list(&text)?),
    }
}

fn print_cycles(sys: &twofactor::cycles::CycleSystem) {
    print!("{sys}");
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Invariants { input, t, m } => {
            let g = load_graph(&input)?;
            println!("n      {}", g.order());
            println!("edges  {}", g.size());
            println!("kappa  {}", connectivity(&g));
            println!("alpha  {}", independence_number(&g));
            println!("delta  {}", if g.order() == 0 { 0 } else { g.min_degree() });
            println!("sigma2 {}", sigma_m(&g, 2));
            if let Some(m) = m {
                println!("sigma{m} {}", sigma_m(&g, m));
                let t = t.unwrap_or(2);
                match sigma_t_m(&g, t, m) {
                    Ok(v) => println!("sigma{t}^{m} {v}"),
                    Err(e) => {
                        eprintln!("{e}");
                        return Ok(2);
                    }
                }
            }
            Ok(0)
        }
        Command::Solve { input, k, mode, start, m, trace } => {
            let g = load_graph(&input)?;
            match mode {
                Mode::Exact => match exact_two_factor(&g, k)? {
                    Some(f) => print!("{f}"),
                    None => println!("none"),
                },
                Mode::Proof => {
                    let m = m.unwrap_or_else(|| connectivity(&g));
                    let start = match start {
                        Start::Greedy => StartMode::Greedy,
                        Start::ExactMax => StartMode::ExactMax,
                    };
                    let run = two_factor_via_proof(&g, m, k, start)?;
                    if trace {
                        for r in &run.rounds {
                            eprintln!("{r}");
                        }
                    }
                    match run.result {
                        ProofResult::Factor(f) => print!("{f}"),
                        ProofResult::Refuted { witness, delta2, required } => {
                            println!("refuted: independent set {witness:?} has Δ2 = {delta2} < n = {required}")
                        }
                        ProofResult::NoPacking => println!("none: no {k} disjoint cycles"),
                        ProofResult::NotMaximal { evidence } => println!("stuck: {evidence}"),
                    }
                }
            }
            Ok(0)
        }
        Command::Pack { input, k, max_order } => {
            let g = load_graph(&input)?;
            match exact_cycle_packing(&g, k, max_order)? {
                Some(sys) => {
                    print_cycles(&sys);
                    println!("order {}", sys.total_order());
                }
                None => println!("none"),
            }
            Ok(0)
        }
        Command::Verify { theorem, k, m, corpus, enumerate, connected, thorough, jobs, json, csv } => {
            let graphs = match (corpus, enumerate) {
                (Some(path), _) => {
                    let f = File::open(&path).map_err(io_err(&path))?;
                    read_graph6_corpus(BufReader::new(f))?
                }
                (None, Some(n)) => enumerated_corpus(n, connected)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            let mut inst = TheoremInstance::new(theorem, k);
            inst.m = m;
            let opts = VerifyOptions { thorough, jobs };
            let mut out = match &json {
                Some(p) => Some(BufWriter::new(File::create(p).map_err(io_err(p))?)),
                None => None,
            };
            let summary = verify_corpus_with(&graphs, &inst, &opts, |r| {
                if let Some(w) = out.as_mut() {
                    serde_json::to_writer(&mut *w, r)?;
                    w.write_all(b"\n")?;
                }
                Ok(())
            })?;
            if let (Some(w), Some(p)) = (out.as_mut(), &json) {
                w.flush().map_err(io_err(p))?;
            }
            if let Some(p) = &csv {
                summary.write_csv(File::create(p).map_err(io_err(p))?)?;
            }
            println!("{summary}");
            for r in &summary.counterexamples {
                println!("{r}");
            }
            for s in &summary.skipped {
                println!("skipped #{} {}: {}", s.index, s.graph, s.reason);
            }
            for f in &summary.implication_failures {
                println!("implication failure {f}");
            }
            if summary.counterexample_count() > 0 || !summary.implication_failures.is_empty() {
                Ok(1)
            } else if !summary.skipped.is_empty() {
                Ok(3)
            } else {
                Ok(0)
            }
        }
        Command::Sharpness => {
            let rows = sharpness_suite()?;
            for r in &rows {
                println!("{r}");
            }
            Ok(if rows.iter().all(|r| r.pass) { 0 } else { 1 })
        }
        Command::Generate { family, graph6 } => {
            let g = match family {
                Family::Kab { a, b } => complete_bipartite(a, b),
                Family::Wheel { n } => wheel(n)?,
                Family::Kky { k } => two_kk_join_complement(k),
            };
            if graph6 {
                println!("{}", to_graph6(&g));
            } else {
                print!("{}", to_edge_list(&g));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
