//! Hypothesis and conclusion checkers for the hamiltonicity and 2-factor
//! theorems, corpus sweeps, and the sharpness witnesses.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    complete_bipartite, enumerate_nonisomorphic, from_graph6, to_graph6, two_kk_join_complement, wheel, Graph,
    GraphError,
};
use crate::invariants::{connectivity, independence_number, sigma_m, sigma_t_m, ExtendedValue};
use crate::solver::{exact_cycle_packing, exact_two_factor, SolverError};

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("{graph}: {source}")]
    Solver { graph: String, source: SolverError },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {source}")]
    Corpus { line: usize, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl TheoremError {
    pub fn is_capacity(&self) -> bool {
        matches!(self, TheoremError::Solver { source: SolverError::Capacity(_), .. })
            || matches!(self, TheoremError::Graph(GraphError::Capacity(_)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Ore,
    ChvatalErdos,
    Bondy,
    Yamashita,
    Brandt,
    Main,
    Ce2f,
    Bondy2f,
    Partition,
    Corollary8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Ore,
        TheoremId::ChvatalErdos,
        TheoremId::Bondy,
        TheoremId::Yamashita,
        TheoremId::Brandt,
        TheoremId::Main,
        TheoremId::Ce2f,
        TheoremId::Bondy2f,
        TheoremId::Partition,
        TheoremId::Corollary8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Ore => "ore",
            TheoremId::ChvatalErdos => "chvatal-erdos",
            TheoremId::Bondy => "bondy",
            TheoremId::Yamashita => "yamashita",
            TheoremId::Brandt => "brandt",
            TheoremId::Main => "main",
            TheoremId::Ce2f => "ce-2f",
            TheoremId::Bondy2f => "bondy-2f",
            TheoremId::Partition => "partition",
            TheoremId::Corollary8 => "corollary8",
        }
    }

    /// Conclusion is a hamilton cycle; k is fixed to 1.
    pub fn is_hamiltonian(self) -> bool {
        matches!(self, TheoremId::Ore | TheoremId::ChvatalErdos | TheoremId::Bondy | TheoremId::Yamashita)
    }

    /// The hypothesis depends on a connectivity parameter m.
    pub fn uses_m(self) -> bool {
        matches!(
            self,
            TheoremId::Bondy
                | TheoremId::Yamashita
                | TheoremId::Main
                | TheoremId::Bondy2f
                | TheoremId::Partition
                | TheoremId::Corollary8
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
            TheoremError::InvalidArgument(format!("unknown theorem '{s}' (expected one of {})", names.join(", ")))
        })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A theorem applied with a cycle count and an optional connectivity
/// parameter (κ(G) when `None`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub k: usize,
    pub m: Option<usize>,
}

impl TheoremInstance {
    pub fn new(theorem: TheoremId, k: usize) -> Self {
        TheoremInstance { theorem, k, m: None }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    fn effective_k(&self) -> usize {
        if self.theorem.is_hamiltonian() {
            1
        } else {
            self.k
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Consistent,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub graph: String,
    pub theorem: TheoremId,
    pub k: usize,
    pub m: Option<usize>,
    pub n: usize,
    pub kappa: usize,
    pub alpha: usize,
    pub sigma: BTreeMap<String, ExtendedValue>,
    pub hypothesis: Vec<Clause>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub status: Status,
}

impl TheoremReport {
    pub fn failing_clause(&self) -> Option<&Clause> {
        self.hypothesis.iter().find(|c| !c.holds)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.hypothesis.iter().find(|c| c.name == name)
    }

    pub fn is_counterexample(&self) -> bool {
        self.status == Status::Counterexample
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} k={}", self.graph, self.theorem, self.k)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        write!(f, " n={} κ={} α={}", self.n, self.kappa, self.alpha)?;
        for (name, v) in &self.sigma {
            write!(f, " {name}={v}")?;
        }
        let hyp = match self.failing_clause() {
            None => "holds".to_string(),
            Some(c) => format!("fails ({}: {})", c.name, c.detail),
        };
        let status = match self.status {
            Status::Consistent => "consistent",
            Status::Counterexample => "COUNTEREXAMPLE",
        };
        write!(
            f,
            " | hypothesis {hyp} | conclusion {} | {status}",
            if self.conclusion_holds { "holds" } else { "fails" }
        )
    }
}

fn clause(name: &'static str, holds: bool, detail: String) -> Clause {
    Clause { name, holds, detail }
}

fn order_clause(n: usize, bound: usize) -> Clause {
    clause("order", n >= bound, format!("n = {n} ≥ {bound}"))
}

fn connectivity_clause(m: usize, kappa: usize) -> Clause {
    clause("connectivity", m >= 1 && kappa >= m, format!("1 ≤ m = {m} ≤ κ = {kappa}"))
}

/// σ₂^{⌈m/k⌉+1} ≥ n.
fn yamashita_degree(g: &Graph, k: usize, m: usize, sigma: &mut BTreeMap<String, ExtendedValue>) -> Clause {
    let n = g.order();
    if m == 0 {
        return clause("degree", false, "σ₂^{⌈m/k⌉+1} needs m ≥ 1".into());
    }
    let top = m.div_ceil(k) + 1;
    let v = sigma_t_m(g, 2, top).expect("2 ≤ top");
    sigma.insert(format!("sigma_2^{top}"), v);
    clause("degree", v.at_least(n as u64), format!("σ₂^{top} = {v} ≥ {n}"))
}

/// 2·σ_{⌈m/k⌉+1} > (⌈m/k⌉+1)(n−1).
fn bondy_degree(g: &Graph, k: usize, m: usize, sigma: &mut BTreeMap<String, ExtendedValue>) -> Clause {
    let n = g.order();
    let t = m.div_ceil(k) + 1;
    let v = sigma_m(g, t);
    sigma.insert(format!("sigma_{t}"), v);
    let rhs = (t * n.saturating_sub(1)) as u64;
    clause("degree", v.scaled_exceeds(2, rhs), format!("2·σ_{t} = 2·{v} > {rhs}"))
}

fn solver_err(g: &Graph) -> impl Fn(SolverError) -> TheoremError + '_ {
    move |source| TheoremError::Solver { graph: to_graph6(g), source }
}

/// Evaluates every hypothesis clause and the conclusion of `inst` on `g`.
pub fn check_theorem(g: &Graph, inst: &TheoremInstance) -> Result<TheoremReport, TheoremError> {
    let n = g.order();
    if n == 0 {
        return Err(TheoremError::InvalidArgument("graph must be nonempty".into()));
    }
    let k = inst.effective_k();
    if k == 0 {
        return Err(TheoremError::InvalidArgument("k must be positive".into()));
    }
    let kappa = connectivity(g);
    let alpha = independence_number(g);
    let theorem = inst.theorem;
    let m = theorem.uses_m().then(|| inst.m.unwrap_or(kappa));
    let mm = m.unwrap_or(0);
    let mut sigma = BTreeMap::new();
    let mut hyp = Vec::new();
    match theorem {
        TheoremId::Ore => {
            hyp.push(order_clause(n, 3));
            let s2 = sigma_m(g, 2);
            sigma.insert("sigma_2".into(), s2);
            hyp.push(clause("degree", s2.at_least(n as u64), format!("σ₂ = {s2} ≥ {n}")));
        }
        TheoremId::ChvatalErdos => {
            hyp.push(order_clause(n, 3));
            hyp.push(clause("independence", alpha <= kappa, format!("α = {alpha} ≤ κ = {kappa}")));
        }
        TheoremId::Bondy => {
            hyp.push(order_clause(n, 3));
            hyp.push(connectivity_clause(mm, kappa));
            hyp.push(bondy_degree(g, 1, mm, &mut sigma));
        }
        TheoremId::Yamashita => {
            hyp.push(order_clause(n, 3));
            hyp.push(connectivity_clause(mm, kappa));
            hyp.push(yamashita_degree(g, 1, mm, &mut sigma));
        }
        TheoremId::Brandt => {
            hyp.push(order_clause(n, 4 * k - 1));
            let s2 = sigma_m(g, 2);
            sigma.insert("sigma_2".into(), s2);
            hyp.push(clause("degree", s2.at_least(n as u64), format!("σ₂ = {s2} ≥ {n}")));
        }
        TheoremId::Main => {
            hyp.push(order_clause(n, 5 * k - 2));
            hyp.push(connectivity_clause(mm, kappa));
            hyp.push(yamashita_degree(g, k, mm, &mut sigma));
        }
        TheoremId::Ce2f => {
            hyp.push(order_clause(n, 5 * k - 2));
            let bound = kappa.div_ceil(k);
            hyp.push(clause("independence", alpha <= bound, format!("α = {alpha} ≤ ⌈κ/k⌉ = {bound}")));
        }
        TheoremId::Bondy2f | TheoremId::Corollary8 => {
            let bound = if theorem == TheoremId::Bondy2f { 5 * k - 2 } else { 4 * k - 1 };
            hyp.push(order_clause(n, bound));
            hyp.push(connectivity_clause(mm, kappa));
            hyp.push(bondy_degree(g, k, mm, &mut sigma));
        }
        TheoremId::Partition => {
            hyp.push(connectivity_clause(mm, kappa));
            let packs =
                if n >= 3 * k { exact_cycle_packing(g, k, false).map_err(solver_err(g))?.is_some() } else { false };
            hyp.push(clause("packing", packs, format!("{k} disjoint cycles exist")));
            hyp.push(yamashita_degree(g, k, mm, &mut sigma));
        }
    }
    let hypothesis_holds = hyp.iter().all(|c| c.holds);
    let conclusion_holds = exact_two_factor(g, k).map_err(solver_err(g))?.is_some();
    let status = if hypothesis_holds && !conclusion_holds { Status::Counterexample } else { Status::Consistent };
    Ok(TheoremReport {
        graph: to_graph6(g),
        theorem,
        k,
        m,
        n,
        kappa,
        alpha,
        sigma,
        hypothesis: hyp,
        hypothesis_holds,
        conclusion_holds,
        status,
    })
}

/// Whether the Bondy-type degree clause implies the Yamashita-type clause
/// on `g` for these k, m; `None` when it does (or is not triggered).
pub fn degree_implication_failure(g: &Graph, k: usize, m: usize) -> Option<String> {
    if m == 0 || k == 0 {
        return None;
    }
    let mut scratch = BTreeMap::new();
    let bondy = bondy_degree(g, k, m, &mut scratch);
    if !bondy.holds {
        return None;
    }
    let yam = yamashita_degree(g, k, m, &mut scratch);
    (!yam.holds).then(|| format!("{}: k={k} m={m}: {} but not {}", to_graph6(g), bondy.detail, yam.detail))
}

/// Reads one graph6 string per line; blank lines and `>>graph6<<` headers
/// are skipped.
pub fn read_graph6_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>, TheoremError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let g = from_graph6(t).map_err(|source| TheoremError::Corpus { line: i + 1, source })?;
        out.push(g);
    }
    Ok(out)
}

/// Every (connected) graph of order `n` up to isomorphism.
pub fn enumerated_corpus(n: usize, connected: bool) -> Result<Vec<Graph>, TheoremError> {
    Ok(enumerate_nonisomorphic(n, connected)?)
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Check every m from 1 to κ(G) rather than only m = κ(G).
    pub thorough: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub index: usize,
    pub graph: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub theorem: String,
    pub k: usize,
    pub graphs: usize,
    pub reports: usize,
    pub hypothesis_holds: usize,
    pub conclusion_holds: usize,
    pub counterexamples: Vec<TheoremReport>,
    pub skipped: Vec<Skipped>,
    pub implication_failures: Vec<String>,
}

impl VerifySummary {
    pub fn counterexample_count(&self) -> usize {
        self.counterexamples.len()
    }

    /// Writes the counts as a two-line CSV table.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), TheoremError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record([
            "theorem",
            "k",
            "graphs",
            "reports",
            "hypothesis_holds",
            "conclusion_holds",
            "counterexamples",
            "skipped",
            "implication_failures",
        ])?;
        out.write_record([
            self.theorem.clone(),
            self.k.to_string(),
            self.graphs.to_string(),
            self.reports.to_string(),
            self.hypothesis_holds.to_string(),
            self.conclusion_holds.to_string(),
            self.counterexamples.len().to_string(),
            self.skipped.len().to_string(),
            self.implication_failures.len().to_string(),
        ])?;
        out.flush()?;
        Ok(())
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem            {} (k = {})", self.theorem, self.k)?;
        writeln!(f, "graphs             {}", self.graphs)?;
        writeln!(f, "reports            {}", self.reports)?;
        writeln!(f, "hypothesis holds   {}", self.hypothesis_holds)?;
        writeln!(f, "conclusion holds   {}", self.conclusion_holds)?;
        writeln!(f, "counterexamples    {}", self.counterexamples.len())?;
        writeln!(f, "capacity skipped   {}", self.skipped.len())?;
        write!(f, "implication fails  {}", self.implication_failures.len())
    }
}

struct GraphOutcome {
    reports: Vec<TheoremReport>,
    skipped: Option<String>,
    implication: Vec<String>,
}

fn check_one(g: &Graph, inst: &TheoremInstance, opts: &VerifyOptions) -> Result<GraphOutcome, TheoremError> {
    let k = inst.effective_k();
    let ms: Vec<Option<usize>> = if !inst.theorem.uses_m() {
        vec![None]
    } else if let Some(m) = inst.m {
        vec![Some(m)]
    } else if opts.thorough {
        (1..=connectivity(g).max(1)).map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = GraphOutcome { reports: Vec::new(), skipped: None, implication: Vec::new() };
    for m in ms {
        let one = TheoremInstance { m, ..*inst };
        match check_theorem(g, &one) {
            Ok(r) => {
                if let Some(mm) = r.m.or(Some(r.kappa)) {
                    out.implication.extend(degree_implication_failure(g, k, mm));
                }
                out.reports.push(r);
            }
            Err(e) if e.is_capacity() => {
                out.skipped = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

const CHUNK: usize = 2048;

/// Checks `inst` on every graph, in parallel, calling `sink` on each report
/// in input order. Capacity failures are counted, not fatal.
pub fn verify_corpus_with<F>(
    graphs: &[Graph],
    inst: &TheoremInstance,
    opts: &VerifyOptions,
    mut sink: F,
) -> Result<VerifySummary, TheoremError>
where
    F: FnMut(&TheoremReport) -> Result<(), TheoremError>,
{
    let pool = match opts.jobs {
        Some(j) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| TheoremError::InvalidArgument(e.to_string()))?,
        ),
        None => None,
    };
    let mut summary = VerifySummary {
        theorem: inst.theorem.to_string(),
        k: inst.effective_k(),
        graphs: graphs.len(),
        ..VerifySummary::default()
    };
    for (c, chunk) in graphs.chunks(CHUNK).enumerate() {
        let work = || -> Vec<Result<GraphOutcome, TheoremError>> {
            chunk.par_iter().map(|g| check_one(g, inst, opts)).collect()
        };
        let outcomes = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        for (j, o) in outcomes.into_iter().enumerate() {
            let o = o?;
            let index = c * CHUNK + j;
            if let Some(reason) = o.skipped {
                summary.skipped.push(Skipped { index, graph: to_graph6(&graphs[index]), reason });
            }
            summary.implication_failures.extend(o.implication);
            for r in o.reports {
                summary.reports += 1;
                summary.hypothesis_holds += usize::from(r.hypothesis_holds);
                summary.conclusion_holds += usize::from(r.conclusion_holds);
                sink(&r)?;
                if r.is_counterexample() {
                    summary.counterexamples.push(r);
                }
            }
        }
    }
    Ok(summary)
}

pub fn verify_corpus(
    graphs: &[Graph],
    inst: &TheoremInstance,
    opts: &VerifyOptions,
) -> Result<VerifySummary, TheoremError> {
    verify_corpus_with(graphs, inst, opts, |_| Ok(()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessRow {
    pub graph: String,
    pub claim: String,
    pub pass: bool,
}

impl fmt::Display for SharpnessRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} {}: {}", self.graph, self.claim, if self.pass { "PASS" } else { "FAIL" })
    }
}

fn has_any_two_factor(g: &Graph) -> Result<bool, SolverError> {
    for k in 1..=g.order() / 3 {
        if exact_two_factor(g, k)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The extremal examples: unbalanced complete bipartite graphs, K₃,₃,
/// wheels, and 2K₃ ∨ K̄₃.
pub fn sharpness_suite() -> Result<Vec<SharpnessRow>, SolverError> {
    let mut rows = Vec::new();
    for (a, b) in [(3, 4), (4, 5)] {
        let g = complete_bipartite(a, b);
        rows.push(SharpnessRow {
            graph: format!("K{a},{b}"),
            claim: "no 2-factor".into(),
            pass: !has_any_two_factor(&g)?,
        });
    }
    let k33 = complete_bipartite(3, 3);
    rows.push(SharpnessRow {
        graph: "K3,3".into(),
        claim: "hamiltonian".into(),
        pass: exact_two_factor(&k33, 1)?.is_some(),
    });
    rows.push(SharpnessRow {
        graph: "K3,3".into(),
        claim: "no 2-factor with 2 cycles".into(),
        pass: exact_two_factor(&k33, 2)?.is_none(),
    });
    for n in [5, 6] {
        let w = wheel(n).expect("n ≥ 4");
        rows.push(SharpnessRow {
            graph: format!("wheel({n})"),
            claim: "no 2 disjoint cycles".into(),
            pass: exact_cycle_packing(&w, 2, false)?.is_none(),
        });
    }
    let j = two_kk_join_complement(3);
    rows.push(SharpnessRow {
        graph: "2K3+co-K3".into(),
        claim: "no 3 disjoint cycles".into(),
        pass: exact_cycle_packing(&j, 3, false)?.is_none(),
    });
    Ok(rows)
}
