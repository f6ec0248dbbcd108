//! Insertible vertices and the constructions built on them: splicing a path
//! of insertible vertices into a disjoint system, locating the first
//! non-insertible vertex of a segment, the crossing certificate for
//! order-maximal systems, and the long-cycle constructor for paths whose
//! endpoints have a large degree sum.

use std::fmt;

use thiserror::Error;

use crate::cycles::{CycleSystem, Member, OrientedCycle, OrientedPath};
use crate::graph::{Graph, Vertex};
use crate::solver::ProofContext;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("vertex {0} lies on the system")]
    OnSystem(Vertex),
    #[error("vertex {0} is not insertible")]
    NotInsertible(Vertex),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

/// Where `x` can be spliced: the lowest member index, then the edge (w, w⁺)
/// with smallest w, such that x is adjacent to both ends.
pub(crate) fn insertion_site(g: &Graph, sys: &CycleSystem, x: Vertex) -> Option<(usize, Vertex, Vertex)> {
    sys.members().iter().enumerate().find_map(|(i, m)| {
        m.edges()
            .into_iter()
            .filter(|&(w, w1)| g.has_edge(x, w) && g.has_edge(x, w1))
            .min_by_key(|&(w, _)| w)
            .map(|(w, w1)| (i, w, w1))
    })
}

/// True iff some member has consecutive vertices both adjacent to `x`.
pub fn is_insertible(g: &Graph, sys: &CycleSystem, x: Vertex) -> Result<bool, InsertionError> {
    if sys.covers(x) {
        return Err(InsertionError::OnSystem(x));
    }
    Ok(insertion_site(g, sys, x).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionStep {
    /// The inserted subpath u → v of the input path.
    pub inserted: Vec<Vertex>,
    pub member: usize,
    /// The replaced edge (w, w⁺) of that member.
    pub edge: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionTrace {
    pub steps: Vec<InsertionStep>,
    pub result: CycleSystem,
}

impl fmt::Display for InsertionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            let seg: Vec<String> = s.inserted.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "step {}: insert [{}] into member {} between {} and {}",
                k + 1,
                seg.join(" "),
                s.member,
                s.edge.0,
                s.edge.1
            )?;
        }
        Ok(())
    }
}

fn splice(member: &Member, w: Vertex, segment: &[Vertex]) -> Member {
    let vs = member.vertices();
    let pos = vs.iter().position(|&v| v == w).expect("w on member");
    let mut out = Vec::with_capacity(vs.len() + segment.len());
    out.extend_from_slice(&vs[..=pos]);
    out.extend_from_slice(segment);
    out.extend_from_slice(&vs[pos + 1..]);
    match member {
        Member::Cycle(_) => Member::Cycle(OrientedCycle::new(out).expect("splice keeps a cycle")),
        Member::Path(_) => Member::Path(OrientedPath::new(out).expect("splice keeps a path")),
    }
}

/// Splices every vertex of `p` into the members of `sys`, keeping the number
/// of cycles and of paths.
///
/// Repeatedly: u is the first remaining vertex of `p`; (w, w⁺) is its
/// insertion site; v is the last remaining vertex adjacent to both w and w⁺;
/// the subpath u → v replaces the edge (w, w⁺).
pub fn insert_path(g: &Graph, sys: &CycleSystem, p: &OrientedPath) -> Result<InsertionTrace, InsertionError> {
    for &x in p.vertices() {
        if x >= g.order() {
            return Err(InsertionError::InvalidPath(format!("vertex {x} out of range")));
        }
        if sys.covers(x) {
            return Err(InsertionError::OnSystem(x));
        }
    }
    if let Some((u, v)) = p.missing_edge(g) {
        return Err(InsertionError::InvalidPath(format!("({u}, {v}) is not an edge")));
    }
    for &x in p.vertices() {
        if insertion_site(g, sys, x).is_none() {
            return Err(InsertionError::NotInsertible(x));
        }
    }

    let mut current = sys.clone();
    let mut rest: &[Vertex] = p.vertices();
    let mut steps = Vec::new();
    while let Some(&u) = rest.first() {
        let (member, w, w1) = insertion_site(g, &current, u).ok_or(InsertionError::NotInsertible(u))?;
        let last = rest.iter().rposition(|&z| g.has_edge(z, w) && g.has_edge(z, w1)).expect("u itself qualifies");
        let inserted = rest[..=last].to_vec();
        current = current.with_member(member, splice(current.member(member), w, &inserted));
        steps.push(InsertionStep { inserted, member, edge: (w, w1) });
        rest = &rest[last + 1..];
        if let Some(&z) = rest.iter().find(|&&z| insertion_site(g, &current, z).is_none()) {
            return Err(InsertionError::Invariant(format!("vertex {z} stopped being insertible after a splice")));
        }
    }
    Ok(InsertionTrace { steps, result: current })
}

/// The first vertex of `seg`, in path order, that is not insertible for
/// `rest`; `None` when every vertex is insertible. With an empty `rest`
/// nothing is insertible and the answer is the first vertex.
pub fn first_non_insertible(g: &Graph, rest: &CycleSystem, seg: &OrientedPath) -> Option<Vertex> {
    seg.vertices().iter().copied().find(|&x| insertion_site(g, rest, x).is_none())
}

/// The two clauses checked for a pair (x, x′): (i) x and x′ non-adjacent;
/// (ii) d(x; H ∪ C₁) + d(x′; H ∪ C₁) ≤ |H ∪ C₁| − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingCertificate {
    pub x: Vertex,
    pub xprime: Vertex,
    pub adjacent: bool,
    pub degree_sum: usize,
    pub limit: usize,
}

impl CrossingCertificate {
    pub fn non_adjacent(&self) -> bool {
        !self.adjacent
    }

    pub fn degree_bound(&self) -> bool {
        self.degree_sum <= self.limit
    }

    pub fn holds(&self) -> bool {
        self.non_adjacent() && self.degree_bound()
    }
}

impl fmt::Display for CrossingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            return write!(f, "holds for ({}, {})", self.x, self.xprime);
        }
        let mut parts = Vec::new();
        if self.adjacent {
            parts.push(format!("edge ({}, {}) present", self.x, self.xprime));
        }
        if !self.degree_bound() {
            parts.push(format!("degree sum {} > {}", self.degree_sum, self.limit));
        }
        write!(f, "counterexample: {}", parts.join("; "))
    }
}

/// Evaluates the crossing clauses for x on a segment prefix u_i⁺ → x_i (in
/// either orientation of C₁) and x′ ∈ {x₀} ∪ {u_j⁺ : j ≠ i}.
pub fn crossing_certificate(
    g: &Graph,
    sys: &CycleSystem,
    ctx: &ProofContext,
    x: Vertex,
    xprime: Vertex,
) -> Result<CrossingCertificate, InsertionError> {
    if x == xprime {
        return Err(InsertionError::InvalidArgument(format!("x = x' = {x}")));
    }
    if !ctx.is_crossing_pair(x, xprime) {
        return Err(InsertionError::InvalidArgument(format!(
            "({x}, {xprime}) is not a segment-prefix vertex paired with x0 or another segment start"
        )));
    }
    let mut h_c1: Vec<Vertex> = ctx.remainder.clone();
    h_c1.extend_from_slice(sys.member(ctx.c1).vertices());
    Ok(CrossingCertificate {
        x,
        xprime,
        adjacent: g.has_edge(x, xprime),
        degree_sum: g.degree_into(x, &h_c1) + g.degree_into(xprime, &h_c1),
        limit: h_c1.len() - 1,
    })
}

/// Builds a cycle of order at least |p| from an (x, y)-path `p` with
/// |p| ≥ 3 and d(x) + d(y) ≥ n.
///
/// A crossing pair (v, v⁺) on p with yv, xv⁺ ∈ E closes a cycle through all
/// of p (an edge xy is the crossing at the last position). Without any
/// crossing, |N_p(x)| + |N_p(y)| ≤ |p| − 1, so x and y share a neighbor off
/// p, which closes a cycle of order |p| + 1.
pub fn cycle_from_degree_rich_path(g: &Graph, p: &OrientedPath) -> Result<OrientedCycle, InsertionError> {
    let vs = p.vertices();
    if vs.len() < 3 {
        return Err(InsertionError::InvalidArgument(format!("path of order {} < 3", vs.len())));
    }
    if let Some((u, v)) = p.missing_edge(g) {
        return Err(InsertionError::InvalidPath(format!("({u}, {v}) is not an edge")));
    }
    let (x, y) = (p.first(), p.last());
    let n = g.order();
    if g.degree(x) + g.degree(y) < n {
        return Err(InsertionError::Precondition(format!("d({x}) + d({y}) = {} < n = {n}", g.degree(x) + g.degree(y))));
    }
    for i in 0..vs.len() - 1 {
        if g.has_edge(y, vs[i]) && g.has_edge(x, vs[i + 1]) {
            let mut cyc: Vec<Vertex> = vs[..=i].to_vec();
            cyc.extend(vs[i + 1..].iter().rev());
            return Ok(OrientedCycle::new(cyc).expect("distinct path vertices"));
        }
    }
    let mut on_path = vec![false; n];
    for &v in vs {
        on_path[v] = true;
    }
    if let Some(&z) = g.neighbors(x).iter().find(|&&z| !on_path[z] && g.has_edge(y, z)) {
        let mut cyc = vs.to_vec();
        cyc.push(z);
        return Ok(OrientedCycle::new(cyc).expect("z is off the path"));
    }
    if n <= LONGEST_CYCLE_FALLBACK_ORDER {
        if let Some(c) = longest_cycle(g).filter(|c| c.len() >= vs.len()) {
            return Ok(c);
        }
    }
    Err(InsertionError::Invariant(format!("no cycle of order ≥ {} found although d(x) + d(y) ≥ n", vs.len())))
}

/// Order bound for the exhaustive longest-cycle fallback.
pub const LONGEST_CYCLE_FALLBACK_ORDER: usize = 14;

/// A longest cycle by exhaustive search; `None` for forests.
pub fn longest_cycle(g: &Graph) -> Option<OrientedCycle> {
    fn extend(g: &Graph, path: &mut Vec<Vertex>, used: &mut [bool], best: &mut Vec<Vertex>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, start) && path.len() > best.len() {
            *best = path.clone();
        }
        for &w in g.neighbors(last) {
            if w > start && !used[w] {
                used[w] = true;
                path.push(w);
                extend(g, path, used, best);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut best = Vec::new();
    let mut used = vec![false; g.order()];
    for s in 0..g.order() {
        if g.order() - s <= best.len() {
            break;
        }
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut best);
        used[s] = false;
    }
    OrientedCycle::new(best).ok()
}
