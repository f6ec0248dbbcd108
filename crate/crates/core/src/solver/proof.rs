use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::cycles::{CycleSystem, Member, OrientedCycle, OrientedPath};
use crate::graph::{Graph, Vertex};
use crate::insertion::{cycle_from_degree_rich_path, insert_path, insertion_site};
use crate::invariants::delta_t;

use super::exact::{exact_cycle_packing, greedy_cycle_packing, TwoFactor};
use super::SolverError;

/// C₁ read in one direction, with the chosen attachments in the order they
/// appear along it and the segments between consecutive attachments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub cycle: Vec<Vertex>,
    pub attachments: Vec<Vertex>,
    /// `segments[i]` runs from u_i⁺ to u_{i+1}⁻; empty when u_i⁺ = u_{i+1}.
    pub segments: Vec<Vec<Vertex>>,
    /// First vertex of each segment not insertible into C₂ … C_k.
    pub first_non_insertible: Vec<Option<Vertex>>,
}

impl Orientation {
    fn new(g: &Graph, rest: &CycleSystem, cycle: Vec<Vertex>, attachments: Vec<Vertex>) -> Self {
        let l = attachments.len();
        let segments: Vec<Vec<Vertex>> = (0..l)
            .map(|i| {
                let arc = arc(&cycle, attachments[i], attachments[(i + 1) % l]);
                arc[1..arc.len() - 1].to_vec()
            })
            .collect();
        let first_non_insertible =
            segments.iter().map(|s| s.iter().copied().find(|&x| insertion_site(g, rest, x).is_none())).collect();
        Orientation { cycle, attachments, segments, first_non_insertible }
    }

    /// u_i⁺ → x_i, or the whole segment when every vertex is insertible.
    pub fn prefix(&self, i: usize) -> &[Vertex] {
        let seg = &self.segments[i];
        match self.first_non_insertible[i] {
            Some(x) => &seg[..=seg.iter().position(|&v| v == x).unwrap()],
            None => seg,
        }
    }

    fn successor(&self, v: Vertex) -> Vertex {
        let p = self.cycle.iter().position(|&w| w == v).unwrap();
        self.cycle[(p + 1) % self.cycle.len()]
    }
}

/// The vertices from `from` to `to` inclusive, walking forward along
/// `cycle` (read cyclically).
fn arc(cycle: &[Vertex], from: Vertex, to: Vertex) -> Vec<Vertex> {
    let len = cycle.len();
    let start = cycle.iter().position(|&v| v == from).expect("from on cycle");
    let mut out = Vec::new();
    for step in 0..len {
        let v = cycle[(start + step) % len];
        out.push(v);
        if v == to {
            return out;
        }
    }
    panic!("{to} not on cycle");
}

/// Everything the augmentation argument fixes about a non-spanning system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofContext {
    pub k: usize,
    pub m: usize,
    /// ⌈m/k⌉.
    pub l: usize,
    /// H: the uncovered vertices.
    pub remainder: Vec<Vertex>,
    /// H₀: the component of H with the smallest vertex.
    pub component: Vec<Vertex>,
    pub x0: Vertex,
    /// Index of C₁ in the system.
    pub c1: usize,
    /// Indices of C₂ … C_k.
    pub rest: Vec<usize>,
    pub forward: Orientation,
    /// C₁ reversed; attachments u₁, u_L, …, u₂.
    pub backward: Orientation,
    /// Q_i from u_i to x₀, for each attachment in forward order.
    pub q_paths: Vec<Vec<Vertex>>,
    q_pairs: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
    /// {x₀} ∪ {u_i⁺}.
    pub x_set: Vec<Vertex>,
    /// {x₀, x₁} ∪ {u_i⁻ : i ≥ 2}, with x₁ the first non-insertible vertex
    /// walking backward from u₁⁻; `None` when that walk finds none.
    pub y_set: Option<Vec<Vertex>>,
}

impl ProofContext {
    /// u₁ … u_L in forward order (L = max(l, 2)).
    pub fn attachments(&self) -> &[Vertex] {
        &self.forward.attachments
    }

    pub fn x1_rev(&self) -> Option<Vertex> {
        self.backward.first_non_insertible[0]
    }

    /// A (u, u′)-path through H₀ for two distinct attachments.
    pub fn q_between(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        if u < v {
            self.q_pairs[&(u, v)].clone()
        } else {
            let mut p = self.q_pairs[&(v, u)].clone();
            p.reverse();
            p
        }
    }

    /// Whether (x, x′) has the shape the crossing clauses talk about: x on a
    /// segment prefix in one orientation, x′ either x₀ or the first vertex
    /// of a different segment in the same orientation.
    pub fn is_crossing_pair(&self, x: Vertex, xprime: Vertex) -> bool {
        self.crossing_site(x, xprime).is_some()
    }

    fn crossing_site(&self, x: Vertex, xprime: Vertex) -> Option<(&Orientation, usize)> {
        [&self.forward, &self.backward].into_iter().find_map(|o| {
            let i = (0..o.segments.len()).find(|&i| o.prefix(i).contains(&x))?;
            let ok =
                xprime == self.x0 || (0..o.segments.len()).any(|j| j != i && o.segments[j].first() == Some(&xprime));
            ok.then_some((o, i))
        })
    }

    /// Every (x, x′) pair of crossing shape, forward orientation first.
    pub fn crossing_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for o in [&self.forward, &self.backward] {
            for i in 0..o.segments.len() {
                for &x in o.prefix(i) {
                    let mut partners = vec![self.x0];
                    partners.extend(
                        (0..o.segments.len()).filter(|&j| j != i).filter_map(|j| o.segments[j].first().copied()),
                    );
                    for xp in partners {
                        if x != xp && !out.contains(&(x, xp)) {
                            out.push((x, xp));
                        }
                    }
                }
            }
        }
        out
    }

    /// The same context with attachment `a` (forward index) relabeled u₁.
    pub fn rotated(&self, g: &Graph, sys: &CycleSystem, a: usize) -> ProofContext {
        let mut att = self.forward.attachments.clone();
        att.rotate_left(a);
        assemble(g, sys, self.k, self.m, self.component.clone(), self.c1, att)
    }
}

fn bfs_path_in(
    g: &Graph,
    allowed: &[bool],
    sources: &[Vertex],
    target: impl Fn(Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if allowed[s] && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        if target(u) {
            let mut path = vec![u];
            let mut v = u;
            while parent[v] != usize::MAX {
                v = parent[v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn assemble(
    g: &Graph,
    sys: &CycleSystem,
    k: usize,
    m: usize,
    component: Vec<Vertex>,
    c1: usize,
    attachments: Vec<Vertex>,
) -> ProofContext {
    let n = g.order();
    let remainder = sys.remainder(g).vertices;
    let x0 = component[0];
    let rest: Vec<usize> = (0..sys.len()).filter(|&i| i != c1).collect();
    let rest_sys = sys.select(&rest);
    let cycle = sys.member(c1).vertices().to_vec();

    let mut back_cycle = cycle.clone();
    back_cycle.reverse();
    let mut back_att = vec![attachments[0]];
    back_att.extend(attachments[1..].iter().rev());
    let forward = Orientation::new(g, &rest_sys, cycle, attachments.clone());
    let backward = Orientation::new(g, &rest_sys, back_cycle, back_att);

    let mut in_h0 = vec![false; n];
    for &v in &component {
        in_h0[v] = true;
    }
    let q_paths = attachments
        .iter()
        .map(|&u| {
            let starts: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| in_h0[w]).collect();
            let mut p = bfs_path_in(g, &in_h0, &starts, |v| v == x0).expect("H0 is connected");
            p.insert(0, u);
            p
        })
        .collect();
    let mut q_pairs = BTreeMap::new();
    for (i, &u) in attachments.iter().enumerate() {
        for &v in &attachments[i + 1..] {
            let starts: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| in_h0[w]).collect();
            let mut p = bfs_path_in(g, &in_h0, &starts, |w| g.has_edge(w, v)).expect("H0 is connected");
            p.insert(0, u);
            p.push(v);
            q_pairs.insert((u.min(v), u.max(v)), if u < v { p } else { p.into_iter().rev().collect() });
        }
    }

    let mut x_set = vec![x0];
    x_set.extend(attachments.iter().map(|&u| forward.successor(u)));
    let y_set = backward.first_non_insertible[0].map(|x1| {
        let mut y = vec![x0, x1];
        y.extend(attachments[1..].iter().map(|&u| backward.successor(u)));
        y
    });

    ProofContext {
        k,
        m,
        l: m.div_ceil(k),
        remainder,
        component,
        x0,
        c1,
        rest,
        forward,
        backward,
        q_paths,
        q_pairs,
        x_set,
        y_set,
    }
}

fn check_cycle_system(g: &Graph, sys: &CycleSystem, k: usize) -> Result<(), SolverError> {
    sys.validate(g)?;
    if sys.path_count() > 0 || sys.cycle_count() != k {
        return Err(SolverError::InvalidArgument(format!(
            "expected {k} cycles and no paths, got {} cycles and {} paths",
            sys.cycle_count(),
            sys.path_count()
        )));
    }
    Ok(())
}

/// Fixes H₀, x₀, C₁ and the attachments u₁ … u_L (L = max(⌈m/k⌉, 2)) of a
/// non-spanning k-cycle system, with Q-paths and the sets X and Y.
pub fn build_proof_context(g: &Graph, sys: &CycleSystem, m: usize, k: usize) -> Result<ProofContext, SolverError> {
    if k == 0 || m == 0 {
        return Err(SolverError::InvalidArgument("k and m must be positive".into()));
    }
    check_cycle_system(g, sys, k)?;
    let rem = sys.remainder(g);
    let Some(component) = rem.components.into_iter().next() else {
        return Err(SolverError::InvalidArgument("system is spanning; remainder is empty".into()));
    };
    let required = m.div_ceil(k).max(2);
    let mut in_h0 = vec![false; g.order()];
    for &v in &component {
        in_h0[v] = true;
    }
    let attached = |i: usize| -> Vec<Vertex> {
        sys.member(i).vertices().iter().copied().filter(|&u| g.neighbors(u).iter().any(|&w| in_h0[w])).collect()
    };
    let counts: Vec<usize> = (0..sys.len()).map(|i| attached(i).len()).collect();
    let Some(c1) = (0..sys.len()).find(|&i| counts[i] >= required) else {
        return Err(SolverError::ContextUnavailable { required, counts });
    };
    // member vertices start at the cycle's minimum vertex, which fixes the
    // cyclic order; begin at the smallest attachment
    let on_c1 = attached(c1);
    let first = *on_c1.iter().min().unwrap();
    let cycle = sys.member(c1).vertices();
    let start = cycle.iter().position(|&v| v == first).unwrap();
    let attachments: Vec<Vertex> = (0..cycle.len())
        .map(|s| cycle[(start + s) % cycle.len()])
        .filter(|v| on_c1.contains(v))
        .take(required)
        .collect();
    Ok(assemble(g, sys, k, m, component, c1, attachments))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AugmentOutcome {
    /// A system of k cycles with strictly larger total order.
    Improved {
        system: CycleSystem,
        description: String,
    },
    Spanning,
    /// An independent set of size ⌈m/k⌉ + 1 whose two largest degrees sum
    /// below n, so the degree hypothesis fails.
    HypothesisRefuted {
        witness: Vec<Vertex>,
        delta2: u64,
        required: usize,
    },
    /// The input is not of maximum order; `improvement` is a larger system
    /// when the evidence yields one directly.
    NotMaximal {
        evidence: String,
        improvement: Option<CycleSystem>,
    },
}

impl AugmentOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            AugmentOutcome::Improved { .. } => "improved",
            AugmentOutcome::Spanning => "spanning",
            AugmentOutcome::HypothesisRefuted { .. } => "refuted",
            AugmentOutcome::NotMaximal { .. } => "not-maximal",
        }
    }
}

fn replace_members(sys: &CycleSystem, replacements: Vec<(usize, Member)>) -> CycleSystem {
    let mut members = sys.members().to_vec();
    for (i, m) in replacements {
        members[i] = m;
    }
    CycleSystem::from_members(sys.order(), members)
}

fn cycle_member(vs: Vec<Vertex>) -> Result<Member, SolverError> {
    OrientedCycle::new(vs)
        .map(Member::Cycle)
        .map_err(|e| SolverError::Invariant(format!("constructed cycle is malformed: {e}")))
}

/// Inserts `segment` into the non-C₁ cycles and returns the replacements.
fn distribute(
    g: &Graph,
    sys: &CycleSystem,
    ctx: &ProofContext,
    segment: &[Vertex],
) -> Result<Vec<(usize, Member)>, SolverError> {
    if segment.is_empty() {
        return Ok(Vec::new());
    }
    let rest = sys.select(&ctx.rest);
    let path = OrientedPath::new(segment.to_vec()).expect("segment is nonempty");
    let trace = insert_path(g, &rest, &path)?;
    Ok(ctx.rest.iter().copied().zip(trace.result.members().iter().cloned()).collect())
}

fn finish(g: &Graph, before: &CycleSystem, after: CycleSystem, what: &str) -> Result<CycleSystem, SolverError> {
    after.validate(g).map_err(|e| SolverError::Invariant(format!("{what} produced an invalid system: {e}")))?;
    if after.total_order() <= before.total_order() {
        return Err(SolverError::Invariant(format!(
            "{what} did not grow the system ({} → {})",
            before.total_order(),
            after.total_order()
        )));
    }
    Ok(after)
}

/// u_{i+1} → u_i along C₁, closed through H₀ by Q_{i,i+1}, with segment i
/// moved into the other cycles.
fn reroute(g: &Graph, sys: &CycleSystem, ctx: &ProofContext, i: usize) -> Result<CycleSystem, SolverError> {
    let o = &ctx.forward;
    let l = o.attachments.len();
    let (ui, uj) = (o.attachments[i], o.attachments[(i + 1) % l]);
    let mut c = arc(&o.cycle, uj, ui);
    let q = ctx.q_between(ui, uj);
    c.extend_from_slice(&q[1..q.len() - 1]);
    let mut repl = distribute(g, sys, ctx, &o.segments[i])?;
    repl.push((ctx.c1, cycle_member(c)?));
    finish(g, sys, replace_members(sys, repl), "reroute")
}

/// The path through x → u_i along C₁ that ends at x′, built as in the
/// crossing argument.
fn crossing_path(ctx: &ProofContext, o: &Orientation, i: usize, x: Vertex, xprime: Vertex) -> Vec<Vertex> {
    let ui = o.attachments[i];
    if xprime == ctx.x0 {
        let mut p = arc(&o.cycle, x, ui);
        let qi = &ctx.q_paths[ctx.forward.attachments.iter().position(|&u| u == ui).unwrap()];
        p.extend_from_slice(&qi[1..]);
        return p;
    }
    let j = (0..o.segments.len()).find(|&j| o.segments[j].first() == Some(&xprime)).expect("x' starts a segment");
    let uj = o.attachments[j];
    let mut p = arc(&o.cycle, x, uj);
    let q = ctx.q_between(uj, ui);
    p.extend_from_slice(&q[1..q.len() - 1]);
    let mut back = o.cycle.clone();
    back.reverse();
    p.extend(arc(&back, ui, xprime));
    p
}

/// A larger system from a crossing pair whose clause fails inside
/// G′ = G[H ∪ x → u_i], or `None` when both clauses hold there.
fn crossing_improvement(
    g: &Graph,
    sys: &CycleSystem,
    ctx: &ProofContext,
    o: &Orientation,
    i: usize,
    x: Vertex,
    xprime: Vertex,
) -> Result<Option<CycleSystem>, SolverError> {
    let mut local: Vec<Vertex> = ctx.remainder.clone();
    local.extend(arc(&o.cycle, x, o.attachments[i]));
    let adjacent = g.has_edge(x, xprime);
    let sum = g.degree_into(x, &local) + g.degree_into(xprime, &local);
    if !adjacent && sum < local.len() {
        return Ok(None);
    }
    let p = crossing_path(ctx, o, i, x, xprime);
    let cycle = if adjacent {
        p
    } else {
        local.sort_unstable();
        let sub = g.induced_subgraph(&local);
        let idx = |v: Vertex| local.binary_search(&v).unwrap();
        let lp = OrientedPath::new(p.iter().map(|&v| idx(v)).collect()).expect("distinct");
        let c = cycle_from_degree_rich_path(&sub, &lp)?;
        c.vertices().iter().map(|&v| local[v]).collect()
    };
    let seg = &o.segments[i];
    let before_x = &seg[..seg.iter().position(|&v| v == x).unwrap()];
    let mut repl = distribute(g, sys, ctx, before_x)?;
    repl.push((ctx.c1, cycle_member(cycle)?));
    finish(g, sys, replace_members(sys, repl), "crossing repair").map(Some)
}

fn over_half(g: &Graph, v: Vertex, others: &[Vertex]) -> bool {
    2 * g.degree_into(v, others) > others.len()
}

fn refuted(g: &Graph, set: &[Vertex], l: usize) -> Result<AugmentOutcome, SolverError> {
    let witness: Vec<Vertex> = set[..(l + 1).min(set.len())].to_vec();
    let delta2 = delta_t(g, &witness, 2).map_err(|e| SolverError::Invariant(e.to_string()))?;
    Ok(AugmentOutcome::HypothesisRefuted { witness, delta2, required: g.order() })
}

fn rich_pairs(g: &Graph, set: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let mut out = Vec::new();
    for (a, &x) in set.iter().enumerate() {
        for &y in &set[a + 1..] {
            if g.degree(x) + g.degree(y) >= n {
                out.push((x, y));
            }
        }
    }
    out
}

/// One step of the augmentation argument on a k-cycle system.
///
/// Tries, in order: direct insertion of an uncovered vertex; the segment
/// reroute through H₀; repair of any failing crossing pair; and the final
/// two-cycle exchange driven by the sets X and Y.
pub fn augment(g: &Graph, sys: &CycleSystem, m: usize, k: usize) -> Result<AugmentOutcome, SolverError> {
    check_cycle_system(g, sys, k)?;
    let rem = sys.remainder(g);
    if rem.vertices.is_empty() {
        return Ok(AugmentOutcome::Spanning);
    }
    for &x in &rem.vertices {
        if let Some((member, w, w1)) = insertion_site(g, sys, x) {
            let trace = insert_path(g, sys, &OrientedPath::new(vec![x]).unwrap())?;
            return Ok(AugmentOutcome::Improved {
                system: finish(g, sys, trace.result, "direct insertion")?,
                description: format!("insert {x} into cycle {member} between {w} and {w1}"),
            });
        }
    }

    let ctx = build_proof_context(g, sys, m, k)?;
    let l = ctx.l;
    let att = ctx.attachments().to_vec();
    let len = att.len();

    for i in 0..len {
        if ctx.forward.segments[i].is_empty() {
            return Ok(AugmentOutcome::NotMaximal {
                evidence: format!("attachments {} and {} are consecutive on C1", att[i], att[(i + 1) % len]),
                improvement: Some(reroute(g, sys, &ctx, i)?),
            });
        }
    }
    for i in 0..len {
        if ctx.forward.first_non_insertible[i].is_none() {
            return Ok(AugmentOutcome::Improved {
                system: reroute(g, sys, &ctx, i)?,
                description: format!(
                    "segment after {} is insertible: reroute C1 through H0 between {} and {}",
                    att[i],
                    att[i],
                    att[(i + 1) % len]
                ),
            });
        }
    }

    for o in [&ctx.forward, &ctx.backward] {
        for i in 0..len {
            for &x in o.prefix(i) {
                let mut partners = vec![ctx.x0];
                partners.extend((0..len).filter(|&j| j != i).map(|j| o.segments[j][0]));
                for xp in partners {
                    if let Some(better) = crossing_improvement(g, sys, &ctx, o, i, x, xp)? {
                        return Ok(AugmentOutcome::NotMaximal {
                            evidence: format!("crossing pair ({x}, {xp}) closes a longer cycle"),
                            improvement: Some(better),
                        });
                    }
                }
            }
        }
    }

    endgame(g, sys, &ctx, l)
}

fn endgame(g: &Graph, sys: &CycleSystem, ctx: &ProofContext, l: usize) -> Result<AugmentOutcome, SolverError> {
    let others: Vec<Vertex> = ctx.rest.iter().flat_map(|&i| sys.member(i).vertices().to_vec()).collect();
    let check_thin = |v: Vertex, what: &str| -> Result<(), SolverError> {
        for &p in &ctx.rest {
            let cp = sys.member(p).vertices();
            if 2 * g.degree_into(v, cp) > cp.len() {
                return Err(SolverError::Invariant(format!(
                    "non-insertible {what} {v} has more than half its neighbors on cycle {p}"
                )));
            }
        }
        Ok(())
    };
    check_thin(ctx.x0, "x0")?;

    let pairs = rich_pairs(g, &ctx.x_set);
    if pairs.is_empty() {
        return refuted(g, &ctx.x_set, l);
    }
    let a = pairs
        .iter()
        .filter(|&&(x, y)| x != ctx.x0 && y != ctx.x0)
        .chain(pairs.iter())
        .flat_map(|&(x, y)| [x, y])
        .find(|&v| v != ctx.x0 && over_half(g, v, &others))
        .and_then(|v| ctx.x_set[1..].iter().position(|&s| s == v))
        .ok_or_else(|| SolverError::Invariant("no successor in X is rich on C* − C1".into()))?;

    let rot = ctx.rotated(g, sys, a);
    let x1 = rot.x1_rev().ok_or_else(|| SolverError::Invariant("backward segment of u1 is fully insertible".into()))?;
    check_thin(x1, "x1")?;
    let y = rot.y_set.clone().expect("x1 exists");
    let pairs = rich_pairs(g, &y);
    if pairs.is_empty() {
        return refuted(g, &y, l);
    }
    let b = pairs
        .iter()
        .flat_map(|&(p, q)| [p, q])
        .find(|&v| v != rot.x0 && v != x1 && over_half(g, v, &others))
        .and_then(|v| y[2..].iter().position(|&s| s == v))
        .map(|j| j + 1)
        .ok_or_else(|| SolverError::Invariant("no predecessor in Y is rich on C* − C1".into()))?;

    let ratt = rot.attachments();
    let (u1, ub) = (ratt[0], ratt[b]);
    let u1_plus = rot.x_set[1];
    let ub_minus = y[b + 1];
    for &p in &rot.rest {
        let cp = sys.member(p).vertices().to_vec();
        let mut rev = cp.clone();
        rev.reverse();
        for oriented in [cp, rev] {
            let len = oriented.len();
            let Some(s) =
                (0..len).find(|&s| g.has_edge(u1_plus, oriented[s]) && g.has_edge(ub_minus, oriented[(s + 1) % len]))
            else {
                continue;
            };
            let (u, u_plus) = (oriented[s], oriented[(s + 1) % len]);
            let mut d1 = arc(&rot.forward.cycle, ub, u1);
            let q = rot.q_between(u1, ub);
            d1.extend_from_slice(&q[1..q.len() - 1]);
            let mut d2 = arc(&rot.forward.cycle, u1_plus, ub_minus);
            d2.extend(arc(&oriented, u_plus, u));
            let next = replace_members(sys, vec![(rot.c1, cycle_member(d1)?), (p, cycle_member(d2)?)]);
            return Ok(AugmentOutcome::Improved {
                system: finish(g, sys, next, "two-cycle exchange")?,
                description: format!(
                    "exchange: u1 = {u1}, ui = {ub}, edge ({u}, {u_plus}) on cycle {p}; \
                     C1 closes through H0, the arc {u1_plus}..{ub_minus} absorbs cycle {p}"
                ),
            });
        }
    }
    Err(SolverError::Invariant(format!(
        "degrees of {u1_plus} and {ub_minus} exceed |C* − C1| but no cycle offers a crossing edge"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartMode {
    /// Shortest cycles, k times; falls back to an exact packing.
    Greedy,
    /// An exact maximum-order packing.
    #[default]
    ExactMax,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofResult {
    Factor(TwoFactor),
    Refuted {
        witness: Vec<Vertex>,
        delta2: u64,
        required: usize,
    },
    /// The graph has no k disjoint cycles.
    NoPacking,
    /// A non-maximal system with no improvement available to this mode.
    NotMaximal {
        evidence: String,
    },
}

/// One augmentation round: outcome tag, move, and the order afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub tag: &'static str,
    pub description: String,
    pub total_order: usize,
}

impl fmt::Display for Round {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} order={:<3} {}", self.tag, self.total_order, self.description)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofRun {
    pub result: ProofResult,
    pub rounds: Vec<Round>,
}

/// Repeats [`augment`] from a starting packing until it spans.
pub fn two_factor_via_proof(g: &Graph, m: usize, k: usize, start: StartMode) -> Result<ProofRun, SolverError> {
    let mut rounds = Vec::new();
    let initial = match start {
        StartMode::ExactMax => exact_cycle_packing(g, k, true)?,
        StartMode::Greedy => match greedy_cycle_packing(g, k) {
            Some(s) => Some(s),
            None => exact_cycle_packing(g, k, false)?,
        },
    };
    let Some(mut sys) = initial else {
        return Ok(ProofRun { result: ProofResult::NoPacking, rounds });
    };
    rounds.push(Round { tag: "start", description: format!("{start:?}"), total_order: sys.total_order() });
    for _ in 0..=g.order() {
        let before = sys.total_order();
        match augment(g, &sys, m, k)? {
            AugmentOutcome::Spanning => {
                let tf = TwoFactor::new(g, sys)?;
                return Ok(ProofRun { result: ProofResult::Factor(tf), rounds });
            }
            AugmentOutcome::Improved { system, description } => {
                rounds.push(Round { tag: "improved", description, total_order: system.total_order() });
                sys = system;
            }
            AugmentOutcome::HypothesisRefuted { witness, delta2, required } => {
                rounds.push(Round {
                    tag: "refuted",
                    description: format!("witness {witness:?}, Δ2 = {delta2} < {required}"),
                    total_order: before,
                });
                return Ok(ProofRun { result: ProofResult::Refuted { witness, delta2, required }, rounds });
            }
            AugmentOutcome::NotMaximal { evidence, improvement } => {
                let better = match start {
                    StartMode::ExactMax => {
                        let best = exact_cycle_packing(g, k, true)?.filter(|s| s.total_order() > before);
                        if best.is_none() && improvement.is_some() {
                            return Err(SolverError::Invariant(
                                "augmentation improved on an exact maximum-order packing".into(),
                            ));
                        }
                        best
                    }
                    StartMode::Greedy => improvement,
                };
                let Some(next) = better else {
                    rounds.push(Round { tag: "not-maximal", description: evidence.clone(), total_order: before });
                    return Ok(ProofRun { result: ProofResult::NotMaximal { evidence }, rounds });
                };
                rounds.push(Round { tag: "not-maximal", description: evidence, total_order: next.total_order() });
                sys = next;
            }
        }
        if sys.total_order() <= before {
            return Err(SolverError::Invariant("augmentation round did not grow the system".into()));
        }
    }
    Err(SolverError::Invariant("augmentation did not terminate within n rounds".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, petersen};
    use crate::invariants::independent_sets_of_size;

    fn cyc(vs: &[Vertex]) -> OrientedCycle {
        OrientedCycle::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn k7_context_and_direct_insertion() {
        let g = complete(7);
        let sys = CycleSystem::from_cycles(7, vec![cyc(&[0, 1, 2]), cyc(&[3, 4, 5])]);
        let ctx = build_proof_context(&g, &sys, 6, 2).unwrap();
        assert_eq!(ctx.component, vec![6]);
        assert_eq!(ctx.x0, 6);
        assert_eq!(ctx.l, 3);
        assert_eq!(ctx.attachments(), &[0, 1, 2]);
        match augment(&g, &sys, 6, 2).unwrap() {
            AugmentOutcome::Improved { system, .. } => {
                assert_eq!(system.total_order(), 7);
                assert_eq!(system.cycle_count(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spanning_and_invalid_inputs() {
        let g = complete(6);
        let sys = CycleSystem::from_cycles(6, vec![cyc(&[0, 1, 2]), cyc(&[3, 4, 5])]);
        assert_eq!(augment(&g, &sys, 5, 2).unwrap(), AugmentOutcome::Spanning);
        assert!(matches!(build_proof_context(&g, &sys, 5, 2), Err(SolverError::InvalidArgument(_))));
        assert!(matches!(augment(&g, &sys, 5, 1), Err(SolverError::InvalidArgument(_))));
    }

    #[test]
    fn k34_refutation() {
        let g = complete_bipartite(3, 4);
        let sys = exact_cycle_packing(&g, 1, true).unwrap().unwrap();
        assert_eq!(sys.total_order(), 6);
        match augment(&g, &sys, 3, 1).unwrap() {
            AugmentOutcome::HypothesisRefuted { witness, delta2, required } => {
                assert_eq!(witness.len(), 4);
                assert!(g.is_independent(&witness));
                assert!(delta2 < required as u64);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k34_context_sets_are_independent() {
        let g = complete_bipartite(3, 4);
        let sys = exact_cycle_packing(&g, 1, true).unwrap().unwrap();
        let ctx = build_proof_context(&g, &sys, 3, 1).unwrap();
        assert_eq!(ctx.x_set.len(), ctx.l + 1);
        assert!(g.is_independent(&ctx.x_set));
        let y = ctx.y_set.clone().unwrap();
        assert_eq!(y.len(), ctx.l + 1);
        assert!(g.is_independent(&y));
        let x_sorted = {
            let mut v = ctx.x_set.clone();
            v.sort();
            v
        };
        assert!(independent_sets_of_size(&g, 4).any(|s| s == x_sorted));
    }

    #[test]
    fn proof_engine_complete_graph() {
        let run = two_factor_via_proof(&complete(7), 6, 2, StartMode::Greedy).unwrap();
        match run.result {
            ProofResult::Factor(tf) => {
                let mut lens = tf.cycle_lengths();
                lens.sort();
                assert_eq!(lens.iter().sum::<usize>(), 7);
                assert_eq!(lens.len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn petersen_two_cycles() {
        let run = two_factor_via_proof(&petersen(), 3, 2, StartMode::ExactMax).unwrap();
        assert!(matches!(run.result, ProofResult::Factor(_)));
        let run = two_factor_via_proof(&petersen(), 3, 1, StartMode::ExactMax).unwrap();
        assert!(!matches!(run.result, ProofResult::Factor(_)));
    }
}
