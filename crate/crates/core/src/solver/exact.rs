use std::fmt;

use crate::cycles::{CycleSystem, OrientedCycle};
use crate::graph::{bits, canonical_form, two_kk_join_complement, Graph, Vertex};
use crate::invariants::{independence_number, sigma_m};

use super::SolverError;

/// Largest order accepted by [`exact_two_factor`] and by the plain
/// [`exact_cycle_packing`] search.
pub const MAX_TWO_FACTOR_ORDER: usize = 16;
/// Largest order accepted by [`exact_cycle_packing`] with `maximize_order`.
pub const MAX_MAX_PACKING_ORDER: usize = 14;

/// A spanning system of exactly k cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    system: CycleSystem,
}

impl TwoFactor {
    /// Wraps `system` if it is a valid spanning all-cycle system of `g`.
    pub fn new(g: &Graph, system: CycleSystem) -> Result<Self, SolverError> {
        system.validate(g)?;
        if system.path_count() > 0 || !system.is_spanning() {
            return Err(SolverError::InvalidArgument("a 2-factor must be a spanning system of cycles".into()));
        }
        Ok(TwoFactor { system })
    }

    pub fn system(&self) -> &CycleSystem {
        &self.system
    }

    pub fn into_system(self) -> CycleSystem {
        self.system
    }

    pub fn cycle_count(&self) -> usize {
        self.system.cycle_count()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.system.cycles().map(OrientedCycle::len).collect()
    }
}

impl fmt::Display for TwoFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.system.fmt(f)
    }
}

fn capacity(what: &str, n: usize, limit: usize) -> SolverError {
    SolverError::Capacity(format!("{what} supports n ≤ {limit} (got {n})"))
}

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_mask(v)).collect()
}

fn component_count(adj: &[u64], set: u64) -> usize {
    let mut left = set;
    let mut count = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & set & !comp;
            comp |= frontier;
        }
        left &= !comp;
        count += 1;
    }
    count
}

fn two_core(adj: &[u64], mut set: u64) -> u64 {
    loop {
        let weak = bits(set).fold(0u64, |acc, v| if (adj[v] & set).count_ones() < 2 { acc | 1 << v } else { acc });
        if weak == 0 {
            return set;
        }
        set &= !weak;
    }
}

fn to_cycles(order: usize, cycles: Vec<Vec<Vertex>>) -> CycleSystem {
    CycleSystem::from_cycles(
        order,
        cycles.into_iter().map(|c| OrientedCycle::new(c).expect("search emits simple cycles")).collect(),
    )
}

struct FactorSearch<'a> {
    adj: &'a [u64],
    found: Vec<Vec<Vertex>>,
}

impl FactorSearch<'_> {
    fn cover(&mut self, free: u64, k: usize) -> bool {
        if free == 0 {
            return k == 0;
        }
        let count = free.count_ones() as usize;
        if k == 0 || count < 3 * k {
            return false;
        }
        if bits(free).any(|v| (self.adj[v] & free).count_ones() < 2) {
            return false;
        }
        if component_count(self.adj, free) > k {
            return false;
        }
        let v = free.trailing_zeros() as usize;
        let min_len = if k == 1 { count } else { 3 };
        let max_len = count - 3 * (k - 1);
        let mut path = vec![v];
        self.extend(free, k, &mut path, 1 << v, min_len, max_len)
    }

    fn extend(
        &mut self,
        free: u64,
        k: usize,
        path: &mut Vec<Vertex>,
        used: u64,
        min_len: usize,
        max_len: usize,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        let open = free & !used;
        let ends = 1u64 << start | 1u64 << last;
        if bits(open).any(|x| (self.adj[x] & (open | ends)).count_ones() < 2) {
            return false;
        }
        for w in bits(self.adj[last] & open) {
            path.push(w);
            let used_w = used | 1 << w;
            let len = path.len();
            if len >= min_len
                && len >= 3
                && self.adj[w] >> start & 1 == 1
                && path[1] < w
                && self.cover(free & !used_w, k - 1)
            {
                self.found.push(path.clone());
                return true;
            }
            if len < max_len && self.extend(free, k, path, used_w, min_len, max_len) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// A 2-factor of `g` with exactly `k` cycles, or `None` when none exists.
pub fn exact_two_factor(g: &Graph, k: usize) -> Result<Option<TwoFactor>, SolverError> {
    let n = g.order();
    if k == 0 {
        return Err(SolverError::InvalidArgument("k must be positive".into()));
    }
    if n > MAX_TWO_FACTOR_ORDER {
        return Err(capacity("exact_two_factor", n, MAX_TWO_FACTOR_ORDER));
    }
    let adj = adjacency(g);
    let mut search = FactorSearch { adj: &adj, found: Vec::new() };
    if n == 0 || !search.cover(g.vertex_mask(), k) {
        return Ok(None);
    }
    let system = to_cycles(n, search.found);
    Ok(Some(TwoFactor { system }))
}

/// Calls `visit` on every cycle through `v` inside `set`, once per
/// direction-free cycle; with `chordless`, only induced cycles. `visit`
/// returns true to stop the enumeration.
fn cycles_through(
    adj: &[u64],
    set: u64,
    v: Vertex,
    max_len: usize,
    chordless: bool,
    visit: &mut dyn FnMut(&[Vertex], u64) -> bool,
) -> bool {
    fn go(
        adj: &[u64],
        set: u64,
        path: &mut Vec<Vertex>,
        used: u64,
        max_len: usize,
        chordless: bool,
        visit: &mut dyn FnMut(&[Vertex], u64) -> bool,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in bits(adj[last] & set & !used) {
            if chordless {
                let interior = used & !(1u64 << last) & !(1u64 << start);
                if adj[w] & interior != 0 {
                    continue;
                }
            }
            let closes = path.len() >= 2 && adj[w] >> start & 1 == 1;
            path.push(w);
            let used_w = used | 1 << w;
            if closes && path[1] < w && visit(path, used_w) {
                return true;
            }
            if !(chordless && closes) && path.len() < max_len && go(adj, set, path, used_w, max_len, chordless, visit) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![v];
    go(adj, set, &mut path, 1 << v, max_len, chordless, visit)
}

fn pack_any(adj: &[u64], free: u64, need: usize, found: &mut Vec<Vec<Vertex>>) -> bool {
    if need == 0 {
        return true;
    }
    let core = two_core(adj, free);
    let count = core.count_ones() as usize;
    if count < 3 * need {
        return false;
    }
    let v = core.trailing_zeros() as usize;
    let max_len = count - 3 * (need - 1);
    let mut hit = false;
    cycles_through(adj, core, v, max_len, true, &mut |cyc, mask| {
        if pack_any(adj, core & !mask, need - 1, found) {
            found.push(cyc.to_vec());
            hit = true;
        }
        hit
    });
    hit || pack_any(adj, core & !(1 << v), need, found)
}

struct MaxPacking<'a> {
    adj: &'a [u64],
    chosen: Vec<Vec<Vertex>>,
    best: Option<(usize, Vec<Vec<Vertex>>)>,
    ceiling: usize,
}

impl MaxPacking<'_> {
    fn best_order(&self) -> usize {
        self.best.as_ref().map_or(0, |b| b.0)
    }

    fn search(&mut self, free: u64, need: usize, order: usize) {
        if self.best_order() >= self.ceiling {
            return;
        }
        if need == 0 {
            if order > self.best_order() {
                self.best = Some((order, self.chosen.clone()));
            }
            return;
        }
        let core = two_core(self.adj, free);
        let count = core.count_ones() as usize;
        if count < 3 * need || order + count <= self.best_order() {
            return;
        }
        let v = core.trailing_zeros() as usize;
        let max_len = count - 3 * (need - 1);
        let adj = self.adj;
        cycles_through(adj, core, v, max_len, false, &mut |cyc, mask| {
            self.chosen.push(cyc.to_vec());
            self.search(core & !mask, need - 1, order + cyc.len());
            self.chosen.pop();
            self.best_order() >= self.ceiling
        });
        self.search(core & !(1 << v), need, order);
    }
}

/// `k` pairwise disjoint cycles of `g`, or `None` when `g` has no such
/// packing. With `maximize_order` the packing covers as many vertices as
/// possible.
pub fn exact_cycle_packing(g: &Graph, k: usize, maximize_order: bool) -> Result<Option<CycleSystem>, SolverError> {
    let n = g.order();
    if k == 0 {
        return Err(SolverError::InvalidArgument("k must be positive".into()));
    }
    let limit = if maximize_order { MAX_MAX_PACKING_ORDER } else { MAX_TWO_FACTOR_ORDER };
    if n > limit {
        return Err(capacity("exact_cycle_packing", n, limit));
    }
    let adj = adjacency(g);
    if !maximize_order {
        let mut found = Vec::new();
        return Ok(pack_any(&adj, g.vertex_mask(), k, &mut found).then(|| to_cycles(n, found)));
    }
    if let Some(tf) = exact_two_factor(g, k)? {
        return Ok(Some(tf.into_system()));
    }
    let core = two_core(&adj, g.vertex_mask());
    let mut search = MaxPacking {
        adj: &adj,
        chosen: Vec::new(),
        best: None,
        // a packing of order n would be a 2-factor with k cycles
        ceiling: (core.count_ones() as usize).min(n.saturating_sub(1)),
    };
    search.search(core, k, 0);
    Ok(search.best.map(|(_, cycles)| to_cycles(n, cycles)))
}

/// The k shortest-first greedy packing: repeatedly removes a shortest cycle
/// of what is left. `None` when fewer than k cycles are found this way.
pub fn greedy_cycle_packing(g: &Graph, k: usize) -> Option<CycleSystem> {
    let n = g.order();
    let mut removed = vec![false; n];
    let mut cycles = Vec::with_capacity(k);
    for _ in 0..k {
        let c = shortest_cycle_avoiding(g, &removed)?;
        for &v in &c {
            removed[v] = true;
        }
        cycles.push(c);
    }
    Some(to_cycles(n, cycles))
}

fn shortest_cycle_avoiding(g: &Graph, removed: &[bool]) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut best: Option<Vec<Vertex>> = None;
    for root in (0..n).filter(|&r| !removed[r]) {
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if removed[w] || w == parent[u] {
                    continue;
                }
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                    continue;
                }
                let len = depth[u] + depth[w] + 1;
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                let (mut a, mut b) = (u, w);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                if left.len() >= 3 {
                    best = Some(left);
                }
            }
        }
    }
    best
}

/// A wheel: a hub adjacent to all other vertices, which induce a cycle.
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    (0..n).filter(|&h| g.degree(h) == n - 1).any(|h| {
        let rim: Vec<Vertex> = (0..n).filter(|&v| v != h).collect();
        let r = g.induced_subgraph(&rim);
        r.is_connected() && (0..r.order()).all(|v| r.degree(v) == 2)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum PackingRoute {
    /// k = 1 and the graph has a cycle.
    Trivial,
    /// n ≥ 3k and σ₂ ≥ 4k − 1.
    EnomotoWang,
    /// k ≥ 2, n ≥ max(3k + 2, 8) and σ₃ ≥ 6k − 2.
    Fujita,
    /// k ≥ 2, n ≥ 3k, δ ≥ 2k − 1, α ≤ n − 2k, and neither exceptional family.
    Kky,
}

impl fmt::Display for PackingRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PackingRoute::Trivial => "single cycle exists",
            PackingRoute::EnomotoWang => "Enomoto/Wang condition holds",
            PackingRoute::Fujita => "Fujita et al. condition holds",
            PackingRoute::Kky => "KKY conditions hold",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PackingVerdict {
    /// The first route, in dispatch order, whose hypothesis holds.
    pub established: Option<PackingRoute>,
    /// Every route tried, in order, with its outcome.
    pub tried: Vec<(PackingRoute, bool)>,
}

impl fmt::Display for PackingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.established {
            Some(r) => r.fmt(f),
            None => f.write_str("not established"),
        }
    }
}

fn route_holds(g: &Graph, k: usize, route: PackingRoute) -> bool {
    let n = g.order();
    let k64 = k as u64;
    match route {
        PackingRoute::Trivial => k == 1 && g.has_cycle(),
        PackingRoute::EnomotoWang => n >= 3 * k && sigma_m(g, 2).at_least(4 * k64 - 1),
        PackingRoute::Fujita => k >= 2 && n >= (3 * k + 2).max(8) && sigma_m(g, 3).at_least(6 * k64 - 2),
        PackingRoute::Kky => {
            k >= 2
                && n >= 3 * k
                && g.min_degree() + 1 >= 2 * k
                && independence_number(g) + 2 * k <= n
                && !(k % 2 == 1 && n == 3 * k && is_two_kk_join(g, k))
                && !(k == 2 && is_wheel(g))
        }
    }
}

fn is_two_kk_join(g: &Graph, k: usize) -> bool {
    let h = two_kk_join_complement(k);
    g.size() == h.size() && canonical_form(g) == canonical_form(&h)
}

/// Which cited sufficient condition for k disjoint cycles `g` meets, tried
/// in the order dictated by l = ⌈m/k⌉. Never claims infeasibility.
pub fn packing_feasible_by_theory(g: &Graph, k: usize, m: usize) -> PackingVerdict {
    use PackingRoute::*;
    let order: &[PackingRoute] = if k <= 1 {
        &[Trivial, EnomotoWang]
    } else if m.div_ceil(k) == 2 {
        &[Fujita, Kky, EnomotoWang]
    } else {
        &[EnomotoWang, Fujita, Kky]
    };
    let mut tried = Vec::new();
    for &route in order {
        let ok = route_holds(g, k.max(1), route);
        tried.push((route, ok));
        if ok {
            return PackingVerdict { established: Some(route), tried };
        }
    }
    PackingVerdict { established: None, tried }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, edgeless, petersen, wheel};

    #[test]
    fn bipartite_sharpness() {
        let k34 = complete_bipartite(3, 4);
        for k in 1..=3 {
            assert_eq!(exact_two_factor(&k34, k).unwrap(), None);
        }
        let k33 = complete_bipartite(3, 3);
        assert_eq!(exact_two_factor(&k33, 2).unwrap(), None);
        let h = exact_two_factor(&k33, 1).unwrap().unwrap();
        assert_eq!(h.cycle_lengths(), vec![6]);
    }

    #[test]
    fn petersen_factors() {
        let p = petersen();
        assert_eq!(exact_two_factor(&p, 1).unwrap(), None);
        let f = exact_two_factor(&p, 2).unwrap().unwrap();
        assert_eq!(f.cycle_lengths(), vec![5, 5]);
        assert_eq!(f.system().validate(&p), Ok(()));
    }

    #[test]
    fn complete_graph_factors() {
        let g = complete(9);
        for k in 1..=3 {
            let f = exact_two_factor(&g, k).unwrap().unwrap();
            assert_eq!(f.cycle_count(), k);
            assert!(f.system().is_spanning());
        }
        assert_eq!(exact_two_factor(&g, 4).unwrap(), None);
    }

    #[test]
    fn capacity_limits() {
        assert!(matches!(exact_two_factor(&complete(17), 1), Err(SolverError::Capacity(_))));
        assert!(matches!(exact_cycle_packing(&complete(15), 2, true), Err(SolverError::Capacity(_))));
        assert!(matches!(exact_two_factor(&complete(4), 0), Err(SolverError::InvalidArgument(_))));
    }

    #[test]
    fn packing_exceptions() {
        for n in [5, 6, 7] {
            assert_eq!(exact_cycle_packing(&wheel(n).unwrap(), 2, false).unwrap(), None);
            assert_eq!(exact_cycle_packing(&wheel(n).unwrap(), 2, true).unwrap(), None);
        }
        let j = two_kk_join_complement(3);
        assert_eq!(exact_cycle_packing(&j, 3, false).unwrap(), None);
        assert!(exact_cycle_packing(&j, 2, false).unwrap().is_some());
    }

    #[test]
    fn max_packing_k7() {
        let sys = exact_cycle_packing(&complete(7), 2, true).unwrap().unwrap();
        assert_eq!(sys.total_order(), 7);
        let mut lens: Vec<usize> = sys.cycles().map(OrientedCycle::len).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 4]);
    }

    #[test]
    fn max_packing_without_factor() {
        // K₃,₄ has no 2-factor; a 6-cycle is the best single cycle
        let sys = exact_cycle_packing(&complete_bipartite(3, 4), 1, true).unwrap().unwrap();
        assert_eq!(sys.total_order(), 6);
        // two triangles sharing a vertex plus a pendant: only one disjoint cycle
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(exact_cycle_packing(&bowtie, 2, true).unwrap(), None);
        assert_eq!(exact_cycle_packing(&bowtie, 1, true).unwrap().unwrap().total_order(), 3);
    }

    #[test]
    fn greedy_packing() {
        let sys = greedy_cycle_packing(&petersen(), 1).unwrap();
        assert_eq!(sys.total_order(), 5);
        assert_eq!(greedy_cycle_packing(&cycle(6), 2), None);
        let two = greedy_cycle_packing(&complete(6), 2).unwrap();
        assert_eq!(two.total_order(), 6);
        assert_eq!(two.validate(&complete(6)), Ok(()));
    }

    #[test]
    fn wheels() {
        assert!(is_wheel(&wheel(4).unwrap()));
        assert!(is_wheel(&wheel(7).unwrap()));
        assert!(!is_wheel(&complete(5)));
        assert!(!is_wheel(&petersen()));
    }

    #[test]
    fn theory_verdicts() {
        let v = packing_feasible_by_theory(&complete(8), 2, 7);
        assert_eq!(v.established, Some(PackingRoute::EnomotoWang));
        assert_eq!(v.to_string(), "Enomoto/Wang condition holds");
        let e = packing_feasible_by_theory(&edgeless(6), 2, 0);
        assert_eq!(e.established, None);
        assert_eq!(e.to_string(), "not established");
        assert_eq!(packing_feasible_by_theory(&edgeless(4), 1, 0).established, None);
        assert_eq!(packing_feasible_by_theory(&cycle(4), 1, 2).established, Some(PackingRoute::Trivial));
        // K₇ minus a perfect-ish matching: n = 7, δ = 5, α = 2, not a wheel
        let g = Graph::from_edges(7, complete(7).edges().filter(|&(u, v)| !(v == u + 1 && u % 2 == 0))).unwrap();
        let v = packing_feasible_by_theory(&g, 2, 4);
        assert!(v.tried.contains(&(PackingRoute::Kky, true)));
        assert!(!is_wheel(&g));
    }
}
