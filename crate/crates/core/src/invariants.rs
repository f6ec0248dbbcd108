//! Degree-sum and structural invariants: Δₜ(X), σₘ, σₜᵐ, α and κ.
//!
//! All exact searches run on bitmasks and require n ≤ 64.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bits, Graph, Vertex, MAX_MASK_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A degree-sum value that may be +∞ (no independent set of the required
/// size exists). `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedValue {
    Finite(u64),
    Infinite,
}

impl ExtendedValue {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedValue::Finite(v) => Some(v),
            ExtendedValue::Infinite => None,
        }
    }

    /// `self ≥ bound`; always true for +∞.
    pub fn at_least(self, bound: u64) -> bool {
        self >= ExtendedValue::Finite(bound)
    }

    /// `num · self > rhs`, the shape of the Bondy-type thresholds once the
    /// fraction is cleared. True for +∞ when `num > 0`.
    pub fn scaled_exceeds(self, num: u64, rhs: u64) -> bool {
        match self {
            ExtendedValue::Finite(v) => num * v > rhs,
            ExtendedValue::Infinite => num > 0,
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(v) => write!(f, "{v}"),
            ExtendedValue::Infinite => write!(f, "+inf"),
        }
    }
}

impl Serialize for ExtendedValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedValue::Finite(v) => s.serialize_u64(*v),
            ExtendedValue::Infinite => s.serialize_str("+inf"),
        }
    }
}

/// Δₜ(X): the largest degree sum over t-subsets of X, i.e. the sum of the t
/// largest degrees in X.
pub fn delta_t(g: &Graph, set: &[Vertex], t: usize) -> Result<u64, InvariantError> {
    if t == 0 || set.len() < t {
        return Err(InvariantError::InvalidArgument(format!("Δ_t needs 1 ≤ t ≤ |X|, got t={t}, |X|={}", set.len())));
    }
    let mut degs: Vec<usize> = set.iter().map(|&v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degs[..t].iter().map(|&d| d as u64).sum())
}

/// Vertices relabeled by position in a degree-sorted order, with neighbor
/// masks expressed over positions.
struct Ordered {
    order: Vec<Vertex>,
    degree: Vec<u64>,
    nbr: Vec<u64>,
}

impl Ordered {
    fn new(g: &Graph, descending: bool) -> Self {
        assert!(g.order() <= MAX_MASK_ORDER, "exact invariants support n ≤ 64");
        let mut order: Vec<Vertex> = (0..g.order()).collect();
        if descending {
            order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        } else {
            order.sort_by_key(|&v| (g.degree(v), v));
        }
        let mut pos = vec![0; g.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let nbr = order.iter().map(|&v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << pos[w])).collect();
        let degree = order.iter().map(|&v| g.degree(v) as u64).collect();
        Ordered { order, degree, nbr }
    }

    fn all(&self) -> u64 {
        crate::graph::low_bits(self.order.len())
    }

    /// Mask of positions strictly after `p`.
    fn after(p: usize) -> u64 {
        if p >= 63 {
            0
        } else {
            !0u64 << (p + 1)
        }
    }
}

/// Every independent set of one fixed size, each emitted once as a sorted
/// vertex list. Emission order is unspecified.
pub struct IndependentSets {
    ord: Ordered,
    m: usize,
    stack: Vec<(Vec<usize>, u64)>,
}

impl Iterator for IndependentSets {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Vec<Vertex>> {
        while let Some((chosen, cand)) = self.stack.pop() {
            if chosen.len() == self.m {
                let mut set: Vec<Vertex> = chosen.iter().map(|&p| self.ord.order[p]).collect();
                set.sort_unstable();
                return Some(set);
            }
            let need = self.m - chosen.len();
            let ps: Vec<usize> = bits(cand).collect();
            for (i, &p) in ps.iter().enumerate().rev() {
                if ps.len() - i < need {
                    continue;
                }
                let mut next = chosen.clone();
                next.push(p);
                self.stack.push((next, cand & Ordered::after(p) & !self.ord.nbr[p]));
            }
        }
        None
    }
}

pub fn independent_sets_of_size(g: &Graph, m: usize) -> IndependentSets {
    let ord = Ordered::new(g, true);
    let all = ord.all();
    IndependentSets { ord, m, stack: vec![(Vec::new(), all)] }
}

/// σₘ: the minimum degree sum of an independent m-set, +∞ when α < m.
pub fn sigma_m(g: &Graph, m: usize) -> ExtendedValue {
    let ord = Ordered::new(g, false);
    let mut best = u64::MAX;
    // candidates are visited in ascending degree, so the r lowest set bits of
    // `cand` carry the r smallest remaining degrees
    fn lower_bound(ord: &Ordered, cand: u64, r: usize) -> Option<u64> {
        let mut sum = 0;
        let mut it = bits(cand);
        for _ in 0..r {
            sum += ord.degree[it.next()?];
        }
        Some(sum)
    }
    fn go(ord: &Ordered, cand: u64, left: usize, partial: u64, best: &mut u64) {
        if left == 0 {
            *best = (*best).min(partial);
            return;
        }
        match lower_bound(ord, cand, left) {
            Some(lb) if partial + lb < *best => {}
            _ => return,
        }
        for p in bits(cand) {
            if (cand & Ordered::after(p)).count_ones() as usize + 1 < left {
                break;
            }
            go(ord, cand & Ordered::after(p) & !ord.nbr[p], left - 1, partial + ord.degree[p], best);
        }
    }
    go(&ord, ord.all(), m, 0, &mut best);
    if best == u64::MAX {
        ExtendedValue::Infinite
    } else {
        ExtendedValue::Finite(best)
    }
}

/// σₜᵐ: the minimum of Δₜ(X) over independent m-sets X, +∞ when α < m.
pub fn sigma_t_m(g: &Graph, t: usize, m: usize) -> Result<ExtendedValue, InvariantError> {
    if t == 0 || m < t {
        return Err(InvariantError::InvalidArgument(format!("σ_t^m needs m ≥ t ≥ 1, got t={t}, m={m}")));
    }
    // descending degree order: the first t picks of any set are its t largest
    let ord = Ordered::new(g, true);
    fn extendable(ord: &Ordered, cand: u64, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < left {
            return false;
        }
        bits(cand).any(|p| extendable(ord, cand & Ordered::after(p) & !ord.nbr[p], left - 1))
    }
    fn go(ord: &Ordered, cand: u64, picked: usize, t: usize, m: usize, partial: u64, best: &mut u64) {
        if picked == t {
            if partial < *best && extendable(ord, cand, m - t) {
                *best = partial;
            }
            return;
        }
        // remaining top-t picks are at least the smallest remaining degrees
        let ps: Vec<usize> = bits(cand).collect();
        if ps.len() < m - picked {
            return;
        }
        let lb: u64 = ps.iter().rev().take(t - picked).map(|&p| ord.degree[p]).sum();
        if partial + lb >= *best {
            return;
        }
        for &p in &ps {
            go(ord, cand & Ordered::after(p) & !ord.nbr[p], picked + 1, t, m, partial + ord.degree[p], best);
        }
    }
    let mut best = u64::MAX;
    go(&ord, ord.all(), 0, t, m, 0, &mut best);
    Ok(if best == u64::MAX { ExtendedValue::Infinite } else { ExtendedValue::Finite(best) })
}

/// α(G) by branch and bound; 0 for the null graph.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// One maximum independent set, sorted.
pub fn maximum_independent_set(g: &Graph) -> Vec<Vertex> {
    let ord = Ordered::new(g, true);
    fn go(ord: &Ordered, cand: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cand == 0 {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        if cur.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        // branch on the candidate with most candidate neighbors
        let p = bits(cand).max_by_key(|&p| (ord.nbr[p] & cand).count_ones()).unwrap();
        if (ord.nbr[p] & cand) == 0 {
            // no edges left among candidates: take them all
            let before = cur.len();
            cur.extend(bits(cand));
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            cur.truncate(before);
            return;
        }
        cur.push(p);
        go(ord, cand & !(1 << p) & !ord.nbr[p], cur, best);
        cur.pop();
        go(ord, cand & !(1 << p), cur, best);
    }
    let mut best = Vec::new();
    go(&ord, ord.all(), &mut Vec::new(), &mut best);
    let mut set: Vec<Vertex> = best.into_iter().map(|p| ord.order[p]).collect();
    set.sort_unstable();
    set
}

/// Maximum number of internally vertex-disjoint s–t paths for non-adjacent
/// s ≠ t, by unit-capacity flow on the vertex-split digraph.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex) -> usize {
    assert!(s != t && !g.has_edge(s, t));
    let n = g.order();
    let size = 2 * n;
    let big = n as i32 + 1;
    // node 2v is v_in, 2v+1 is v_out
    let mut cap = vec![0i32; size * size];
    for v in 0..n {
        cap[2 * v * size + 2 * v + 1] = if v == s || v == t { big } else { 1 };
        for &w in g.neighbors(v) {
            cap[(2 * v + 1) * size + 2 * w] = big;
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; size];
    loop {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for w in 0..size {
                if prev[w] == usize::MAX && cap[u * size + w] > 0 {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut w = sink;
        while w != src {
            let u = prev[w];
            cap[u * size + w] -= 1;
            cap[w * size + u] += 1;
            w = u;
        }
        flow += 1;
    }
}

/// κ(G): the fewest vertices whose removal disconnects G or leaves a single
/// vertex. κ(Kₙ) = n − 1, and κ = 0 for n ≤ 1 or disconnected G.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    // some vertex among the first κ+1 lies outside a minimum separator
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j != i && !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, edgeless, petersen};

    #[test]
    fn extended_value_order() {
        assert!(ExtendedValue::Infinite > ExtendedValue::Finite(u64::MAX));
        assert!(ExtendedValue::Infinite.at_least(1_000_000));
        assert!(!ExtendedValue::Finite(5).at_least(6));
        assert!(ExtendedValue::Finite(6).scaled_exceeds(2, 11));
        assert!(!ExtendedValue::Finite(6).scaled_exceeds(2, 12));
        assert_eq!(ExtendedValue::Infinite.to_string(), "+inf");
    }

    #[test]
    fn delta_examples() {
        let k34 = complete_bipartite(3, 4);
        assert_eq!(delta_t(&k34, &[0, 1, 2], 2), Ok(8));
        assert_eq!(delta_t(&k34, &[5], 1), Ok(3));
        assert_eq!(delta_t(&cycle(5), &[0, 2, 4], 2), Ok(4));
        assert!(delta_t(&cycle(5), &[0], 2).is_err());
        assert!(delta_t(&cycle(5), &[0], 0).is_err());
    }

    #[test]
    fn sigma_examples() {
        use ExtendedValue::*;
        let k34 = complete_bipartite(3, 4);
        assert_eq!(sigma_m(&k34, 2), Finite(6));
        assert_eq!(sigma_m(&complete(4), 2), Infinite);
        assert_eq!(sigma_m(&petersen(), 2), Finite(6));
        assert_eq!(sigma_t_m(&k34, 2, 3), Ok(Finite(6)));
        assert_eq!(sigma_t_m(&complete_bipartite(3, 3), 2, 3), Ok(Finite(6)));
        assert_eq!(sigma_t_m(&complete(4), 2, 2), Ok(Infinite));
        assert!(sigma_t_m(&k34, 3, 2).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&complete_bipartite(3, 4)), 4);
        assert_eq!(independence_number(&petersen()), 4);
        assert_eq!(independence_number(&edgeless(5)), 5);
        assert_eq!(independence_number(&Graph::empty(0)), 0);
        let s = maximum_independent_set(&petersen());
        assert!(petersen().is_independent(&s));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(connectivity(&complete_bipartite(3, 4)), 3);
        assert_eq!(connectivity(&petersen()), 3);
        assert_eq!(connectivity(&edgeless(4)), 0);
        assert_eq!(connectivity(&complete(5)), 4);
        assert_eq!(connectivity(&Graph::empty(1)), 0);
        assert_eq!(connectivity(&cycle(6)), 2);
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(connectivity(&two_triangles), 0);
    }

    #[test]
    fn independent_set_stream() {
        assert_eq!(independent_sets_of_size(&complete(3), 2).count(), 0);
        let mut pairs: Vec<_> = independent_sets_of_size(&cycle(5), 2).collect();
        pairs.sort();
        assert_eq!(pairs, vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(independent_sets_of_size(&cycle(5), 3).count(), 0);
        assert_eq!(independent_sets_of_size(&cycle(5), 0).count(), 1);
    }
}
