//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is kept twice: a bit matrix for O(1) membership tests and sorted
//! neighbor lists for O(degree) iteration. Graphs are immutable once built.

mod canon;
mod enumerate;
mod generators;
mod graph6;
mod text;

pub use canon::{canonical_form, canonical_key, canonical_labeling, dedup_isomorphic};
pub use enumerate::{
    enumerate_nonisomorphic, enumerate_small_graphs, LabeledGraphs, MAX_ENUMERATION_ORDER, MAX_NONISOMORPHIC_ORDER,
};
pub use generators::{complete, complete_bipartite, cycle, edgeless, path, petersen, two_kk_join_complement, wheel};
pub use graph6::{from_graph6, to_graph6};
pub use text::{from_edge_list, to_edge_list};

use thiserror::Error;

/// Vertex index into `0..n`.
pub type Vertex = usize;

/// Largest order supported by the bitmask-based exact algorithms.
pub const MAX_MASK_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(Vertex, Vertex),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    nbrs: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words], nbrs: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge(u, v));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph (n ≤ 64) from adjacency rows given as bitmasks. Rows
    /// are symmetrized and the diagonal is ignored.
    pub fn from_mask_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= MAX_MASK_ORDER);
        let mut g = Graph::empty(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in bits(row) {
                if v != u && v < n {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        if self.has_edge(u, v) {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        let pos = self.nbrs[u].binary_search(&v).unwrap_err();
        self.nbrs[u].insert(pos, v);
        let pos = self.nbrs[v].binary_search(&u).unwrap_err();
        self.nbrs[v].insert(pos, u);
    }

    /// A copy of this graph with one extra edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        if u == v || u >= self.n || v >= self.n {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Number of neighbors of `v` inside `set` (the usual d(v; X)).
    pub fn degree_into(&self, v: Vertex, set: &[Vertex]) -> usize {
        set.iter().filter(|&&w| self.has_edge(v, w)).count()
    }

    /// Neighborhood of `v` as a bitmask. Only valid for n ≤ 64.
    #[inline]
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= MAX_MASK_ORDER);
        self.bits[v * self.words]
    }

    /// Mask of all vertices. Only valid for n ≤ 64.
    pub fn vertex_mask(&self) -> u64 {
        debug_assert!(self.n <= MAX_MASK_ORDER);
        low_bits(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.nbrs[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.nbrs.iter().all(|nb| nb.len() + 1 == self.n)
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Connected components of the subgraph induced by `within`, each sorted,
    /// listed by minimum vertex.
    pub fn components_within(&self, within: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut allowed = vec![false; self.n];
        for &v in within {
            allowed[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut starts: Vec<Vertex> = within.to_vec();
        starts.sort_unstable();
        let mut out = Vec::new();
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.nbrs[u] {
                    if allowed[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when every pair of vertices is joined by a path. The null graph
    /// and K₁ count as connected.
    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = (0..self.n).collect();
        self.components_within(&all).len() <= 1
    }

    /// The subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertex set of the 2-core restricted to `mask` (n ≤ 64): repeatedly
    /// strips vertices with fewer than two neighbors inside the mask.
    pub fn two_core_mask(&self, mut mask: u64) -> u64 {
        loop {
            let mut next = mask;
            for v in bits(mask) {
                if (self.neighbor_mask(v) & mask).count_ones() < 2 {
                    next &= !(1 << v);
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// True when the graph contains at least one cycle.
    pub fn has_cycle(&self) -> bool {
        // a forest has exactly n - c edges
        let all: Vec<Vertex> = (0..self.n).collect();
        let c = self.components_within(&all).len();
        self.size() + c > self.n
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Iterates the set bits of a mask in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::InvalidEdge(1, 1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::InvalidEdge(0, 3)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn wide_graph_uses_multiple_words() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert!(!g.has_edge(0, 64));
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn components_and_two_core() {
        // triangle 0-1-2 with pendant 3, isolated 4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let all: Vec<_> = (0..5).collect();
        assert_eq!(g.components_within(&all), vec![vec![0, 1, 2, 3], vec![4]]);
        assert_eq!(g.two_core_mask(g.vertex_mask()), 0b111);
        assert!(g.has_cycle());
        assert!(!path(5).has_cycle());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(5);
        let h = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
