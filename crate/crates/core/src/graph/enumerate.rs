use std::collections::HashSet;

use super::canon::{canonical_key_of_rows, unpack_rows};
use super::{Graph, GraphError};

/// Largest order for the built-in enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 9;
/// Alias kept for the isomorph-free generator; same bound.
pub const MAX_NONISOMORPHIC_ORDER: usize = MAX_ENUMERATION_ORDER;

fn capacity(n: usize) -> GraphError {
    GraphError::Capacity(format!(
        "built-in enumeration supports n ≤ {MAX_ENUMERATION_ORDER} (requested {n}); \
         supply a graph6 corpus file instead"
    ))
}

/// Stream of every labeled graph on `n` vertices, in edge-mask order.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut g = Graph::empty(self.n);
            for (b, &(u, v)) in self.pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.insert_edge(u, v);
                }
            }
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Every simple graph on `n` labeled vertices, optionally only the connected
/// ones. There are 2^(n(n−1)/2) labeled graphs, so beyond n = 7 prefer
/// [`enumerate_nonisomorphic`].
pub fn enumerate_small_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(capacity(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(LabeledGraphs { n, end: 1u64 << pairs.len(), pairs, next: 0, connected_only })
}

/// One canonical representative of every isomorphism class of graphs on `n`
/// vertices (connected classes only when flagged), sorted by canonical key.
///
/// Built by vertex extension: each class on `j + 1` vertices arises from some
/// class on `j` vertices plus a new vertex, and connected graphs always have a
/// vertex whose removal keeps them connected.
pub fn enumerate_nonisomorphic(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_NONISOMORPHIC_ORDER {
        return Err(capacity(n));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<u64> = vec![0];
    for j in 1..n {
        let mut next: HashSet<u64> = HashSet::new();
        let first_subset = if connected_only { 1 } else { 0 };
        for &key in &level {
            let mut rows = unpack_rows(j + 1, key);
            for subset in first_subset..(1u64 << j) {
                rows[j] = subset;
                for (i, row) in rows.iter_mut().enumerate().take(j) {
                    *row = (*row & !(1 << j)) | ((subset >> i & 1) << j);
                }
                next.insert(canonical_key_of_rows(&rows));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level.into_iter().map(|key| Graph::from_mask_rows(&unpack_rows(n, key))).collect())
}
