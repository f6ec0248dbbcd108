//! Canonical labeling by partition refinement and individualization.
//!
//! Cells of an ordered partition are refined to an equitable partition by
//! splitting on neighbor counts; a search tree individualizes the vertices of
//! the first non-singleton cell. Each discrete leaf yields a relabeled
//! adjacency matrix and the lexicographically smallest one is canonical.
//! Leaves that reproduce an earlier matrix expose automorphisms, which prune
//! sibling branches lying in the same orbit of the prefix stabilizer.

use std::collections::HashSet;

use super::{bits, Graph, Vertex, MAX_MASK_ORDER};

struct Search<'a> {
    rows: &'a [u64],
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<u8>>,
}

fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(8);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                groups.clear();
                for v in bits(cell) {
                    let c = (rows[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some(slot) => slot.1 |= 1 << v,
                        None => groups.push((c, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                    groups.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(groups.iter().map(|&(_, m)| m));
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

fn leaf_key(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().map(|&v| bits(rows[v]).fold(0u64, |acc, w| acc | 1 << pos[w])).collect()
}

impl Search<'_> {
    fn same_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] as usize != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0u8; from.len()];
        for (i, &v) in from.iter().enumerate() {
            gamma[v] = to[i] as u8;
        }
        if gamma.iter().enumerate().any(|(i, &g)| g as usize != i) {
            self.autos.push(gamma);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = leaf_key(self.rows, &order);
        let Some((best_key, best_order)) = &self.best else {
            self.first = Some((key.clone(), order.clone()));
            self.best = Some((key, order));
            return;
        };
        match key.cmp(best_key) {
            std::cmp::Ordering::Equal => {
                let from = best_order.clone();
                self.record_automorphism(&from, &order);
                return;
            }
            std::cmp::Ordering::Less => {
                self.best = Some((key.clone(), order.clone()));
            }
            std::cmp::Ordering::Greater => {}
        }
        if let Some((first_key, first_order)) = &self.first {
            if *first_key == key {
                let from = first_order.clone();
                self.record_automorphism(&from, &order);
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.same_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }
}

fn canonical_order(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { rows, first: None, best: None, autos: Vec::new() };
    search.descend(vec![all], &mut Vec::new());
    search.best.expect("search reaches a leaf").1
}

/// Canonical relabeling: vertex `v` of `g` maps to label `result[v]`.
/// Isomorphic graphs map to identical relabeled graphs.
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    assert!(g.order() <= MAX_MASK_ORDER, "canonical labeling supports n ≤ 64");
    let rows: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    let order = canonical_order(&rows);
    let mut lab = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        lab[v] = i;
    }
    lab
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// Packs the upper triangle of the canonical form into a `u64` (n ≤ 11).
/// Keys are comparable only between graphs of the same order.
pub fn canonical_key(g: &Graph) -> u64 {
    assert!(g.order() <= 11, "canonical_key supports n ≤ 11");
    let rows: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    canonical_key_of_rows(&rows)
}

pub(crate) fn canonical_key_of_rows(rows: &[u64]) -> u64 {
    let order = canonical_order(rows);
    pack_rows(&leaf_key(rows, &order))
}

pub(crate) fn pack_rows(rows: &[u64]) -> u64 {
    let mut key = 0u64;
    for (j, row) in rows.iter().enumerate().skip(1) {
        for i in 0..j {
            if row >> i & 1 == 1 {
                key |= 1 << (j * (j - 1) / 2 + i);
            }
        }
    }
    key
}

pub(crate) fn unpack_rows(n: usize, key: u64) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if key >> (j * (j - 1) / 2 + i) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

/// Keeps the first graph of every isomorphism class, preserving input order.
pub fn dedup_isomorphic<I>(graphs: I) -> Vec<Graph>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let rows: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
        let key = leaf_key(&rows, &canonical_order(&rows));
        if seen.insert((g.order(), key)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, edgeless, petersen, wheel};

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [petersen(), wheel(8).unwrap(), complete_bipartite(3, 5), edgeless(7), cycle(9)] {
            let c = canonical_form(&g);
            for seed in 0..20 {
                assert_eq!(canonical_form(&shuffled(&g, seed)), c);
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 versus two triangles: both 2-regular on 6 vertices
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_key(&cycle(6)), canonical_key(&two_triangles));
    }

    #[test]
    fn pack_unpack() {
        let g = petersen().induced_subgraph(&[0, 1, 2, 3, 4, 5, 7, 9]);
        let rows: Vec<u64> = (0..8).map(|v| g.neighbor_mask(v)).collect();
        assert_eq!(unpack_rows(8, pack_rows(&rows)), rows);
    }

    #[test]
    fn dedup_keeps_one_per_class() {
        let graphs = (0..10).map(|s| shuffled(&petersen(), s)).chain([cycle(10)]);
        assert_eq!(dedup_isomorphic(graphs).len(), 2);
    }
}
