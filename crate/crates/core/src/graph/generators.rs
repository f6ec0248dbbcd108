//! Named graph families, including the extremal and exceptional witnesses.

use super::{Graph, GraphError};

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    g
}

/// K_{a,b}: part `0..a` fully joined to part `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.insert_edge(u, v);
        }
    }
    g
}

/// The cycle 0-1-…-(n−1)-0. For n < 3 this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.insert_edge(n - 1, 0);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// Wheel on `n` vertices: hub 0 joined to the rim cycle 1-2-…-(n−1)-1.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidParameter(format!("wheel needs at least 4 vertices, got {n}")));
    }
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(0, v);
        let next = if v + 1 == n { 1 } else { v + 1 };
        g.insert_edge(v, next);
    }
    Ok(g)
}

/// 2K_k ∨ K̄_k: cliques on `0..k` and `k..2k`, both fully joined to the
/// independent set `2k..3k`.
pub fn two_kk_join_complement(k: usize) -> Graph {
    let mut g = Graph::empty(3 * k);
    for base in [0, k] {
        for u in base..base + k {
            for v in u + 1..base + k {
                g.insert_edge(u, v);
            }
            for w in 2 * k..3 * k {
                g.insert_edge(u, w);
            }
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.insert_edge(i, (i + 1) % 5);
        g.insert_edge(i, i + 5);
        g.insert_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}
