//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's algorithms beyond `Graph` accessors.
#![allow(dead_code)]

use twofactor::graph::Graph;

/// All m-subsets of 0..n as bitmasks.
pub fn subsets(n: usize, m: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == m {
            out.push(mask);
        }
    }
    out
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Sum of the t largest degrees in `set`.
pub fn top_t_degree_sum(g: &Graph, set: &[usize], t: usize) -> u64 {
    let mut d: Vec<u64> = set.iter().map(|&v| g.degree(v) as u64).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d.iter().take(t).sum()
}

/// `None` stands for +inf.
pub fn naive_sigma_m(g: &Graph, m: usize) -> Option<u64> {
    subsets(g.order(), m)
        .into_iter()
        .map(members)
        .filter(|s| independent(g, s))
        .map(|s| s.iter().map(|&v| g.degree(v) as u64).sum())
        .min()
}

pub fn naive_sigma_t_m(g: &Graph, t: usize, m: usize) -> Option<u64> {
    subsets(g.order(), m)
        .into_iter()
        .map(members)
        .filter(|s| independent(g, s))
        .map(|s| top_t_degree_sum(g, &s, t))
        .min()
}

pub fn naive_alpha(g: &Graph) -> usize {
    (0u64..(1u64 << g.order()))
        .filter(|&mask| independent(g, &members(mask)))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn connected_without(g: &Graph, removed: u64) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if removed >> w & 1 == 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// Smallest vertex cut by exhaustive search; n − 1 for complete graphs.
pub fn naive_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !connected_without(g, 0) {
        return 0;
    }
    for size in 1..n.saturating_sub(1) {
        for cut in subsets(n, size) {
            if !connected_without(g, cut) {
                return size;
            }
        }
    }
    n - 1
}

/// Number of components of a 2-regular spanning subgraph given as an edge
/// subset, or `None` if the subset is not 2-regular on every vertex.
fn two_regular_components(n: usize, edges: &[(usize, usize)], pick: u64) -> Option<usize> {
    let mut deg = vec![0; n];
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if pick >> i & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    if deg.iter().any(|&d| d != 2) {
        return None;
    }
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Some(comps)
}

/// Whether some spanning 2-regular subgraph has exactly k components, by
/// enumerating n-edge subsets. Only sensible for small edge counts.
pub fn naive_has_two_factor(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() < n || n < 3 {
        return false;
    }
    let mut found = false;
    choose(edges.len(), n, 0, 0, &mut |pick| {
        if two_regular_components(n, &edges, pick) == Some(k) {
            found = true;
        }
        found
    });
    found
}

/// Calls `f` for each `take`-subset of 0..len; stops when `f` returns true.
fn choose(len: usize, take: usize, from: usize, acc: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
    if take == 0 {
        return f(acc);
    }
    for i in from..len {
        if len - i < take {
            break;
        }
        if choose(len, take - 1, i + 1, acc | 1 << i, f) {
            return true;
        }
    }
    false
}

/// graph6 encoding written from the format description, for n ≤ 62.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut out = vec![(n as u8) + 63];
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (p, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - p);
            }
        }
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Uniform G(n, p) sample.
pub fn random_graph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
