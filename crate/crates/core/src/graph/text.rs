use super::{Graph, GraphError, Vertex};

/// Parses the adjacency-list text format: one `u v` edge per line, 0-based.
///
/// A line holding a single integer fixes the vertex count (needed for
/// isolated trailing vertices); otherwise `n` is one more than the largest
/// index seen. Blank lines and `#` comments are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| GraphError::EdgeList { line: idx + 1, reason };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("'{s}' is not a vertex index")));
        match fields.as_slice() {
            [n] => {
                if declared.is_some() {
                    return Err(err("vertex count declared twice".into()));
                }
                declared = Some(parse(n)?);
            }
            [u, v] => {
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(err(format!("expected 'u v', found '{line}'"))),
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < implied => {
            return Err(GraphError::EdgeList {
                line: 0,
                reason: format!("declared {n} vertices but index {} used", implied - 1),
            })
        }
        Some(n) => n,
        None => implied,
    };
    Graph::from_edges(n, edges)
}

/// Writes the adjacency-list format with a leading vertex-count line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
