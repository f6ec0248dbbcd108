use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated; padding bits in the last byte are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &str| GraphError::Parse { offset: base + offset, reason: reason.to_string() };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, &format!("byte {b} outside 63..=126")));
        }
    }
    if body.is_empty() {
        return Err(err(0, "missing size field"));
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(err(body.len(), "truncated 8-byte size field"));
        }
        (pack6(&body[2..8]), 8)
    } else {
        if body.len() < 4 {
            return Err(err(body.len(), "truncated 4-byte size field"));
        }
        (pack6(&body[1..4]), 4)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            body.len().min(expected),
            &format!("expected {} bytes for n={n}, found {}", expected, body.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                cur = body[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in graph6 without header. Orders up to 62 use the
/// one-byte size field; larger orders use the multi-byte forms.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend(unpack6(n, 3));
    } else {
        out.push(126);
        out.push(126);
        out.extend(unpack6(n, 6));
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn pack6(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize)
}

fn unpack6(value: usize, len: usize) -> impl Iterator<Item = u8> {
    (0..len).rev().map(move |k| ((value >> (6 * k)) & 63) as u8 + 63)
}
