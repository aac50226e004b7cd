//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let body = line.trim_end();
    let (body, base) = match body.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (body.as_bytes(), 0),
    };
    if let Some(pos) = body.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(err(
            base + pos,
            format!("byte 0x{:02x} outside graph6 range", body[pos]),
        ));
    }
    let (n, header_len) = read_order(body).map_err(|(offset, msg)| err(base + offset, msg))?;

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < need {
        return Err(err(
            base + body.len(),
            format!(
                "truncated: expected {need} data bytes for n={n}, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need {
        return Err(err(
            base + header_len + need,
            "trailing data after adjacency bits",
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn read_order(body: &[u8]) -> Result<(usize, usize), (usize, &'static str)> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize)
    };
    match body {
        [] => Err((0, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err((body.len(), "truncated 8-byte size header"));
            }
            Ok((value(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err((body.len(), "truncated 4-byte size header"));
            }
            Ok((value(&rest[..3]), 4))
        }
        [first, ..] => Ok(((first - BIAS) as usize, 1)),
    }
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= LONG_MAX, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    let width = if n <= SHORT_MAX {
        1
    } else if n <= MEDIUM_MAX {
        out.push(126);
        3
    } else {
        out.extend([126, 126]);
        6
    };
    for shift in (0..width).rev() {
        out.push((n >> (6 * shift) & 0x3f) as u8 + BIAS);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
