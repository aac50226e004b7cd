use super::{Graph, GraphError};

/// Parses the plain edge-list format: the first token is the vertex count,
/// then one `u v` pair per line. Blank lines and `#` comments are skipped;
/// duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let bad = |line: usize, message: String| GraphError::EdgeList { line, message };

    let (first_line, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing vertex count".into()))?;
    let mut header_tokens = header.split_whitespace();
    let n: usize = header_tokens
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|e| bad(first_line, format!("vertex count: {e}")))?;
    if header_tokens.next().is_some() {
        return Err(bad(
            first_line,
            "expected only the vertex count on the first line".into(),
        ));
    }

    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(bad(line, format!("expected `u v`, found {content:?}")));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| bad(line, format!("{t:?}: {e}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}
