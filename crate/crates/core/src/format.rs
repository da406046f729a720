//! Text encodings for graphs: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each offset by 63.
//! The vertex count is a single byte `n + 63` for `n <= 62`, or `~` followed
//! by three 6-bit groups for `n <= 258047`.
//!
//! The edge-list form is an optional `n <count>` line followed by one
//! `a b` pair per line; blank lines and lines starting with `#` are skipped.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// `.g6` is graph6, anything else is read as an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text, None),
    }
}

pub fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text, Format::from_path(path))
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("graph6: byte {b:#x} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err("graph6: empty input")),
        [126, 126, ..] => return Err(parse_err("graph6: 8-byte size header unsupported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err("graph6: truncated size header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!(
            "graph6: expected {expected} data bytes for n = {n}, got {}",
            body.len()
        )));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_err("graph6: nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for b in 1..n {
        for a in 0..b {
            if bit(i) {
                edges.push((a, b));
            }
            i += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for b in 1..n {
        for a in 0..b {
            acc = (acc << 1) | g.has_edge(a, b) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the edge-list format. Without an `n` header the vertex count is
/// taken from `n` if given, otherwise from the largest id seen.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut declared = n;
    let mut edges = Vec::new();
    let mut max_id = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(format!("line {}: bad token {t:?}", lineno + 1)))
        };
        match tokens.as_slice() {
            ["n", count] if edges.is_empty() => declared = Some(num(count)?),
            [a, b] => {
                let (a, b) = (num(a)?, num(b)?);
                max_id = Some(max_id.unwrap_or(0).max(a).max(b));
                edges.push((a, b));
            }
            _ => {
                return Err(parse_err(format!(
                    "line {}: expected `a b`, got {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    let n = match (declared, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => return Err(parse_err("edge list: no vertices")),
    };
    Graph::new(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &(a, b) in g.edges() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}
