//! Text encodings: a plain edge list and graph6.
//!
//! Edge lists carry one `u v` pair per line with an optional leading
//! `p=<n>` line for trailing isolated vertices. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

fn parse_err(offset: usize, message: impl Into<String>) -> CodecError {
    CodecError::Parse {
        offset,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            _ => Err(format!("unknown graph format {s:?}")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

impl GraphFormat {
    /// Guesses the format: a single whitespace-free token that is not a
    /// `p=` declaration is graph6, anything else an edge list.
    pub fn detect(text: &str) -> GraphFormat {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        match (lines.next(), lines.next()) {
            (Some(first), None)
                if !first.contains(char::is_whitespace) && !first.starts_with("p=") =>
            {
                GraphFormat::Graph6
            }
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, CodecError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let lead = raw.len() - raw.trim_start().len();
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = line_start + lead;
        if let Some(rest) = line.strip_prefix("p=") {
            if seen_edge || declared.is_some() {
                return Err(parse_err(at, "p=<n> must be the first line"));
            }
            let n = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(at + 2, format!("bad vertex count {rest:?}")))?;
            declared = Some(n);
            continue;
        }
        seen_edge = true;
        let mut fields = Vec::with_capacity(2);
        let mut col = 0;
        for tok in line.split_whitespace() {
            let pos = col + line[col..].find(tok).unwrap_or(0);
            col = pos + tok.len();
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(at + pos, format!("expected a vertex index, got {tok:?}")))?;
            fields.push(v);
        }
        match fields[..] {
            [u, v] => edges.push((u, v)),
            _ => {
                return Err(parse_err(
                    at,
                    format!("expected two indices per line, got {}", fields.len()),
                ))
            }
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let p = declared.unwrap_or(inferred);
    Ok(Graph::new(p, edges)?)
}

/// Canonical edge-list text. A `p=` line is written only when it cannot be
/// inferred from the largest endpoint.
pub fn format_edge_list(g: &Graph) -> String {
    let inferred = g
        .edges()
        .iter()
        .map(|&(_, v)| v + 1)
        .max()
        .unwrap_or(0);
    let mut lines = Vec::with_capacity(g.size() + 1);
    if g.order() != inferred {
        lines.push(format!("p={}", g.order()));
    }
    lines.extend(g.edges().iter().map(|&(u, v)| format!("{u} {v}")));
    lines.join("\n")
}

const G6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    let trimmed = text.trim_end();
    let (base, body) = match trimmed.strip_prefix(G6_HEADER) {
        Some(rest) => (G6_HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let sixbits = |i: usize| -> Result<u64, CodecError> {
        match body.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) => Err(parse_err(base + i, format!("byte {b} outside 63..=126"))),
            None => Err(parse_err(base + i, "unexpected end of input")),
        }
    };

    let (n, mut pos) = match body.first() {
        None => return Err(parse_err(base, "empty graph6 string")),
        Some(126) => {
            if body.get(1) == Some(&126) {
                let mut n = 0;
                for i in 2..8 {
                    n = (n << 6) | sixbits(i)?;
                }
                (n as usize, 8)
            } else {
                let mut n = 0;
                for i in 1..4 {
                    n = (n << 6) | sixbits(i)?;
                }
                (n as usize, 4)
            }
        }
        Some(_) => (sixbits(0)? as usize, 1),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() - pos != needed {
        return Err(parse_err(
            base + pos,
            format!(
                "expected {needed} adjacency bytes for n={n}, found {}",
                body.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = sixbits(pos)?;
                pos += 1;
            }
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && chunk & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn format_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
