use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    /// `n m` header, then one `u v` pair per line.
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Edge-list text. Blank lines and lines starting with `#` are skipped; the
/// header's edge count must match the number of edge lines.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(line, format!("expected two integers, found `{l}`")));
        }
        let p = |s: &str| s.parse::<usize>().map_err(|e| parse_err(line, format!("`{s}`: {e}")));
        Ok((p(parts[0])?, p(parts[1])?))
    };
    let (n, m) = nums(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(nums(line, l)?);
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes one graph6 string (surrounding whitespace and an optional
/// `>>graph6<<` header are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6("byte outside 63..=126".into()));
    }
    let (n, rest) = match bytes {
        [] => return Err(FormatError::Graph6("empty input".into())),
        [126, 126, ..] => return Err(FormatError::Graph6("graphs above 258047 vertices are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = (usize::from(a - 63) << 12) | (usize::from(b - 63) << 6) | usize::from(c - 63);
            (n, rest)
        }
        [126, ..] => return Err(FormatError::Graph6("truncated size field".into())),
        [x, rest @ ..] => (usize::from(x - 63), rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return Err(FormatError::Graph6(format!(
            "{n} vertices need {need} data bytes, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (pairs..need * 6).any(bit) {
        return Err(FormatError::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 1 << 18, "graph6 writer supports fewer than 262144 vertices");
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Picks a parser: graph6 when the text is a single printable token without
/// whitespace, edge list otherwise.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, FormatError> {
    let format = format.unwrap_or_else(|| {
        let t = text.trim();
        if !t.is_empty() && !t.contains(char::is_whitespace) && !t.chars().all(|c| c.is_ascii_digit()) {
            GraphFormat::Graph6
        } else {
            GraphFormat::EdgeList
        }
    });
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}
