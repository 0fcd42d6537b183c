//! graph6 and plain edge-list formats.
//!
//! graph6 packs the upper adjacency triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each written as the
//! byte `63 + group`. Orders up to 62 use a single header byte `63 + n`;
//! larger orders use `~` followed by three 6-bit groups.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(Error::Graph6(
            "sparse6/digraph6 input is not supported".into(),
        ));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "illegal character {:?} at offset {pos}",
            bytes[pos] as char
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::Graph6(
                "orders above 258047 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated extended header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(Error::Graph6(format!(
                "non-canonical extended header for order {n}"
            )));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut rows = vec![0u64; n];
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            i += 1;
        }
    }
    Graph::from_adjacency(rows)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + (n >> shift & 63) as u8) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (group << (6 - filled))) as char);
    }
    out
}

/// Parses `"n m"` followed by `m` lines `"u v"` (0-indexed). Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let (n, m) = parse_pair(header)?;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges).map_err(|e| Error::EdgeList(e.to_string()))
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!(
            "expected two integers, got {line:?}"
        ))),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads one or more graphs: an edge list when the first meaningful line has
/// two whitespace-separated fields, otherwise one graph6 string per line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(Error::Graph6("no graph in input".into())),
        Some(l) if l.split_whitespace().count() >= 2 => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect(),
    }
}
