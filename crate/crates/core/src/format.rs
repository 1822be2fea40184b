//! graph6 and edge-list encodings.
//!
//! graph6 follows McKay's encoding: a size prefix, then the upper triangle of
//! the adjacency matrix in column-major order packed six bits per byte, each
//! byte offset by 63. Labels are not representable in graph6 and are dropped.
//!
//! The edge-list format is line oriented: the vertex count, then one `u v`
//! pair per line, plus optional `label v name` lines. `#` starts a comment.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g6" | "graph6" => Ok(Format::Graph6),
            "edges" | "edge-list" | "edgelist" => Ok(Format::EdgeList),
            other => Err(Error::Domain(format!("unknown graph format {other:?}"))),
        }
    }
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(bytes),
        Format::EdgeList => parse_edge_list(bytes),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => to_graph6(g).into_bytes(),
        Format::EdgeList => to_edge_list(g).into_bytes(),
    }
}

/// Encodes a graph as a single graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let start = bytes.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(bytes.len());
    let end = bytes.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |p| p + 1);
    let mut offset = start;
    if bytes[start..end].starts_with(GRAPH6_HEADER) {
        offset += GRAPH6_HEADER.len();
    }
    let body = &bytes[..end];
    if offset >= body.len() {
        return Err(parse_err(offset, "empty graph6 record"));
    }
    for (i, &b) in body.iter().enumerate().skip(offset) {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte 0x{b:02x} outside graph6 range 63..=126")));
        }
    }
    let value = |i: usize| (body[i] - 63) as usize;
    let (n, data_start) = if body[offset] != 126 {
        (value(offset), offset + 1)
    } else if body.len() > offset + 1 && body[offset + 1] == 126 {
        if body.len() < offset + 8 {
            return Err(parse_err(offset, "truncated 8-byte size prefix"));
        }
        let n = (offset + 2..offset + 8).fold(0usize, |acc, i| acc << 6 | value(i));
        (n, offset + 8)
    } else {
        if body.len() < offset + 4 {
            return Err(parse_err(offset, "truncated 4-byte size prefix"));
        }
        let n = (offset + 1..offset + 4).fold(0usize, |acc, i| acc << 6 | value(i));
        (n, offset + 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[data_start..];
    if data.len() != expected {
        return Err(parse_err(
            data_start + data.len().min(expected),
            format!("expected {expected} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_err(data_start + expected - 1, "non-zero padding bits"));
    }
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
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Parses a file holding one graph6 record per line; blank lines are skipped.
pub fn parse_graph6_corpus(bytes: &[u8]) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut line_start = 0;
    for line in bytes.split(|&b| b == b'\n') {
        if line.iter().any(|b| !b.is_ascii_whitespace()) {
            graphs.push(parse_graph6(line).map_err(|e| shift_offset(e, line_start))?);
        }
        line_start += line.len() + 1;
    }
    Ok(graphs)
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        other => other,
    }
}

/// Canonical edge-list text: vertex count, label lines, then edges in sorted order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (v, name) in g.labels() {
        writeln!(out, "label {v} {name}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_err(e.valid_up_to(), "invalid UTF-8"))?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut line_start = 0;
    for raw in text.split('\n') {
        let offset = line_start;
        line_start += raw.len() + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(offset, format!("expected a vertex index, found {s:?}")))
        };
        match (n, tokens.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => return Err(parse_err(offset, "first line must hold the vertex count")),
            (Some(_), ["label", v, name]) => labels.push((num(v)?, name.to_string())),
            (Some(_), [u, v]) => edges.push((num(u)?, num(v)?)),
            (Some(_), _) => {
                return Err(parse_err(offset, format!("malformed line {:?}", content.trim())))
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing vertex count"))?;
    Graph::new(n, edges)?.with_labels(labels)
}
