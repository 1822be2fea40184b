use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use kecrit_core::format::{parse_edge_list, parse_graph6_corpus, Format};
use kecrit_core::{Error, Graph};

use crate::CliError;

pub fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))
}

fn format_from_extension(path: &str) -> Option<Format> {
    match Path::new(path).extension()?.to_str()? {
        "g6" | "graph6" => Some(Format::Graph6),
        "edges" | "el" | "txt" => Some(Format::EdgeList),
        _ => None,
    }
}

/// An edge list starts (after comments) with a line holding only the vertex
/// count; anything else is taken as graph6.
fn sniff_format(bytes: &[u8]) -> Format {
    let text = String::from_utf8_lossy(bytes);
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.parse::<usize>().is_ok() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn detect_format(path: &str, explicit: Option<Format>, bytes: &[u8]) -> Format {
    explicit.or_else(|| format_from_extension(path)).unwrap_or_else(|| sniff_format(bytes))
}

/// Every graph in the input: one per line for graph6, exactly one for an
/// edge list.
pub fn load_graphs(path: &str, explicit: Option<Format>) -> Result<Vec<Graph>, CliError> {
    let bytes = read_input(path)?;
    let graphs = match detect_format(path, explicit, &bytes) {
        Format::Graph6 => parse_graph6_corpus(&bytes),
        Format::EdgeList => parse_edge_list(&bytes).map(|g| vec![g]),
    }
    .map_err(|e| CliError::from_core(e).context(path))?;
    if graphs.is_empty() {
        return Err(CliError::usage(format!("{path}: no graphs in input")));
    }
    Ok(graphs)
}

pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::usage(format!("writing {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::usage(format!("writing stdout: {e}")))
        }
    }
}

/// The oracle cap, optionally overridden by `KECRIT_MAX_N`.
pub fn oracle_cap() -> Result<usize, CliError> {
    match std::env::var("KECRIT_MAX_N") {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("KECRIT_MAX_N={v:?} is not a vertex count")))?;
            let limit = kecrit_core::oracle::ORACLE_MAX_N;
            if n > limit {
                return Err(CliError::from_core(Error::SizeLimit { what: "KECRIT_MAX_N", n, limit }));
            }
            Ok(n)
        }
        Err(_) => Ok(kecrit_core::report::DEFAULT_ORACLE_MAX_N),
    }
}
