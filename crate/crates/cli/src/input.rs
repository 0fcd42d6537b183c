use std::io::Read;
use std::path::Path;

use misbound::io::parse_graphs;
use misbound::{Error, Graph, VertexSet};

use crate::CliError;

/// Reads graphs from a file, or stdin for `-`: graph6 one per line, or a
/// single edge list `n m` followed by `m` lines `u v`.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    let graphs = parse_graphs(&text)?;
    if graphs.is_empty() {
        return Err(CliError::Usage(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

/// Parses `"0,4,8"` (spaces and braces tolerated) into a vertex set.
pub fn parse_set(text: &str) -> Result<VertexSet, CliError> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut s = VertexSet::EMPTY;
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex {part:?} in set {text:?}")))?;
        if v >= 64 {
            return Err(Error::VertexOutOfRange { vertex: v, n: 64 }.into());
        }
        s.insert(v);
    }
    Ok(s)
}
