//! Edge-list files: one edge per line as two whitespace-separated 1-based
//! node labels. Blank lines and lines starting with `#` are skipped. The
//! largest label sets the node count.

use std::collections::HashSet;
use std::path::Path;

use ctqw_core::Graph;

use crate::error::{CliError, Result};

pub fn load_edge_list(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text, path)
}

pub fn parse_edge_list(text: &str, path: &Path) -> Result<Graph> {
    let fail = |line: usize, message: String| CliError::EdgeList {
        path: path.to_path_buf(),
        line,
        message,
    };

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_label = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(fail(line, format!("expected two node labels, found {}", tokens.len())));
        }
        let mut labels = [0usize; 2];
        for (slot, token) in labels.iter_mut().zip(&tokens) {
            let value: i64 = token
                .parse()
                .map_err(|_| fail(line, format!("non-integer token {token:?}")))?;
            if value < 1 {
                return Err(fail(line, format!("node label {value} is below 1")));
            }
            *slot = value as usize;
        }
        let [a, b] = labels;
        if a == b {
            return Err(fail(line, format!("self-loop on node {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(fail(line, format!("duplicate edge {a}-{b}")));
        }
        max_label = max_label.max(a).max(b);
        edges.push((a - 1, b - 1));
    }
    if edges.is_empty() {
        return Err(fail(0, "no edges".into()));
    }
    Ok(Graph::new(max_label, edges)?)
}
