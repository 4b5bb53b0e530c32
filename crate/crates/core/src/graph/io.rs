//! Edge-list text format: one edge `u v` per line, isolated vertices as
//! `v x`, blank lines and lines starting with `#` ignored.

use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_file(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: i + 1, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let result = match tokens.as_slice() {
            ["v", x] => g.add_vertex(x).map(|_| ()),
            [u, v] => g.add_edge(u, v),
            _ => return Err(parse_err(format!("expected two tokens, found {}", tokens.len()))),
        };
        result.map_err(|e| parse_err(e.to_string()))?;
    }
    Ok(g)
}

impl Graph {
    /// Writes isolated vertices first, then the edges in index order. The
    /// label `v` cannot appear in an edge line and is rejected.
    pub fn to_edge_file(&self) -> Result<String> {
        let mut out = String::new();
        for v in 0..self.order() {
            if self.label(v) == "v" && self.degree(v) > 0 {
                return Err(Error::BadLabel("v".into()));
            }
            if self.degree(v) == 0 {
                out.push_str(&format!("v {}\n", self.label(v)));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.label(u), self.label(v)));
        }
        Ok(out)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_file(s)
    }
}
