//! Facet files: one facet per line, whitespace-separated vertex tokens, and
//! lines starting with `#` are comments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::SimplicialComplex;

impl SimplicialComplex {
    pub fn parse_facet_file(text: &str) -> Result<Self> {
        let mut facets = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            for t in &tokens {
                super::validate_label(t).map_err(|e| Error::Parse { line: n + 1, message: e.to_string() })?;
            }
            facets.push(tokens);
        }
        if facets.is_empty() {
            return Err(Error::Parse { line: 0, message: "no facets found".into() });
        }
        Self::from_facets(facets)
    }

    /// Facets in stored order, vertices in index order.
    pub fn to_facet_file(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            out.push_str(&self.set_labels(f).join(" "));
            out.push('\n');
        }
        out
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_facet_file(s)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_facet_file())
    }
}
