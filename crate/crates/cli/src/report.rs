//! Pieces shared by every report: checklist lines, dual-graph statistics and
//! the plain-text writer.

use std::fmt::{self, Write as _};

use dualgraph::bounds::menger_diameter_bounds;
use dualgraph::{Diameter, FieldSpec, Graph};
use serde::{Serialize, Serializer};

use crate::CliError;

/// Outcome of one checklist line. A line whose hypotheses are not all met is
/// never a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::NotApplicable(why) => write!(f, "not applicable: {why}"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    #[serde(skip)]
    unmet: String,
}

impl Hypothesis {
    pub fn new(name: &str, holds: bool) -> Self {
        Self { name: name.to_string(), holds, unmet: format!("not {name}") }
    }

    /// A hypothesis whose failure is explained by `unmet` rather than "not <name>".
    pub fn explained(name: &str, holds: bool, unmet: &str) -> Self {
        Self { name: name.to_string(), holds, unmet: unmet.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub check: &'static str,
    pub statement: &'static str,
    pub field: Option<FieldSpec>,
    pub hypotheses: Vec<Hypothesis>,
    pub status: Status,
    pub detail: String,
}

impl CheckLine {
    /// Runs `verify` only when every hypothesis holds.
    pub fn run(
        check: &'static str,
        statement: &'static str,
        field: Option<FieldSpec>,
        hypotheses: Vec<Hypothesis>,
        verify: impl FnOnce() -> Result<(bool, String), CliError>,
    ) -> Result<Self, CliError> {
        let (status, detail) = match hypotheses.iter().find(|h| !h.holds) {
            Some(h) => (Status::NotApplicable(h.unmet.clone()), String::new()),
            None => {
                let (ok, detail) = verify()?;
                (if ok { Status::Pass } else { Status::Fail }, detail)
            }
        };
        Ok(Self { check, statement, field, hypotheses, status, detail })
    }

    fn heading(&self) -> String {
        match self.field {
            Some(f) => format!("{} [{f}]", self.check),
            None => self.check.to_string(),
        }
    }
}

/// One warning per checklist line whose hypotheses were not met.
pub fn warnings(checklist: &[CheckLine]) -> Vec<String> {
    checklist
        .iter()
        .filter_map(|c| match &c.status {
            Status::NotApplicable(why) => Some(format!("{}: {why}", c.heading())),
            _ => None,
        })
        .collect()
}

/// Size, connectivity and diameter of a dual graph, with vertices named by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub vertex_connectivity: Option<usize>,
    pub vertex_cut: Option<Vec<String>>,
    pub edge_connectivity: Option<usize>,
    pub edge_cut: Option<Vec<(String, String)>>,
    pub diameter: Diameter,
    pub adjacency: Vec<(String, String)>,
}

impl GraphStats {
    /// Connectivity fields stay empty on a single vertex.
    pub fn of(g: &Graph) -> Result<Self, CliError> {
        let pair = |(u, v): (usize, usize)| (g.label(u).to_string(), g.label(v).to_string());
        let mut stats = GraphStats {
            vertices: g.order(),
            edges: g.size(),
            min_degree: g.min_degree(),
            vertex_connectivity: None,
            vertex_cut: None,
            edge_connectivity: None,
            edge_cut: None,
            diameter: g.diameter()?,
            adjacency: g.edges().into_iter().map(pair).collect(),
        };
        if g.order() >= 2 {
            let r = g.connectivity_report()?;
            stats.vertex_connectivity = Some(r.vertex_connectivity);
            stats.vertex_cut = r.vertex_cut.map(|c| c.into_iter().map(|v| g.label(v).to_string()).collect());
            stats.edge_connectivity = Some(r.edge_connectivity);
            stats.edge_cut = Some(r.edge_cut.into_iter().map(pair).collect());
        }
        Ok(stats)
    }

    /// Checks `diam <= ⌊(s-2)/κ⌋ + 1` and `diam <= ⌊t/λ⌋` on a connected graph.
    pub fn diameter_bounds_check(&self) -> Result<CheckLine, CliError> {
        let connected = self.diameter.finite().is_some();
        CheckLine::run(
            "diameter_bounds_from_connectivity",
            "a k-connected graph has diameter at most (s-2)/k + 1; a k-edge-connected one at most t/k",
            None,
            vec![Hypothesis::new("at least two vertices", self.vertices >= 2), Hypothesis::new("connected", connected)],
            || {
                let (s, t) = (self.vertices as u64, self.edges as u64);
                let d = self.diameter.finite().unwrap_or(usize::MAX) as u64;
                let kappa = self.vertex_connectivity.unwrap_or(0) as u64;
                let lambda = self.edge_connectivity.unwrap_or(0) as u64;
                let (by_vertices, _) = menger_diameter_bounds(s, t, kappa)?;
                let by_edges = t / lambda;
                Ok((
                    d <= by_vertices && d <= by_edges,
                    format!("diameter {d}, vertex bound {by_vertices} (kappa {kappa}), edge bound {by_edges} (lambda {lambda})"),
                ))
            },
        )
    }
}

/// Accumulates `key: value` lines for text reports.
#[derive(Default)]
pub struct TextWriter {
    out: String,
}

impl TextWriter {
    pub fn line(&mut self, key: &str, value: impl fmt::Display) {
        let _ = writeln!(self.out, "{key}: {value}");
    }

    pub fn raw(&mut self, text: impl fmt::Display) {
        let _ = writeln!(self.out, "{text}");
    }

    pub fn graph(&mut self, title: &str, g: &GraphStats) {
        self.raw(format!("{title}:"));
        self.line("  vertices", g.vertices);
        self.line("  edges", g.edges);
        self.line("  min degree", opt(&g.min_degree));
        self.line("  vertex connectivity", opt(&g.vertex_connectivity));
        if let Some(cut) = &g.vertex_cut {
            self.line("  vertex cut", braces(cut));
        }
        self.line("  edge connectivity", opt(&g.edge_connectivity));
        if let Some(cut) = &g.edge_cut {
            self.line("  edge cut", pairs(cut));
        }
        self.line("  diameter", g.diameter);
        self.line("  adjacency", pairs(&g.adjacency));
    }

    pub fn checklist(&mut self, lines: &[CheckLine], warnings: &[String]) {
        self.raw("checklist:");
        for c in lines {
            let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
            self.raw(format!("  {}: {}{detail}", c.heading(), c.status));
        }
        if !warnings.is_empty() {
            self.raw("warnings:");
            for w in warnings {
                self.raw(format!("  {w}"));
            }
        }
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

pub fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

pub fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn braces<T: fmt::Display>(items: &[T]) -> String {
    format!("{{{}}}", items.iter().map(T::to_string).collect::<Vec<_>>().join(" "))
}

pub fn pairs<A: fmt::Display, B: fmt::Display>(items: &[(A, B)]) -> String {
    if items.is_empty() {
        return "none".into();
    }
    items.iter().map(|(a, b)| format!("{a}~{b}")).collect::<Vec<_>>().join(" ")
}
