//! `check-graph`: connectivity data of a graph and the screens that rule it
//! out as a dual graph.

use dualgraph::graph::hirsch_verdict;
use dualgraph::lines::{verify_curve_diameter_bound, GraphSideVerdict};
use dualgraph::{Graph, HirschVerdict};
use serde::Serialize;

use crate::report::{self, braces, opt, CheckLine, GraphStats, Hypothesis, TextWriter};
use crate::{CliError, Input};

pub const NOT_REALIZABLE: &str = "not realizable as a line-arrangement dual graph";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphCheck {
    pub input: Input,
    pub graph: GraphStats,
    pub forbidden_witness: Option<Vec<String>>,
    /// Either the obstruction verdict or `unknown`; realizability is never claimed.
    pub realizability: String,
    pub curve_bound: Option<GraphSideVerdict>,
    pub height: Option<usize>,
    pub hirsch: Option<HirschVerdict>,
    pub checklist: Vec<CheckLine>,
    pub warnings: Vec<String>,
}

/// Host labels of an induced copy of the obstruction, in pattern order.
pub fn forbidden_witness(g: &Graph) -> Result<Option<Vec<String>>, CliError> {
    Ok(g.contains_forbidden_line_graph()?.map(|e| e.host_labels))
}

pub fn check(g: &Graph, input: Input, height: Option<usize>) -> Result<GraphCheck, CliError> {
    let stats = GraphStats::of(g)?;
    let witness = forbidden_witness(g)?;
    let three_edge = stats.edge_connectivity.is_some_and(|l| l >= 3);
    let curve_bound = if three_edge && g.order() >= 4 { Some(verify_curve_diameter_bound(g)?) } else { None };

    let checklist = vec![
        stats.diameter_bounds_check()?,
        CheckLine::run(
            "curve_diameter_bound",
            "a 3-edge-connected graph with s >= 4 vertices and t edges has diameter at most t - s - 1",
            None,
            vec![Hypothesis::new("at least 4 vertices", g.order() >= 4), Hypothesis::new("3-edge-connected", three_edge)],
            || {
                let v = curve_bound.as_ref().expect("computed for 3-edge-connected input");
                Ok((v.passed, format!("diameter {}, bound {}", v.diameter, v.bound)))
            },
        )?,
    ];
    let warnings = report::warnings(&checklist);

    Ok(GraphCheck {
        input,
        realizability: if witness.is_some() { NOT_REALIZABLE.into() } else { "unknown".into() },
        hirsch: height.map(|h| hirsch_verdict(stats.diameter, h)),
        graph: stats,
        forbidden_witness: witness,
        curve_bound,
        height,
        checklist,
        warnings,
    })
}

impl GraphCheck {
    pub fn text(&self) -> String {
        let mut w = TextWriter::default();
        w.line("input", &self.input);
        w.graph("graph", &self.graph);
        w.line("forbidden witness", opt(&self.forbidden_witness.as_ref().map(|v| braces(v))));
        w.line("realizability", &self.realizability);
        w.line("height", opt(&self.height));
        w.line("hirsch", opt(&self.hirsch));
        w.checklist(&self.checklist, &self.warnings);
        w.finish()
    }
}
