//! `analyze-lines`: intersections, genus and the diameter verdict of a
//! projective line arrangement.

use dualgraph::lines::{verify_curve_diameter_bound, CurveReport, ProjectivePoint};
use dualgraph::LineArrangement;
use serde::Serialize;

use crate::graph::forbidden_witness;
use crate::report::{self, braces, opt, yes_no, CheckLine, GraphStats, Hypothesis, TextWriter};
use crate::{CliError, Input};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meeting {
    /// Lines numbered from 1.
    pub lines: (usize, usize),
    pub point: ProjectivePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharedPoint {
    pub point: ProjectivePoint,
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinesAnalysis {
    pub input: Input,
    pub ambient_dim: usize,
    pub lines: usize,
    pub intersections: Vec<Meeting>,
    pub triple_point: Option<SharedPoint>,
    pub dual_graph: GraphStats,
    pub curve: Option<CurveReport>,
    pub forbidden_witness: Option<Vec<String>>,
    pub checklist: Vec<CheckLine>,
    pub warnings: Vec<String>,
}

pub fn analyze(arr: &LineArrangement, input: Input) -> Result<LinesAnalysis, CliError> {
    let graph = arr.dual_graph()?;
    let stats = GraphStats::of(&graph)?;
    let triple_point = arr
        .triple_point()
        .map(|tp| SharedPoint { point: tp.point, lines: tp.lines.iter().map(|i| i + 1).collect() });
    let s = arr.lines().len();
    let curve = if triple_point.is_none() && s >= 4 { Some(arr.canonical_hirsch_verdict()?) } else { None };
    let witness = forbidden_witness(&graph)?;
    let three_edge = stats.edge_connectivity.is_some_and(|l| l >= 3);

    let checklist = vec![
        CheckLine::run(
            "curve_diameter_bound",
            "a canonically embedded line arrangement has dual-graph diameter at most its codimension g - 2",
            None,
            vec![
                Hypothesis::new("triple-point free", triple_point.is_none()),
                Hypothesis::new("at least 4 lines", s >= 4),
                Hypothesis::explained(
                    "3-edge-connected dual graph",
                    three_edge,
                    "not 3-edge-connected, so not canonically embeddable",
                ),
            ],
            || {
                let v = verify_curve_diameter_bound(&graph)?;
                Ok((v.passed, format!("diameter {}, bound t - s - 1 = {}", v.diameter, v.bound)))
            },
        )?,
        CheckLine::run(
            "no_forbidden_induced_subgraph",
            "no line arrangement has K6 minus two disjoint edges as an induced subgraph of its dual graph",
            None,
            vec![],
            || {
                let detail = witness.as_ref().map_or("none found".into(), |w| format!("found on lines {}", braces(w)));
                Ok((witness.is_none(), detail))
            },
        )?,
    ];
    let warnings = report::warnings(&checklist);

    Ok(LinesAnalysis {
        input,
        ambient_dim: arr.ambient_dim(),
        lines: s,
        intersections: arr
            .intersections()
            .iter()
            .map(|((i, j), p)| Meeting { lines: (i + 1, j + 1), point: p.clone() })
            .collect(),
        triple_point,
        dual_graph: stats,
        curve,
        forbidden_witness: witness,
        checklist,
        warnings,
    })
}

impl LinesAnalysis {
    pub fn text(&self) -> String {
        let mut w = TextWriter::default();
        w.line("input", &self.input);
        w.line("ambient dimension", self.ambient_dim);
        w.line("lines", self.lines);
        for m in &self.intersections {
            w.line(&format!("  lines {} and {} meet at", m.lines.0, m.lines.1), &m.point);
        }
        match &self.triple_point {
            Some(tp) => w.line("triple point", format!("{} on lines {}", tp.point, braces(&tp.lines))),
            None => w.line("triple point", "none"),
        }
        w.graph("dual graph", &self.dual_graph);
        if let Some(c) = &self.curve {
            w.line("genus", c.genus);
            w.line("height", c.height);
            w.line("3-edge-connected", yes_no(c.three_edge_connected));
            w.line("trivalent", yes_no(c.trivalent));
            w.line("3-connected", c.three_connected.map_or("n/a", yes_no));
            w.line("verdict", c.verdict);
        }
        w.line("forbidden witness", opt(&self.forbidden_witness.as_ref().map(|v| braces(v))));
        w.checklist(&self.checklist, &self.warnings);
        w.finish()
    }
}
