//! `analyze-arrangement`: heights, dual graph and section data of a rational
//! subspace arrangement.

use dualgraph::arrangement::SubsetBound;
use dualgraph::{Error, HirschVerdict, SubspaceArrangement};
use serde::Serialize;

use crate::report::{self, braces, list, opt, yes_no, CheckLine, GraphStats, Hypothesis, TextWriter};
use crate::{CliError, Input, Options};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionSummary {
    pub seed: u64,
    pub variables: usize,
    pub components: usize,
    pub heights: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementAnalysis {
    pub input: Input,
    pub variables: usize,
    pub components: usize,
    pub heights: Vec<usize>,
    pub unmixed: bool,
    pub height: Option<usize>,
    pub multiplicity: usize,
    pub dual_graph: Option<GraphStats>,
    pub hirsch: Option<HirschVerdict>,
    pub regularity_bounds: Vec<SubsetBound>,
    pub supplied_regularity: Option<usize>,
    pub section: Option<SectionSummary>,
    pub checklist: Vec<CheckLine>,
    pub warnings: Vec<String>,
}

/// Parses a `--subset` value such as `1,3,4` into zero-based indices.
pub fn parse_subset(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(CliError::Input(format!("--subset expects comma-separated component numbers from 1, got {text:?}"))),
        })
        .collect()
}

pub fn analyze(
    a: &SubspaceArrangement,
    input: Input,
    subsets: &[Vec<usize>],
    supplied_regularity: Option<usize>,
    opts: &Options,
) -> Result<ArrangementAnalysis, CliError> {
    let base = a.report(subsets)?;
    let (graph, stats) = if base.unmixed {
        let g = a.dual_graph()?;
        let stats = GraphStats::of(&g)?;
        (Some(g), Some(stats))
    } else {
        (None, None)
    };
    let unmixed = Hypothesis::new("height-unmixed", base.unmixed);
    let dim = base.common_height.map(|c| a.variables() - c);

    let mut checklist = Vec::new();
    if let Some(stats) = &stats {
        checklist.push(stats.diameter_bounds_check()?);
    } else {
        checklist.push(CheckLine::run(
            "diameter_bounds_from_connectivity",
            "a k-connected graph has diameter at most (s-2)/k + 1; a k-edge-connected one at most t/k",
            None,
            vec![unmixed.clone()],
            || unreachable!(),
        )?);
    }
    checklist.push(CheckLine::run(
        "regularity_connected_if_gorenstein",
        "a Gorenstein subspace arrangement of regularity r has an r-connected dual graph",
        None,
        vec![
            unmixed.clone(),
            Hypothesis::explained(
                "Gorenstein of supplied regularity",
                supplied_regularity.is_some(),
                "not Gorenstein of known regularity (pass --regularity to assert it)",
            ),
        ],
        || {
            let r = supplied_regularity.unwrap_or(0);
            if r == 0 {
                return Ok((true, "r = 0".into()));
            }
            let check = a.verify_regularity_connectivity(r)?;
            let cut = check.cut.map(|c| format!(", cut {}", braces(&c.iter().map(|i| i + 1).collect::<Vec<_>>())));
            Ok((check.passed, format!("r = {r}, vertex connectivity {}{}", check.vertex_connectivity, cut.unwrap_or_default())))
        },
    )?);
    let mut section = None;
    checklist.push(CheckLine::run(
        "section_preserves_dual_graph",
        "a general hyperplane section of an arrangement of dimension at least 3 keeps heights and dual graph",
        None,
        vec![unmixed, Hypothesis::explained("dimension at least 3", dim.is_some_and(|d| d >= 3), "dimension below 3")],
        || match a.generic_hyperplane_section(opts.seed) {
            Ok(s) => {
                let same = graph.as_ref().is_some_and(|g| s.dual_graph().is_ok_and(|h| h.edges() == g.edges()));
                section = Some(SectionSummary {
                    seed: opts.seed,
                    variables: s.variables(),
                    components: s.len(),
                    heights: s.heights().to_vec(),
                });
                Ok((same, format!("seed {}, {} variables", opts.seed, s.variables())))
            }
            Err(e @ Error::RetryExhausted { .. }) => Ok((false, e.to_string())),
            Err(e) => Err(e.into()),
        },
    )?);
    let warnings = report::warnings(&checklist);

    Ok(ArrangementAnalysis {
        input,
        variables: base.variables,
        components: a.len(),
        heights: base.heights,
        unmixed: base.unmixed,
        height: base.common_height,
        multiplicity: base.multiplicity,
        dual_graph: stats,
        hirsch: base.hirsch,
        regularity_bounds: base.regularity_bounds,
        supplied_regularity,
        section,
        checklist,
        warnings,
    })
}

impl ArrangementAnalysis {
    pub fn text(&self) -> String {
        let mut w = TextWriter::default();
        w.line("input", &self.input);
        w.line("variables", self.variables);
        w.line("components", self.components);
        w.line("heights", list(&self.heights));
        w.line("height-unmixed", yes_no(self.unmixed));
        w.line("height", opt(&self.height));
        w.line("multiplicity", self.multiplicity);
        match &self.dual_graph {
            Some(g) => w.graph("dual graph", g),
            None => w.line("dual graph", "n/a"),
        }
        w.line("hirsch", opt(&self.hirsch));
        for b in &self.regularity_bounds {
            w.line(&format!("regularity bound for {}", braces(&b.subset)), b.regularity_bound);
        }
        w.line("supplied regularity", opt(&self.supplied_regularity));
        if let Some(s) = &self.section {
            w.line(
                "hyperplane section",
                format!("seed {}, {} variables, {} components, heights {}", s.seed, s.variables, s.components, list(&s.heights)),
            );
        }
        w.checklist(&self.checklist, &self.warnings);
        w.finish()
    }
}
