//! `analyze-complex`: invariants of a simplicial complex and of its
//! Stanley–Reisner ring, with the checklist of dual-graph statements.

use dualgraph::bounds::{component_bound_by_degree, component_bound_by_regularity};
use dualgraph::graph::{dual_graph, hirsch_verdict, non_revisiting_path};
use dualgraph::homology::{is_cohen_macaulay, is_gorenstein, is_homology_sphere, is_normal, reduced_betti_numbers, regularity};
use dualgraph::{FieldSpec, HirschVerdict, SimplicialComplex};
use serde::Serialize;

use crate::report::{self, braces, list, opt, yes_no, CheckLine, GraphStats, Hypothesis, TextWriter};
use crate::{CliError, Input, Options};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldInvariants {
    pub field: FieldSpec,
    /// `b̃_{-1}, b̃_0, ..., b̃_d`.
    pub reduced_betti: Vec<usize>,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub homology_sphere: bool,
    pub regularity: usize,
    pub regularity_witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub input: Input,
    pub vertices: usize,
    pub facets: usize,
    pub dimension: isize,
    pub pure: bool,
    pub f_vector: Vec<u64>,
    pub h_vector: Option<Vec<i64>>,
    pub height: Option<usize>,
    pub multiplicity: Option<u64>,
    pub minimal_nonfaces: Vec<Vec<String>>,
    pub flag: bool,
    pub normal: Option<bool>,
    pub fields: Vec<FieldInvariants>,
    pub dual_graph: GraphStats,
    pub hirsch: Option<HirschVerdict>,
    pub checklist: Vec<CheckLine>,
    pub warnings: Vec<String>,
}

/// Longest non-revisiting path over all facet pairs, or the first pair with none.
struct PathSweep {
    longest: usize,
    missing: Option<(String, String)>,
}

fn path_sweep(cx: &SimplicialComplex) -> Result<PathSweep, CliError> {
    let facets = cx.facets();
    let mut sweep = PathSweep { longest: 0, missing: None };
    for (i, a) in facets.iter().enumerate() {
        for b in &facets[i + 1..] {
            match non_revisiting_path(cx, a, b)? {
                Some(p) => sweep.longest = sweep.longest.max(p.len() - 1),
                None => {
                    sweep.missing = Some((cx.set_labels(a).join(","), cx.set_labels(b).join(",")));
                    return Ok(sweep);
                }
            }
        }
    }
    Ok(sweep)
}

pub fn analyze(cx: &SimplicialComplex, input: Input, opts: &Options) -> Result<ComplexReport, CliError> {
    let pure = cx.is_pure();
    let h_vector = if pure { Some(cx.h_vector()?) } else { None };
    let height = if pure { Some(cx.height_of_ideal()?) } else { None };
    let multiplicity = if pure { Some(cx.multiplicity()?) } else { None };
    let normal = if pure { Some(is_normal(cx)?) } else { None };
    let flag = cx.is_flag();
    let nonfaces = cx.minimal_nonfaces();
    let generator_degree = nonfaces.iter().map(|f| f.len()).max().unwrap_or(0);

    let mut fields = Vec::new();
    for &field in &opts.fields {
        let cert = regularity(cx, field, opts.max_hochster_n)?;
        fields.push(FieldInvariants {
            field,
            reduced_betti: reduced_betti_numbers(cx, field)?.reduced_betti,
            cohen_macaulay: is_cohen_macaulay(cx, field)?,
            gorenstein: is_gorenstein(cx, field)?,
            homology_sphere: is_homology_sphere(cx, field)?,
            regularity: cert.value,
            regularity_witness: cx.set_labels(&cert.witness).into_iter().map(String::from).collect(),
        });
    }

    let graph = dual_graph(cx)?;
    let stats = GraphStats::of(&graph)?;
    let hirsch = height.map(|c| hirsch_verdict(stats.diameter, c));
    let s = cx.facet_count();
    let diameter = stats.diameter.finite();
    let needs_paths = pure && flag && (normal == Some(true) || fields.iter().any(|f| f.cohen_macaulay));
    let sweep = if needs_paths { Some(path_sweep(cx)?) } else { None };
    let sweep_detail = |sw: &PathSweep| match &sw.missing {
        Some((a, b)) => format!("no non-revisiting path from {{{a}}} to {{{b}}}"),
        None => format!("every facet pair joined, longest path {}", sw.longest),
    };

    let mut checklist = Vec::new();
    checklist.push(CheckLine::run(
        "multiplicity_counts_facets",
        "h(1) equals the number of facets",
        None,
        vec![Hypothesis::new("pure", pure)],
        || Ok((multiplicity == Some(s as u64), format!("h(1) = {}, facets {s}", opt(&multiplicity)))),
    )?);
    checklist.push(CheckLine::run(
        "facet_count_bound_by_generator_degree",
        "an unmixed ideal of height c generated in degree at most k has at most k^c components",
        None,
        vec![Hypothesis::new("pure", pure)],
        || {
            let c = height.unwrap_or(0);
            if c == 0 {
                return Ok((s == 1, "height 0, a single facet".into()));
            }
            let bound = component_bound_by_degree(generator_degree as u64, c as u32)?;
            Ok((s as u128 <= bound, format!("{s} facets, bound {generator_degree}^{c} = {bound}")))
        },
    )?);
    checklist.push(stats.diameter_bounds_check()?);
    for fi in &fields {
        let field = Some(fi.field);
        let cm = Hypothesis::new("Cohen-Macaulay", fi.cohen_macaulay);
        let gorenstein = Hypothesis::new("Gorenstein", fi.gorenstein);
        let r = fi.regularity;
        checklist.push(CheckLine::run(
            "connected_if_cohen_macaulay",
            "a Cohen-Macaulay quotient has a connected dual graph",
            field,
            vec![cm.clone()],
            || Ok((diameter.is_some(), format!("diameter {}", stats.diameter))),
        )?);
        checklist.push(CheckLine::run(
            "regularity_equals_h_degree",
            "for a Cohen-Macaulay quotient the regularity is the degree of the h-polynomial",
            field,
            vec![cm.clone()],
            || {
                let deg = h_vector.as_ref().map(|h| h.degree());
                Ok((deg == Some(r), format!("regularity {r}, deg h {}", opt(&deg))))
            },
        )?);
        checklist.push(CheckLine::run(
            "facet_count_bound_by_regularity",
            "a Cohen-Macaulay quotient of height c and regularity r has at most sum_{i<=r} C(c+i-1, i) components",
            field,
            vec![cm.clone()],
            || {
                let c = height.unwrap_or(0);
                if c == 0 {
                    return Ok((s == 1, "height 0, a single facet".into()));
                }
                let bound = component_bound_by_regularity(c as u64, r as u64)?;
                Ok((s as u128 <= bound, format!("{s} facets, bound {bound}")))
            },
        )?);
        checklist.push(CheckLine::run(
            "two_connected_if_gorenstein",
            "a Gorenstein dual graph is a point, a segment or 2-connected, with diameter at most e/2",
            field,
            vec![gorenstein.clone()],
            || {
                let shape = s <= 2 || graph.is_k_connected(2);
                let d = diameter.unwrap_or(usize::MAX);
                Ok((shape && 2 * d <= s, format!("{s} vertices, diameter {}", stats.diameter)))
            },
        )?);
        checklist.push(CheckLine::run(
            "regularity_connected_if_gorenstein",
            "a Gorenstein coordinate arrangement of regularity r has an r-connected dual graph",
            field,
            vec![gorenstein.clone()],
            || {
                let ok = r == 0 || graph.is_k_connected(r);
                Ok((ok, format!("r = {r}, vertex connectivity {}", opt(&stats.vertex_connectivity))))
            },
        )?);
        checklist.push(CheckLine::run(
            "sphere_dual_graph_connectivity",
            "the dual graph of a homology d-sphere is (d+1)-connected",
            field,
            vec![Hypothesis::new("a homology sphere", fi.homology_sphere)],
            || {
                let k = (cx.dimension() + 1) as usize;
                Ok((graph.is_k_connected(k), format!("d + 1 = {k}, vertex connectivity {}", opt(&stats.vertex_connectivity))))
            },
        )?);
        checklist.push(CheckLine::run(
            "flag_cohen_macaulay_diameter_at_most_height",
            "a flag Cohen-Macaulay complex has non-revisiting dual paths, so diameter at most height",
            field,
            vec![Hypothesis::new("flag", flag), cm],
            || {
                let sw = sweep.as_ref().expect("paths are swept for flag Cohen-Macaulay input");
                let c = height.unwrap_or(0);
                let ok = sw.missing.is_none() && diameter.is_some_and(|d| d <= c);
                Ok((ok, format!("{}; diameter {}, height {c}", sweep_detail(sw), stats.diameter)))
            },
        )?);
    }
    checklist.push(CheckLine::run(
        "flag_normal_non_revisiting_paths",
        "any two facets of a flag normal complex are joined by a non-revisiting path",
        None,
        vec![Hypothesis::new("flag", flag), Hypothesis::new("normal", normal == Some(true))],
        || {
            let sw = sweep.as_ref().expect("paths are swept for flag normal input");
            Ok((sw.missing.is_none(), sweep_detail(sw)))
        },
    )?);
    let warnings = report::warnings(&checklist);

    Ok(ComplexReport {
        input,
        vertices: cx.vertex_count(),
        facets: s,
        dimension: cx.dimension(),
        pure,
        f_vector: cx.f_vector().0,
        h_vector: h_vector.map(|h| h.0),
        height,
        multiplicity,
        minimal_nonfaces: nonfaces.iter().map(|f| cx.set_labels(f).into_iter().map(String::from).collect()).collect(),
        flag,
        normal,
        fields,
        dual_graph: stats,
        hirsch,
        checklist,
        warnings,
    })
}

impl ComplexReport {
    pub fn text(&self) -> String {
        let mut w = TextWriter::default();
        w.line("input", &self.input);
        w.line("vertices", self.vertices);
        w.line("facets", self.facets);
        w.line("dimension", self.dimension);
        w.line("pure", yes_no(self.pure));
        w.line("f-vector", list(&self.f_vector));
        w.line("h-vector", self.h_vector.as_ref().map_or("n/a".into(), |h| list(h)));
        w.line("height", opt(&self.height));
        w.line("multiplicity", opt(&self.multiplicity));
        let nonfaces: Vec<String> = self.minimal_nonfaces.iter().map(|f| braces(f)).collect();
        w.line("minimal nonfaces", if nonfaces.is_empty() { "none".into() } else { nonfaces.join(" ") });
        w.line("flag", yes_no(self.flag));
        w.line("normal", self.normal.map_or("n/a", yes_no));
        for f in &self.fields {
            w.raw(format!("field {}:", f.field));
            w.line("  reduced betti", list(&f.reduced_betti));
            w.line("  Cohen-Macaulay", yes_no(f.cohen_macaulay));
            w.line("  Gorenstein", yes_no(f.gorenstein));
            w.line("  homology sphere", yes_no(f.homology_sphere));
            w.line("  regularity", format!("{} (witness {})", f.regularity, braces(&f.regularity_witness)));
        }
        w.graph("dual graph", &self.dual_graph);
        w.line("hirsch", opt(&self.hirsch));
        w.checklist(&self.checklist, &self.warnings);
        w.finish()
    }
}
