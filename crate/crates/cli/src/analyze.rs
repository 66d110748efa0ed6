use crate::render::{list, opt, report_rows, table};
use crate::{input, Failure, Outcome, JSON_SCHEMA_VERSION};
use serde::Serialize;
use spreadlab_core::bounds::{unicyclic_details, UnicyclicDetails};
use spreadlab_core::format::sig10;
use spreadlab_core::graph::{connectivity_profile, degree_profile, ConnectivityProfile, Graph};
use spreadlab_core::spectra::{spectral_summary, SpectralSummary};
use spreadlab_core::transforms::{line_graph, total_graph};
use spreadlab_core::{Analysis, BoundId, BoundReport};
use std::fmt::Write;

#[derive(Serialize)]
pub struct TransformFacts {
    pub line_order: usize,
    pub line_size: usize,
    /// `Z_g/2 − m`, which must equal `line_size`.
    pub theta: i64,
    pub total_order: usize,
    pub total_size: usize,
    pub total_vertex_degrees: Vec<usize>,
    pub total_edge_degrees: Vec<usize>,
}

#[derive(Serialize)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub zagreb: u64,
    pub connectivity: ConnectivityProfile,
    pub summary: SpectralSummary,
    pub transforms: TransformFacts,
    pub unicyclic: Option<UnicyclicDetails>,
    pub bounds: Vec<BoundReport>,
}

impl GraphReport {
    pub fn violations(&self) -> usize {
        self.bounds.iter().filter(|r| r.is_violation()).count()
    }
}

pub fn build_report(g: &Graph, bounds: &[BoundId]) -> Result<GraphReport, Failure> {
    let degrees = degree_profile(g);
    let (line, _) = line_graph(g);
    let total = total_graph(g);
    let n = g.order();
    let tdeg = total.degrees();
    let analysis = Analysis::new(g);
    let mut reports = Vec::new();
    for &id in bounds {
        reports.extend(analysis.evaluate(id)?);
    }
    Ok(GraphReport {
        graph6: g.to_graph6(),
        n,
        m: g.size(),
        zagreb: degrees.zagreb,
        connectivity: connectivity_profile(g),
        summary: spectral_summary(g)?,
        transforms: TransformFacts {
            line_order: line.order(),
            line_size: line.size(),
            theta: degrees.zagreb as i64 / 2 - g.size() as i64,
            total_order: total.order(),
            total_size: total.size(),
            total_vertex_degrees: tdeg[..n].to_vec(),
            total_edge_degrees: tdeg[n..].to_vec(),
        },
        unicyclic: unicyclic_details(g).ok(),
        bounds: reports,
        degrees: degrees.degrees,
    })
}

fn ints(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_text(r: &GraphReport) -> String {
    let mut out = String::new();
    let c = &r.connectivity;
    let s = &r.summary;
    let t = &r.transforms;
    let _ = writeln!(out, "graph {}", r.graph6);
    let _ = writeln!(
        out,
        "  n={} m={} zagreb={} connected={} bipartite={} regular={} girth={} diameter={} kappa={} epsilon={}",
        r.n,
        r.m,
        r.zagreb,
        c.is_connected,
        c.is_bipartite,
        c.regular_degree.map_or("-".into(), |d| d.to_string()),
        c.girth.map_or("-".into(), |d| d.to_string()),
        c.diameter.map_or("-".into(), |d| d.to_string()),
        c.vertex_connectivity,
        c.edge_connectivity
    );
    let _ = writeln!(out, "  degrees {}", ints(&r.degrees));
    out.push_str("spectra\n");
    let _ = writeln!(out, "  adjacency  {}", list(s.adjacency.values()));
    let _ = writeln!(out, "  laplacian  {}", list(s.laplacian.values()));
    let _ = writeln!(out, "  signless   {}", list(s.signless.values()));
    out.push_str("spreads\n");
    let _ = writeln!(out, "  S (adjacency)          {}", sig10(s.spread));
    let _ = writeln!(out, "  S_L (laplacian)        {}", opt(s.laplacian_spread));
    let _ = writeln!(out, "  S_Q (signless)         {}", sig10(s.q_spread));
    let _ = writeln!(out, "  S_line (line graph)    {}", opt(s.line_spread));
    let _ = writeln!(out, "  algebraic connectivity {}", opt(s.algebraic_connectivity));
    out.push_str("transforms\n");
    let _ =
        writeln!(out, "  line graph   {} vertices, {} edges, theta = Z/2 - m = {}", t.line_order, t.line_size, t.theta);
    let _ = writeln!(out, "  total graph  {} vertices, {} edges", t.total_order, t.total_size);
    let _ = writeln!(out, "  total degrees (vertices) {}", ints(&t.total_vertex_degrees));
    let _ = writeln!(out, "  total degrees (edges)    {}", ints(&t.total_edge_degrees));
    if let Some(u) = &r.unicyclic {
        out.push_str("unicyclic\n");
        let _ = writeln!(
            out,
            "  girth={} h={} h_global={} D0={} lambda_1={} lambda_n={} rhs={} condition={}",
            u.girth,
            u.h,
            u.h_global,
            u.d0,
            sig10(u.lambda_1),
            sig10(u.lambda_n),
            sig10(u.condition_rhs),
            if u.condition_met { "holds" } else { "fails" }
        );
    }
    if !r.bounds.is_empty() {
        out.push_str("bounds\n");
        for line in table(&report_rows(&r.bounds)).lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    out
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    graphs: &'a [GraphReport],
}

pub fn emit(reports: &[GraphReport], json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&Document { schema_version: JSON_SCHEMA_VERSION, graphs: reports })
            .expect("report serializes");
        s.push('\n');
        s
    } else {
        reports.iter().map(render_text).collect::<Vec<_>>().join("\n")
    }
}

pub fn run(input: &str, json: bool, bounds: &str) -> Outcome {
    let bounds = BoundId::parse_list(bounds)?;
    let graphs = input::load_graphs(input)?;
    let reports = graphs.iter().map(|g| build_report(g, &bounds)).collect::<Result<Vec<_>, _>>()?;
    print!("{}", emit(&reports, json));
    let violations: usize = reports.iter().map(GraphReport::violations).sum();
    if violations > 0 {
        eprintln!("{violations} violation(s)");
        return Ok(1);
    }
    Ok(0)
}
