use crate::analyze::{build_report, emit};
use crate::render::{num, table};
use crate::{Outcome, JSON_SCHEMA_VERSION};
use serde::Serialize;
use spreadlab_core::bounds::{connectivity_bound, join_family_line_spectrum, join_family_line_spread};
use spreadlab_core::graph::Family;
use spreadlab_core::spectra::{adjacency_spectrum, Spectrum};
use spreadlab_core::transforms::line_graph;
use spreadlab_core::BoundId;

/// Closed forms for `join_family n k i`, i.e. `K_i ∨ (K_k ∪ K_{n−k−i})`.
#[derive(Serialize)]
struct JoinComparison {
    eigensolved: Vec<f64>,
    /// The closed-form multiset with roles chosen to describe this graph.
    closed_form: Option<Vec<f64>>,
    /// The closed-form multiset evaluated at `(n, k, i)` as given.
    closed_form_as_given: Option<Vec<f64>>,
    max_deviation: Option<f64>,
    spread_eigensolved: f64,
    spread_closed_form: Option<f64>,
    spread_connectivity_bound: Option<f64>,
}

fn compare(n: usize, k: usize, i: usize) -> spreadlab_core::Result<JoinComparison> {
    let g = Family::JoinFamily { n, k, i }.build()?;
    let solved = adjacency_spectrum(&line_graph(&g).0)?;
    let closed = join_family_line_spectrum(n, i, k).ok();
    let deviation = closed.as_ref().filter(|c: &&Spectrum| c.len() == solved.len()).map(|c| c.max_deviation(&solved));
    Ok(JoinComparison {
        eigensolved: solved.values().to_vec(),
        closed_form: closed.map(|c| c.values().to_vec()),
        closed_form_as_given: join_family_line_spectrum(n, k, i).ok().map(|c| c.values().to_vec()),
        max_deviation: deviation,
        spread_eigensolved: solved.spread(),
        spread_closed_form: join_family_line_spread(n, i, k).ok(),
        // K_1 ∨ (K_{n−i−1} ∪ K_i) is extremal for connectivity i
        spread_connectivity_bound: (k == 1).then(|| connectivity_bound(n, i).ok()).flatten(),
    })
}

fn render(c: &JoinComparison) -> String {
    let mut rows = vec![vec!["index".to_string(), "eigensolved".into(), "closed_form".into(), "as_given".into()]];
    for (idx, &x) in c.eigensolved.iter().enumerate() {
        let cell = |v: &Option<Vec<f64>>| v.as_ref().and_then(|v| v.get(idx)).map_or("-".into(), |&y| num(y));
        rows.push(vec![(idx + 1).to_string(), num(x), cell(&c.closed_form), cell(&c.closed_form_as_given)]);
    }
    let mut out = String::from("line spectrum: eigensolve vs closed form\n");
    out.push_str(&table(&rows));
    out.push_str(&format!("max deviation        {}\n", c.max_deviation.map_or("-".into(), num)));
    out.push_str(&format!("spread (eigensolve)  {}\n", num(c.spread_eigensolved)));
    out.push_str(&format!("spread (closed form) {}\n", c.spread_closed_form.map_or("-".into(), num)));
    if let Some(b) = c.spread_connectivity_bound {
        out.push_str(&format!("connectivity bound   {}\n", num(b)));
    }
    out
}

#[derive(Serialize)]
struct FamilyDocument<'a> {
    schema_version: u32,
    family: Family,
    graph6: String,
    analysis: &'a crate::analyze::GraphReport,
    join_comparison: Option<JoinComparison>,
}

pub fn run(name: &str, params: &[usize], analysis: bool, json: bool) -> Outcome {
    let family = Family::parse(name, params)?;
    let g = family.build()?;
    if !analysis {
        println!("{}", g.to_graph6());
        return Ok(0);
    }
    let report = build_report(&g, &BoundId::ALL)?;
    let comparison = match family {
        Family::JoinFamily { n, k, i } => Some(compare(n, k, i)?),
        _ => None,
    };
    let deviates = comparison.as_ref().and_then(|c| c.max_deviation).is_some_and(|d| d > 1e-6);
    if json {
        let doc = FamilyDocument {
            schema_version: JSON_SCHEMA_VERSION,
            family,
            graph6: g.to_graph6(),
            analysis: &report,
            join_comparison: comparison,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("family document serializes"));
    } else {
        print!("{}", emit(std::slice::from_ref(&report), false));
        if let Some(c) = &comparison {
            print!("{}", render(c));
        }
    }
    Ok(u8::from(report.violations() > 0 || deviates))
}
