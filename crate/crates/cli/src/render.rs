//! Plain-text rendering helpers. Numbers always go through `sig10`.

use spreadlab_core::format::sig10;
use spreadlab_core::BoundReport;

pub fn list(values: &[f64]) -> String {
    values.iter().map(|&x| sig10(x)).collect::<Vec<_>>().join(" ")
}

pub fn opt(x: Option<f64>) -> String {
    x.map_or("-".into(), sig10)
}

pub fn num(x: f64) -> String {
    if x.is_finite() {
        sig10(x)
    } else {
        "-".into()
    }
}

/// Left-aligns the first column and right-aligns the rest.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let pad = " ".repeat(widths[j] - c.chars().count());
                if j == 0 {
                    format!("{c}{pad}")
                } else {
                    format!("{pad}{c}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn report_rows(reports: &[BoundReport]) -> Vec<Vec<String>> {
    let mut rows = vec![["bound", "param", "hyp", "bound_value", "actual", "slack", "tight", "predicted", "status"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for r in reports {
        let status = if !r.hypothesis_met {
            "gated"
        } else if r.holds() {
            "ok"
        } else if r.bound_id.is_asserted() {
            "VIOLATION"
        } else {
            "recorded-fail"
        };
        rows.push(vec![
            r.bound_id.to_string(),
            r.param.clone().unwrap_or_else(|| "-".into()),
            if r.hypothesis_met { "yes" } else { "no" }.into(),
            num(r.bound_value),
            num(r.actual_value),
            num(r.slack),
            if r.hypothesis_met { r.tight.to_string() } else { "-".into() },
            r.equality_predicted.map_or("-".into(), |p| p.to_string()),
            status.into(),
        ]);
    }
    rows
}
