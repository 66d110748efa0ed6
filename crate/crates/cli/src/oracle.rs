use crate::render::{num, table};
use crate::Outcome;
use spreadlab_core::harness::{oracle_crosscheck, OracleSuite};

pub fn run(suite: &str, json: bool, perturb: f64) -> Outcome {
    let suite: OracleSuite = suite.parse()?;
    let report = oracle_crosscheck(suite, perturb)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("oracle report serializes"));
    } else {
        let mut rows =
            vec![["check", "gating", "cases", "failures", "max_deviation", "worst_case"].map(String::from).to_vec()];
        for r in &report.rows {
            rows.push(vec![
                r.name.clone(),
                if r.gating { "yes" } else { "no" }.into(),
                r.cases.to_string(),
                r.failures.to_string(),
                num(r.max_deviation),
                if r.worst_case.is_empty() { "-".into() } else { r.worst_case.clone() },
            ]);
        }
        print!("{}", table(&rows));
        println!("tolerance {} => {}", num(report.tolerance), if report.passed() { "PASS" } else { "FAIL" });
    }
    Ok(if report.passed() { 0 } else { 1 })
}
