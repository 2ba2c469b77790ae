use std::io::Write;

use serde::Deserialize;
use serde_json::json;

use crate::{Failure, Format};

/// One golden invocation: arguments and the exact expected stdout.
#[derive(Debug, Clone, Deserialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub stdout: String,
}

macro_rules! corpus_files {
    ($($f:literal),* $(,)?) => {
        &[$(($f, include_str!(concat!("../tests/corpus/v1/", $f, ".json")))),*]
    };
}

const FILES: &[(&str, &str)] = corpus_files![
    "power_x2",
    "symbolic_x2",
    "saturate_x2",
    "chain_x3_power",
    "chain_x3_saturated",
    "chain_x3_symbolic",
    "chain_x3_compare_low",
    "chain_x3_compare_high",
    "zset_x33",
    "zset_x33_l1",
    "zset_x33_l2",
    "betti_i22_csv",
    "betti_i22_pretty",
    "betti_hook",
    "qbinom_4_2",
    "lc_5x5_p3_json",
    "lc_5x5_p3_pretty",
    "ext_maximal_power",
    "reg_i2_squared",
    "reg_i22",
    "schurdim_21",
];

/// The embedded golden corpus.
pub fn corpus() -> Vec<Case> {
    FILES
        .iter()
        .flat_map(|(file, text)| {
            let cases: Vec<Case> = serde_json::from_str(text)
                .unwrap_or_else(|e| panic!("corpus file {file} is malformed: {e}"));
            cases
        })
        .collect()
}

fn check(case: &Case) -> bool {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = crate::run(&case.args, &mut out, &mut err);
    code == 0 && out == case.stdout.as_bytes()
}

pub fn run_all(format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let cases = corpus();
    let failed: Vec<&str> = cases
        .iter()
        .filter(|c| !check(c))
        .map(|c| c.name.as_str())
        .collect();
    let text = match format {
        Format::Json => format!(
            "{}\n",
            json!({ "cases": cases.len(), "passed": cases.len() - failed.len(), "failed": failed })
        ),
        Format::Csv => {
            let mut s = String::from("case,status\n");
            for c in &cases {
                let status = if failed.contains(&c.name.as_str()) {
                    "fail"
                } else {
                    "ok"
                };
                s.push_str(&format!("{},{status}\n", c.name));
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for c in &cases {
                let status = if failed.contains(&c.name.as_str()) {
                    "FAIL"
                } else {
                    "ok  "
                };
                s.push_str(&format!("{status} {}\n", c.name));
            }
            s.push_str(&format!(
                "{} of {} cases passed\n",
                cases.len() - failed.len(),
                cases.len()
            ));
            s
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("writing output: {e}")))?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_embedded_and_passes() {
        let cases = corpus();
        assert!(cases.len() >= 40);
        for c in &cases {
            assert!(check(c), "{}", c.name);
        }
    }

    #[test]
    fn tampered_case_fails() {
        let mut c = corpus()
            .into_iter()
            .find(|c| c.name == "qbinom_4_2")
            .unwrap();
        c.stdout = c.stdout.replace("2q^2", "3q^2");
        assert!(!check(&c));
    }
}
