use std::fmt::Write as _;

use serde_json::{json, Value};

use super::CliError;
use crate::cinfty::{validate_all, CInftyAlgebra};
use crate::graph::BoundaryProfile;
use crate::linalg::{euler_of_betti, GradedChainComplex};
use crate::moduli::{enumerate_cells, forest_cobar_iso, xv_complex};
use crate::operad::{bar_complex, cobar_bar_complex};
use crate::torus::{betti_report, harrison_oracle, torus_complex};

/// What a command produced, before formatting.
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub text: String,
}

fn betti_json(b: &[(i64, usize)]) -> Value {
    b.iter().map(|(d, n)| json!([d, n])).collect()
}

fn betti_text(b: &[(i64, usize)]) -> String {
    let parts: Vec<String> = b.iter().map(|(d, n)| format!("({d},{n})")).collect();
    format!("[{}]", parts.join(","))
}

/// Dimensions, d² status and homology of a complex.
fn complex_summary(c: &GradedChainComplex) -> Result<(bool, Value, String), CliError> {
    let dd = c.verify_dd_zero();
    let betti = c.betti()?;
    let dims: Vec<(i64, usize)> = c.degrees().into_iter().map(|d| (d, c.dim(d))).collect();
    let euler_ok = c.euler_characteristic() == euler_of_betti(&betti);
    let passed = dd.passed() && euler_ok;
    let value = json!({
        "dims": betti_json(&dims),
        "d_squared_zero": dd.passed(),
        "betti": betti_json(&betti),
        "euler_characteristic": c.euler_characteristic(),
        "euler_matches": euler_ok,
    });
    let text = format!(
        "dims {}\nd^2 = 0: {}\nbetti {}\neuler {} ({})\n",
        betti_text(&dims),
        if dd.passed() { "yes" } else { "NO" },
        betti_text(&betti),
        c.euler_characteristic(),
        if euler_ok { "matches" } else { "MISMATCH" }
    );
    Ok((passed, value, text))
}

pub fn validate(a: &CInftyAlgebra, max_arity: usize) -> Outcome {
    let report = validate_all(a, max_arity);
    Outcome {
        passed: report.passed(),
        result: serde_json::to_value(&report).expect("report serializes"),
        text: report.to_string(),
    }
}

pub fn harrison(
    a: &CInftyAlgebra,
    weight: usize,
    oracle: bool,
    force: bool,
) -> Result<Outcome, CliError> {
    let check = validate_all(a, a.arity_cap());
    if !check.passed() && !force {
        return Err(CliError::Invalid(check.to_string()));
    }
    let t = torus_complex(a, weight)?;
    let dd = t.complex.verify_dd_zero().passed();
    let ideal = t.ideal_failures(a);
    let mut text = String::new();
    if !dd {
        // only reachable with --force; homology is meaningless here
        let _ = writeln!(text, "d^2 = 0: NO, homology skipped");
        return Ok(Outcome {
            passed: false,
            result: json!({
                "validated": check.passed(),
                "d_squared_zero": false,
                "ideal_failures": ideal,
                "betti": null,
            }),
            text,
        });
    }
    let report = betti_report(a, &t)?;
    let mut passed = ideal.is_empty();
    text.push_str(&report.to_string());
    let _ = writeln!(text, "d^2 = 0: yes");
    let _ = writeln!(text, "shuffle ideal preserved: {}", ideal.is_empty());
    for f in &ideal {
        let _ = writeln!(text, "  {f}");
    }
    let mut result = json!({
        "validated": check.passed(),
        "d_squared_zero": true,
        "ideal_failures": ideal,
        "betti": report,
    });
    if oracle {
        let diff = report.diff_complete(&harrison_oracle(a, weight)?);
        passed &= diff.is_empty();
        let _ = writeln!(text, "oracle diff: {} degrees", diff.len());
        for d in &diff {
            let _ = writeln!(text, "  {d}");
        }
        result["oracle_diff"] = json!(diff);
    }
    Ok(Outcome {
        passed,
        result,
        text,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModuliWhat {
    Cells,
    Homology,
    IsoCheck,
}

pub fn moduli(p: &BoundaryProfile, what: ModuliWhat) -> Result<Outcome, CliError> {
    p.check_admissible()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match what {
        ModuliWhat::Cells => {
            let cells = enumerate_cells(p)?;
            let lines: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
            let mut text = format!("{} cells\n", cells.len());
            for l in &lines {
                let _ = writeln!(text, "{l}");
            }
            Outcome {
                passed: true,
                result: json!({"count": cells.len(), "cells": lines}),
                text,
            }
        }
        ModuliWhat::Homology => {
            let (passed, result, text) = complex_summary(&xv_complex(p)?)?;
            Outcome {
                passed,
                result,
                text,
            }
        }
        ModuliWhat::IsoCheck => {
            let r = forest_cobar_iso(p)?;
            let counts = |m: &std::collections::BTreeMap<usize, usize>| -> Value {
                m.iter().map(|(d, n)| json!([d, n])).collect()
            };
            let mut text = format!(
                "cells by degree {}\ngenerators by degree {}\n",
                counts(&r.cells_by_degree),
                counts(&r.generators_by_degree)
            );
            for m in r.basis_mismatches.iter().chain(&r.sign_mismatches) {
                let _ = writeln!(text, "  {m}");
            }
            let _ = writeln!(
                text,
                "iso-check: {}",
                if r.passed() { "pass" } else { "FAIL" }
            );
            Outcome {
                passed: r.passed(),
                result: json!({
                    "cells_by_degree": counts(&r.cells_by_degree),
                    "generators_by_degree": counts(&r.generators_by_degree),
                    "basis_mismatches": r.basis_mismatches,
                    "sign_mismatches": r.sign_mismatches,
                }),
                text,
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OperadWhat {
    Bar,
    CobarBar,
}

pub fn operad(n: usize, what: OperadWhat) -> Result<Outcome, CliError> {
    let c = match what {
        OperadWhat::Bar => bar_complex(n),
        OperadWhat::CobarBar => cobar_bar_complex(n),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let (passed, result, text) = complex_summary(&c)?;
    Ok(Outcome {
        passed,
        result,
        text,
    })
}
