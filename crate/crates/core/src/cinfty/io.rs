//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "Q[x]/(x^2)",
//!   "convention": "homological",
//!   "arity_cap": 4,
//!   "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
//!   "differential": [],
//!   "operations": {"2": [["1", "1", "1", "1"], ["1", "x", "x", "1"], ["x", "1", "x", "1"]]},
//!   "pairing": [["1", "x", "1"], ["x", "1", "1"]]
//! }
//! ```
//!
//! `differential` and `pairing` entries are `[source, target, coefficient]`;
//! an operation entry of arity k lists k inputs, the output, and the
//! coefficient. Coefficients are strings `"p/q"` or `"p"`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{CInftyAlgebra, CInftyError, Convention, Generator};
use crate::linalg::{format_rational, parse_rational, Rational};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    name: String,
    #[serde(default = "homological")]
    convention: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arity_cap: Option<usize>,
    basis: Vec<GeneratorDoc>,
    #[serde(default)]
    differential: Vec<[String; 3]>,
    #[serde(default)]
    operations: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairing: Option<Vec<[String; 3]>>,
}

fn homological() -> String {
    "homological".to_string()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDoc {
    name: String,
    degree: i64,
}

fn coefficient(s: &str) -> Result<Rational, CInftyError> {
    parse_rational(s).ok_or_else(|| CInftyError::BadCoefficient(s.to_string()))
}

fn parse_err(msg: impl Into<String>) -> CInftyError {
    CInftyError::Parse(msg.into())
}

/// Parses and structurally validates an algebra file. The axioms are not checked.
pub fn load_algebra(text: &str) -> Result<CInftyAlgebra, CInftyError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let convention = match doc.convention.as_str() {
        "homological" => Convention::Homological,
        "cohomological" => Convention::Cohomological,
        other => return Err(parse_err(format!("unknown convention `{other}`"))),
    };
    let mut ops: BTreeMap<usize, Vec<Vec<String>>> = BTreeMap::new();
    for (k, entries) in doc.operations {
        let arity: usize = k
            .parse()
            .map_err(|_| parse_err(format!("operation arity `{k}` is not a number")))?;
        ops.insert(arity, entries);
    }
    let max_arity = ops.keys().copied().max().unwrap_or(2).max(2);
    let mut a = CInftyAlgebra {
        name: doc.name,
        convention,
        basis: doc
            .basis
            .into_iter()
            .map(|g| Generator {
                name: g.name,
                degree: g.degree,
            })
            .collect(),
        differential: BTreeMap::new(),
        operations: BTreeMap::new(),
        pairing: None,
        arity_cap: doc.arity_cap.unwrap_or(max_arity),
    };
    let mut seen = BTreeSet::new();
    for [s, t, c] in &doc.differential {
        if !seen.insert((s.clone(), t.clone())) {
            return Err(parse_err(format!(
                "differential entry ({s}, {t}) listed twice"
            )));
        }
        a.set_differential(s, t, coefficient(c)?)?;
    }
    for (&k, entries) in &ops {
        let mut seen = BTreeSet::new();
        for entry in entries {
            if entry.len() != k + 2 {
                return Err(parse_err(format!(
                    "m_{k} entry {entry:?} needs {k} inputs, an output and a coefficient"
                )));
            }
            let inputs: Vec<&str> = entry[..k].iter().map(String::as_str).collect();
            if !seen.insert(entry[..=k].to_vec()) {
                return Err(parse_err(format!("m_{k} entry {entry:?} listed twice")));
            }
            if k < 2 {
                return Err(CInftyError::BadArity {
                    arity: k,
                    cap: a.arity_cap,
                });
            }
            a.set_op(&inputs, &entry[k], coefficient(&entry[k + 1])?)?;
        }
    }
    if let Some(p) = &doc.pairing {
        a.pairing = Some(BTreeMap::new());
        let mut seen = BTreeSet::new();
        for [x, y, c] in p {
            if !seen.insert((x.clone(), y.clone())) {
                return Err(parse_err(format!("pairing entry ({x}, {y}) listed twice")));
            }
            a.set_pairing(x, y, coefficient(c)?)?;
        }
    }
    a.check_structure()?;
    Ok(a)
}

/// Canonical JSON form; `load_algebra(&save_algebra(a)) == a`.
pub fn save_algebra(a: &CInftyAlgebra) -> String {
    let name = |i: usize| a.basis[i].name.clone();
    let doc = Document {
        name: a.name.clone(),
        convention: match a.convention {
            Convention::Homological => "homological",
            Convention::Cohomological => "cohomological",
        }
        .to_string(),
        arity_cap: Some(a.arity_cap),
        basis: a
            .basis
            .iter()
            .map(|g| GeneratorDoc {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect(),
        differential: a
            .differential
            .iter()
            .flat_map(|(&s, terms)| {
                terms
                    .iter()
                    .map(move |(t, c)| [name(s), name(*t), format_rational(c)])
            })
            .collect(),
        operations: a
            .operations
            .iter()
            .map(|(k, table)| {
                let entries = table
                    .iter()
                    .flat_map(|(ins, terms)| {
                        terms.iter().map(move |(o, c)| {
                            let mut e: Vec<String> = ins.iter().map(|&i| name(i)).collect();
                            e.push(name(*o));
                            e.push(format_rational(c));
                            e
                        })
                    })
                    .collect();
                (k.to_string(), entries)
            })
            .collect(),
        pairing: a.pairing.as_ref().map(|p| {
            p.iter()
                .map(|(&(x, y), c)| [name(x), name(y), format_rational(c)])
                .collect()
        }),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: &str = r#"{"name": "Q", "basis": [{"name": "1", "degree": 0}],
        "operations": {"2": [["1", "1", "1", "1"]]}, "pairing": [["1", "1", "1"]]}"#;

    #[test]
    fn loads_q() {
        let a = load_algebra(Q).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.arity_cap(), 2);
        assert_eq!(a.op(&[0, 0]).len(), 1);
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let text = r#"{"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2}],
            "operations": {"2": [["x", "x", "1", "1"]]}}"#;
        assert!(matches!(
            load_algebra(text),
            Err(CInftyError::Inhomogeneous {
                expected: 4,
                got: 0,
                ..
            })
        ));
    }

    #[test]
    fn singular_pairing_is_rejected() {
        let text = r#"{"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
            "pairing": [["1", "1", "1"]]}"#;
        assert_eq!(
            load_algebra(text),
            Err(CInftyError::SingularPairing { rank: 1, dim: 2 })
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(load_algebra("{"), Err(CInftyError::Parse(_))));
        let bad =
            r#"{"basis": [{"name": "1", "degree": 0}], "operations": {"2": [["1", "1", "1"]]}}"#;
        assert!(matches!(load_algebra(bad), Err(CInftyError::Parse(_))));
        let unknown = r#"{"basis": [{"name": "1", "degree": 0}], "pairing": [["1", "y", "1"]]}"#;
        assert!(matches!(
            load_algebra(unknown),
            Err(CInftyError::UnknownGenerator(_))
        ));
        let coeff = r#"{"basis": [{"name": "1", "degree": 0}], "pairing": [["1", "1", "1/0"]]}"#;
        assert!(matches!(
            load_algebra(coeff),
            Err(CInftyError::BadCoefficient(_))
        ));
    }

    #[test]
    fn cohomological_sphere_loads_and_round_trips() {
        let text = r#"{"name": "H*(S^2)", "convention": "cohomological",
            "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2}],
            "operations": {"2": [["1", "1", "1", "1"], ["1", "x", "x", "1"], ["x", "1", "x", "1"]]},
            "pairing": [["1", "x", "1"], ["x", "1", "1"]]}"#;
        let a = load_algebra(text).unwrap();
        assert_eq!(a.convention(), Convention::Cohomological);
        let saved = save_algebra(&a);
        assert_eq!(load_algebra(&saved).unwrap(), a);
        assert_eq!(save_algebra(&load_algebra(&saved).unwrap()), saved);
    }
}
