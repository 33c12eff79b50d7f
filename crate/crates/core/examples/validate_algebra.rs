//! Validate the built-in algebras and watch every documented mutation fail
//! with a concrete witness. Pass a file path to validate a JSON algebra instead.

use harrison_core::cinfty::{builtin_algebras, load_algebra, mutations, validate_all};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let a = load_algebra(&std::fs::read_to_string(path)?)?;
        print!("{}", validate_all(&a, 4));
        return Ok(());
    }
    for (_, a) in builtin_algebras() {
        let r = validate_all(&a, 4);
        println!(
            "{:<12} {}",
            a.name(),
            if r.passed() { "valid" } else { "INVALID" }
        );
    }
    for m in mutations() {
        let r = validate_all(&m.algebra, 4);
        let first = r.failures().next().expect("mutation fails");
        let w = first.witness.as_ref().expect("witness");
        println!(
            "{:<22} {} at arity {} on ({}): {}",
            m.name,
            first.axiom,
            first.arity,
            w.inputs.join(","),
            w.detail
        );
    }
    Ok(())
}
