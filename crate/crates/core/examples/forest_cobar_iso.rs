//! Contracting forests into vertex labels identifies the cellular complex
//! with the generalized cobar complex; check it profile by profile.

use harrison_core::graph::BoundaryProfile;
use harrison_core::moduli::forest_cobar_iso;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let profiles: Vec<BoundaryProfile> = if args.is_empty() {
        vec![
            BoundaryProfile::from_triple(0, 4, 0),
            BoundaryProfile::from_triple(1, 2, 0),
            BoundaryProfile::from_triple(0, 2, 1),
        ]
    } else {
        args.iter()
            .map(|a| BoundaryProfile::parse(a))
            .collect::<Result<_, _>>()?
    };
    for p in profiles {
        let r = forest_cobar_iso(&p)?;
        println!(
            "{p}: cells {:?} generators {:?} -> {}",
            r.cells_by_degree,
            r.generators_by_degree,
            if r.passed() { "isomorphic" } else { "MISMATCH" }
        );
        for m in r.basis_mismatches.iter().chain(&r.sign_mismatches) {
            println!("  {m}");
        }
    }
    Ok(())
}
