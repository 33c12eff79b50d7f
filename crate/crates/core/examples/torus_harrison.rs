//! Harrison homology through the torus complex, compared with the
//! independent dense computation.

use harrison_core::cinfty::builtin_algebras;
use harrison_core::torus::{harrison_betti, harrison_oracle, shuffle_product, torus_complex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    for (_, a) in builtin_algebras() {
        let report = harrison_betti(&a, w)?;
        print!("{report}");
        let t = torus_complex(&a, w)?;
        println!(
            "  d^2=0 {}  ideal preserved {}  oracle diff {:?}",
            t.complex.verify_dd_zero().passed(),
            t.ideal_failures(&a).is_empty(),
            report.diff_complete(&harrison_oracle(&a, w)?)
        );
    }
    let (_, s1) = builtin_algebras().pop().expect("S1 is built in");
    println!(
        "in {}: a * a = {:?}",
        s1.name(),
        shuffle_product(&s1, &[1], &[1])
    );
    Ok(())
}
