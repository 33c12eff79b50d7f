//! The cobar-bar resolution of Comm has homology Q in degree 0, and the
//! grafting product is compatible with the differential.

use harrison_core::operad::{cobar_bar_complex, graft, CobarBarElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5 {
        let c = cobar_bar_complex(n)?;
        println!(
            "n={n}  total dim {:>4}  betti {:?}",
            c.total_dim(),
            c.betti()?
        );
    }
    let outer = CobarBarElement::corolla(2);
    let inputs = [CobarBarElement::corolla(3), CobarBarElement::unit()];
    let (sign, t) = graft(&outer, &inputs)?;
    println!(
        "corolla(2)(corolla(3), 1) = {sign:+} * element of arity {} and degree {}",
        t.arity(),
        t.degree()
    );
    Ok(())
}
