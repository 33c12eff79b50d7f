//! Forested-graph cells of small profiles and the homology of their complex.

use harrison_core::graph::BoundaryProfile;
use harrison_core::moduli::{cell_dump, enumerate_cells, xv_complex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (g, e, t) in [
        (0, 3, 0),
        (0, 4, 0),
        (1, 1, 0),
        (0, 5, 0),
        (1, 2, 0),
        (0, 2, 1),
    ] {
        let p = BoundaryProfile::from_triple(g, e, t);
        let cells = enumerate_cells(&p)?;
        let c = xv_complex(&p)?;
        println!(
            "{p}: {} cells, euler {}, betti {:?}",
            cells.len(),
            c.euler_characteristic(),
            c.betti()?
        );
        if cells.len() <= 7 {
            print!("{}", cell_dump(&cells));
        }
    }
    Ok(())
}
