//! Homology of the bar construction of Comm: rank (n-1)! in top degree.

use harrison_core::operad::bar_complex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5 {
        let c = bar_complex(n)?;
        let dims: Vec<usize> = c.degrees().into_iter().map(|d| c.dim(d)).collect();
        println!(
            "n={n}  dims {dims:?}  d^2=0 {}  betti {:?}",
            c.verify_dd_zero().passed(),
            c.betti()?
        );
    }
    Ok(())
}
