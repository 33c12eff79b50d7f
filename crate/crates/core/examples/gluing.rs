//! Gluing cells along boundary edges, and the derivation rule
//! d(a o b) = da o b + (-1)^{dim a} a o db on every pair of two small profiles.

use harrison_core::graph::BoundaryProfile;
use harrison_core::moduli::{enumerate_cells, glue_chains, Chain, ForestedCell};

fn single(c: &ForestedCell) -> Chain {
    Chain::from([(c.clone(), 1)])
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let left = enumerate_cells(&BoundaryProfile::from_triple(0, 4, 0))?;
    let right = enumerate_cells(&BoundaryProfile::from_triple(0, 2, 1))?;
    let (mut pairs, mut ok) = (0, 0);
    for a in &left {
        for b in &right {
            let lhs = {
                let ab = glue_chains(&single(a), &single(b))?;
                let mut d = Chain::new();
                for (c, k) in ab {
                    for (f, m) in c.boundary() {
                        *d.entry(f).or_insert(0) += k * m;
                    }
                }
                d.retain(|_, v| *v != 0);
                d
            };
            let sign = if a.dimension() % 2 == 0 { 1 } else { -1 };
            let mut rhs = glue_chains(&a.boundary(), &single(b))?;
            for (c, k) in glue_chains(&single(a), &b.boundary())? {
                *rhs.entry(c).or_insert(0) += sign * k;
            }
            rhs.retain(|_, v| *v != 0);
            pairs += 1;
            ok += usize::from(lhs == rhs);
        }
    }
    println!("{ok}/{pairs} glued pairs satisfy the derivation rule");
    let (a, b) = (&left[0], &right[0]);
    for (c, k) in glue_chains(&single(a), &single(b))? {
        println!("{k:+} {c}");
    }
    Ok(())
}
