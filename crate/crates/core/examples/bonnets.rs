//! Bonnets: reduce every generator of the one-torus profiles to a bonnet
//! normal form and check the bonnet filtration.

use harrison_core::cinfty::builtin;
use harrison_core::moduli::{bonnet_filtration, bonnet_profile, labelled_generators};
use harrison_core::torus::{bonnet_representative, bonnet_rewrite_orders};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = builtin("S1")?;
    for k in 1..=3 {
        let p = bonnet_profile(k);
        let gens = labelled_generators(&p)?;
        let word = vec![1; k];
        let mut nonzero = 0;
        for (_, e) in gens.values() {
            let nf = bonnet_representative(e, &a, &word)?;
            let orders = bonnet_rewrite_orders(e, &a, &word)?;
            assert!(orders.iter().all(|o| *o == nf), "rewriting is confluent");
            nonzero += usize::from(!nf.is_zero());
        }
        let f = bonnet_filtration(k)?;
        println!(
            "k={k}: {} generators, {nonzero} with nonzero normal form on a^{k}, filtration {}",
            gens.len(),
            if f.passed() { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}
