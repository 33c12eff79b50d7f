//! Parse a graph literal, canonicalize a relabelled copy and list its
//! automorphisms and admissible forests.

use harrison_core::graph::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // theta-like graph: two trivalent vertices, three legs
    let g: Graph =
        "G h=10 e=0:1,2:6,3:7,4:8,5:9 v=0,2,3|1,4,5|6|7|8|9 in=6,7,8 out=9 tin= tout= b=0"
            .parse()?;
    println!("graph     {g}");
    println!(
        "vertices  {}  edges {}  genus {}",
        g.num_vertices(),
        g.num_edges(),
        g.genus()
    );

    let perm: Vec<usize> = (0..g.num_half_edges()).rev().collect();
    let h = g.relabel(&perm);
    println!("relabel   {h}");
    println!("isomorphic after relabelling: {}", g.is_isomorphic(&h));
    println!("canonical {}", g.canonicalize().0);

    println!(
        "automorphisms fixing the labelled legs: {}",
        g.automorphism_group().len()
    );
    for f in g.admissible_forests() {
        println!("forest {:?} -> {}", f.edges(), g.collapse_forest(&f)?);
    }
    Ok(())
}
