//! Builds the graph of sl_2 over F_5 and prints its invariants.

use ncgraph::{catalog, graph::NcGraph, Guards};

fn main() -> ncgraph::Result<()> {
    let l = catalog::sl2(5)?;
    let g = NcGraph::build(&l)?;
    let r = g.invariants(&Guards::default());
    println!("{}: {} vertices, {} edges", l.name(), r.order, r.size);
    println!("center dim {}, quotient dim {}", g.s(), g.d());
    println!(
        "complete: {}, regular: {}",
        g.graph().is_complete(),
        r.regular
    );
    println!(
        "diameter {:?}, girth {:?}, kappa {}",
        r.diameter, r.girth, r.kappa
    );
    println!(
        "omega {} chi {} alpha {} gamma {}",
        r.clique_number.value,
        r.chromatic_number.value,
        r.independence_number.value,
        r.domination_number.value
    );
    println!(
        "first vertices: {:?}",
        (0..4).map(|v| g.label(v)).collect::<Vec<_>>()
    );
    Ok(())
}
