//! A nilpotent and a non-nilpotent algebra over F_2 with the same graph.

use ncgraph::{catalog, verify, Guards};

fn main() -> ncgraph::Result<()> {
    let (l1, l2) = (catalog::pair_l1(), catalog::pair_l2());
    let c = verify::compare(&l1, &l2, &Guards::default())?;
    println!("isomorphic graphs: {}", c.isomorphic);
    println!("{}: {}", l1.name(), c.first);
    println!("{}: {}", l2.name(), c.second);
    println!("algebras differ: {}", c.algebras_differ);
    Ok(())
}
