//! Writes the graph of the Heisenberg algebra over F_3 as DOT and GraphML.

use ncgraph::{catalog, graph::export, graph::NcGraph};

fn main() -> ncgraph::Result<()> {
    let l = catalog::heisenberg(3)?;
    let g = NcGraph::build(&l)?;
    println!("{}", export::to_dot(&g, "heisenberg_f3"));
    let xml = export::to_graphml(&g, "heisenberg_f3");
    println!(
        "GraphML: {} bytes, {} edges",
        xml.len(),
        xml.matches("<edge ").count()
    );
    Ok(())
}
