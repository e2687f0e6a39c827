//! Maximal abelian subalgebras and the smallest abelian cover.

use ncgraph::{catalog, cover, Guards};

fn main() -> ncgraph::Result<()> {
    for l in [catalog::heisenberg(2)?, catalog::gl2(2)?, catalog::sl2(3)?] {
        let maximal = cover::maximal_abelian_subalgebras(&l, 1_000_000).expect("small algebra");
        let c = cover::min_abelian_cover(&l, &Guards::default())?;
        let dims: Vec<usize> = maximal.iter().map(|a| a.dim()).collect();
        println!(
            "{} over {}: maximal abelian dims {:?}, cover size {} (exact {})",
            l.name(),
            l.field().spec(),
            dims,
            c.size,
            c.exact
        );
    }
    Ok(())
}
