//! Runs every check on a few catalog algebras and prints the report.

use ncgraph::{catalog, verify, Field};

fn main() -> ncgraph::Result<()> {
    let config = verify::VerifyConfig::default();
    let f3 = Field::of_order(3)?;
    for l in [
        catalog::heisenberg(2)?,
        catalog::gl2_over(&f3)?,
        catalog::sl2(5)?,
    ] {
        let report = verify::verify_all(&l, &config)?;
        print!("{}", report.to_text());
        assert!(!report.has_failures());
    }
    Ok(())
}
