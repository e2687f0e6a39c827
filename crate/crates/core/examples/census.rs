//! Enumerates all three-dimensional Lie algebras over F_2 (as structure
//! tensors) and groups their graphs by isomorphism.

use ncgraph::{catalog, verify, Field};

fn main() -> ncgraph::Result<()> {
    let f = Field::of_order(2)?;
    let c = catalog::census(&f, 3, &catalog::CensusOptions::default())?;
    println!(
        "{} candidates, {} valid, {} non-abelian",
        c.candidates, c.valid, c.non_abelian
    );
    for k in &c.classes {
        println!(
            "class {}: {} vertices, {} edges, {} algebras ({} nilpotent)",
            k.id,
            k.order,
            k.size,
            k.members.len(),
            k.nilpotent
        );
    }
    let report = verify::verify_census(&c, &verify::VerifyConfig::default())?;
    println!(
        "{} checks, {} failures",
        report.checks.len(),
        report.failures().count()
    );
    Ok(())
}
