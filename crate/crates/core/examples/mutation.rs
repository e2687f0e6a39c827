//! Flips one edge of a correct graph and shows which checks notice.

use ncgraph::{catalog, graph::NcGraph, verify};

fn main() -> ncgraph::Result<()> {
    let l = catalog::sl2(3)?;
    let config = verify::VerifyConfig::default();
    let tampered = NcGraph::build(&l)?.with_flipped_edge(0, 1);
    let subject = verify::Subject::with_graph(&l, tampered, &config.guards)?;
    let report = subject.verify(&config);
    for f in report.failures() {
        println!(
            "{} fails; witness reproduces: {}",
            f.check,
            subject.reproduces(f, &config)
        );
    }
    Ok(())
}
