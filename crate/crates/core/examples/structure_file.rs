//! Reads an algebra from JSON structure constants, over F_4.

use ncgraph::{catalog::AlgebraSpec, graph::NcGraph};

const SPEC: &str = r#"{
  "name": "affine2-f4",
  "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},
  "dim": 2,
  "brackets": [{"i": 0, "j": 1, "value": [[1, 0], [0, 0]]}]
}"#;

fn main() -> ncgraph::Result<()> {
    let l = AlgebraSpec::parse(SPEC)?.to_algebra()?;
    let g = NcGraph::build(&l)?;
    println!(
        "{} over {}: {} vertices, complete = {}",
        l.name(),
        l.field().spec(),
        g.order(),
        g.graph().is_complete()
    );
    println!("round trip: {}", AlgebraSpec::from_algebra(&l).to_json());

    let broken = SPEC.replace("[[1, 0], [0, 0]]", "[1, 0]");
    match AlgebraSpec::parse(&broken)?.to_algebra() {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
