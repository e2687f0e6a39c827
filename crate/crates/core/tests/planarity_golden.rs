//! Planarity against reference answers for random sparse and near-planar graphs.

use ncgraph::graph::{planarity::is_planar, Graph};
use serde::Deserialize;

#[derive(Deserialize)]
struct Case {
    n: usize,
    edges: Vec<(usize, usize)>,
    planar: bool,
}

#[test]
fn matches_reference_answers() {
    let text = include_str!("data/planarity_golden.json");
    let cases: Vec<Case> = serde_json::from_str(text).unwrap();
    assert_eq!(cases.len(), 400);
    let mut wrong = Vec::new();
    for (k, c) in cases.iter().enumerate() {
        let g = Graph::from_edges(c.n, &c.edges);
        if is_planar(&g) != c.planar {
            wrong.push(k);
        }
    }
    assert!(wrong.is_empty(), "mismatches at {wrong:?}");
}
