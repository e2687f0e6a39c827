//! Census distributions frozen from an independent brute-force enumeration
//! (plain Python over integer tuples, sharing no code with this crate).

use std::collections::BTreeMap;

use ncgraph::catalog::{self, Census, CensusOptions};
use ncgraph::{cover, Field, Guards};

fn run(q: u32, dim: usize) -> Census {
    catalog::census(&Field::of_order(q).unwrap(), dim, &CensusOptions::default()).unwrap()
}

fn histogram<K: Ord>(c: &Census, key: impl Fn(&catalog::CensusRecord) -> K) -> BTreeMap<K, usize> {
    let mut h = BTreeMap::new();
    for r in &c.records {
        *h.entry(key(r)).or_insert(0) += 1;
    }
    h
}

#[test]
fn dim2_f2() {
    let c = run(2, 2);
    assert_eq!((c.candidates, c.valid, c.non_abelian), (4, 4, 3));
    assert_eq!(
        histogram(&c, |r| (r.invariants.order, r.invariants.size)),
        BTreeMap::from([((3, 3), 3)])
    );
    assert!(c
        .records
        .iter()
        .all(|r| r.invariants.planar && r.invariants.kappa == 2));
}

#[test]
fn dim2_f3() {
    let c = run(3, 2);
    assert_eq!((c.candidates, c.valid, c.non_abelian), (9, 9, 8));
    assert_eq!(
        histogram(&c, |r| (r.invariants.order, r.invariants.size)),
        BTreeMap::from([((4, 6), 8)])
    );
    let i = |r: &catalog::CensusRecord| {
        let v = &r.invariants;
        (
            v.planar,
            v.chromatic_number.value,
            v.kappa,
            v.domination_number.value,
        )
    };
    assert_eq!(histogram(&c, i), BTreeMap::from([((true, 4, 3, 1), 8)]));
}

#[test]
fn dim3_f2() {
    let c = run(2, 3);
    assert_eq!((c.candidates, c.valid, c.non_abelian), (512, 120, 119));
    assert_eq!(
        histogram(&c, |r| (
            r.invariants.order,
            r.invariants.size,
            r.center_dim
        )),
        BTreeMap::from([((3, 3, 1), 49), ((7, 18, 0), 42), ((7, 21, 0), 28)])
    );
    assert_eq!(
        histogram(&c, |r| (r.invariants.order, r.invariants.planar)),
        BTreeMap::from([((3, true), 49), ((7, false), 70)])
    );

    let guards = Guards::default();
    let triple = |r: &catalog::CensusRecord| {
        let cover = cover::min_abelian_cover(&r.algebra, &guards).unwrap();
        assert!(
            cover.exact && r.invariants.chromatic_number.exact && r.invariants.clique_number.exact
        );
        (
            r.invariants.chromatic_number.value,
            r.invariants.clique_number.value,
            cover.size,
        )
    };
    assert_eq!(
        histogram(&c, triple),
        BTreeMap::from([((3, 3, 3), 49), ((5, 5, 5), 42), ((7, 7, 7), 28)])
    );

    assert_eq!(
        histogram(&c, |r| r.invariants.domination_number.value),
        BTreeMap::from([(1, 119)])
    );
    assert_eq!(
        histogram(&c, |r| r.invariants.kappa),
        BTreeMap::from([(2, 49), (4, 42), (6, 28)])
    );
    assert_eq!(
        histogram(&c, |r| r.invariants.diameter),
        BTreeMap::from([(Some(1), 77), (Some(2), 42)])
    );
    assert_eq!(
        histogram(&c, |r| r.invariants.girth),
        BTreeMap::from([(Some(3), 119)])
    );
    assert_eq!(
        histogram(&c, |r| r.invariants.independence_number.value),
        BTreeMap::from([(1, 77), (3, 42)])
    );
}

#[test]
fn dim3_f2_classes() {
    let c = run(2, 3);
    let shape: Vec<_> = c
        .classes
        .iter()
        .map(|k| (k.order, k.size, k.members.len(), k.mixed_nilpotency))
        .collect();
    assert_eq!(
        shape,
        vec![(3, 3, 49, true), (7, 18, 42, false), (7, 21, 28, false)]
    );
    // members are listed in candidate order and every record points back to its class
    for k in &c.classes {
        assert!(k.members.windows(2).all(|w| w[0] < w[1]));
        for &m in &k.members {
            assert_eq!(
                c.records.iter().find(|r| r.index == m).unwrap().gamma_class,
                k.id
            );
        }
    }
}

#[test]
fn census_json_is_stable() {
    let a = run(2, 3).to_json_lines();
    let f = Field::of_order(2).unwrap();
    let b = catalog::census(
        &f,
        3,
        &CensusOptions {
            jobs: Some(1),
            ..Default::default()
        },
    )
    .unwrap()
    .to_json_lines();
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 119);
}
