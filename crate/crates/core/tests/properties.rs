use petgraph::graph::UnGraph;
use proptest::prelude::*;

use ncgraph::graph::{iso, Graph, NcGraph};
use ncgraph::{catalog, linalg, Elem, Field, Subspace, Vector};

const ORDERS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(ORDERS).prop_map(|q| Field::of_order(q).unwrap())
}

fn elem(f: &Field, i: usize) -> Elem {
    f.elem(i % f.order()).unwrap()
}

fn vector(f: &Field, seed: &[usize]) -> Vector {
    seed.iter().map(|&i| elem(f, i)).collect()
}

fn graph_from(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.order()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from(n, &b))
    })
}

proptest! {
    #[test]
    fn field_axioms(f in field(), a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        match f.inv(a) {
            Some(i) => prop_assert_eq!(f.mul(a, i), Elem::ONE),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn coefficient_round_trip(f in field(), a in 0usize..64) {
        let a = elem(&f, a);
        prop_assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
    }

    #[test]
    fn rref_is_canonical(
        f in field(),
        rows in prop::collection::vec(prop::collection::vec(0usize..64, 5), 0..6),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let vs: Vec<Vector> = rows.iter().map(|r| vector(&f, r)).collect();
        let s = Subspace::span(&f, 5, &vs).unwrap();
        prop_assert!(s.dim() <= vs.len().min(5));
        let again = Subspace::span(&f, 5, &s.basis_vectors()).unwrap();
        prop_assert_eq!(&again, &s);
        let shuffled: Vec<Vector> = perm.iter().filter(|&&i| i < vs.len()).map(|&i| vs[i].clone()).collect();
        prop_assert_eq!(&Subspace::span(&f, 5, &shuffled).unwrap(), &s);
        for v in &vs {
            prop_assert!(s.member(&f, v).unwrap());
        }
    }

    #[test]
    fn bracket_is_alternating_and_bilinear(
        q in prop::sample::select(&[2u32, 3, 4, 5][..]),
        name in prop::sample::select(&["heisenberg", "sl2", "gl2", "affine2+heisenberg"][..]),
        xs in prop::collection::vec(0usize..64, 7),
        ys in prop::collection::vec(0usize..64, 7),
        c in 1usize..64,
    ) {
        let f = Field::of_order(q).unwrap();
        let l = catalog::builtin(name, &f).unwrap();
        let n = l.dim();
        let (x, y) = (vector(&f, &xs[..n]), vector(&f, &ys[..n]));
        prop_assert!(linalg::is_zero(&l.bracket(&x, &x).unwrap()));
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        prop_assert!(linalg::is_zero(&linalg::add(&f, &xy, &yx)));
        let c = elem(&f, c);
        let cx = linalg::scale(&f, c, &x);
        prop_assert_eq!(l.bracket(&cx, &y).unwrap(), linalg::scale(&f, c, &xy));
        let xpy = linalg::add(&f, &x, &y);
        prop_assert_eq!(l.bracket(&xpy, &y).unwrap(), xy);
    }

    #[test]
    fn normalize_ignores_scaling_and_center(
        q in prop::sample::select(&[2u32, 3, 4, 5][..]),
        name in prop::sample::select(&["heisenberg", "gl2", "heisenberg+abelian1", "affine2"][..]),
        xs in prop::collection::vec(0usize..64, 5),
        zs in prop::collection::vec(0usize..64, 3),
        c in 1usize..64,
    ) {
        let f = Field::of_order(q).unwrap();
        let l = catalog::builtin(name, &f).unwrap();
        let g = NcGraph::build(&l).unwrap();
        let quotient = g.quotient();
        let x = vector(&f, &xs[..l.dim()]);
        let nonzero = f.elem(1 + c % (f.order() - 1)).unwrap();
        let mut y = linalg::scale(&f, nonzero, &x);
        for (z, &k) in quotient.center().basis_vectors().iter().zip(&zs) {
            linalg::axpy(&f, &mut y, elem(&f, k), z);
        }
        let (px, py) = (quotient.normalize(&x).unwrap(), quotient.normalize(&y).unwrap());
        prop_assert_eq!(&px, &py);
        match px {
            None => prop_assert!(quotient.center().member(&f, &x).unwrap()),
            Some(p) => {
                prop_assert_eq!(&g.points()[p.index], &p);
                // adjacency does not depend on the representative
                for v in 0..g.order() {
                    if v != p.index {
                        let commutes = linalg::is_zero(&l.bracket(&y, g.lift(v)).unwrap());
                        prop_assert_eq!(g.graph().has_edge(p.index, v), !commutes);
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_agrees_with_petgraph(a in small_graph(), b in small_graph()) {
        let ours = iso::is_isomorphic(&a, &b, 64).unwrap();
        prop_assert_eq!(ours, petgraph::algo::is_isomorphic(&to_petgraph(&a), &to_petgraph(&b)));
    }

    #[test]
    fn relabelled_graph_is_isomorphic(
        (g, perm) in small_graph().prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        }),
    ) {
        let h = g.permuted(&perm);
        let map = iso::find_isomorphism(&g, &h, 64, 1_000_000).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(iso::is_isomorphism(&g, &h, &map));
    }
}
