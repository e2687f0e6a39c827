//! Simple undirected graphs with bit-row adjacency, the non-commuting graph
//! built from a Lie algebra, and exact (guarded) graph invariants.

mod bitset;
pub mod clique;
pub mod coloring;
pub mod connectivity;
pub mod domination;
pub mod export;
pub mod hamilton;
pub mod iso;
pub mod planarity;
mod report;
pub mod structure;

pub use bitset::BitSet;
pub use report::{Bound, Hamiltonicity, InvariantReport};

use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{self, Vector};
use crate::projective::{CentralQuotient, ProjPoint};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Self-loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u != v {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    /// Flips adjacency of `u` and `v`, keeping the matrix symmetric.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.rows[u].toggle(v);
        self.rows[v].toggle(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| {
                self.rows[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Graph { rows }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.rows.iter().all(|r| r.count() + 1 == n)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// The non-commuting graph of a non-abelian Lie algebra.
#[derive(Debug, Clone)]
pub struct NcGraph {
    graph: Graph,
    points: Vec<ProjPoint>,
    lifts: Vec<Vector>,
    quotient: CentralQuotient,
}

impl NcGraph {
    /// Vertices are the points of `P(L/Z(L))`; `[x] ~ [y]` iff the lifts do not commute.
    pub fn build(l: &LieAlgebra) -> Result<Self> {
        let quotient = CentralQuotient::new(l)?;
        let points = quotient.points();
        let lifts: Vec<Vector> = points.iter().map(|p| quotient.lift(p)).collect();
        let f = l.field();
        let mut graph = Graph::empty(points.len());
        for (i, x) in lifts.iter().enumerate() {
            let ad = l.right_ad(x)?;
            for (j, y) in lifts.iter().enumerate().skip(i + 1) {
                if !linalg::is_zero(&ad.mul_vec(f, y)?) {
                    graph.add_edge(i, j);
                }
            }
        }
        Ok(NcGraph {
            graph,
            points,
            lifts,
            quotient,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Coset representative of vertex `v`.
    pub fn lift(&self, v: usize) -> &[crate::field::Elem] {
        &self.lifts[v]
    }

    pub fn quotient(&self) -> &CentralQuotient {
        &self.quotient
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn q(&self) -> usize {
        self.quotient.q()
    }

    pub fn n(&self) -> usize {
        self.quotient.n()
    }

    pub fn s(&self) -> usize {
        self.quotient.s()
    }

    pub fn d(&self) -> usize {
        self.quotient.d()
    }

    /// Label of a vertex: its canonical projective coordinates.
    pub fn label(&self, v: usize) -> String {
        let f = self.quotient.field();
        let coords: Vec<String> = self.points[v].rep.iter().map(|&c| f.format(c)).collect();
        format!("({})", coords.join(","))
    }

    /// A copy with the adjacency of `u` and `v` flipped. Used to check that the
    /// theorem harness notices corrupted graphs.
    pub fn with_flipped_edge(&self, u: usize, v: usize) -> NcGraph {
        let mut g = self.clone();
        g.graph.toggle_edge(u, v);
        g
    }

    pub fn invariants(&self, guards: &crate::Guards) -> InvariantReport {
        InvariantReport::compute(&self.graph, guards)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn small_catalog_graphs() {
        let g = NcGraph::build(&catalog::heisenberg(2).unwrap()).unwrap();
        assert_eq!((g.order(), g.graph().edge_count()), (3, 3));
        let g = NcGraph::build(&catalog::heisenberg(3).unwrap()).unwrap();
        assert!(g.graph().is_complete());
        assert_eq!(g.order(), 4);
        let g = NcGraph::build(&catalog::affine2(4).unwrap()).unwrap();
        assert!(g.graph().is_complete());
        assert_eq!(g.order(), 5);
    }

    #[test]
    fn abelian_has_no_graph() {
        let a = LieAlgebra::abelian(crate::Field::of_order(2).unwrap(), 3);
        assert!(NcGraph::build(&a).is_err());
    }

    #[test]
    fn complement_and_edges() {
        let g = Graph::path(3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.complement().edges(), vec![(0, 2)]);
        assert!(Graph::complete(4).is_complete());
        assert!(Graph::cycle(5).is_regular());
        let mut h = Graph::complete(3);
        h.toggle_edge(0, 1);
        assert!(!h.has_edge(1, 0));
        assert_eq!(h.edge_count(), 2);
    }
}
