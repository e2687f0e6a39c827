use serde::Serialize;

use super::{clique, coloring, connectivity, domination, hamilton, planarity, structure, Graph};
use crate::guards::Guards;

/// An invariant from an exponential search: exact, or the best bound found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum Hamiltonicity {
    /// Decided by exhaustive search.
    Exact(bool),
    /// Minimum degree exceeds half the order.
    DiracGuaranteed,
    Unknown,
}

impl Hamiltonicity {
    /// `Some(true)` when a Hamiltonian cycle is known to exist.
    pub fn known(self) -> Option<bool> {
        match self {
            Hamiltonicity::Exact(b) => Some(b),
            Hamiltonicity::DiracGuaranteed => Some(true),
            Hamiltonicity::Unknown => None,
        }
    }
}

/// Every graph invariant the harness uses, computed once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub degree_sequence: Vec<usize>,
    pub regular: bool,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub eulerian: bool,
    pub hamiltonian: Hamiltonicity,
    pub planar: bool,
    pub kappa: usize,
    pub clique_number: Bound,
    pub chromatic_number: Bound,
    pub independence_number: Bound,
    pub domination_number: Bound,
    pub multipartite: Option<Vec<Vec<usize>>>,
}

impl InvariantReport {
    pub fn compute(g: &Graph, guards: &Guards) -> Self {
        let n = g.order();
        let budget_for = |guard: usize| if n <= guard { guards.search_nodes } else { 0 };

        let hamiltonian = if hamilton::dirac_bound_holds(g) {
            Hamiltonicity::DiracGuaranteed
        } else if n <= guards.hamiltonian {
            match hamilton::hamiltonian_cycle(g, guards.search_nodes) {
                Ok(c) => Hamiltonicity::Exact(c.is_some()),
                Err(()) => Hamiltonicity::Unknown,
            }
        } else {
            Hamiltonicity::Unknown
        };

        let cl = clique::max_clique(g, budget_for(guards.clique));
        let chi = coloring::chromatic_number(g, budget_for(guards.chromatic));
        let alpha = clique::max_clique(&g.complement(), budget_for(guards.independence));
        let gamma = domination::min_dominating_set(g, budget_for(guards.domination));

        InvariantReport {
            order: n,
            size: g.edge_count(),
            degree_sequence: g.degrees(),
            regular: g.is_regular(),
            connected: structure::is_connected(g),
            diameter: structure::diameter(g),
            girth: structure::girth(g),
            eulerian: structure::is_eulerian(g),
            hamiltonian,
            planar: planarity::is_planar(g),
            kappa: connectivity::vertex_connectivity(g),
            clique_number: Bound {
                value: cl.clique.len(),
                exact: cl.exact,
            },
            chromatic_number: Bound {
                value: chi.chromatic,
                exact: chi.exact,
            },
            independence_number: Bound {
                value: alpha.clique.len(),
                exact: alpha.exact,
            },
            domination_number: Bound {
                value: gamma.set.len(),
                exact: gamma.exact,
            },
            multipartite: structure::multipartite_decomposition(g),
        }
    }

    pub fn min_degree(&self) -> usize {
        self.degree_sequence.iter().copied().min().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_report() {
        let r = InvariantReport::compute(&Graph::complete(5), &Guards::default());
        assert_eq!((r.order, r.size, r.kappa), (5, 10, 4));
        assert_eq!(r.hamiltonian, Hamiltonicity::DiracGuaranteed);
        assert!(!r.planar && r.eulerian && r.regular);
        assert_eq!(
            r.clique_number,
            Bound {
                value: 5,
                exact: true
            }
        );
        assert_eq!(r.chromatic_number.value, 5);
        assert_eq!(r.independence_number.value, 1);
        assert_eq!(r.domination_number.value, 1);
        assert_eq!(r.multipartite.as_ref().map(Vec::len), Some(5));
    }

    #[test]
    fn small_plumbing_graphs() {
        let g = Guards::default();
        let c4 = InvariantReport::compute(&Graph::cycle(4), &g);
        assert_eq!(c4.hamiltonian, Hamiltonicity::Exact(true));
        let p3 = InvariantReport::compute(&Graph::path(3), &g);
        assert_eq!(p3.hamiltonian, Hamiltonicity::Exact(false));
        assert_eq!((p3.diameter, p3.girth, p3.kappa), (Some(2), None, 1));
    }

    #[test]
    fn guards_turn_searches_into_bounds() {
        let g = Guards {
            clique: 3,
            chromatic: 3,
            independence: 3,
            domination: 3,
            ..Guards::default()
        };
        let r = InvariantReport::compute(&Graph::cycle(7), &g);
        assert!(r.clique_number.value <= 2);
        assert!(r.chromatic_number.value >= 3);
        assert!(!r.domination_number.exact || r.domination_number.value == 3);
    }
}
