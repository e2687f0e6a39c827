//! Size budgets for the exponential computations.

use serde::{Deserialize, Serialize};

/// Per-computation limits. Vertex budgets apply to graph order; the element
/// budget applies to `q^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    pub elements: u64,
    pub clique: usize,
    pub chromatic: usize,
    pub independence: usize,
    pub domination: usize,
    pub hamiltonian: usize,
    pub isomorphism: usize,
    /// Candidate tensors for exhaustive enumeration.
    pub enumeration: u64,
    /// Search nodes for branch-and-bound before giving up exactness.
    pub search_nodes: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            elements: crate::lie::DEFAULT_ELEMENT_GUARD,
            clique: 200,
            chromatic: 200,
            independence: 200,
            domination: 100,
            hamiltonian: 24,
            isomorphism: 64,
            enumeration: 1 << 24,
            search_nodes: 50_000_000,
        }
    }
}
