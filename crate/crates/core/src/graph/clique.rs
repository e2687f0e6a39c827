//! Maximum clique by branch and bound with a greedy-colouring bound.

use super::{BitSet, Graph};

/// Outcome of a maximum-clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Largest clique found, sorted.
    pub clique: Vec<usize>,
    /// False when the node budget ran out; `clique` is then a lower bound.
    pub exact: bool,
}

/// Maximum clique of `g`, visiting at most `node_budget` search nodes.
pub fn max_clique(g: &Graph, node_budget: u64) -> CliqueResult {
    let n = g.order();
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    // Seed with a greedy clique so the bound prunes from the start.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut greedy: Vec<usize> = Vec::new();
    for &v in &order {
        if greedy.iter().all(|&u| g.has_edge(u, v)) {
            greedy.push(v);
        }
    }
    search.best = greedy;
    search.expand(BitSet::full(n));
    let mut clique = search.best;
    clique.sort_unstable();
    CliqueResult {
        clique,
        exact: !search.aborted,
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn expand(&mut self, candidates: BitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let (order, colors) = self.color_sort(&candidates);
        let mut candidates = candidates;
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next = candidates.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.aborted {
                return;
            }
            candidates.remove(v);
        }
    }

    /// Greedy sequential colouring of the candidates; returns the vertices in
    /// colour order with the colour count reached at each position.
    fn color_sort(&self, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(self.g.neighbors(v));
                uncolored.remove(v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

/// Whether `vertices` are pairwise adjacent.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}
