//! Chromatic number: DSATUR upper bound, clique lower bound, and exact
//! k-colourability by backtracking for each k in between.

use super::clique::max_clique;
use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub chromatic: usize,
    /// `colors[v]` for the best colouring found.
    pub colors: Vec<usize>,
    pub exact: bool,
}

/// Greedy DSATUR colouring.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                (saturation[a], g.degree(a), std::cmp::Reverse(a)).cmp(&(
                    saturation[b],
                    g.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
            .expect("uncoloured vertex remains");
        let c = (0..=n).find(|&c| !neighbor_colors[v][c]).unwrap();
        colors[v] = c;
        for u in g.neighbors(v).iter() {
            if !neighbor_colors[u][c] {
                neighbor_colors[u][c] = true;
                saturation[u] += 1;
            }
        }
    }
    colors
}

/// Exact chromatic number within `node_budget` backtracking nodes.
pub fn chromatic_number(g: &Graph, node_budget: u64) -> ColoringResult {
    let n = g.order();
    if n == 0 {
        return ColoringResult {
            chromatic: 0,
            colors: Vec::new(),
            exact: true,
        };
    }
    let mut best = dsatur(g);
    let mut upper = best.iter().max().unwrap() + 1;
    let clique = max_clique(g, node_budget);
    let lower = clique.clique.len();
    let mut exact = true;
    let mut budget = node_budget;
    for k in lower..upper {
        match k_color(g, k, &mut budget) {
            Some(Some(colors)) => {
                best = colors;
                upper = k;
                break;
            }
            Some(None) => {}
            None => {
                exact = false;
                break;
            }
        }
    }
    ColoringResult {
        chromatic: upper,
        colors: best,
        exact,
    }
}

/// `Some(Some(colouring))` if k colours suffice, `Some(None)` if not, `None`
/// when the budget ran out.
pub fn k_color(g: &Graph, k: usize, budget: &mut u64) -> Option<Option<Vec<usize>>> {
    let n = g.order();
    let mut state = KColor {
        g,
        k,
        colors: vec![usize::MAX; n],
        // counts[v][c] = number of neighbours of v coloured c
        counts: vec![vec![0u32; k]; n],
        budget,
    };
    match state.solve(0, 0) {
        Outcome::Found => Some(Some(state.colors)),
        Outcome::Impossible => Some(None),
        Outcome::OutOfBudget => None,
    }
}

enum Outcome {
    Found,
    Impossible,
    OutOfBudget,
}

struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    counts: Vec<Vec<u32>>,
    budget: &'a mut u64,
}

impl KColor<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.counts[v].iter().filter(|&&c| c > 0).count()
    }

    fn solve(&mut self, colored: usize, used: usize) -> Outcome {
        if colored == self.colors.len() {
            return Outcome::Found;
        }
        if *self.budget == 0 {
            return Outcome::OutOfBudget;
        }
        *self.budget -= 1;
        let v = (0..self.colors.len())
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        // a fresh colour is interchangeable with any other unused one
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.colors[v] = c;
            for u in self.g.neighbors(v).iter() {
                self.counts[u][c] += 1;
            }
            let outcome = self.solve(colored + 1, used.max(c + 1));
            for u in self.g.neighbors(v).iter() {
                self.counts[u][c] -= 1;
            }
            match outcome {
                Outcome::Impossible => {}
                other => {
                    if matches!(other, Outcome::OutOfBudget) {
                        self.colors[v] = usize::MAX;
                    }
                    return other;
                }
            }
        }
        self.colors[v] = usize::MAX;
        Outcome::Impossible
    }
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
