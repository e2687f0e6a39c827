//! Graph isomorphism by colour refinement followed by backtracking over
//! colour-preserving bijections.

use std::collections::BTreeMap;

use super::structure::girth;
use super::Graph;
use crate::error::{Error, Result};

/// Stable colouring of the disjoint union of `graphs`, shared across all of
/// them so colours are comparable.
fn refine(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| g.degrees()).collect();
    let mut classes = usize::MAX;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.order())
                    .map(|v| {
                        let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| c[u]).collect();
                        around.sort_unstable();
                        (c[v], around)
                    })
                    .collect()
            })
            .collect();
        for sig in signatures.iter().flatten() {
            let next = palette.len();
            palette.entry(sig.clone()).or_insert(next);
        }
        // renumber in signature order so colours do not depend on vertex order
        for (i, value) in palette.values_mut().enumerate() {
            *value = i;
        }
        colors = signatures
            .iter()
            .map(|sigs| sigs.iter().map(|s| palette[s]).collect())
            .collect();
        if palette.len() == classes {
            return colors;
        }
        classes = palette.len();
    }
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// An isomorphism `g1 → g2` as `map[v1] = v2`, if one exists.
///
/// Both graphs must have at most `guard` vertices and the search is limited to
/// `node_budget` backtracking nodes.
pub fn find_isomorphism(
    g1: &Graph,
    g2: &Graph,
    guard: usize,
    node_budget: u64,
) -> Result<Option<Vec<usize>>> {
    let n = g1.order();
    let largest = n.max(g2.order());
    if largest > guard {
        return Err(Error::GuardExceeded {
            what: "isomorphism",
            size: largest as u128,
            limit: guard as u128,
        });
    }
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 || girth(g1) != girth(g2) {
        return Ok(None);
    }
    let colors = refine(&[g1, g2]);
    let (c1, c2) = (&colors[0], &colors[1]);
    if histogram(c1) != histogram(c2) {
        return Ok(None);
    }

    let hist = histogram(c1);
    let mut order: Vec<usize> = (0..n).collect();
    // small colour classes first, then stay connected to already-placed vertices
    order.sort_by_key(|&v| (hist[&c1[v]], std::cmp::Reverse(g1.degree(v)), v));
    let order = connected_order(g1, &order);

    let mut search = Backtrack {
        g1,
        g2,
        c1,
        c2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        budget: node_budget,
    };
    match search.run(0) {
        Some(true) => Ok(Some(search.map)),
        Some(false) => Ok(None),
        None => Err(Error::GuardExceeded {
            what: "isomorphism search nodes",
            size: node_budget as u128 + 1,
            limit: node_budget as u128,
        }),
    }
}

/// Reorders so that each vertex (after the first of its component) has an
/// earlier neighbour, following the priority order given.
fn connected_order(g: &Graph, priority: &[usize]) -> Vec<usize> {
    let n = g.order();
    let rank: Vec<usize> = {
        let mut r = vec![0; n];
        for (i, &v) in priority.iter().enumerate() {
            r[v] = i;
        }
        r
    };
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let touches = out.iter().any(|&u| g.has_edge(u, v));
                (!touches, rank[v])
            })
            .unwrap();
        placed[next] = true;
        out.push(next);
    }
    out
}

struct Backtrack<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    budget: u64,
}

impl Backtrack<'_> {
    fn run(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        let v = self.order[depth];
        for w in 0..self.g2.order() {
            if self.used[w] || self.c1[v] != self.c2[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g1.has_edge(u, v) == self.g2.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            match self.run(depth + 1) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        Some(false)
    }
}

/// Exact isomorphism decision; `GuardExceeded` when it could not be decided.
pub fn is_isomorphic(g1: &Graph, g2: &Graph, guard: usize) -> Result<bool> {
    find_isomorphism(g1, g2, guard, 10_000_000).map(|m| m.is_some())
}

/// Whether `map` is an isomorphism `g1 → g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.order();
    if g2.order() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])))
}
