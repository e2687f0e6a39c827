//! Dominating sets.

use super::{BitSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    /// Smallest dominating set found, sorted.
    pub set: Vec<usize>,
    pub exact: bool,
}

/// Whether every vertex is in `set` or adjacent to a member.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut covered = BitSet::new(g.order());
    for &v in set {
        covered.union_with(&g.closed_neighborhood(v));
    }
    covered.count() == g.order()
}

fn greedy(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut covered = BitSet::new(n);
    let mut set = Vec::new();
    while covered.count() < n {
        let v = (0..n)
            .max_by_key(|&v| {
                let mut c = g.closed_neighborhood(v);
                c.difference_with(&covered);
                (c.count(), std::cmp::Reverse(v))
            })
            .unwrap();
        covered.union_with(&g.closed_neighborhood(v));
        set.push(v);
    }
    set.sort_unstable();
    set
}

/// Minimum dominating set, trying sizes in increasing order.
///
/// Each level branches on the members of the closed neighbourhood of an
/// undominated vertex, since one of them must be chosen.
pub fn min_dominating_set(g: &Graph, node_budget: u64) -> DominationResult {
    let n = g.order();
    let upper = greedy(g);
    let closed: Vec<BitSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let max_cover = closed.iter().map(BitSet::count).max().unwrap_or(0);
    let mut budget = node_budget;
    for k in 0..upper.len() {
        let mut chosen = Vec::new();
        match search(
            &closed,
            max_cover,
            &BitSet::new(n),
            k,
            &mut chosen,
            &mut budget,
        ) {
            Some(true) => {
                chosen.sort_unstable();
                return DominationResult {
                    set: chosen,
                    exact: true,
                };
            }
            Some(false) => {}
            None => {
                return DominationResult {
                    set: upper,
                    exact: false,
                }
            }
        }
    }
    DominationResult {
        set: upper,
        exact: true,
    }
}

fn search(
    closed: &[BitSet],
    max_cover: usize,
    covered: &BitSet,
    remaining: usize,
    chosen: &mut Vec<usize>,
    budget: &mut u64,
) -> Option<bool> {
    let n = closed.len();
    let missing = n - covered.count();
    if missing == 0 {
        return Some(true);
    }
    if remaining == 0 || missing > remaining * max_cover {
        return Some(false);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let undominated = covered.complement();
    let pivot = undominated
        .iter()
        .min_by_key(|&u| closed[u].count())
        .expect("some vertex is undominated");
    let mut options: Vec<usize> = closed[pivot].iter().collect();
    options.sort_by_key(|&w| std::cmp::Reverse(closed[w].intersection_count(&undominated)));
    for w in options {
        let mut next = covered.clone();
        next.union_with(&closed[w]);
        chosen.push(w);
        match search(closed, max_cover, &next, remaining - 1, chosen, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        chosen.pop();
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                is_dominating(g, &set)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(
            min_dominating_set(&Graph::complete(5), u64::MAX).set.len(),
            1
        );
        assert_eq!(min_dominating_set(&Graph::cycle(6), u64::MAX).set.len(), 2);
        assert_eq!(min_dominating_set(&Graph::path(7), u64::MAX).set.len(), 3);
        assert_eq!(min_dominating_set(&Graph::empty(3), u64::MAX).set.len(), 3);
        assert_eq!(min_dominating_set(&Graph::empty(0), u64::MAX).set.len(), 0);
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 0xDEADBEEFCAFEF00Du64;
        for _ in 0..40 {
            let n = 3 + (state % 10) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 30 {
                        g.add_edge(u, v);
                    }
                }
            }
            let r = min_dominating_set(&g, u64::MAX);
            assert!(r.exact);
            assert!(is_dominating(&g, &r.set));
            assert_eq!(r.set.len(), brute_force(&g));
        }
    }
}
