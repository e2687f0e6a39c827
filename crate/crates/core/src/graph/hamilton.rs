//! Hamiltonian cycles.

use super::{BitSet, Graph};

/// Whether Dirac's condition holds in the strict form `δ(G) > |V|/2`, `|V| ≥ 3`.
pub fn dirac_bound_holds(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && 2 * g.min_degree() > n
}

/// A Hamiltonian cycle as a vertex sequence starting at 0, `Ok(None)` if none
/// exists, `Err(())` when the node budget runs out. Graphs with fewer than
/// three vertices have no cycle.
#[allow(clippy::result_unit_err)]
pub fn hamiltonian_cycle(g: &Graph, node_budget: u64) -> Result<Option<Vec<usize>>, ()> {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let mut path = vec![0];
    let mut visited = BitSet::new(n);
    visited.insert(0);
    let mut budget = node_budget;
    match extend(g, &mut path, &mut visited, &mut budget) {
        Some(true) => Ok(Some(path)),
        Some(false) => Ok(None),
        None => Err(()),
    }
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    visited: &mut BitSet,
    budget: &mut u64,
) -> Option<bool> {
    let n = g.order();
    let last = *path.last().unwrap();
    if path.len() == n {
        return Some(g.has_edge(last, path[0]));
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    // an unvisited vertex with fewer than two usable neighbours kills the branch
    for v in 0..n {
        if !visited.contains(v) {
            let mut free = g.neighbors(v).clone();
            free.difference_with(visited);
            let usable = free.count()
                + usize::from(g.has_edge(v, last))
                + usize::from(g.has_edge(v, path[0]));
            if usable < 2 {
                return Some(false);
            }
        }
    }
    let mut candidates: Vec<usize> = g
        .neighbors(last)
        .iter()
        .filter(|&v| !visited.contains(v))
        .collect();
    candidates.sort_by_key(|&v| {
        let mut free = g.neighbors(v).clone();
        free.difference_with(visited);
        free.count()
    });
    for v in candidates {
        path.push(v);
        visited.insert(v);
        match extend(g, path, visited, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        visited.remove(v);
        path.pop();
    }
    Some(false)
}

pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = BitSet::new(n);
    for &v in cycle {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_paths() {
        let c4 = Graph::cycle(4);
        let cyc = hamiltonian_cycle(&c4, u64::MAX).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&c4, &cyc));
        assert_eq!(hamiltonian_cycle(&Graph::path(3), u64::MAX), Ok(None));
        assert!(dirac_bound_holds(&Graph::complete(5)));
        assert!(!dirac_bound_holds(&Graph::cycle(4)));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert_eq!(hamiltonian_cycle(&g, u64::MAX), Ok(None));
    }

    #[test]
    fn complete_bipartite() {
        // K_{3,3} is Hamiltonian, K_{2,3} is not
        let mut k33 = Graph::empty(6);
        let mut k23 = Graph::empty(5);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b);
            }
        }
        for a in 0..2 {
            for b in 2..5 {
                k23.add_edge(a, b);
            }
        }
        assert!(hamiltonian_cycle(&k33, u64::MAX).unwrap().is_some());
        assert_eq!(hamiltonian_cycle(&k23, u64::MAX), Ok(None));
    }
}
