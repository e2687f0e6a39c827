//! Covers of a Lie algebra by abelian subalgebras.
//!
//! Every abelian subalgebra `A` lies in the abelian subalgebra `A + Z(L)`,
//! which in turn extends to a maximal one, and maximal abelian subalgebras are
//! exactly the abelian `A` with `C_L(A) = A`. A family of subalgebras that all
//! contain `Z(L)` covers `L` iff it covers the points of `P(L/Z(L))`, so the
//! cover search runs over those points.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::BitSet;
use crate::guards::Guards;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::projective::{CentralQuotient, ProjPoint};

/// A smallest family of abelian subalgebras whose union is `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianCover {
    pub size: usize,
    #[serde(skip)]
    pub subalgebras: Vec<Subspace>,
    /// False when candidates or the search were cut short; `size` is then an
    /// upper bound.
    pub exact: bool,
}

/// All maximal abelian subalgebras, found by extending `Z(L)` one line at a
/// time. `None` if more than `node_budget` abelian subspaces were visited.
pub fn maximal_abelian_subalgebras(l: &LieAlgebra, node_budget: u64) -> Option<Vec<Subspace>> {
    let f = l.field();
    let n = l.dim();
    let center = l.center();
    if center.is_full() {
        return Some(vec![center]);
    }
    let cq = CentralQuotient::new(l).expect("non-abelian");
    let points = cq.points();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut stack = vec![center.clone()];
    seen.insert(center);
    let mut maximal = Vec::new();
    while let Some(a) = stack.pop() {
        if seen.len() as u64 > node_budget {
            return None;
        }
        let c = l
            .centralizer_of_set(&a.basis_vectors())
            .expect("basis length");
        if c.dim() == a.dim() {
            maximal.push(a);
            continue;
        }
        for p in &points {
            let x = cq.lift(p);
            if c.member(f, &x).expect("length") && !a.member(f, &x).expect("length") {
                let b = a
                    .sum(f, &Subspace::span(f, n, &[x]).expect("length"))
                    .expect("ambient");
                if seen.insert(b.clone()) {
                    stack.push(b);
                }
            }
        }
    }
    maximal.sort_by(|a, b| a.basis().row_vectors().cmp(b.basis().row_vectors()));
    Some(maximal)
}

/// Greedily grows `span{x} + Z(L)` inside centralizers until it is maximal abelian.
fn abelian_closure(
    l: &LieAlgebra,
    cq: &CentralQuotient,
    points: &[ProjPoint],
    start: &ProjPoint,
) -> Subspace {
    let f = l.field();
    let n = l.dim();
    let mut a = cq
        .center()
        .sum(f, &Subspace::span(f, n, &[cq.lift(start)]).expect("length"))
        .expect("ambient");
    loop {
        let c = l.centralizer_of_set(&a.basis_vectors()).expect("length");
        let next = points
            .iter()
            .map(|p| cq.lift(p))
            .find(|x| c.member(f, x).expect("length") && !a.member(f, x).expect("length"));
        match next {
            Some(x) => {
                a = a
                    .sum(f, &Subspace::span(f, n, &[x]).expect("length"))
                    .expect("ambient")
            }
            None => return a,
        }
    }
}

/// Minimum number of abelian subalgebras with union `L`.
///
/// Exact when all maximal abelian subalgebras can be listed and the set-cover
/// search finishes within `guards.search_nodes`. Otherwise candidates come
/// from abelian closures of single points and the size is an upper bound.
pub fn min_abelian_cover(l: &LieAlgebra, guards: &Guards) -> Result<AbelianCover> {
    if l.order() > guards.elements as u128 {
        return Err(Error::GuardExceeded {
            what: "abelian cover",
            size: l.order(),
            limit: guards.elements as u128,
        });
    }
    if l.is_abelian() {
        return Ok(AbelianCover {
            size: 1,
            subalgebras: vec![Subspace::full(l.dim())],
            exact: true,
        });
    }
    let cq = CentralQuotient::new(l)?;
    let points = cq.points();
    let (candidates, complete) = match maximal_abelian_subalgebras(l, guards.search_nodes) {
        Some(all) => (all, true),
        None => {
            let mut seen = HashSet::new();
            let closures = points
                .iter()
                .map(|p| abelian_closure(l, &cq, &points, p))
                .filter(|a| seen.insert(a.clone()))
                .collect();
            (closures, false)
        }
    };
    let sets: Vec<BitSet> = candidates
        .iter()
        .map(|a| cq.points_in(a, &points).into_iter().collect::<BitSet>())
        .map(|s| resize(s, points.len()))
        .collect();
    let (chosen, finished) = set_cover(&sets, points.len(), guards.search_nodes);
    Ok(AbelianCover {
        size: chosen.len(),
        subalgebras: chosen.into_iter().map(|i| candidates[i].clone()).collect(),
        exact: complete && finished,
    })
}

fn resize(s: BitSet, len: usize) -> BitSet {
    let mut out = BitSet::new(len);
    for i in s.iter() {
        out.insert(i);
    }
    out
}

/// Smallest subfamily of `sets` covering `0..universe`, by increasing size.
/// The flag is false if the budget ran out, in which case a greedy cover is
/// returned.
pub(crate) fn set_cover(sets: &[BitSet], universe: usize, node_budget: u64) -> (Vec<usize>, bool) {
    let greedy = greedy_cover(sets, universe);
    let largest = sets.iter().map(BitSet::count).max().unwrap_or(0);
    let mut budget = node_budget;
    for k in 0..greedy.len() {
        let mut chosen = Vec::new();
        match cover_search(
            sets,
            largest,
            &BitSet::new(universe),
            k,
            &mut chosen,
            &mut budget,
        ) {
            Some(true) => {
                chosen.sort_unstable();
                return (chosen, true);
            }
            Some(false) => {}
            None => return (greedy, false),
        }
    }
    (greedy, true)
}

fn greedy_cover(sets: &[BitSet], universe: usize) -> Vec<usize> {
    let mut covered = BitSet::new(universe);
    let mut chosen = Vec::new();
    while covered.count() < universe {
        let best = (0..sets.len())
            .max_by_key(|&i| {
                let mut s = sets[i].clone();
                s.difference_with(&covered);
                (s.count(), std::cmp::Reverse(i))
            })
            .expect("the candidate sets cover the universe");
        covered.union_with(&sets[best]);
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

fn cover_search(
    sets: &[BitSet],
    largest: usize,
    covered: &BitSet,
    remaining: usize,
    chosen: &mut Vec<usize>,
    budget: &mut u64,
) -> Option<bool> {
    let missing = covered.capacity() - covered.count();
    if missing == 0 {
        return Some(true);
    }
    if remaining == 0 || missing > remaining * largest {
        return Some(false);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let uncovered = covered.complement();
    // the element in the fewest sets gives the narrowest branching
    let pivot = uncovered
        .iter()
        .min_by_key(|&u| sets.iter().filter(|s| s.contains(u)).count())
        .expect("something is uncovered");
    for (i, s) in sets.iter().enumerate() {
        if !s.contains(pivot) {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(s);
        chosen.push(i);
        match cover_search(sets, largest, &next, remaining - 1, chosen, budget) {
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
    use crate::catalog;
    use crate::linalg::all_vectors;

    /// Checks a cover directly over all elements of `L`.
    fn covers_every_element(l: &LieAlgebra, cover: &AbelianCover) -> bool {
        let f = l.field();
        cover.subalgebras.iter().all(|a| l.is_abelian_subspace(a))
            && all_vectors(f, l.dim())
                .all(|v| cover.subalgebras.iter().any(|a| a.member(f, &v).unwrap()))
    }

    #[test]
    fn heisenberg_f2_needs_three() {
        let l = catalog::heisenberg(2).unwrap();
        let maximal = maximal_abelian_subalgebras(&l, u64::MAX).unwrap();
        assert_eq!(maximal.len(), 3);
        assert!(maximal.iter().all(|a| a.dim() == 2));
        let c = min_abelian_cover(&l, &Guards::default()).unwrap();
        assert_eq!((c.size, c.exact), (3, true));
        assert!(covers_every_element(&l, &c));
    }

    #[test]
    fn small_cases() {
        let g = Guards::default();
        let aff = catalog::affine2(2).unwrap();
        assert_eq!(min_abelian_cover(&aff, &g).unwrap().size, 3);
        let ab = LieAlgebra::abelian(crate::Field::of_order(3).unwrap(), 2);
        assert_eq!(min_abelian_cover(&ab, &g).unwrap().size, 1);
        let sl2 = catalog::sl2(5).unwrap();
        let c = min_abelian_cover(&sl2, &g).unwrap();
        assert_eq!(c.size, 31);
        assert!(covers_every_element(&sl2, &c));
    }

    #[test]
    fn fallback_is_flagged() {
        let l = catalog::heisenberg(3).unwrap();
        let g = Guards {
            search_nodes: 1,
            ..Guards::default()
        };
        let c = min_abelian_cover(&l, &g).unwrap();
        assert!(!c.exact);
        assert!(covers_every_element(&l, &c));
    }

    #[test]
    fn element_guard() {
        let l = catalog::sl2(5).unwrap();
        let g = Guards {
            elements: 100,
            ..Guards::default()
        };
        assert!(matches!(
            min_abelian_cover(&l, &g),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn set_cover_small() {
        let sets: Vec<BitSet> = [vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![0, 4]]
            .iter()
            .map(|s| resize(s.iter().copied().collect(), 5))
            .collect();
        let (chosen, exact) = set_cover(&sets, 5, u64::MAX);
        assert!(exact);
        assert_eq!(chosen, vec![0, 2]);
    }
}
