//! Exhaustive enumeration of structure-constant tensors.
//!
//! A candidate fixes `[e_i, e_j]` for every `i < j`, so there are
//! `q^(n·C(n,2))` of them. Candidate `k` reads its entries as the base-`q`
//! digits of `k`, most significant first, in the order `(i, j, component)`.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::lie::LieAlgebra;

/// Number of candidate tensors, or `None` if it overflows `u64`.
pub fn candidate_count(q: usize, dim: usize) -> Option<u64> {
    let entries = dim * dim.saturating_sub(1) / 2 * dim;
    (q as u64).checked_pow(entries as u32)
}

/// The tensor of candidate `index`, antisymmetrically completed but not validated.
pub(crate) fn candidate(field: &Field, dim: usize, index: u64) -> LieAlgebra {
    let q = field.order() as u64;
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    let entries = pairs.len() * dim;
    let mut digits = vec![0u64; entries];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = rest % q;
        rest /= q;
    }
    let mut sc = vec![Elem::ZERO; dim * dim * dim];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for k in 0..dim {
            let c = field
                .elem(digits[p * dim + k] as usize)
                .expect("digit below q");
            sc[(i * dim + j) * dim + k] = c;
            sc[(j * dim + i) * dim + k] = field.neg(c);
        }
    }
    LieAlgebra::from_tensor_unchecked(format!("t{index}"), field.clone(), dim, sc)
        .expect("sized tensor")
}

/// Streams the valid Lie algebras among all candidates, counting as it goes.
pub struct BracketEnumeration {
    field: Field,
    dim: usize,
    next: u64,
    total: u64,
    non_abelian_only: bool,
    valid: u64,
    non_abelian: u64,
}

impl BracketEnumeration {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Valid tensors seen so far, abelian or not.
    pub fn valid(&self) -> u64 {
        self.valid
    }

    pub fn non_abelian(&self) -> u64 {
        self.non_abelian
    }
}

impl Iterator for BracketEnumeration {
    type Item = LieAlgebra;

    fn next(&mut self) -> Option<LieAlgebra> {
        while self.next < self.total {
            let l = candidate(&self.field, self.dim, self.next);
            self.next += 1;
            if l.validate().is_err() {
                continue;
            }
            self.valid += 1;
            let abelian = l.is_abelian();
            if !abelian {
                self.non_abelian += 1;
            }
            if !(abelian && self.non_abelian_only) {
                return Some(l);
            }
        }
        None
    }
}

/// All valid structure-constant tensors of dimension `dim` over `field`.
///
/// Fails if the candidate count exceeds `guard`.
pub fn enumerate_brackets(
    field: &Field,
    dim: usize,
    non_abelian_only: bool,
    guard: u64,
) -> Result<BracketEnumeration> {
    let total = candidate_count(field.order(), dim)
        .filter(|&t| t <= guard)
        .ok_or_else(|| Error::GuardExceeded {
            what: "candidate tensors",
            size: (field.order() as u128)
                .saturating_pow((dim * dim.saturating_sub(1) / 2 * dim) as u32),
            limit: guard as u128,
        })?;
    Ok(BracketEnumeration {
        field: field.clone(),
        dim,
        next: 0,
        total,
        non_abelian_only,
        valid: 0,
        non_abelian: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    /// Jacobi by direct evaluation on every triple of basis vectors.
    fn jacobi_oracle(l: &LieAlgebra) -> bool {
        let f = l.field();
        let n = l.dim();
        let e = |i| linalg::unit_vector(n, i);
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let a = l.bracket(&l.bracket(&e(i), &e(j)).unwrap(), &e(k)).unwrap();
                    let b = l.bracket(&l.bracket(&e(j), &e(k)).unwrap(), &e(i)).unwrap();
                    let c = l.bracket(&l.bracket(&e(k), &e(i)).unwrap(), &e(j)).unwrap();
                    linalg::is_zero(&linalg::add(f, &linalg::add(f, &a, &b), &c))
                })
            })
        })
    }

    #[test]
    fn dim2_f2() {
        let f = Field::of_order(2).unwrap();
        let mut it = enumerate_brackets(&f, 2, false, 1 << 20).unwrap();
        assert_eq!(it.total(), 4);
        let all: Vec<_> = it.by_ref().collect();
        assert_eq!(all.len(), 4);
        assert!(all[0].is_abelian());
        assert_eq!((it.valid(), it.non_abelian()), (4, 3));
    }

    #[test]
    fn dim3_f2_golden() {
        let f = Field::of_order(2).unwrap();
        let mut it = enumerate_brackets(&f, 3, true, 1 << 20).unwrap();
        assert_eq!(it.total(), 512);
        assert_eq!(it.by_ref().count(), 119);
        assert_eq!((it.valid(), it.non_abelian()), (120, 119));
    }

    #[test]
    fn validity_matches_oracle() {
        let f = Field::of_order(2).unwrap();
        for k in 0..512 {
            let l = candidate(&f, 3, k);
            assert_eq!(l.validate().is_ok(), jacobi_oracle(&l), "candidate {k}");
        }
    }

    #[test]
    fn guard() {
        let f = Field::of_order(3).unwrap();
        assert!(enumerate_brackets(&f, 3, true, 1000).is_err());
        assert_eq!(candidate_count(2, 4), Some(1 << 24));
    }
}
