//! Coordinates on `L/Z(L)` and the points of its projective space.
//!
//! Quotient coordinates are read off the non-pivot columns of the center's
//! canonical basis after reducing a vector modulo the center. A point is
//! stored by its representative whose first nonzero coordinate is `1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::lie::LieAlgebra;
use crate::linalg::{self, Subspace, Vector};

/// The quotient `L/Z(L)` with a fixed coordinate system.
#[derive(Debug, Clone)]
pub struct CentralQuotient {
    field: Field,
    n: usize,
    center: Subspace,
    complement_cols: Vec<usize>,
}

/// A one-dimensional subspace of `L/Z(L)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProjPoint {
    pub index: usize,
    #[serde(skip)]
    pub rep: Vector,
}

impl CentralQuotient {
    pub fn new(l: &LieAlgebra) -> Result<Self> {
        let center = l.center();
        if center.is_full() {
            return Err(Error::AbelianAlgebra);
        }
        let complement_cols = center.complement_pivots();
        Ok(CentralQuotient {
            field: l.field().clone(),
            n: l.dim(),
            center,
            complement_cols,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn center(&self) -> &Subspace {
        &self.center
    }

    pub fn complement_cols(&self) -> &[usize] {
        &self.complement_cols
    }

    /// Dimension `n` of the algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `s` of the center.
    pub fn s(&self) -> usize {
        self.center.dim()
    }

    /// Dimension `d = n - s` of the quotient.
    pub fn d(&self) -> usize {
        self.complement_cols.len()
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    /// Number of points, `(q^d - 1)/(q - 1)`.
    pub fn point_count(&self) -> usize {
        let q = self.q();
        (q.pow(self.d() as u32) - 1) / (q - 1)
    }

    /// Linear projection `L → F_q^d` with kernel `Z(L)`.
    pub fn project(&self, v: &[Elem]) -> Result<Vector> {
        let reduced = self.center.reduce(&self.field, v)?;
        Ok(self.complement_cols.iter().map(|&c| reduced[c]).collect())
    }

    /// The point spanned by `v + Z(L)`, or `None` when `v` is central.
    pub fn normalize(&self, v: &[Elem]) -> Result<Option<ProjPoint>> {
        let coords = self.project(v)?;
        Ok(self.point_from_coords(coords))
    }

    /// Scales nonzero quotient coordinates to canonical form.
    pub fn point_from_coords(&self, mut coords: Vector) -> Option<ProjPoint> {
        let lead = coords.iter().position(|e| !e.is_zero())?;
        let inv = self
            .field
            .inv(coords[lead])
            .expect("leading entry is nonzero");
        for c in coords.iter_mut() {
            *c = self.field.mul(inv, *c);
        }
        Some(ProjPoint {
            index: self.index_of(&coords, lead),
            rep: coords,
        })
    }

    /// Position in the canonical enumeration: points with an earlier leading
    /// one come first, then the tail in lexicographic order.
    fn index_of(&self, coords: &[Elem], lead: usize) -> usize {
        let q = self.q();
        let d = self.d();
        let before: usize = (0..lead).map(|l| q.pow((d - 1 - l) as u32)).sum();
        let tail = coords[lead + 1..]
            .iter()
            .fold(0usize, |acc, e| acc * q + e.index());
        before + tail
    }

    /// All points, indexed densely from 0.
    pub fn points(&self) -> Vec<ProjPoint> {
        let d = self.d();
        let mut out = Vec::with_capacity(self.point_count());
        for lead in 0..d {
            for tail in linalg::all_vectors(&self.field, d - lead - 1) {
                let mut rep = linalg::zero_vector(d);
                rep[lead] = Elem::ONE;
                rep[lead + 1..].copy_from_slice(&tail);
                out.push(ProjPoint {
                    index: out.len(),
                    rep,
                });
            }
        }
        out
    }

    /// Coset representative supported on the complement columns.
    pub fn lift(&self, pt: &ProjPoint) -> Vector {
        self.lift_coords(&pt.rep)
    }

    pub fn lift_coords(&self, coords: &[Elem]) -> Vector {
        let mut v = linalg::zero_vector(self.n);
        for (&c, &x) in self.complement_cols.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    /// Quotient subspace `P(A/Z)` membership for an `A ⊇ Z(L)`: the points whose
    /// lift lies in `a`.
    pub fn points_in(&self, a: &Subspace, points: &[ProjPoint]) -> Vec<usize> {
        points
            .iter()
            .filter(|p| a.member(&self.field, &self.lift(p)).expect("lift length"))
            .map(|p| p.index)
            .collect()
    }
}
