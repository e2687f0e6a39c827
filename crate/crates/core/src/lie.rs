//! Lie algebras given by structure constants over a finite field.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, kernel, Matrix, Subspace, Vector};

/// Default bound on `q^n` for exhaustive scans over algebra elements.
pub const DEFAULT_ELEMENT_GUARD: u64 = 4096;

/// First failure of the Lie axioms found in a structure-constant tensor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `[e_i, e_i] ≠ 0`.
    NotAlternating { i: usize },
    /// `[e_i, e_j] ≠ -[e_j, e_i]`.
    NotAntisymmetric { i: usize, j: usize },
    /// Jacobi sum nonzero on `(e_i, e_j, e_k)`.
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAlternating { i } => write!(f, "[e{i}, e{i}] is nonzero"),
            Violation::NotAntisymmetric { i, j } => {
                write!(f, "[e{i}, e{j}] is not the negative of [e{j}, e{i}]")
            }
            Violation::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails on (e{i}, e{j}, e{k})")
            }
        }
    }
}

/// A Lie algebra `L` of dimension `n` with basis `e_0..e_{n-1}`; the tensor
/// holds `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    field: Field,
    dim: usize,
    sc: Vec<Elem>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("dim", &self.dim)
            .finish()
    }
}

/// Lower central and derived series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesData {
    pub lower_central: Vec<Subspace>,
    pub derived: Vec<Subspace>,
    /// `None` when the lower central series stabilizes at a nonzero term.
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
}

impl SeriesData {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

impl LieAlgebra {
    /// Wraps a raw `n × n × n` tensor without checking the axioms.
    pub fn from_tensor_unchecked(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        sc: Vec<Elem>,
    ) -> Result<Self> {
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: sc.len(),
            });
        }
        Ok(LieAlgebra {
            name: name.into(),
            field,
            dim,
            sc,
        })
    }

    /// Wraps a tensor and rejects it if it is not a Lie algebra.
    pub fn from_tensor(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        sc: Vec<Elem>,
    ) -> Result<Self> {
        let l = Self::from_tensor_unchecked(name, field, dim, sc)?;
        l.validate().map_err(Error::Axiom)?;
        Ok(l)
    }

    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`;
    /// the remaining entries follow by antisymmetry.
    pub fn from_brackets(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let mut sc = vec![Elem::ZERO; dim * dim * dim];
        for (i, j, value) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: value.len(),
                });
            }
            if i == j {
                if !linalg::is_zero(value) {
                    return Err(Error::Axiom(Violation::NotAlternating { i }));
                }
                continue;
            }
            for k in 0..dim {
                sc[(i * dim + j) * dim + k] = value[k];
                sc[(j * dim + i) * dim + k] = field.neg(value[k]);
            }
        }
        Self::from_tensor(name, field, dim, sc)
    }

    /// The abelian algebra of dimension `dim`.
    pub fn abelian(field: Field, dim: usize) -> Self {
        LieAlgebra {
            name: format!("abelian{dim}"),
            field,
            dim,
            sc: vec![Elem::ZERO; dim * dim * dim],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Flattened tensor, index `(i * n + j) * n + k`.
    pub fn tensor(&self) -> &[Elem] {
        &self.sc
    }

    /// `[e_i, e_j]` as a slice of length `n`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Elem] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    /// Number of elements `q^n`, saturating.
    pub fn order(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.dim as u32)
    }

    /// Checks alternation, antisymmetry and the Jacobi identity on basis triples.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim;
        let f = &self.field;
        for i in 0..n {
            if !linalg::is_zero(self.basis_bracket(i, i)) {
                return Err(Violation::NotAlternating { i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(&x, &y)| !f.add(x, y).is_zero()) {
                    return Err(Violation::NotAntisymmetric { i, j });
                }
            }
        }
        // With alternation and antisymmetry in place, triples with repeated
        // indices satisfy Jacobi automatically and permutations only flip sign.
        let mut sum = vec![Elem::ZERO; n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    sum.iter_mut().for_each(|e| *e = Elem::ZERO);
                    self.add_bracket_with_basis(&mut sum, self.basis_bracket(i, j), k);
                    self.add_bracket_with_basis(&mut sum, self.basis_bracket(j, k), i);
                    self.add_bracket_with_basis(&mut sum, self.basis_bracket(k, i), j);
                    if !linalg::is_zero(&sum) {
                        return Err(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `acc += [u, e_k]`.
    fn add_bracket_with_basis(&self, acc: &mut [Elem], u: &[Elem], k: usize) {
        for (i, &ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                linalg::axpy(&self.field, acc, ui, self.basis_bracket(i, k));
            }
        }
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Elem], v: &[Elem]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Elem], v: &[Elem]) -> Vector {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.dim];
        for (i, &ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                linalg::axpy(f, &mut out, f.mul(ui, vj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ [y, x]`; its kernel is the centralizer of `x`.
    pub fn right_ad(&self, x: &[Elem]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let f = &self.field;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            // column i is [e_i, x]
            for (j, &xj) in x.iter().enumerate() {
                if xj.is_zero() {
                    continue;
                }
                let b = self.basis_bracket(i, j);
                for k in 0..n {
                    m[(k, i)] = f.add(m[(k, i)], f.mul(xj, b[k]));
                }
            }
        }
        Ok(m)
    }

    /// `Z(L)`, the intersection of the kernels of all adjoint maps.
    pub fn center(&self) -> Subspace {
        let basis: Vec<Vector> = (0..self.dim)
            .map(|i| linalg::unit_vector(self.dim, i))
            .collect();
        self.centralizer_of_set(&basis)
            .expect("basis vectors have the algebra's dimension")
    }

    /// `C_L(x) = {y : [y, x] = 0}`.
    pub fn centralizer(&self, x: &[Elem]) -> Result<Subspace> {
        Ok(kernel(&self.field, &self.right_ad(x)?))
    }

    /// Elements commuting with every member of `set`; the whole algebra for an empty set.
    pub fn centralizer_of_set(&self, set: &[Vector]) -> Result<Subspace> {
        let n = self.dim;
        let mut stacked = Matrix::zeros(0, n);
        for x in set {
            let ad = self.right_ad(x)?;
            for row in ad.row_vectors() {
                stacked.push_row(row)?;
            }
        }
        Ok(kernel(&self.field, &stacked))
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(|e| e.is_zero())
    }

    /// Whether all brackets between elements of `s` vanish.
    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(a, u)| {
            basis[a + 1..]
                .iter()
                .all(|v| linalg::is_zero(&self.bracket_unchecked(u, v)))
        })
    }

    /// Whether `s` is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(a, u)| {
            basis[a + 1..].iter().all(|v| {
                s.member(&self.field, &self.bracket_unchecked(u, v))
                    .expect("bracket has the algebra's dimension")
            })
        })
    }

    /// `[A, B]`, the span of brackets of basis vectors.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for u in a.basis().row_vectors() {
            for v in b.basis().row_vectors() {
                products.push(self.bracket_unchecked(u, v));
            }
        }
        Subspace::span(&self.field, self.dim, &products)
            .expect("brackets have the algebra's dimension")
    }

    pub fn series(&self) -> SeriesData {
        let full = Subspace::full(self.dim);

        let mut lower_central = vec![full.clone()];
        loop {
            let last = lower_central.last().unwrap();
            let next = self.bracket_span(&full, last);
            let stalled = next == *last;
            let done = next.is_zero();
            if !stalled {
                lower_central.push(next);
            }
            if stalled || done {
                break;
            }
        }
        let nilpotency_class = lower_central
            .last()
            .filter(|s| s.is_zero())
            .map(|_| lower_central.len() - 1);

        let mut derived = vec![full];
        loop {
            let last = derived.last().unwrap();
            let next = self.bracket_span(last, last);
            let stalled = next == *last;
            let done = next.is_zero();
            if !stalled {
                derived.push(next);
            }
            if stalled || done {
                break;
            }
        }
        let solvable = derived.last().is_some_and(Subspace::is_zero);

        SeriesData {
            lower_central,
            derived,
            nilpotency_class,
            solvable,
        }
    }

    fn element_guard(&self, what: &'static str, guard: u64) -> Result<()> {
        let size = self.order();
        if size > guard as u128 {
            Err(Error::GuardExceeded {
                what,
                size,
                limit: guard as u128,
            })
        } else {
            Ok(())
        }
    }

    /// One representative per line of `L`, with first nonzero coordinate 1.
    pub(crate) fn line_representatives(&self) -> impl Iterator<Item = Vector> + '_ {
        linalg::all_vectors(&self.field, self.dim)
            .filter(|v| v.iter().find(|e| !e.is_zero()) == Some(&Elem::ONE))
    }

    /// Commutative-transitive: every nonzero element has an abelian centralizer.
    pub fn is_ct(&self, guard: u64) -> Result<bool> {
        self.element_guard("CT scan", guard)?;
        Ok(self.line_representatives().all(|x| {
            let c = self.centralizer(&x).expect("representative length");
            self.is_abelian_subspace(&c)
        }))
    }

    /// Every non-central element has an abelian centralizer.
    pub fn is_ac(&self, guard: u64) -> Result<bool> {
        self.element_guard("AC scan", guard)?;
        Ok(self.first_nonabelian_centralizer().is_none())
    }

    /// A non-central element whose centralizer is not abelian, if any.
    pub fn first_nonabelian_centralizer(&self) -> Option<Vector> {
        let center = self.center();
        self.line_representatives().find(|x| {
            !center.member(&self.field, x).expect("length")
                && !self.is_abelian_subspace(&self.centralizer(x).expect("length"))
        })
    }

    /// AC by its definition: commuting is transitive on non-central elements.
    ///
    /// Scans all triples, so the guard applies to `q^n` with a cubic cost.
    pub fn is_ac_by_transitivity(&self, guard: u64) -> Result<bool> {
        self.element_guard("AC transitivity scan", guard)?;
        let center = self.center();
        let noncentral: Vec<Vector> = linalg::all_vectors(&self.field, self.dim)
            .filter(|v| !center.member(&self.field, v).expect("length"))
            .collect();
        let m = noncentral.len();
        let mut commutes = vec![false; m * m];
        for a in 0..m {
            for b in a..m {
                let c = linalg::is_zero(&self.bracket_unchecked(&noncentral[a], &noncentral[b]));
                commutes[a * m + b] = c;
                commutes[b * m + a] = c;
            }
        }
        for y in 0..m {
            for x in 0..m {
                if !commutes[x * m + y] {
                    continue;
                }
                for z in 0..m {
                    if commutes[y * m + z] && !commutes[x * m + z] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut sc = vec![Elem::ZERO; n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    sc[(i * n + j) * n + k] = self.sc[(i * n1 + j) * n1 + k];
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    sc[((i + n1) * n + j + n1) * n + k + n1] = other.sc[(i * n2 + j) * n2 + k];
                }
            }
        }
        Ok(LieAlgebra {
            name: format!("{}+{}", self.name, other.name),
            field: self.field.clone(),
            dim: n,
            sc,
        })
    }

    /// Formats a vector in terms of the basis, e.g. `e0 + 2e2`.
    pub fn format_vector(&self, v: &[Elem]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                if c == Elem::ONE {
                    format!("e{i}")
                } else if self.field.degree() == 1 {
                    format!("{}e{i}", self.field.format(c))
                } else {
                    format!("({})e{i}", self.field.format(c))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn heisenberg(q: u32) -> LieAlgebra {
        let f = Field::of_order(q).unwrap();
        LieAlgebra::from_brackets("heisenberg", f, 3, &[(0, 1, unit_vector(3, 2))]).unwrap()
    }

    fn affine_plus_inert() -> LieAlgebra {
        let f = Field::of_order(2).unwrap();
        LieAlgebra::from_brackets("L2", f, 3, &[(0, 1, unit_vector(3, 0))]).unwrap()
    }

    /// `[h,x] = 2x, [h,y] = -2y, [x,y] = h` with basis order (x, y, h).
    fn sl2(q: u32) -> LieAlgebra {
        let f = Field::of_order(q).unwrap();
        let two = f.from_int(2);
        let m2 = f.from_int(-2);
        let z = Elem::ZERO;
        LieAlgebra::from_brackets(
            "sl2",
            f,
            3,
            &[
                (0, 1, unit_vector(3, 2)),
                (0, 2, vec![m2, z, z]),
                (1, 2, vec![z, two, z]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_validates_and_brackets() {
        let h = heisenberg(2);
        assert!(h.validate().is_ok());
        let z = h.bracket(&unit_vector(3, 0), &unit_vector(3, 1)).unwrap();
        assert_eq!(z, unit_vector(3, 2));
        assert!(h.bracket(&unit_vector(2, 0), &unit_vector(3, 1)).is_err());
    }

    #[test]
    fn antisymmetry_violation_is_named() {
        let f = Field::of_order(2).unwrap();
        let mut sc = vec![Elem::ZERO; 8];
        // c[0][1] = e0 and c[1][0] = e0; over F2 that is antisymmetric, so use F3
        let at = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        sc[at(0, 1, 0)] = Elem::ONE;
        sc[at(1, 0, 0)] = Elem::ONE;
        let ok = LieAlgebra::from_tensor_unchecked("x", f, 2, sc.clone()).unwrap();
        assert!(ok.validate().is_ok());
        let f3 = Field::of_order(3).unwrap();
        let bad = LieAlgebra::from_tensor_unchecked("x", f3, 2, sc).unwrap();
        assert_eq!(
            bad.validate(),
            Err(Violation::NotAntisymmetric { i: 0, j: 1 })
        );
    }

    #[test]
    fn sl2_bracket_h_x() {
        let l = sl2(5);
        let (x, h) = (unit_vector(3, 0), unit_vector(3, 2));
        let f = l.field().clone();
        assert_eq!(
            l.bracket(&h, &x).unwrap(),
            vec![f.from_int(2), Elem::ZERO, Elem::ZERO]
        );
    }

    #[test]
    fn centers() {
        let h = heisenberg(2);
        let z = h.center();
        assert_eq!(z.dim(), 1);
        assert!(z.member(h.field(), &unit_vector(3, 2)).unwrap());

        let a = LieAlgebra::abelian(Field::of_order(3).unwrap(), 3);
        assert!(a.center().is_full());

        let l2 = affine_plus_inert();
        assert_eq!(
            l2.center(),
            Subspace::span(l2.field(), 3, &[unit_vector(3, 2)]).unwrap()
        );
    }

    #[test]
    fn centralizers() {
        let h = heisenberg(2);
        let c = h.centralizer(&unit_vector(3, 0)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(h.centralizer(&unit_vector(3, 2)).unwrap().is_full());

        let s = sl2(5);
        let c = s.centralizer(&unit_vector(3, 2)).unwrap();
        assert_eq!(
            c,
            Subspace::span(s.field(), 3, &[unit_vector(3, 2)]).unwrap()
        );
    }

    #[test]
    fn centralizer_of_sets() {
        let s = sl2(5);
        let f = s.field().clone();
        let x_plus_y = vec![Elem::ONE, Elem::ONE, Elem::ZERO];
        assert!(s
            .centralizer_of_set(&[x_plus_y, unit_vector(3, 2)])
            .unwrap()
            .is_zero());
        assert!(s.centralizer_of_set(&[]).unwrap().is_full());
        let basis: Vec<Vector> = (0..3).map(|i| unit_vector(3, i)).collect();
        assert_eq!(s.centralizer_of_set(&basis).unwrap(), s.center());
        let h = heisenberg(3);
        let x = vec![Elem::ONE, f.from_int(2), Elem::ZERO];
        assert_eq!(
            h.centralizer_of_set(std::slice::from_ref(&x)).unwrap(),
            h.centralizer(&x).unwrap()
        );
    }

    #[test]
    fn series_classify() {
        let h = heisenberg(2).series();
        assert_eq!(h.nilpotency_class, Some(2));
        assert!(h.solvable);

        let l2 = affine_plus_inert().series();
        assert_eq!(l2.nilpotency_class, None);
        assert!(l2.solvable);

        let a = LieAlgebra::abelian(Field::of_order(2).unwrap(), 2).series();
        assert_eq!(a.nilpotency_class, Some(1));

        let s = sl2(5).series();
        assert_eq!(s.nilpotency_class, None);
        assert!(!s.solvable);
        assert_eq!(s.lower_central.len(), 1);
    }

    #[test]
    fn ct_and_ac() {
        assert!(sl2(5).is_ct(DEFAULT_ELEMENT_GUARD).unwrap());
        assert!(!heisenberg(2).is_ct(DEFAULT_ELEMENT_GUARD).unwrap());
        let a = LieAlgebra::abelian(Field::of_order(2).unwrap(), 3);
        assert!(a.is_ct(DEFAULT_ELEMENT_GUARD).unwrap());
        for q in [2, 3, 4, 5] {
            assert!(heisenberg(q).is_ac(DEFAULT_ELEMENT_GUARD).unwrap());
        }
        let f2 = Field::of_order(2).unwrap();
        let aff = LieAlgebra::from_brackets("aff", f2, 2, &[(0, 1, unit_vector(2, 0))]).unwrap();
        let sum = heisenberg(2).direct_sum(&aff).unwrap();
        assert!(!sum.is_ac(DEFAULT_ELEMENT_GUARD).unwrap());
        assert!(!sum.is_ac_by_transitivity(DEFAULT_ELEMENT_GUARD).unwrap());
        assert!(heisenberg(3)
            .is_ac_by_transitivity(DEFAULT_ELEMENT_GUARD)
            .unwrap());
        assert!(matches!(sl2(5).is_ct(10), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn direct_sums() {
        let h = heisenberg(2);
        let empty = LieAlgebra::abelian(h.field().clone(), 0);
        assert_eq!(h.direct_sum(&empty).unwrap().tensor(), h.tensor());
        for k in 0..3 {
            let s = h
                .direct_sum(&LieAlgebra::abelian(h.field().clone(), k))
                .unwrap();
            assert_eq!(s.dim(), 3 + k);
            assert_eq!(s.center().dim(), 1 + k);
            assert!(s.validate().is_ok());
        }
        assert_eq!(
            h.direct_sum(&heisenberg(3)).unwrap_err(),
            Error::FieldMismatch
        );
    }
}
