//! Dense linear algebra over a [`Field`]: row reduction, kernels and
//! canonical subspaces.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub type Vector = Vec<Elem>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Elem::ZERO; n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Elem::ONE;
    v
}

pub fn is_zero(v: &[Elem]) -> bool {
    v.iter().all(|e| e.is_zero())
}

pub fn add(f: &Field, u: &[Elem], v: &[Elem]) -> Vector {
    u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect()
}

pub fn scale(f: &Field, c: Elem, v: &[Elem]) -> Vector {
    v.iter().map(|&a| f.mul(c, a)).collect()
}

/// `u + c v`, in place.
pub fn axpy(f: &Field, u: &mut [Elem], c: Elem, v: &[Elem]) {
    if c.is_zero() {
        return;
    }
    for (a, &b) in u.iter_mut().zip(v) {
        *a = f.add(*a, f.mul(c, b));
    }
}

/// Iterates over all of `F_q^n` in lexicographic order (last coordinate fastest).
pub fn all_vectors(f: &Field, n: usize) -> AllVectors {
    AllVectors {
        q: f.order(),
        next: Some(zero_vector(n)),
    }
}

pub struct AllVectors {
    q: usize,
    next: Option<Vector>,
}

impl Iterator for AllVectors {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            if slot.index() + 1 < self.q {
                *slot = Elem(slot.0 + 1);
                carried = false;
                break;
            }
            *slot = Elem::ZERO;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` is needed when there are none.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn push_row(&mut self, row: &[Elem]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn mul_vec(&self, f: &Field, v: &[Elem]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;

    fn index(&self, (r, c): (usize, usize)) -> &Elem {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elem {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row-echelon form, keeping only the nonzero rows, plus the rank.
///
/// Pivots are found scanning columns left to right and the resulting rows
/// are ordered by pivot column, so two matrices with the same row space
/// reduce to the same output.
pub fn rref(f: &Field, m: &Matrix) -> (Matrix, usize) {
    let (out, pivots) = rref_with_pivots(f, m);
    let rank = pivots.len();
    (out, rank)
}

pub(crate) fn rref_with_pivots(f: &Field, m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = f.inv(a[(r, c)]).expect("pivot is nonzero");
        for k in 0..a.cols {
            a[(r, k)] = f.mul(inv, a[(r, k)]);
        }
        let pivot_row: Vector = a.row(r).to_vec();
        for i in 0..a.rows {
            if i != r {
                let factor = f.neg(a[(i, c)]);
                if !factor.is_zero() {
                    let start = i * a.cols;
                    axpy(f, &mut a.data[start..start + a.cols], factor, &pivot_row);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * a.cols);
    a.rows = r;
    (a, pivots)
}

/// Null space `{v : M v = 0}`.
pub fn kernel(f: &Field, m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(f, m);
    let n = m.cols;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(n);
        v[free] = Elem::ONE;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r[(row, free)]);
        }
        basis.push(v);
    }
    Subspace::span(f, n, &basis).expect("kernel vectors have the ambient length")
}

/// A subspace of `F_q^n` stored by its canonical RREF basis.
///
/// Equal subspaces have identical bases, so `==` decides equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(f: &Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        let (basis, pivots) = rref_with_pivots(f, &m);
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors().map(<[Elem]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    /// Eliminates the pivot coordinates of `v`; the result is zero iff `v ∈ self`.
    pub fn reduce(&self, f: &Field, v: &[Elem]) -> Result<Vector> {
        self.check_ambient(v.len())?;
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if !c.is_zero() {
                axpy(f, &mut out, f.neg(c), self.basis.row(row));
            }
        }
        Ok(out)
    }

    pub fn member(&self, f: &Field, v: &[Elem]) -> Result<bool> {
        Ok(is_zero(&self.reduce(f, v)?))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        other.check_ambient(self.ambient)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::span(f, self.ambient, &vectors)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, f: &Field, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for v in other.basis.row_vectors() {
            if !self.member(f, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersection(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        other.check_ambient(self.ambient)?;
        // v ∈ self ∩ other iff both reductions vanish; stack the two
        // annihilator conditions as the kernel of one matrix.
        let a = self.annihilator(f);
        let b = other.annihilator(f);
        let mut rows = a.basis_vectors();
        rows.extend(b.basis_vectors());
        Ok(kernel(f, &Matrix::from_rows(self.ambient, &rows)?))
    }

    /// Subspace of linear functionals vanishing on `self`, as row vectors.
    fn annihilator(&self, f: &Field) -> Subspace {
        kernel(f, &self.basis)
    }

    /// Coordinate positions not used as pivots; the corresponding unit
    /// vectors span a direct-sum complement of `self`.
    pub fn complement_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// All `q^dim` elements, in lexicographic order of their coordinates in the basis.
    pub fn elements<'a>(&'a self, f: &'a Field) -> impl Iterator<Item = Vector> + 'a {
        all_vectors(f, self.dim()).map(move |coords| {
            let mut v = zero_vector(self.ambient);
            for (row, &c) in coords.iter().enumerate() {
                axpy(f, &mut v, c, self.basis.row(row));
            }
            v
        })
    }
}
