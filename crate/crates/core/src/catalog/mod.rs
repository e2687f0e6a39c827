//! Named algebras, the JSON structure-constant format, and exhaustive
//! enumeration of small algebras.

mod census;
mod enumerate;
mod spec;

pub use census::{census, fingerprint, Census, CensusOptions, CensusRecord, GammaClass};
pub use enumerate::{candidate_count, enumerate_brackets, BracketEnumeration};
pub use spec::{from_file, AlgebraSpec, BracketEntry, Scalar};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::lie::LieAlgebra;
use crate::linalg::{unit_vector, zero_vector};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &["heisenberg", "affine2", "sl2", "gl2", "l1", "l2"];

/// Heisenberg algebra: basis `x, y, z` with `[x, y] = z`.
pub fn heisenberg_over(field: &Field) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets("heisenberg", field.clone(), 3, &[(0, 1, unit_vector(3, 2))])
}

pub fn heisenberg(q: u32) -> Result<LieAlgebra> {
    heisenberg_over(&Field::of_order(q)?)
}

/// Two-dimensional non-abelian algebra: basis `a, b` with `[a, b] = a`.
pub fn affine2_over(field: &Field) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets("affine2", field.clone(), 2, &[(0, 1, unit_vector(2, 0))])
}

pub fn affine2(q: u32) -> Result<LieAlgebra> {
    affine2_over(&Field::of_order(q)?)
}

/// `sl_2` with basis `x, y, h`: `[x, y] = h`, `[h, x] = 2x`, `[h, y] = -2y`.
pub fn sl2_over(field: &Field) -> Result<LieAlgebra> {
    let two = field.from_int(2);
    let mut xh = zero_vector(3);
    xh[0] = field.neg(two);
    let mut yh = zero_vector(3);
    yh[1] = two;
    LieAlgebra::from_brackets(
        "sl2",
        field.clone(),
        3,
        &[(0, 1, unit_vector(3, 2)), (0, 2, xh), (1, 2, yh)],
    )
}

pub fn sl2(q: u32) -> Result<LieAlgebra> {
    sl2_over(&Field::of_order(q)?)
}

/// `gl_2` on the matrix units `E11, E12, E21, E22`, with the commutator bracket.
pub fn gl2_over(field: &Field) -> Result<LieAlgebra> {
    let unit = |i: usize, j: usize| 2 * i + j;
    let mut brackets = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
            let mut v = zero_vector(4);
            if j == k {
                v[unit(i, l)] = field.add(v[unit(i, l)], crate::Elem::ONE);
            }
            if l == i {
                v[unit(k, j)] = field.sub(v[unit(k, j)], crate::Elem::ONE);
            }
            brackets.push((a, b, v));
        }
    }
    LieAlgebra::from_brackets("gl2", field.clone(), 4, &brackets)
}

pub fn gl2(q: u32) -> Result<LieAlgebra> {
    gl2_over(&Field::of_order(q)?)
}

/// The nilpotent member of a pair of three-dimensional algebras over `F_2`
/// with isomorphic graphs: `[x, y] = z`.
pub fn pair_l1() -> LieAlgebra {
    heisenberg(2).expect("F_2 is valid").with_name("L1")
}

/// The non-nilpotent member of the pair: basis `a, b, c` with `[a, b] = a`.
pub fn pair_l2() -> LieAlgebra {
    let f = Field::of_order(2).expect("F_2 is valid");
    LieAlgebra::from_brackets("L2", f, 3, &[(0, 1, unit_vector(3, 0))]).expect("valid brackets")
}

/// Looks up a built-in algebra by name over the given field.
///
/// `a+b` builds the direct sum of two built-ins, and `abelianN` the
/// `N`-dimensional abelian algebra. `l1` and `l2` exist over `F_2` only.
pub fn builtin(name: &str, field: &Field) -> Result<LieAlgebra> {
    if let Some((a, b)) = name.split_once('+') {
        return builtin(a, field)?.direct_sum(&builtin(b, field)?);
    }
    let lower = name.trim().to_ascii_lowercase();
    if let Some(n) = lower.strip_prefix("abelian") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::parse("--builtin", format!("bad dimension in {name:?}")))?;
        return Ok(LieAlgebra::abelian(field.clone(), n));
    }
    match lower.as_str() {
        "heisenberg" => heisenberg_over(field),
        "affine2" => affine2_over(field),
        "sl2" => sl2_over(field),
        "gl2" => gl2_over(field),
        "l1" | "l2" => {
            if field.spec() != &FieldSpec::prime(2) {
                return Err(Error::parse(
                    "--builtin",
                    format!("{name} is defined over F_2 only"),
                ));
            }
            Ok(if lower == "l1" { pair_l1() } else { pair_l2() })
        }
        _ => Err(Error::parse(
            "--builtin",
            format!(
                "unknown algebra {name:?}; known: {}",
                BUILTIN_NAMES.join(", ")
            ),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    #[test]
    fn pair_series() {
        let s1 = pair_l1().series();
        assert_eq!(s1.nilpotency_class, Some(2));
        let s2 = pair_l2().series();
        assert!(!s2.is_nilpotent() && s2.solvable);
    }

    #[test]
    fn centers() {
        assert_eq!(heisenberg(2).unwrap().center().dim(), 1);
        assert_eq!(pair_l2().center().basis_vectors(), vec![unit_vector(3, 2)]);
        // char 2: [h, x] = 2x = 0, so h is central
        let sl2f2 = sl2(2).unwrap();
        assert!(sl2f2
            .center()
            .member(sl2f2.field(), &unit_vector(3, 2))
            .unwrap());
        assert!(sl2(5).unwrap().center().is_zero());
    }

    #[test]
    fn gl2_center_is_scalars() {
        for q in [2, 3, 5] {
            let l = gl2(q).unwrap();
            let z = l.center();
            assert_eq!(z.dim(), 1);
            let identity: Vector = vec![
                crate::Elem::ONE,
                crate::Elem::ZERO,
                crate::Elem::ZERO,
                crate::Elem::ONE,
            ];
            assert!(z.member(l.field(), &identity).unwrap());
        }
    }

    #[test]
    fn sl2_brackets() {
        let f = Field::of_order(5).unwrap();
        let l = sl2(5).unwrap();
        let (x, h) = (unit_vector(3, 0), unit_vector(3, 2));
        let two_x: Vector = x.iter().map(|&c| f.mul(f.from_int(2), c)).collect();
        assert_eq!(l.bracket(&h, &x).unwrap(), two_x);
    }

    #[test]
    fn builtin_lookup() {
        let f2 = Field::of_order(2).unwrap();
        assert_eq!(
            builtin("heisenberg+abelian1", &f2).unwrap().center().dim(),
            2
        );
        assert_eq!(builtin("L2", &f2).unwrap().dim(), 3);
        assert!(builtin("l1", &Field::of_order(3).unwrap()).is_err());
        assert!(builtin("nope", &f2).is_err());
    }
}
