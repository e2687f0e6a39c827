//! Prime and prime-power finite fields `F_p[t]/(f)`.
//!
//! Elements are encoded as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! of their coefficient vector, so `0` and `1` are the additive and
//! multiplicative identities and the encoding order is the canonical element
//! order used throughout the crate. Addition, multiplication and inversion
//! are looked up in tables built once per field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order supported by the table representation.
pub const MAX_ORDER: usize = 256;

/// Parameters of a finite field `F_{p^m}`.
///
/// `modulus` lists the coefficients of a monic degree-`m` polynomial from the
/// constant term up to the leading `1`. It is ignored for prime fields and may
/// be omitted for `q ∈ {4, 8, 9}` (and any other small `q`, see
/// [`FieldSpec::with_default_modulus`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec {
            p,
            m: 1,
            modulus: None,
        }
    }

    pub fn new(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec {
            p,
            m,
            modulus: Some(modulus),
        }
    }

    /// Spec for the field of order `q` with the built-in modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if m == 1 {
            Ok(FieldSpec::prime(p))
        } else {
            FieldSpec {
                p,
                m,
                modulus: None,
            }
            .with_default_modulus()
        }
    }

    /// Fills in the default modulus when none is given.
    ///
    /// Defaults: `t^2+t+1` for F₄, `t^3+t+1` for F₈, `t^2+1` for F₉; other
    /// orders use the first monic irreducible polynomial in coefficient order.
    pub fn with_default_modulus(mut self) -> Result<Self> {
        if self.m > 1 && self.modulus.is_none() {
            let modulus = match (self.p, self.m) {
                (2, 2) => vec![1, 1, 1],
                (2, 3) => vec![1, 1, 0, 1],
                (3, 2) => vec![1, 0, 1],
                (p, m) => first_irreducible(p, m).ok_or_else(|| {
                    Error::InvalidField(format!(
                        "no irreducible polynomial of degree {m} over F_{p}"
                    ))
                })?,
            };
            self.modulus = Some(modulus);
        }
        Ok(self)
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.modulus, self.m) {
            (_, 1) | (None, _) => write!(f, "F_{}", self.order()),
            (Some(modulus), _) => {
                write!(f, "F_{}[", self.order())?;
                for (i, c) in modulus.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A field element, encoded by its coefficient vector in base `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    spec: FieldSpec,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite field with precomputed operation tables. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    /// Builds the field, validating primality and irreducibility.
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let spec = spec.with_default_modulus()?;
        let (p, m) = (spec.p, spec.m);
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("degree must be positive".into()));
        }
        let q = spec.order();
        if q > MAX_ORDER as u64 {
            return Err(Error::InvalidField(format!(
                "order {q} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let q = q as usize;
        let p = p as usize;
        let m = m as usize;

        let modulus: Vec<usize> = if m == 1 {
            vec![0, 1]
        } else {
            let given = spec.modulus.as_ref().expect("default filled above");
            if given.len() != m + 1 {
                return Err(Error::InvalidField(format!(
                    "modulus must have {} coefficients (degree {m}, monic), got {}",
                    m + 1,
                    given.len()
                )));
            }
            if given.iter().any(|&c| c as usize >= p) {
                return Err(Error::InvalidField(format!(
                    "modulus coefficients must be reduced mod {p}"
                )));
            }
            if given[m] != 1 {
                return Err(Error::InvalidField("modulus must be monic".into()));
            }
            let f: Vec<usize> = given.iter().map(|&c| c as usize).collect();
            if !is_irreducible(&f, p) {
                return Err(Error::InvalidField(format!(
                    "modulus {given:?} is reducible over F_{p}"
                )));
            }
            f
        };

        let coeffs = |e: usize| -> Vec<usize> {
            let mut c = vec![0; m];
            let mut e = e;
            for slot in c.iter_mut() {
                *slot = e % p;
                e /= p;
            }
            c
        };
        let encode = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &x| acc * p + x) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let ca = coeffs(a);
            for b in 0..q {
                let cb = coeffs(b);
                let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;
                mul[a * q + b] = encode(&poly_mulmod(&ca, &cb, &modulus, p)) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q)
                .find(|&b| add[a * q + b] == 0)
                .expect("additive inverse") as u8;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .ok_or_else(|| Error::InvalidField("modulus does not give a field".into()))?
                    as u8;
            }
        }

        Ok(Field(Arc::new(Tables {
            spec,
            q,
            add,
            mul,
            neg,
            inv,
        })))
    }

    /// Convenience constructor for the field of order `q` with its default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        Field::new(FieldSpec::of_order(q)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn order(&self) -> usize {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.m
    }

    /// All `q` elements in canonical order; `0` first, `1` second.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(|i| Elem(i as u8))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.q).map(|i| Elem(i as u8))
    }

    /// Element with the given canonical index.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.0.q {
            Ok(Elem(index as u8))
        } else {
            Err(Error::InvalidField(format!(
                "element index {index} out of range for {}",
                self.0.spec
            )))
        }
    }

    /// The image of an integer under `Z → F_p ⊆ F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.spec.p as i64) as u8)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        let p = self.0.spec.p;
        if coeffs.len() > self.0.spec.m as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "coefficients {coeffs:?} do not describe an element of {}",
                self.0.spec
            )));
        }
        let index = coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        Ok(Elem(index as u8))
    }

    /// Coefficient vector (constant term first), always of length `m`.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let p = self.0.spec.p;
        let mut e = a.0 as u32;
        (0..self.0.spec.m)
            .map(|_| {
                let c = e % p;
                e /= p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.add[a.index() * self.0.q + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.mul[a.index() * self.0.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.index()])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (!a.is_zero()).then(|| Elem(self.0.inv[a.index()]))
    }

    /// Human-readable form: integers for prime fields, polynomials in `a`
    /// (the class of `t`) otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.0.spec.m == 1 {
            return a.0.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `f`.
fn poly_rem(a: &[usize], f: &[usize], p: usize) -> Vec<usize> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        for (i, &c) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[usize], b: &[usize], f: &[usize], p: usize) -> Vec<usize> {
    let mut r = poly_rem(&poly_mul(a, b, p), f, p);
    r.resize(f.len() - 1, 0);
    r
}

/// Irreducibility by trial division with every monic polynomial of degree ≤ m/2.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut e = low;
            for _ in 0..d {
                g.push(e % p);
                e /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    let (p, m) = (p as usize, m as usize);
    let count = p.checked_pow(m as u32)?;
    (0..count).find_map(|low| {
        let mut f = Vec::with_capacity(m + 1);
        let mut e = low;
        for _ in 0..m {
            f.push(e % p);
            e /= p;
        }
        f.push(1);
        is_irreducible(&f, p).then(|| f.into_iter().map(|c| c as u32).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Field> {
        [2, 3, 4, 5, 7, 8, 9]
            .into_iter()
            .map(|q| Field::of_order(q).unwrap())
            .collect()
    }

    #[test]
    fn enumeration_starts_with_zero_and_one() {
        for f in fields() {
            let elems: Vec<Elem> = f.elements().collect();
            assert_eq!(elems.len(), f.order());
            assert_eq!(elems[0], Elem::ZERO);
            assert_eq!(elems[1], Elem::ONE);
        }
    }

    #[test]
    fn f4_alpha_squared_is_alpha_plus_one() {
        let f = Field::new(FieldSpec::new(2, 2, vec![1, 1, 1])).unwrap();
        let alpha = f.from_coeffs(&[0, 1]).unwrap();
        let alpha_plus_one = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(alpha, alpha), alpha_plus_one);
        assert_eq!(f.format(alpha_plus_one), "a+1");
    }

    #[test]
    fn f9_alpha_squared_is_minus_one() {
        let f = Field::of_order(9).unwrap();
        let alpha = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(alpha, alpha), f.neg(Elem::ONE));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in fields() {
            for a in f.elements() {
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if let Some(i) = f.inv(a) {
                    assert_eq!(f.mul(a, i), Elem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(Field::new(FieldSpec::prime(4)).is_err());
        assert!(Field::new(FieldSpec::prime(1)).is_err());
        // t^2 + 1 = (t + 1)^2 over F2
        assert!(Field::new(FieldSpec::new(2, 2, vec![1, 0, 1])).is_err());
        // wrong degree
        assert!(Field::new(FieldSpec::new(2, 2, vec![1, 1, 0, 1])).is_err());
        assert!(Field::new(FieldSpec::new(3, 2, vec![1, 0, 2])).is_err());
        assert!(Field::of_order(6).is_err());
        assert!(Field::of_order(512).is_err());
    }

    #[test]
    fn coefficient_round_trip() {
        let f = Field::of_order(8).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
    }

    #[test]
    fn default_moduli_are_documented_ones() {
        assert_eq!(FieldSpec::of_order(4).unwrap().modulus, Some(vec![1, 1, 1]));
        assert_eq!(
            FieldSpec::of_order(8).unwrap().modulus,
            Some(vec![1, 1, 0, 1])
        );
        assert_eq!(FieldSpec::of_order(9).unwrap().modulus, Some(vec![1, 0, 1]));
        assert!(Field::of_order(25).is_ok());
        assert!(Field::of_order(16).is_ok());
    }
}
