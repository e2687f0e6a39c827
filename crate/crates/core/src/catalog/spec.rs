//! JSON structure-constant files.
//!
//! ```json
//! {"name": "heisenberg", "field": {"p": 2, "m": 1}, "dim": 3,
//!  "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}]}
//! ```
//!
//! Scalars are integers over prime fields and coefficient lists (constant
//! term first) over extension fields. Only `i < j` is listed; missing pairs
//! bracket to zero.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldSpec};
use crate::lie::{LieAlgebra, Violation};
use crate::linalg::{self, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    /// Encodes the nonzero brackets `[e_i, e_j]`, `i < j`.
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let f = l.field();
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = l.basis_bracket(i, j);
                if !linalg::is_zero(v) {
                    brackets.push(BracketEntry {
                        i,
                        j,
                        value: v.iter().map(|&c| encode(f, c)).collect(),
                    });
                }
            }
        }
        AlgebraSpec {
            name: l.name().to_string(),
            field: f.spec().clone(),
            dim: n,
            brackets,
            tags: Vec::new(),
        }
    }

    /// Builds and validates the algebra; Lie axiom failures carry the violating basis triple.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let field = Field::new(self.field.clone())?;
        let n = self.dim;
        let mut seen = BTreeSet::new();
        let mut brackets: Vec<(usize, usize, Vector)> = Vec::new();
        for (idx, entry) in self.brackets.iter().enumerate() {
            let loc = format!("brackets[{idx}]");
            if entry.i >= n || entry.j >= n {
                return Err(Error::parse(loc, format!("index out of range for dim {n}")));
            }
            if entry.value.len() != n {
                return Err(Error::parse(
                    format!("{loc}.value"),
                    format!("expected {n} entries, found {}", entry.value.len()),
                ));
            }
            let value = entry
                .value
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    decode(&field, s).map_err(|m| Error::parse(format!("{loc}.value[{k}]"), m))
                })
                .collect::<Result<Vector>>()?;
            if entry.i == entry.j {
                if !linalg::is_zero(&value) {
                    return Err(Error::Axiom(Violation::NotAlternating { i: entry.i }));
                }
                continue;
            }
            if entry.i > entry.j {
                return Err(Error::parse(loc, "entries must have i < j"));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(Error::parse(
                    loc,
                    format!("duplicate entry ({}, {})", entry.i, entry.j),
                ));
            }
            brackets.push((entry.i, entry.j, value));
        }
        LieAlgebra::from_brackets(self.name.clone(), field, n, &brackets)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn encode(f: &Field, c: Elem) -> Scalar {
    if f.degree() == 1 {
        Scalar::Int(c.index() as i64)
    } else {
        Scalar::Coeffs(f.coeffs(c))
    }
}

fn decode(f: &Field, s: &Scalar) -> Result<Elem, String> {
    match (s, f.degree()) {
        (Scalar::Int(v), 1) => Ok(f.from_int(*v)),
        (Scalar::Coeffs(c), m) if m > 1 => f.from_coeffs(c).map_err(|e| e.to_string()),
        (Scalar::Int(_), _) => Err("extension-field scalars are coefficient lists".into()),
        (Scalar::Coeffs(_), _) => Err("prime-field scalars are integers".into()),
    }
}

/// Reads an algebra from a JSON file.
pub fn from_file(path: &std::path::Path) -> Result<LieAlgebra> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    AlgebraSpec::parse(&text)?.to_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::NcGraph;

    #[test]
    fn round_trips() {
        for l in [
            catalog::heisenberg(4).unwrap(),
            catalog::sl2(5).unwrap(),
            catalog::gl2(9).unwrap(),
            catalog::pair_l2(),
        ] {
            let text = AlgebraSpec::from_algebra(&l).to_json();
            let back = AlgebraSpec::parse(&text).unwrap().to_algebra().unwrap();
            assert_eq!(back.tensor(), l.tensor());
            assert_eq!(back.field(), l.field());
        }
    }

    #[test]
    fn hand_written_heisenberg() {
        let text = r#"{"name": "h", "field": {"p": 2, "m": 1}, "dim": 3,
            "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}]}"#;
        let l = AlgebraSpec::parse(text).unwrap().to_algebra().unwrap();
        let g = NcGraph::build(&l).unwrap();
        assert!(g.graph().is_complete() && g.order() == 3);
    }

    #[test]
    fn extension_field_scalars() {
        let text = r#"{"name": "h4", "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]}, "dim": 2,
            "brackets": [{"i": 0, "j": 1, "value": [[0, 1], [0, 0]]}]}"#;
        let l = AlgebraSpec::parse(text).unwrap().to_algebra().unwrap();
        assert_eq!(l.field().order(), 4);
        let bad = text.replace("[[0, 1], [0, 0]]", "[1, 0]");
        assert!(matches!(
            AlgebraSpec::parse(&bad).unwrap().to_algebra(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn rejections() {
        let diag = r#"{"name": "x", "field": {"p": 3, "m": 1}, "dim": 2,
            "brackets": [{"i": 1, "j": 1, "value": [1, 0]}]}"#;
        assert_eq!(
            AlgebraSpec::parse(diag).unwrap().to_algebra().unwrap_err(),
            Error::Axiom(Violation::NotAlternating { i: 1 })
        );
        // [e0,e1]=e2, [e0,e2]=e0: the Jacobi sum on (e0,e1,e2) is e2
        let jacobi = r#"{"name": "x", "field": {"p": 2, "m": 1}, "dim": 3, "brackets": [
            {"i": 0, "j": 1, "value": [0, 0, 1]},
            {"i": 0, "j": 2, "value": [1, 0, 0]}]}"#;
        assert!(matches!(
            AlgebraSpec::parse(jacobi).unwrap().to_algebra(),
            Err(Error::Axiom(Violation::Jacobi { .. }))
        ));
        assert!(matches!(
            AlgebraSpec::parse("{\"name\": 1}"),
            Err(Error::Parse { .. })
        ));
        let reducible =
            r#"{"name": "x", "field": {"p": 2, "m": 2, "modulus": [1, 0, 1]}, "dim": 2}"#;
        assert!(matches!(
            AlgebraSpec::parse(reducible).unwrap().to_algebra(),
            Err(Error::InvalidField(_))
        ));
    }
}
