//! Census of all non-abelian tensors of a given dimension over a field,
//! grouped by isomorphism class of their graphs.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::enumerate::{candidate, candidate_count};
use super::spec::{AlgebraSpec, BracketEntry};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::graph::{iso, InvariantReport, NcGraph};
use crate::guards::Guards;
use crate::lie::LieAlgebra;

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub guards: Guards,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// One valid non-abelian tensor and what was computed about it.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    /// Position among all candidate tensors.
    pub index: u64,
    pub fingerprint: String,
    pub valid: bool,
    pub non_abelian: bool,
    pub dim: usize,
    pub center_dim: usize,
    pub quotient_dim: usize,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    /// `None` when the element guard was exceeded.
    pub ct: Option<bool>,
    pub ac: Option<bool>,
    pub gamma_class: usize,
    pub brackets: Vec<BracketEntry>,
    pub invariants: InvariantReport,
    #[serde(skip)]
    pub algebra: LieAlgebra,
    #[serde(skip)]
    pub graph: NcGraph,
}

/// Records whose graphs are pairwise isomorphic.
#[derive(Debug, Clone, Serialize)]
pub struct GammaClass {
    pub id: usize,
    pub order: usize,
    pub size: usize,
    /// Candidate indices of the members.
    pub members: Vec<u64>,
    pub nilpotent: usize,
    pub non_nilpotent: usize,
    pub center_dims: BTreeSet<usize>,
    /// Nilpotent and non-nilpotent algebras share this graph, so the graph
    /// does not determine the algebra.
    pub mixed_nilpotency: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub field: FieldSpec,
    pub dim: usize,
    pub candidates: u64,
    pub valid: u64,
    pub non_abelian: u64,
    pub records: Vec<CensusRecord>,
    pub classes: Vec<GammaClass>,
}

/// SHA-256 of the field, the dimension and the tensor entries.
pub fn fingerprint(l: &LieAlgebra) -> String {
    let spec = l.field().spec();
    let mut h = Sha256::new();
    h.update(format!("{}|{}|{:?}|{}|", spec.p, spec.m, spec.modulus, l.dim()).as_bytes());
    let bytes: Vec<u8> = l.tensor().iter().map(|e| e.index() as u8).collect();
    h.update(&bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

enum Outcome {
    Skip { valid: bool },
    Record(Box<CensusRecord>),
}

fn examine(field: &Field, dim: usize, index: u64, guards: &Guards) -> Result<Outcome> {
    let l = candidate(field, dim, index);
    if l.validate().is_err() {
        return Ok(Outcome::Skip { valid: false });
    }
    if l.is_abelian() {
        return Ok(Outcome::Skip { valid: true });
    }
    let graph = NcGraph::build(&l)?;
    let series = l.series();
    let invariants = graph.invariants(guards);
    let record = CensusRecord {
        index,
        fingerprint: fingerprint(&l),
        valid: true,
        non_abelian: true,
        dim,
        center_dim: graph.s(),
        quotient_dim: graph.d(),
        nilpotency_class: series.nilpotency_class,
        solvable: series.solvable,
        ct: l.is_ct(guards.elements).ok(),
        ac: l.is_ac(guards.elements).ok(),
        gamma_class: usize::MAX,
        brackets: AlgebraSpec::from_algebra(&l).brackets,
        invariants,
        algebra: l,
        graph,
    };
    Ok(Outcome::Record(Box::new(record)))
}

/// Enumerates every candidate tensor, keeps the valid non-abelian ones in
/// candidate order, and sorts their graphs into isomorphism classes.
pub fn census(field: &Field, dim: usize, options: &CensusOptions) -> Result<Census> {
    let guards = &options.guards;
    let total = candidate_count(field.order(), dim)
        .filter(|&t| t <= guards.enumeration)
        .ok_or(Error::GuardExceeded {
            what: "candidate tensors",
            size: (field.order() as u128)
                .saturating_pow((dim * dim.saturating_sub(1) / 2 * dim) as u32),
            limit: guards.enumeration as u128,
        })?;
    let run = || -> Result<Vec<Outcome>> {
        (0..total)
            .into_par_iter()
            .map(|k| examine(field, dim, k, guards))
            .collect()
    };
    let outcomes = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)?,
        None => run()?,
    };

    let mut valid = 0;
    let mut records = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Skip { valid: v } => valid += u64::from(v),
            Outcome::Record(r) => {
                valid += 1;
                records.push(*r);
            }
        }
    }
    let classes = classify(&mut records, guards)?;
    Ok(Census {
        field: field.spec().clone(),
        dim,
        candidates: total,
        valid,
        non_abelian: records.len() as u64,
        records,
        classes,
    })
}

fn classify(records: &mut [CensusRecord], guards: &Guards) -> Result<Vec<GammaClass>> {
    let mut classes: Vec<GammaClass> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for r in 0..records.len() {
        let found = {
            let g = records[r].graph.graph();
            let mut found = None;
            for (c, &rep) in reps.iter().enumerate() {
                let h = records[rep].graph.graph();
                if h.order() == g.order()
                    && h.edge_count() == g.edge_count()
                    && iso::is_isomorphic(g, h, guards.isomorphism)?
                {
                    found = Some(c);
                    break;
                }
            }
            found
        };
        let c = found.unwrap_or_else(|| {
            classes.push(GammaClass {
                id: classes.len(),
                order: records[r].invariants.order,
                size: records[r].invariants.size,
                members: Vec::new(),
                nilpotent: 0,
                non_nilpotent: 0,
                center_dims: BTreeSet::new(),
                mixed_nilpotency: false,
            });
            reps.push(r);
            classes.len() - 1
        });
        let rec = &mut records[r];
        rec.gamma_class = c;
        let class = &mut classes[c];
        class.members.push(rec.index);
        if rec.nilpotency_class.is_some() {
            class.nilpotent += 1;
        } else {
            class.non_nilpotent += 1;
        }
        class.center_dims.insert(rec.center_dim);
        class.mixed_nilpotency = class.nilpotent > 0 && class.non_nilpotent > 0;
    }
    Ok(classes)
}

impl Census {
    /// One JSON object per record, newline-terminated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }

    pub fn find(&self, l: &LieAlgebra) -> Option<&CensusRecord> {
        self.records
            .iter()
            .find(|r| r.algebra.tensor() == l.tensor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dim2_f2_is_one_class() {
        let f = Field::of_order(2).unwrap();
        let c = census(&f, 2, &CensusOptions::default()).unwrap();
        assert_eq!((c.candidates, c.valid, c.non_abelian), (4, 4, 3));
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].order, 3);
    }

    #[test]
    fn dim3_f2_contains_the_pair_in_one_class() {
        let f = Field::of_order(2).unwrap();
        let c = census(
            &f,
            3,
            &CensusOptions {
                jobs: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!((c.valid, c.non_abelian), (120, 119));
        let a = c.find(&catalog::pair_l1()).unwrap();
        let b = c.find(&catalog::pair_l2()).unwrap();
        assert_eq!(a.gamma_class, b.gamma_class);
        assert_ne!(a.nilpotency_class.is_some(), b.nilpotency_class.is_some());
        assert!(c.classes[a.gamma_class].mixed_nilpotency);
    }

    #[test]
    fn deterministic() {
        let f = Field::of_order(3).unwrap();
        let a = census(
            &f,
            2,
            &CensusOptions {
                jobs: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let b = census(
            &f,
            2,
            &CensusOptions {
                jobs: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
        assert_eq!((a.valid, a.non_abelian), (9, 8));
    }
}
