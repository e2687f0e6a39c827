//! Executable checks of the structural results about non-commuting graphs.
//!
//! Each check evaluates the graph side and the algebra side independently and
//! compares them. Implications are checked as implications: when the
//! hypothesis fails the check reports `not_applicable` with the reason, never
//! a silent pass. A failure always carries a witness that can be re-checked
//! with [`Subject::reproduces`].

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::Census;
use crate::cover;
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::graph::{domination, iso, structure, Hamiltonicity, InvariantReport, NcGraph};
use crate::guards::Guards;
use crate::lie::{LieAlgebra, SeriesData};
use crate::linalg::{self, Subspace, Vector};

/// Check identifiers in report order.
pub const CHECKS: &[&str] = &[
    "graph_definition",
    "vertex_count",
    "degree_formula",
    "regularity_iff_centralizer_dims",
    "complete_iff_line_centralizers",
    "diameter_girth",
    "hamiltonian",
    "eulerian",
    "planarity_classification",
    "connectivity",
    "max_independent_abelian",
    "independence_abelian",
    "regular_nilpotent_class",
    "dominating_criterion",
    "codim2_domination",
    "chromatic_cover",
    "ct_multipartite",
    "ac_multipartite",
    "ac_clique_chromatic",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub guards: Guards,
    pub seed: u64,
    /// Random subsets per algebra for the domination criterion.
    pub trials: usize,
    /// Random representative pairs per graph for the adjacency definition.
    pub representative_pairs: usize,
    /// Record wall-clock time per check. Off by default so reports are
    /// reproducible byte for byte.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            guards: Guards::default(),
            seed: 0,
            trials: 64,
            representative_pairs: 1000,
            timing: false,
        }
    }
}

/// Evidence for a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two vertices on which graph and algebra disagree.
    Pair { u: usize, v: usize },
    /// A vertex whose degree or centralizer breaks the statement.
    Vertex {
        vertex: usize,
        found: u128,
        expected: u128,
    },
    /// A vertex set, e.g. a subset where two domination tests disagree.
    Subset { vertices: Vec<usize> },
    /// A scalar that should have matched.
    Value { found: u128, expected: u128 },
    /// Anything else, described in words.
    Note { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { witness: Witness },
    NotApplicable { reason: String },
    NotComputed { reason: String },
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail { .. })
    }

    fn not_computed(e: Error) -> Status {
        Status::NotComputed {
            reason: e.to_string(),
        }
    }

    fn na(reason: impl Into<String>) -> Status {
        Status::NotApplicable {
            reason: reason.into(),
        }
    }

    fn fail(witness: Witness) -> Status {
        Status::Fail { witness }
    }

    fn note(text: impl Into<String>) -> Status {
        Status::fail(Witness::Note { text: text.into() })
    }

    fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail { .. } => "FAIL",
            Status::NotApplicable { .. } => "n/a",
            Status::NotComputed { .. } => "not computed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub algebra: String,
    pub check: String,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status.is_fail())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn extend(&mut self, other: TheoremReport) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.status)).count()
    }

    /// One JSON object per check.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }

    /// Aligned text, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let extra = match &c.status {
                Status::Fail { witness } => {
                    format!(" witness={}", serde_json::to_string(witness).unwrap())
                }
                Status::NotApplicable { reason } | Status::NotComputed { reason } => {
                    format!(" ({reason})")
                }
                Status::Pass => String::new(),
            };
            let detail = c
                .detail
                .as_ref()
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default();
            let line = format!(
                "{:<16} {:<34} {:<12}{extra}{detail}",
                c.algebra,
                c.check,
                c.status.label()
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// `(q^(n-s) - q^(r-s)) / (q - 1)`, the degree of a vertex whose centralizer has dimension `r`.
pub fn degree_formula(q: u128, n: usize, r: usize, s: usize) -> u128 {
    (q.pow((n - s) as u32) - q.pow((r - s) as u32)) / (q - 1)
}

/// `(q^d - 1) / (q - 1)`, the number of points of `P(F_q^d)`.
pub fn vertex_formula(q: u128, d: usize) -> u128 {
    (q.pow(d as u32) - 1) / (q - 1)
}

/// Everything the checks need about one algebra and its graph.
pub struct Subject<'a> {
    pub algebra: &'a LieAlgebra,
    pub graph: NcGraph,
    pub report: InvariantReport,
    pub series: SeriesData,
    /// Centralizer of the lift of each vertex.
    pub centralizers: Vec<Subspace>,
    label: String,
}

impl<'a> Subject<'a> {
    pub fn new(l: &'a LieAlgebra, guards: &Guards) -> Result<Self> {
        Self::with_graph(l, NcGraph::build(l)?, guards)
    }

    /// Uses a supplied graph, which may have been tampered with, in place of a fresh build.
    pub fn with_graph(l: &'a LieAlgebra, graph: NcGraph, guards: &Guards) -> Result<Self> {
        let centralizers = (0..graph.order())
            .map(|v| l.centralizer(graph.lift(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subject {
            algebra: l,
            report: graph.invariants(guards),
            series: l.series(),
            centralizers,
            graph,
            label: l.name().to_string(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn q(&self) -> u128 {
        self.graph.q() as u128
    }

    fn lifts(&self, vertices: &[usize]) -> Vec<Vector> {
        vertices
            .iter()
            .map(|&v| self.graph.lift(v).to_vec())
            .collect()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.graph().has_edge(u, v)
    }

    fn brackets_nonzero(&self, x: &[Elem], y: &[Elem]) -> bool {
        !linalg::is_zero(&self.algebra.bracket(x, y).expect("lift length"))
    }

    /// Points of `P(A/Z)` for a subspace `A ⊇ Z(L)`.
    fn points_in(&self, a: &Subspace) -> Vec<usize> {
        self.graph.quotient().points_in(a, self.graph.points())
    }

    fn centralizer_of_vertices(&self, vertices: &[usize]) -> Subspace {
        self.algebra
            .centralizer_of_set(&self.lifts(vertices))
            .expect("lift length")
    }

    fn dominates(&self, set: &[usize]) -> bool {
        domination::is_dominating(self.graph.graph(), set)
    }

    /// Domination through centralizers: every non-central element commuting
    /// with all of `set` lies on one of the lines of `set`.
    fn dominates_by_centralizer(&self, set: &[usize]) -> bool {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        self.points_in(&self.centralizer_of_vertices(set))
            .into_iter()
            .all(|p| members.contains(&p))
    }

    /// Whether the failure recorded in `record` still shows up on this subject.
    pub fn reproduces(&self, record: &CheckRecord, config: &VerifyConfig) -> bool {
        let Status::Fail { witness } = &record.status else {
            return false;
        };
        match (record.check.as_str(), witness) {
            ("graph_definition", Witness::Pair { u, v }) => {
                self.adjacent(*u, *v)
                    != self.brackets_nonzero(self.graph.lift(*u), self.graph.lift(*v))
            }
            ("degree_formula", Witness::Vertex { vertex, .. }) => {
                let r = self.centralizers[*vertex].dim();
                self.graph.graph().degree(*vertex) as u128
                    != degree_formula(self.q(), self.graph.n(), r, self.graph.s())
            }
            ("dominating_criterion", Witness::Subset { vertices }) => {
                let singleton_mismatch = vertices.len() == 1
                    && self.dominates(vertices)
                        != (self.centralizers[vertices[0]].dim() == self.graph.s() + 1);
                self.dominates(vertices) != self.dominates_by_centralizer(vertices)
                    || singleton_mismatch
            }
            (check, _) => {
                let rerun = self.run_check(check, config);
                matches!(rerun.status, Status::Fail { witness: ref w } if w == witness)
            }
        }
    }

    fn run_check(&self, check: &str, config: &VerifyConfig) -> CheckRecord {
        let start = Instant::now();
        let (status, detail) = match check {
            "graph_definition" => self.graph_definition(config),
            "vertex_count" => self.vertex_count(),
            "degree_formula" => self.degree_formula(),
            "regularity_iff_centralizer_dims" => self.regularity(),
            "complete_iff_line_centralizers" => self.completeness(),
            "diameter_girth" => self.diameter_girth(),
            "hamiltonian" => self.hamiltonian(),
            "eulerian" => self.eulerian(),
            "planarity_classification" => self.planarity(),
            "connectivity" => self.connectivity(),
            "max_independent_abelian" => self.max_independent_abelian(config),
            "independence_abelian" => self.independence_abelian(config),
            "regular_nilpotent_class" => self.regular_nilpotent_class(),
            "dominating_criterion" => self.dominating(config),
            "codim2_domination" => self.codim2_domination(),
            "chromatic_cover" => self.chromatic_cover(config),
            "ct_multipartite" => self.ct_multipartite(config),
            "ac_multipartite" => self.ac_multipartite(config),
            "ac_clique_chromatic" => self.ac_clique_chromatic(config),
            other => (Status::na(format!("unknown check {other}")), None),
        };
        CheckRecord {
            algebra: self.label.clone(),
            check: check.to_string(),
            status,
            detail,
            micros: config.timing.then(|| start.elapsed().as_micros() as u64),
        }
    }

    /// Runs every check in [`CHECKS`] order.
    pub fn verify(&self, config: &VerifyConfig) -> TheoremReport {
        TheoremReport {
            checks: CHECKS.iter().map(|c| self.run_check(c, config)).collect(),
        }
    }

    fn graph_definition(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        let n = self.graph.order();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v)
                    != self.brackets_nonzero(self.graph.lift(u), self.graph.lift(v))
                {
                    return (Status::fail(Witness::Pair { u, v }), None);
                }
            }
        }
        // other coset representatives and scalings give the same adjacency
        let f = self.algebra.field();
        let center = self.graph.quotient().center().basis_vectors();
        let dim = self.algebra.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let random_rep = |rng: &mut ChaCha8Rng, v: usize| {
            let scale = f.elem(rng.gen_range(1..f.order())).expect("index below q");
            let mut x = linalg::scale(f, scale, self.graph.lift(v));
            for z in &center {
                let c = f.elem(rng.gen_range(0..f.order())).expect("index below q");
                linalg::axpy(f, &mut x, c, z);
            }
            debug_assert_eq!(x.len(), dim);
            x
        };
        for _ in 0..config.representative_pairs {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let (x, y) = (random_rep(&mut rng, u), random_rep(&mut rng, v));
            if self.adjacent(u, v) != self.brackets_nonzero(&x, &y) {
                return (
                    Status::fail(Witness::Pair {
                        u: u.min(v),
                        v: u.max(v),
                    }),
                    None,
                );
            }
        }
        (Status::Pass, Some(format!("{} pairs", n * (n - 1) / 2)))
    }

    fn vertex_count(&self) -> (Status, Option<String>) {
        let expected = vertex_formula(self.q(), self.graph.d());
        let found = self.graph.order() as u128;
        let detail = Some(format!(
            "q={} n={} s={} |V|={found}",
            self.q(),
            self.graph.n(),
            self.graph.s()
        ));
        if found == expected {
            (Status::Pass, detail)
        } else {
            (Status::fail(Witness::Value { found, expected }), detail)
        }
    }

    fn degree_formula(&self) -> (Status, Option<String>) {
        let (n, s) = (self.graph.n(), self.graph.s());
        for v in 0..self.graph.order() {
            let r = self.centralizers[v].dim();
            let expected = degree_formula(self.q(), n, r, s);
            let found = self.graph.graph().degree(v) as u128;
            if found != expected {
                return (
                    Status::fail(Witness::Vertex {
                        vertex: v,
                        found,
                        expected,
                    }),
                    None,
                );
            }
        }
        (Status::Pass, None)
    }

    fn centralizer_dims(&self) -> BTreeSet<usize> {
        self.centralizers.iter().map(Subspace::dim).collect()
    }

    fn regularity(&self) -> (Status, Option<String>) {
        let regular = self.graph.graph().is_regular();
        let dims = self.centralizer_dims();
        let detail = Some(format!("regular={regular} centralizer dims={dims:?}"));
        if regular == (dims.len() == 1) {
            return (Status::Pass, detail);
        }
        // a pair of vertices where the two sides disagree
        let g = self.graph.graph();
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                let same_degree = g.degree(u) == g.degree(v);
                let same_dim = self.centralizers[u].dim() == self.centralizers[v].dim();
                if same_degree != same_dim {
                    return (Status::fail(Witness::Pair { u, v }), detail);
                }
            }
        }
        (
            Status::note(format!("regular={regular} but centralizer dims {dims:?}")),
            detail,
        )
    }

    fn completeness(&self) -> (Status, Option<String>) {
        let complete = self.graph.graph().is_complete();
        let s = self.graph.s();
        let fat = (0..self.graph.order()).find(|&v| self.centralizers[v].dim() != s + 1);
        match (complete, fat) {
            (true, None) | (false, Some(_)) => (Status::Pass, Some(format!("complete={complete}"))),
            (true, Some(v)) => (
                Status::fail(Witness::Vertex {
                    vertex: v,
                    found: self.centralizers[v].dim() as u128,
                    expected: (s + 1) as u128,
                }),
                None,
            ),
            (false, None) => {
                let (u, v) = self.graph.graph().complement().edges()[0];
                (Status::fail(Witness::Pair { u, v }), None)
            }
        }
    }

    fn diameter_girth(&self) -> (Status, Option<String>) {
        let r = &self.report;
        if r.order < 2 {
            return (Status::na("fewer than two vertices"), None);
        }
        let detail = Some(format!("diameter={:?} girth={:?}", r.diameter, r.girth));
        let g = self.graph.graph();
        if !r.connected || !matches!(r.diameter, Some(1 | 2)) {
            for u in 0..r.order {
                let far = structure::distances(g, u)
                    .iter()
                    .position(|d| d.is_none_or(|d| d > 2));
                if let Some(v) = far {
                    return (
                        Status::fail(Witness::Pair {
                            u: u.min(v),
                            v: u.max(v),
                        }),
                        detail,
                    );
                }
            }
        }
        if r.girth != Some(3) {
            return (
                Status::fail(Witness::Value {
                    found: r.girth.unwrap_or(0) as u128,
                    expected: 3,
                }),
                detail,
            );
        }
        (Status::Pass, detail)
    }

    fn hamiltonian(&self) -> (Status, Option<String>) {
        let r = &self.report;
        let g = self.graph.graph();
        let low = (0..r.order).find(|&v| 2 * g.degree(v) <= r.order);
        if let Some(v) = low {
            return (
                Status::fail(Witness::Vertex {
                    vertex: v,
                    found: g.degree(v) as u128,
                    expected: (r.order / 2 + 1) as u128,
                }),
                Some("minimum degree does not exceed half the order".into()),
            );
        }
        match r.hamiltonian {
            Hamiltonicity::DiracGuaranteed | Hamiltonicity::Exact(true) => (
                Status::Pass,
                Some(format!("min degree {} > {}/2", r.min_degree(), r.order)),
            ),
            Hamiltonicity::Exact(false) => (Status::note("no Hamiltonian cycle"), None),
            Hamiltonicity::Unknown => (Status::na("Hamiltonicity undecided"), None),
        }
    }

    fn eulerian(&self) -> (Status, Option<String>) {
        let q = self.q();
        let n = self.graph.n();
        let hypothesis = if q == 2 {
            true
        } else {
            self.centralizers
                .iter()
                .all(|c| (n - c.dim()).is_multiple_of(2))
        };
        if !hypothesis {
            return (
                Status::na("q > 2 and some centralizer has odd codimension"),
                None,
            );
        }
        let g = self.graph.graph();
        if !self.report.connected {
            return (Status::note("graph is disconnected"), None);
        }
        match (0..g.order()).find(|&v| g.degree(v) % 2 == 1) {
            Some(v) => (
                Status::fail(Witness::Vertex {
                    vertex: v,
                    found: g.degree(v) as u128,
                    expected: (g.degree(v) + 1) as u128,
                }),
                None,
            ),
            None => (Status::Pass, Some(format!("q={q}"))),
        }
    }

    fn planarity(&self) -> (Status, Option<String>) {
        let q = self.q();
        let d = self.graph.d();
        let predicted = (q == 2 || q == 3) && d == 2;
        let planar = self.report.planar;
        // the quotient is abelian iff [L, L] lies in the center
        let derived = &self
            .series
            .lower_central
            .get(1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.graph.n()));
        let f = self.algebra.field();
        let quotient_abelian = self
            .graph
            .quotient()
            .center()
            .contains(f, derived)
            .expect("ambient");
        let subcase = if quotient_abelian {
            "abelian quotient"
        } else {
            "non-abelian quotient"
        };
        let detail = Some(format!("planar={planar} q={q} dim(L/Z)={d} {subcase}"));
        if planar != predicted {
            return (
                Status::note(format!("planar={planar} but q={q}, dim(L/Z)={d}")),
                detail,
            );
        }
        if predicted && quotient_abelian && self.series.nilpotency_class != Some(2) {
            return (
                Status::note(format!(
                    "abelian quotient but nilpotency class {:?}",
                    self.series.nilpotency_class
                )),
                detail,
            );
        }
        (Status::Pass, detail)
    }

    fn connectivity(&self) -> (Status, Option<String>) {
        let k = self.report.kappa;
        if k >= 2 {
            (Status::Pass, Some(format!("kappa={k}")))
        } else {
            (
                Status::fail(Witness::Value {
                    found: k as u128,
                    expected: 2,
                }),
                None,
            )
        }
    }

    /// Greedy maximal independent set containing `start`, smallest indices first.
    fn maximal_independent_from(&self, start: usize) -> Vec<usize> {
        let g = self.graph.graph();
        let mut set = vec![start];
        for v in 0..g.order() {
            if v != start && set.iter().all(|&u| !g.has_edge(u, v)) {
                set.push(v);
            }
        }
        set.sort_unstable();
        set
    }

    fn element_guard(&self, config: &VerifyConfig) -> Result<(), Status> {
        let size = self.algebra.order();
        let limit = config.guards.elements as u128;
        if size > limit {
            Err(Status::not_computed(Error::GuardExceeded {
                what: "element scan",
                size,
                limit,
            }))
        } else {
            Ok(())
        }
    }

    fn max_independent_abelian(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        if let Err(s) = self.element_guard(config) {
            return (s, None);
        }
        let f = self.algebra.field();
        let center = self.graph.quotient().center();
        let mut seen = BTreeSet::new();
        for start in 0..self.graph.order() {
            let m = self.maximal_independent_from(start);
            if !seen.insert(m.clone()) {
                continue;
            }
            let span = Subspace::span(f, self.algebra.dim(), &self.lifts(&m))
                .and_then(|s| s.sum(f, center))
                .expect("lift length");
            // U(M) ∪ Z(L) is this span exactly when the span adds no new lines
            let closed = self.points_in(&span) == m;
            let abelian = self.algebra.is_abelian_subspace(&span);
            let maximal = self
                .centralizer_of_vertices(&m)
                .sum(f, center)
                .expect("ambient")
                == span;
            if !(closed && abelian && maximal) {
                return (Status::fail(Witness::Subset { vertices: m }), None);
            }
        }
        (
            Status::Pass,
            Some(format!("{} maximal independent sets", seen.len())),
        )
    }

    fn independence_abelian(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        if let Err(s) = self.element_guard(config) {
            return (s, None);
        }
        let alpha = self.report.independence_number;
        if !alpha.exact {
            return (Status::na("independence number not exact"), None);
        }
        let Some(maximal) =
            cover::maximal_abelian_subalgebras(self.algebra, config.guards.search_nodes)
        else {
            return (
                Status::NotComputed {
                    reason: "too many abelian subalgebras".into(),
                },
                None,
            );
        };
        let best = maximal
            .iter()
            .map(|a| self.points_in(a).len())
            .max()
            .unwrap_or(0);
        let detail = Some(format!("alpha={} max |P(A/Z)|={best}", alpha.value));
        if best == alpha.value {
            (Status::Pass, detail)
        } else {
            (
                Status::fail(Witness::Value {
                    found: alpha.value as u128,
                    expected: best as u128,
                }),
                detail,
            )
        }
    }

    fn regular_nilpotent_class(&self) -> (Status, Option<String>) {
        let Some(class) = self.series.nilpotency_class else {
            return (Status::na("not nilpotent"), None);
        };
        if !self.report.regular {
            return (Status::na("graph is not regular"), None);
        }
        let detail = Some(format!("class={class}"));
        if class <= 3 {
            (Status::Pass, detail)
        } else {
            (
                Status::fail(Witness::Value {
                    found: class as u128,
                    expected: 3,
                }),
                detail,
            )
        }
    }

    fn dominating(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        let n = self.graph.order();
        let s = self.graph.s();
        // singletons: {[x]} dominates iff C(x) = span{x} + Z(L)
        for v in 0..n {
            if self.dominates(&[v]) != (self.centralizers[v].dim() == s + 1) {
                return (Status::fail(Witness::Subset { vertices: vec![v] }), None);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut dominating = 0;
        for _ in 0..config.trials {
            let k = rng.gen_range(1..=n);
            let mut set = sample(&mut rng, n, k).into_vec();
            set.sort_unstable();
            let direct = self.dominates(&set);
            if direct != self.dominates_by_centralizer(&set) {
                return (Status::fail(Witness::Subset { vertices: set }), None);
            }
            dominating += usize::from(direct);
        }
        // the non-central basis vectors dominate, bounding the domination number
        let dim = self.algebra.dim();
        let quotient = self.graph.quotient();
        let basis_points: BTreeSet<usize> = (0..dim)
            .filter_map(|i| {
                quotient
                    .normalize(&linalg::unit_vector(dim, i))
                    .expect("length")
            })
            .map(|p| p.index)
            .collect();
        let basis_points: Vec<usize> = basis_points.into_iter().collect();
        let non_central = (0..dim)
            .filter(|&i| {
                !quotient
                    .center()
                    .member(self.algebra.field(), &linalg::unit_vector(dim, i))
                    .expect("length")
            })
            .count();
        let gamma = self.report.domination_number;
        if !self.dominates(&basis_points) || !self.dominates_by_centralizer(&basis_points) {
            return (
                Status::fail(Witness::Subset {
                    vertices: basis_points,
                }),
                None,
            );
        }
        if gamma.value > non_central {
            return (
                Status::fail(Witness::Value {
                    found: gamma.value as u128,
                    expected: non_central as u128,
                }),
                None,
            );
        }
        let detail = format!(
            "{} trials, {dominating} dominating; gamma={}{} <= {non_central}",
            config.trials,
            gamma.value,
            if gamma.exact { "" } else { " (bound)" }
        );
        (Status::Pass, Some(detail))
    }

    fn codim2_domination(&self) -> (Status, Option<String>) {
        let d = self.graph.d();
        if d != 2 {
            return (Status::na(format!("center has codimension {d}")), None);
        }
        let s = self.graph.s();
        let satisfied: Vec<usize> = (0..self.graph.order())
            .filter(|&v| self.centralizers[v].dim() - s > 1)
            .collect();
        if satisfied.is_empty() {
            return (
                Status::na(format!(
                    "dim(C(x)/Z) > 1 holds for 0 of {} vertices",
                    self.graph.order()
                )),
                None,
            );
        }
        let gamma = self.report.domination_number;
        if gamma.exact && gamma.value == 2 {
            (Status::Pass, None)
        } else {
            (
                Status::fail(Witness::Value {
                    found: gamma.value as u128,
                    expected: 2,
                }),
                None,
            )
        }
    }

    fn chromatic_cover(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        let chi = self.report.chromatic_number;
        if !chi.exact {
            return (
                Status::NotComputed {
                    reason: "chromatic number not exact".into(),
                },
                None,
            );
        }
        let cover = match cover::min_abelian_cover(self.algebra, &config.guards) {
            Ok(c) => c,
            Err(e) => return (Status::not_computed(e), None),
        };
        if !cover.exact {
            return (
                Status::NotComputed {
                    reason: "abelian cover not exact".into(),
                },
                None,
            );
        }
        let detail = Some(format!("chi={} cover={}", chi.value, cover.size));
        if chi.value == cover.size {
            (Status::Pass, detail)
        } else {
            (
                Status::fail(Witness::Value {
                    found: chi.value as u128,
                    expected: cover.size as u128,
                }),
                detail,
            )
        }
    }

    fn ct_multipartite(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        if self.graph.s() != 0 {
            return (Status::na("center is nonzero"), None);
        }
        let ct = match self.algebra.is_ct(config.guards.elements) {
            Ok(b) => b,
            Err(e) => return (Status::not_computed(e), None),
        };
        let multipartite = self.report.multipartite.is_some();
        let detail = Some(format!("ct={ct} multipartite={multipartite}"));
        if ct == multipartite {
            (Status::Pass, detail)
        } else {
            (
                Status::note(format!("ct={ct} but multipartite={multipartite}")),
                detail,
            )
        }
    }

    /// The first partite class that is not `P(C(x)/Z)` for its members, if any.
    fn class_not_centralizer(&self, classes: &[Vec<usize>]) -> Option<Vec<usize>> {
        classes
            .iter()
            .find(|class| {
                class
                    .iter()
                    .any(|&v| self.points_in(&self.centralizers[v]) != **class)
            })
            .cloned()
    }

    fn ac_multipartite(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        let ac = match self.algebra.is_ac(config.guards.elements) {
            Ok(b) => b,
            Err(e) => return (Status::not_computed(e), None),
        };
        let graph_side = match &self.report.multipartite {
            None => false,
            Some(classes) => self.class_not_centralizer(classes).is_none(),
        };
        let detail = Some(format!("ac={ac} centralizer-multipartite={graph_side}"));
        if ac == graph_side {
            return (Status::Pass, detail);
        }
        let witness = match &self.report.multipartite {
            Some(classes) => match self.class_not_centralizer(classes) {
                Some(class) => Witness::Subset { vertices: class },
                None => Witness::Note {
                    text: "graph is centralizer-multipartite but a centralizer is not abelian"
                        .into(),
                },
            },
            None => Witness::Note {
                text: format!("ac={ac} but graph is not complete multipartite"),
            },
        };
        (Status::fail(witness), detail)
    }

    fn ac_clique_chromatic(&self, config: &VerifyConfig) -> (Status, Option<String>) {
        match self.algebra.is_ac(config.guards.elements) {
            Ok(true) => {}
            Ok(false) => return (Status::na("not AC"), None),
            Err(e) => return (Status::not_computed(e), None),
        }
        let (w, chi) = (self.report.clique_number, self.report.chromatic_number);
        if !(w.exact && chi.exact) {
            return (
                Status::NotComputed {
                    reason: "clique or chromatic number not exact".into(),
                },
                None,
            );
        }
        let detail = Some(format!("omega={} chi={}", w.value, chi.value));
        if w.value == chi.value {
            (Status::Pass, detail)
        } else {
            (
                Status::fail(Witness::Value {
                    found: w.value as u128,
                    expected: chi.value as u128,
                }),
                detail,
            )
        }
    }
}

/// Every check on one algebra. Abelian algebras have no graph, so each check
/// is reported as not applicable.
pub fn verify_all(l: &LieAlgebra, config: &VerifyConfig) -> Result<TheoremReport> {
    match Subject::new(l, &config.guards) {
        Ok(subject) => Ok(subject.verify(config)),
        Err(Error::AbelianAlgebra) => Ok(TheoremReport {
            checks: CHECKS
                .iter()
                .map(|c| CheckRecord {
                    algebra: l.name().to_string(),
                    check: c.to_string(),
                    status: Status::na("abelian algebra has no graph"),
                    detail: None,
                    micros: None,
                })
                .collect(),
        }),
        Err(e) => Err(e),
    }
}

/// Structural invariants that two algebras with isomorphic graphs share.
fn structure_summary(l: &LieAlgebra) -> String {
    let s = l.series();
    format!(
        "dim={} center={} nilpotent={} solvable={}",
        l.dim(),
        l.center().dim(),
        s.nilpotency_class
            .map_or("no".to_string(), |c| format!("class {c}")),
        s.solvable
    )
}

/// Result of comparing the graphs of two algebras.
#[derive(Debug, Clone, Serialize)]
pub struct PairComparison {
    pub isomorphic: bool,
    pub first: String,
    pub second: String,
    /// Same graph but different nilpotency or solvability: the graph does not
    /// determine the algebra.
    pub algebras_differ: bool,
    pub check: CheckRecord,
}

/// Compares the graphs of two algebras and checks that, over one field,
/// isomorphic graphs force `|L₁| = |L₂|` exactly when `|Z₁| = |Z₂|`.
pub fn compare(l1: &LieAlgebra, l2: &LieAlgebra, guards: &Guards) -> Result<PairComparison> {
    let g1 = NcGraph::build(l1)?;
    let g2 = NcGraph::build(l2)?;
    let isomorphic = iso::is_isomorphic(g1.graph(), g2.graph(), guards.isomorphism)?;
    let (s1, s2) = (l1.series(), l2.series());
    let algebras_differ = s1.nilpotency_class.is_some() != s2.nilpotency_class.is_some()
        || s1.solvable != s2.solvable;
    let label = format!("{}|{}", l1.name(), l2.name());
    let status = if l1.field() != l2.field() {
        Status::na("different fields")
    } else if !isomorphic {
        Status::na("graphs are not isomorphic")
    } else if g1.d() != g2.d() {
        Status::fail(Witness::Value {
            found: g1.d() as u128,
            expected: g2.d() as u128,
        })
    } else if (l1.order() == l2.order()) != (g1.s() == g2.s()) {
        Status::note(format!(
            "|L| {} vs {}, |Z| dims {} vs {}",
            l1.order(),
            l2.order(),
            g1.s(),
            g2.s()
        ))
    } else {
        Status::Pass
    };
    Ok(PairComparison {
        isomorphic,
        first: structure_summary(l1),
        second: structure_summary(l2),
        algebras_differ: isomorphic && algebras_differ,
        check: CheckRecord {
            algebra: label,
            check: "iso_size".into(),
            status,
            detail: Some(format!("|V| {} vs {}", g1.order(), g2.order())),
            micros: None,
        },
    })
}

/// Census label for a record: field, dimension and candidate index.
fn record_label(census: &Census, index: u64) -> String {
    format!("{}/d{}/#{index}", census.field, census.dim)
}

/// Runs every check on every census algebra, then the checks that compare
/// algebras within a graph-isomorphism class.
pub fn verify_census(census: &Census, config: &VerifyConfig) -> Result<TheoremReport> {
    use rayon::prelude::*;
    let per_algebra: Vec<TheoremReport> = census
        .records
        .par_iter()
        .map(|r| {
            Subject::with_graph(&r.algebra, r.graph.clone(), &config.guards)
                .map(|s| s.with_label(record_label(census, r.index)).verify(config))
        })
        .collect::<Result<_>>()?;
    let mut report = TheoremReport::default();
    for r in per_algebra {
        report.extend(r);
    }
    let label = format!("{}/d{}", census.field, census.dim);
    let q = census.field.order() as usize;

    // isomorphic graphs agree on the planarity condition and on dim(L/Z)
    let mut planarity = Status::Pass;
    let mut quotient = Status::Pass;
    for class in &census.classes {
        let members: Vec<_> = census
            .records
            .iter()
            .filter(|r| r.gamma_class == class.id)
            .collect();
        let condition = |d: usize| (q == 2 || q == 3) && d == 2;
        let first = members[0];
        for m in &members[1..] {
            if condition(m.quotient_dim) != condition(first.quotient_dim) && !planarity.is_fail() {
                planarity = Status::fail(Witness::Note {
                    text: format!("records #{} and #{}", first.index, m.index),
                });
            }
            let size_iff_center = (m.dim == first.dim) == (m.center_dim == first.center_dim);
            if (m.quotient_dim != first.quotient_dim || !size_iff_center) && !quotient.is_fail() {
                quotient = Status::fail(Witness::Note {
                    text: format!("records #{} and #{}", first.index, m.index),
                });
            }
        }
    }
    let mixed = census.classes.iter().filter(|c| c.mixed_nilpotency).count();
    let classes = format!(
        "{} classes, {mixed} mixing nilpotent and non-nilpotent",
        census.classes.len()
    );
    for (check, status) in [
        ("class_planarity_condition", planarity),
        ("class_quotient_dim", quotient),
    ] {
        report.checks.push(CheckRecord {
            algebra: label.clone(),
            check: check.into(),
            status,
            detail: Some(classes.clone()),
            micros: None,
        });
    }

    let d2 = census
        .records
        .iter()
        .filter(|r| r.quotient_dim == 2)
        .count();
    let hypothesis = report
        .checks
        .iter()
        .filter(|c| {
            c.check == "codim2_domination" && !matches!(c.status, Status::NotApplicable { .. })
        })
        .count();
    report.checks.push(CheckRecord {
        algebra: label,
        check: "codim2_satisfiability".into(),
        status: if hypothesis == 0 {
            Status::na(format!(
                "hypothesis met by 0 of {d2} algebras with codimension-2 center"
            ))
        } else {
            Status::Pass
        },
        detail: Some(format!("{hypothesis} of {d2}")),
        micros: None,
    });
    Ok(report)
}
