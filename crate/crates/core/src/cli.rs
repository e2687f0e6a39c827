//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 bad input, 3 a size
//! guard stopped the computation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, CensusOptions};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::graph::{export, Bound, Hamiltonicity, InvariantReport, NcGraph};
use crate::guards::Guards;
use crate::lie::LieAlgebra;
use crate::verify::{self, Status, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ncgraph",
    version,
    about = "Non-commuting graphs of Lie algebras over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the graph of one algebra and print its invariants.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Write the graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write the graph in GraphML format.
        #[arg(long, value_name = "PATH")]
        graphml: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// Run every theorem check on one algebra or on a census.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Census to check instead of a single algebra, e.g. `--census dim=3 q=2`.
        #[arg(long, num_args = 1..=2, value_name = "KEY=VALUE")]
        census: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random subsets per algebra for the domination checks.
        #[arg(long, default_value_t = 64)]
        trials: usize,
        /// Record per-check wall-clock time (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// Compare the graphs of two algebras (builtins first, then files).
    Iso {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// Enumerate every valid non-abelian algebra of a dimension and group the graphs.
    Census {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Coefficients of the field modulus, constant term first, e.g. `1,1,1`.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u32>>,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guards: GuardArgs,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Built-in algebra: heisenberg, affine2, sl2, gl2, l1, l2, abelianN, or `a+b`.
    /// A suffix `@q` overrides `--q` for that algebra, e.g. `affine2@4`.
    #[arg(long)]
    pub builtin: Vec<String>,
    /// Structure-constant JSON file.
    #[arg(long)]
    pub file: Vec<PathBuf>,
    /// Field order for builtins.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Coefficients of the field modulus, constant term first, e.g. `1,1,1`.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Print newline-delimited JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON records to this file.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

type Positive = clap::builder::RangedU64ValueParser<u64>;

fn positive() -> Positive {
    clap::builder::RangedU64ValueParser::new().range(1..)
}

#[derive(Debug, Args)]
pub struct GuardArgs {
    /// Largest algebra size `q^n` for element scans.
    #[arg(long, value_parser = positive())]
    pub guard_elements: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_clique: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_chromatic: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_independence: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_domination: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_hamiltonian: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_isomorphism: Option<u64>,
    /// Largest number of candidate tensors in a census.
    #[arg(long, value_parser = positive())]
    pub guard_enumeration: Option<u64>,
    #[arg(long, value_parser = positive())]
    pub guard_search_nodes: Option<u64>,
}

impl GuardArgs {
    pub fn resolve(&self) -> Guards {
        let mut g = Guards::default();
        let vertices = |v: Option<u64>, d: usize| v.map_or(d, |v| v as usize);
        g.elements = self.guard_elements.unwrap_or(g.elements);
        g.clique = vertices(self.guard_clique, g.clique);
        g.chromatic = vertices(self.guard_chromatic, g.chromatic);
        g.independence = vertices(self.guard_independence, g.independence);
        g.domination = vertices(self.guard_domination, g.domination);
        g.hamiltonian = vertices(self.guard_hamiltonian, g.hamiltonian);
        g.isomorphism = vertices(self.guard_isomorphism, g.isomorphism);
        g.enumeration = self.guard_enumeration.unwrap_or(g.enumeration);
        g.search_nodes = self.guard_search_nodes.unwrap_or(g.search_nodes);
        g
    }
}

fn field_of(q: u32, modulus: &Option<Vec<u32>>) -> Result<Field> {
    let mut spec = FieldSpec::of_order(q)?;
    if let Some(m) = modulus {
        if spec.m == 1 {
            return Err(Error::InvalidField(format!(
                "F_{q} is a prime field and takes no modulus"
            )));
        }
        spec.modulus = Some(m.clone());
    }
    Field::new(spec)
}

impl Input {
    fn algebras(&self) -> Result<Vec<LieAlgebra>> {
        let mut out = Vec::new();
        for name in &self.builtin {
            let (base, field) = match name.split_once('@') {
                Some((base, q)) => {
                    let q = q.parse().map_err(|_| {
                        Error::parse("--builtin", format!("bad field order in {name:?}"))
                    })?;
                    let modulus = if q == self.q { &self.modulus } else { &None };
                    (base, field_of(q, modulus)?)
                }
                None => (name.as_str(), field_of(self.q, &self.modulus)?),
            };
            out.push(catalog::builtin(base, &field)?.with_name(name.clone()));
        }
        for path in &self.file {
            out.push(catalog::from_file(path)?);
        }
        Ok(out)
    }

    fn exactly(&self, count: usize) -> Result<Vec<LieAlgebra>> {
        let all = self.algebras()?;
        if all.len() != count {
            return Err(Error::parse(
                "arguments",
                format!(
                    "expected {count} algebra(s) from --builtin/--file, got {}",
                    all.len()
                ),
            ));
        }
        Ok(all)
    }
}

/// Parses `dim=3 q=2` style census selectors.
fn census_target(pairs: &[String], q: u32) -> Result<(usize, u32)> {
    let mut dim = None;
    let mut q = q;
    for pair in pairs {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::parse("--census", format!("expected KEY=VALUE, got {pair:?}")))?;
        let bad = || Error::parse("--census", format!("bad value in {pair:?}"));
        match key {
            "dim" => dim = Some(value.parse().map_err(|_| bad())?),
            "q" => q = value.parse().map_err(|_| bad())?,
            _ => return Err(Error::parse("--census", format!("unknown key {key:?}"))),
        }
    }
    let dim = dim.ok_or_else(|| Error::parse("--census", "missing dim=N"))?;
    Ok((dim, q))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Analyze {
            input,
            dot,
            graphml,
            output,
            guards,
        } => analyze(&input, dot, graphml, &output, &guards.resolve(), out),
        Command::Verify {
            input,
            census,
            seed,
            trials,
            timing,
            jobs,
            output,
            guards,
        } => {
            let config = VerifyConfig {
                guards: guards.resolve(),
                seed,
                trials,
                timing,
                ..VerifyConfig::default()
            };
            let report = match census {
                Some(pairs) => {
                    let (dim, q) = census_target(&pairs, input.q)?;
                    let field = field_of(q, &input.modulus)?;
                    let c = catalog::census(
                        &field,
                        dim,
                        &CensusOptions {
                            guards: config.guards,
                            jobs,
                        },
                    )?;
                    verify::verify_census(&c, &config)?
                }
                None => {
                    let l = input.exactly(1)?.remove(0);
                    verify::verify_all(&l, &config)?
                }
            };
            let json = report.to_json_lines();
            if let Some(path) = &output.out {
                write_file(path, &json)?;
            }
            if output.json {
                emit(out, &json)?;
            } else {
                emit(out, &report.to_text())?;
                let count = |f: fn(&Status) -> bool| report.count(f);
                emit(
                    out,
                    &format!(
                        "{} checks: {} pass, {} fail, {} not applicable, {} not computed\n",
                        report.checks.len(),
                        count(|s| matches!(s, Status::Pass)),
                        count(Status::is_fail),
                        count(|s| matches!(s, Status::NotApplicable { .. })),
                        count(|s| matches!(s, Status::NotComputed { .. })),
                    ),
                )?;
            }
            Ok(if report.has_failures() {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
        Command::Iso {
            input,
            output,
            guards,
        } => iso(&input, &output, &guards.resolve(), out),
        Command::Census {
            dim,
            q,
            modulus,
            jobs,
            output,
            guards,
        } => {
            let field = field_of(q, &modulus)?;
            let c = catalog::census(
                &field,
                dim,
                &CensusOptions {
                    guards: guards.resolve(),
                    jobs,
                },
            )?;
            let json = c.to_json_lines();
            if let Some(path) = &output.out {
                write_file(path, &json)?;
            }
            if output.json {
                emit(out, &json)?;
            } else {
                let mut text = format!(
                    "{} dim {}: {} candidates, {} valid, {} non-abelian, {} graph classes\n",
                    c.field,
                    c.dim,
                    c.candidates,
                    c.valid,
                    c.non_abelian,
                    c.classes.len()
                );
                text.push_str(
                    "class  order  edges  members  nilpotent  non-nilpotent  center dims  mixed\n",
                );
                for k in &c.classes {
                    text.push_str(&format!(
                        "{:>5}  {:>5}  {:>5}  {:>7}  {:>9}  {:>13}  {:>11}  {}\n",
                        k.id,
                        k.order,
                        k.size,
                        k.members.len(),
                        k.nilpotent,
                        k.non_nilpotent,
                        format!("{:?}", k.center_dims),
                        if k.mixed_nilpotency { "yes" } else { "no" }
                    ));
                }
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
struct AnalyzeRecord<'a> {
    algebra: &'a str,
    field: &'a FieldSpec,
    dim: usize,
    center_dim: usize,
    quotient_dim: usize,
    nilpotency_class: Option<usize>,
    solvable: bool,
    vertices: Vec<String>,
    invariants: &'a InvariantReport,
}

fn bound(b: Bound) -> String {
    if b.exact {
        b.value.to_string()
    } else {
        format!("{} (bound, search budget exhausted)", b.value)
    }
}

fn analyze(
    input: &Input,
    dot: Option<PathBuf>,
    graphml: Option<PathBuf>,
    output: &Output,
    guards: &Guards,
    out: &mut dyn Write,
) -> Result<i32> {
    let l = input.exactly(1)?.remove(0);
    let g = NcGraph::build(&l)?;
    let r = g.invariants(guards);
    let s = l.series();
    if let Some(path) = dot {
        write_file(&path, &export::to_dot(&g, l.name()))?;
    }
    if let Some(path) = graphml {
        write_file(&path, &export::to_graphml(&g, l.name()))?;
    }
    let record = AnalyzeRecord {
        algebra: l.name(),
        field: l.field().spec(),
        dim: l.dim(),
        center_dim: g.s(),
        quotient_dim: g.d(),
        nilpotency_class: s.nilpotency_class,
        solvable: s.solvable,
        vertices: (0..g.order()).map(|v| g.label(v)).collect(),
        invariants: &r,
    };
    let json = to_line(&record);
    if let Some(path) = &output.out {
        write_file(path, &json)?;
    }
    if output.json {
        emit(out, &json)?;
        return Ok(EXIT_OK);
    }
    let degrees: std::collections::BTreeSet<usize> = r.degree_sequence.iter().copied().collect();
    let hamiltonian = match r.hamiltonian {
        Hamiltonicity::Exact(b) => b.to_string(),
        Hamiltonicity::DiracGuaranteed => "true (Dirac bound)".into(),
        Hamiltonicity::Unknown => "unknown".into(),
    };
    let opt = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    let multipartite = match &r.multipartite {
        Some(classes) => format!("yes, {} classes", classes.len()),
        None => "no".into(),
    };
    let text = format!(
        "algebra        {}\nfield          {}\ndim            {}\ncenter dim     {}\nquotient dim   {}\n\
         nilpotent      {}\nsolvable       {}\n\
         order          {}\nedges          {}\ndegrees        {:?}\nregular        {}\ncomplete       {}\n\
         connected      {}\ndiameter       {}\ngirth          {}\neulerian       {}\nhamiltonian    {}\n\
         planar         {}\nkappa          {}\nclique         {}\nchromatic      {}\nindependence   {}\n\
         domination     {}\nmultipartite   {}\n",
        l.name(),
        l.field().spec(),
        l.dim(),
        g.s(),
        g.d(),
        s.nilpotency_class.map_or("no".to_string(), |c| format!("class {c}")),
        s.solvable,
        r.order,
        r.size,
        degrees,
        r.regular,
        g.graph().is_complete(),
        r.connected,
        opt(r.diameter),
        opt(r.girth),
        r.eulerian,
        hamiltonian,
        r.planar,
        r.kappa,
        bound(r.clique_number),
        bound(r.chromatic_number),
        bound(r.independence_number),
        bound(r.domination_number),
        multipartite,
    );
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn iso(input: &Input, output: &Output, guards: &Guards, out: &mut dyn Write) -> Result<i32> {
    let pair = input.exactly(2)?;
    let (a, b) = (&pair[0], &pair[1]);
    let c = verify::compare(a, b, guards)?;
    let json = to_line(&c);
    if let Some(path) = &output.out {
        write_file(path, &json)?;
    }
    if output.json {
        emit(out, &json)?;
    } else {
        let verdict = if !c.isomorphic {
            let (ga, gb) = (NcGraph::build(a)?, NcGraph::build(b)?);
            format!(
                "graphs not isomorphic (orders {} vs {})",
                ga.order(),
                gb.order()
            )
        } else if c.algebras_differ {
            let kind = |l: &LieAlgebra| {
                let s = l.series();
                match (s.nilpotency_class, s.solvable) {
                    (Some(_), _) => "nilpotent",
                    (None, true) => "non-nilpotent",
                    (None, false) => "non-solvable",
                }
            };
            format!(
                "graphs isomorphic; algebras differ ({} vs {})",
                kind(a),
                kind(b)
            )
        } else {
            "graphs isomorphic".to_string()
        };
        emit(
            out,
            &format!(
                "{verdict}\n{:<16} {}\n{:<16} {}\n",
                a.name(),
                c.first,
                b.name(),
                c.second
            ),
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ncgraph").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn census_selector() {
        assert_eq!(
            census_target(&["dim=3".into(), "q=2".into()], 5).unwrap(),
            (3, 2)
        );
        assert_eq!(census_target(&["dim=2".into()], 3).unwrap(), (2, 3));
        assert!(census_target(&["q=2".into()], 2).is_err());
        assert!(census_target(&["size=2".into()], 2).is_err());
    }

    #[test]
    fn guards_from_flags() {
        let (code, _, err) =
            run_args(&["analyze", "--builtin", "heisenberg", "--guard-clique", "0"]);
        assert_eq!(code, EXIT_INPUT, "{err}");
    }

    #[test]
    fn analyze_text() {
        let (code, out, _) = run_args(&["analyze", "--builtin", "affine2", "--q", "4"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("order          5"));
        assert!(out.contains("complete       true"));
        assert!(out.contains("planar         false"));
    }

    #[test]
    fn prime_field_rejects_modulus() {
        let (code, _, err) = run_args(&[
            "analyze",
            "--builtin",
            "sl2",
            "--q",
            "3",
            "--modulus",
            "1,0,1",
        ]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("prime field"));
    }

    #[test]
    fn iso_verdicts() {
        let (code, out, _) = run_args(&["iso", "--builtin", "l1", "--builtin", "l2"]);
        assert_eq!(code, EXIT_OK);
        assert!(
            out.starts_with("graphs isomorphic; algebras differ (nilpotent vs non-nilpotent)"),
            "{out}"
        );
        let (_, out, _) = run_args(&["iso", "--builtin", "sl2", "--builtin", "sl2", "--q", "5"]);
        assert!(out.starts_with("graphs isomorphic\n"));
        let (code, out, _) =
            run_args(&["iso", "--builtin", "heisenberg@2", "--builtin", "affine2@4"]);
        assert_eq!(code, EXIT_OK);
        assert!(
            out.starts_with("graphs not isomorphic (orders 3 vs 5)"),
            "{out}"
        );
    }

    #[test]
    fn iso_guard_exit_code() {
        let (code, _, err) = run_args(&[
            "iso",
            "--builtin",
            "sl2",
            "--builtin",
            "sl2",
            "--q",
            "5",
            "--guard-isomorphism",
            "10",
        ]);
        assert_eq!(code, EXIT_GUARD);
        assert!(err.contains("not computed"));
    }
}
