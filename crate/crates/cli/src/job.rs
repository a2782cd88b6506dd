//! Job files: one JSON document describing a decorated framed quiver, a task
//! and caps. Scalars are strings such as `"3/4"` so that values stay exact.

use std::collections::BTreeMap;
use std::path::Path;

use lqt_core::algebra::{Algebra, Bimodule, DecoratedQuiver, OneSidedModule, Side};
use lqt_core::hochschild::{Caps, TensorS};
use lqt_core::linalg::{parse_rational, FieldMode, Rational, DEFAULT_PRIME};
use lqt_core::quiver::{FramedQuiver, Quiver};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime {
        #[serde(default = "default_prime")]
        p: u64,
    },
}

fn default_prime() -> u64 {
    DEFAULT_PRIME
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rational
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    /// `mul[i][j]` = coordinates of `e_i e_j`.
    pub mul: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    /// `left[a][m]` = coordinates of `a m`, `a` in the source algebra.
    pub left: Vec<Vec<Vec<String>>>,
    /// `right[m][b]` = coordinates of `m b`, `b` in the target algebra.
    pub right: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    /// `act[a][m]` = coordinates of `a·m` (left) or `m·a` (right).
    pub act: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub module: BimoduleSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegSpec {
    pub name: String,
    pub to: String,
    pub module: ModuleSpec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramingSpec {
    #[serde(default)]
    pub plus: Vec<LegSpec>,
    #[serde(default)]
    pub minus: Vec<LegSpec>,
}

impl FramingSpec {
    fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorMode {
    Auto,
    Filter,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSpec {
    pub plus: String,
    #[serde(default)]
    pub edges: Vec<String>,
    pub minus: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    #[serde(default)]
    pub name: String,
    /// Edge names of one cycle, for `floop`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<String>>,
    /// One framed path, for `fpath`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathSpec>,
    /// How `⊗_S` is taken in relative bar complexes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_degree: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsSpec {
    pub degree: i64,
    #[serde(default)]
    pub weight: u32,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub field: FieldSpec,
    pub vertices: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeSpec>,
    #[serde(default, skip_serializing_if = "FramingSpec::is_empty")]
    pub framing: FramingSpec,
    #[serde(default)]
    pub task: TaskSpec,
    pub caps: CapsSpec,
}

/// Command line values that replace the ones in the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub task: Option<String>,
    pub max_degree: Option<i64>,
    pub max_weight: Option<u32>,
    pub n: Option<usize>,
    pub stable_degree: Option<i64>,
}

/// Validated job, ready to run.
#[derive(Clone, Debug)]
pub struct Problem {
    pub dq: DecoratedQuiver,
    pub field: FieldMode,
    pub caps: Caps,
    pub n: Option<usize>,
    pub task: TaskSpec,
}

pub fn parse_job(path: &Path) -> Result<JobSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_job_str(&text)
}

pub fn parse_job_str(text: &str) -> Result<JobSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

impl JobSpec {
    pub fn apply(&mut self, o: &Overrides) {
        if let Some(t) = &o.task {
            self.task.name = t.clone();
        }
        if let Some(d) = o.max_degree {
            self.caps.degree = d;
        }
        if let Some(w) = o.max_weight {
            self.caps.weight = w;
        }
        if let Some(n) = o.n {
            self.caps.n = Some(n);
        }
        if let Some(s) = o.stable_degree {
            self.task.stable_degree = Some(s);
        }
    }

    /// Canonical serialization: sorted keys, two-space indent.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("job serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn problem(&self) -> Result<Problem, CliError> {
        let mut errs = Vec::new();
        if self.caps.degree < 0 {
            errs.push("caps.degree must be non-negative".to_string());
        }
        let field = match self.field {
            FieldSpec::Rational => FieldMode::Rational,
            FieldSpec::Prime { p } => {
                if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                    errs.push(format!("field.p = {p} is not prime"));
                }
                FieldMode::Prime { p }
            }
        };
        let names: Vec<String> = self.vertices.keys().cloned().collect();
        let mut algebras = Vec::new();
        for (v, a) in &self.vertices {
            algebras.push(algebra(&format!("vertices.{v}"), a, &mut errs));
        }
        let vertex = |name: &str, at: &str, errs: &mut Vec<String>| -> usize {
            match names.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    errs.push(format!("{at}: unknown vertex `{name}`"));
                    0
                }
            }
        };
        let mut edges = Vec::new();
        let mut modules = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            let at = format!("edges[{k}]");
            let (s, t) = (vertex(&e.src, &at, &mut errs), vertex(&e.dst, &at, &mut errs));
            let (ds, dt) = (algebras.get(s).map_or(0, Algebra::dim), algebras.get(t).map_or(0, Algebra::dim));
            edges.push((e.name.clone(), e.src.clone(), e.dst.clone()));
            modules.push(bimodule(&format!("{at}.module"), &e.module, ds, dt, &mut errs));
        }
        let legs = |side: Side, specs: &[LegSpec], tag: &str, errs: &mut Vec<String>| {
            let mut out = Vec::new();
            let mut mods = Vec::new();
            for (k, l) in specs.iter().enumerate() {
                let at = format!("framing.{tag}[{k}]");
                let v = vertex(&l.to, &at, errs);
                out.push((l.name.clone(), v));
                mods.push(module(&format!("{at}.module"), side, &l.module, algebras.get(v).map_or(0, Algebra::dim), errs));
            }
            (out, mods)
        };
        let (plus, plus_modules) = legs(Side::Right, &self.framing.plus, "plus", &mut errs);
        let (minus, minus_modules) = legs(Side::Left, &self.framing.minus, "minus", &mut errs);
        if !errs.is_empty() {
            return Err(CliError::Validation(errs));
        }
        let refs: Vec<(&str, &str, &str)> = edges.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
        let quiver = Quiver::new(names, &refs).map_err(CliError::from)?;
        let dq = DecoratedQuiver {
            framed: FramedQuiver { quiver, plus, minus },
            vertex_algebras: algebras,
            edge_modules: modules,
            plus_modules,
            minus_modules,
        };
        dq.validate().map_err(CliError::from)?;
        Ok(Problem { dq, field, caps: Caps::new(self.caps.degree, self.caps.weight), n: self.caps.n, task: self.task.clone() })
    }
}

impl TensorMode {
    pub fn to_core(self) -> TensorS {
        match self {
            TensorMode::Auto => TensorS::Auto,
            TensorMode::Filter => TensorS::Filter,
            TensorMode::Quotient => TensorS::Quotient,
        }
    }
}

fn scalar(at: &str, s: &str, errs: &mut Vec<String>) -> Rational {
    parse_rational(s).unwrap_or_else(|| {
        errs.push(format!("{at}: `{s}` is not an exact scalar"));
        Rational::from_integer(0.into())
    })
}

fn vector(at: &str, v: &[String], len: usize, errs: &mut Vec<String>) -> Vec<Rational> {
    if v.len() != len {
        errs.push(format!("{at}: expected {len} coordinates, found {}", v.len()));
    }
    (0..len).map(|i| v.get(i).map_or_else(|| Rational::from_integer(0.into()), |s| scalar(&format!("{at}[{i}]"), s, errs))).collect()
}

fn table(at: &str, t: &[Vec<Vec<String>>], rows: usize, cols: usize, len: usize, errs: &mut Vec<String>) -> Vec<Vec<Vec<Rational>>> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        errs.push(format!("{at}: expected a {rows} x {cols} table of vectors"));
    }
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| match t.get(i).and_then(|r| r.get(j)) {
                    Some(v) => vector(&format!("{at}[{i}][{j}]"), v, len, errs),
                    None => vec![Rational::from_integer(0.into()); len],
                })
                .collect()
        })
        .collect()
}

fn check_basis(at: &str, dim: usize, basis: &[String], errs: &mut Vec<String>) {
    if basis.len() != dim {
        errs.push(format!("{at}.basis: expected {dim} names, found {}", basis.len()));
    }
}

fn algebra(at: &str, a: &AlgebraSpec, errs: &mut Vec<String>) -> Algebra {
    check_basis(at, a.dim, &a.basis, errs);
    let n = a.dim;
    let unit = vector(&format!("{at}.unit"), &a.unit, n, errs);
    let mul = table(&format!("{at}.mul"), &a.mul, n, n, n, errs);
    let names = (0..n).map(|i| a.basis.get(i).cloned().unwrap_or_else(|| format!("e{i}"))).collect();
    let mut alg = Algebra::from_dense(names, unit, mul).expect("shapes were normalized");
    if let Some(d) = &a.degrees {
        if d.len() == n {
            alg.degrees = d.clone();
        } else {
            errs.push(format!("{at}.degrees: expected {n} entries"));
        }
    }
    alg
}

fn bimodule(at: &str, m: &BimoduleSpec, ds: usize, dt: usize, errs: &mut Vec<String>) -> Bimodule {
    check_basis(at, m.dim, &m.basis, errs);
    let n = m.dim;
    let left = table(&format!("{at}.left"), &m.left, ds, n, n, errs);
    let right = table(&format!("{at}.right"), &m.right, n, dt, n, errs);
    let names = (0..n).map(|i| m.basis.get(i).cloned().unwrap_or_else(|| format!("m{i}"))).collect();
    Bimodule::from_dense(names, left, right)
}

fn module(at: &str, side: Side, m: &ModuleSpec, da: usize, errs: &mut Vec<String>) -> OneSidedModule {
    check_basis(at, m.dim, &m.basis, errs);
    let n = m.dim;
    let act = table(&format!("{at}.act"), &m.act, da, n, n, errs);
    let names = (0..n).map(|i| m.basis.get(i).cloned().unwrap_or_else(|| format!("m{i}"))).collect();
    OneSidedModule::from_dense(side, names, act)
}
