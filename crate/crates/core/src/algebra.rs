//! Finite-dimensional algebras and modules given by structure constants, and
//! the quiver algebra `A_Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, ExactMatrix, Rational, SparseVec};
use crate::quiver::{FramedQuiver, Quiver};

/// `Σ x_i y_j c` accumulated into a sparse vector.
fn bilinear(x: &SparseVec<Rational>, y: &SparseVec<Rational>, table: impl Fn(usize, usize) -> SparseVec<Rational>) -> SparseVec<Rational> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, a) in x {
        for (j, b) in y {
            for (k, c) in table(*i, *j) {
                *acc.entry(k).or_insert_with(Rational::zero) += a * b * c;
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub(crate) fn basis_vec(i: usize) -> SparseVec<Rational> {
    vec![(i, Rational::one())]
}

fn dense_to_sparse(v: &[Rational]) -> SparseVec<Rational> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn sparse_eq(a: &SparseVec<Rational>, b: &SparseVec<Rational>) -> bool {
    a == b
}

fn show(names: &[String], v: &SparseVec<Rational>) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(i, c)| format!("{c}*{}", names[*i])).collect::<Vec<_>>().join(" + ")
}

/// Unital associative algebra with a homogeneous basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    pub names: Vec<String>,
    /// Internal degree of each basis element.
    pub degrees: Vec<i64>,
    /// Number of module-type factors carried by each basis element.
    pub weights: Vec<u32>,
    pub unit: SparseVec<Rational>,
    /// `mul[i][j] = e_i e_j`.
    pub mul: Vec<Vec<SparseVec<Rational>>>,
}

impl Algebra {
    /// Degree-0, weight-0 algebra from a dense table `mul[i][j][k] = c_ij^k`.
    pub fn from_dense(names: Vec<String>, unit: Vec<Rational>, mul: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = names.len();
        if unit.len() != n || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("structure constants for a {n}-dimensional algebra")));
        }
        Ok(Algebra {
            degrees: vec![0; n],
            weights: vec![0; n],
            unit: dense_to_sparse(&unit),
            mul: mul.iter().map(|r| r.iter().map(|v| dense_to_sparse(v)).collect()).collect(),
            names,
        })
    }

    /// The ground field `k`.
    pub fn ground() -> Self {
        Algebra { names: vec!["1".into()], degrees: vec![0], weights: vec![0], unit: basis_vec(0), mul: vec![vec![basis_vec(0)]] }
    }

    /// `k^n` with basis of orthogonal idempotents.
    pub fn split(n: usize) -> Self {
        let mul = (0..n).map(|i| (0..n).map(|j| if i == j { basis_vec(i) } else { vec![] }).collect()).collect();
        Algebra {
            names: (1..=n).map(|i| format!("e{i}")).collect(),
            degrees: vec![0; n],
            weights: vec![0; n],
            unit: (0..n).map(|i| (i, Rational::one())).collect(),
            mul,
        }
    }

    /// `k[x]/(x^2)`.
    pub fn dual_numbers() -> Self {
        Algebra {
            names: vec!["1".into(), "x".into()],
            degrees: vec![0, 0],
            weights: vec![0, 0],
            unit: basis_vec(0),
            mul: vec![vec![basis_vec(0), basis_vec(1)], vec![basis_vec(1), vec![]]],
        }
    }

    /// Direct product of algebras; basis names are prefixed by `i.`.
    pub fn product(parts: &[Algebra]) -> Self {
        let mut out = Algebra { names: vec![], degrees: vec![], weights: vec![], unit: vec![], mul: vec![] };
        let total: usize = parts.iter().map(Algebra::dim).sum();
        let mut off = 0;
        for (p, a) in parts.iter().enumerate() {
            out.names.extend(a.names.iter().map(|n| format!("{}.{n}", p + 1)));
            out.degrees.extend(&a.degrees);
            out.weights.extend(&a.weights);
            out.unit.extend(a.unit.iter().map(|(i, c)| (i + off, c.clone())));
            for i in 0..a.dim() {
                let mut row = vec![vec![]; total];
                for j in 0..a.dim() {
                    row[j + off] = a.mul[i][j].iter().map(|(k, c)| (k + off, c.clone())).collect();
                }
                out.mul.push(row);
            }
            off += a.dim();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<Rational> {
        &self.mul[i][j]
    }

    pub fn mul_vec(&self, x: &SparseVec<Rational>, y: &SparseVec<Rational>) -> SparseVec<Rational> {
        bilinear(x, y, |i, j| self.mul[i][j].clone())
    }

    /// Koszul sign `(-1)^{|i||j|}`.
    pub fn koszul(&self, i: usize, j: usize) -> Rational {
        if (self.degrees[i] * self.degrees[j]).rem_euclid(2) == 1 {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// Super commutator `[e_i, e_j] = e_i e_j - (-1)^{|i||j|} e_j e_i`.
    pub fn bracket(&self, i: usize, j: usize) -> SparseVec<Rational> {
        let s = self.koszul(i, j);
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in &self.mul[i][j] {
            *acc.entry(*k).or_insert_with(Rational::zero) += c;
        }
        for (k, c) in &self.mul[j][i] {
            *acc.entry(*k).or_insert_with(Rational::zero) -= &s * c;
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// The same algebra in the basis given by the columns of `p`. All basis
    /// elements must share one degree and weight.
    pub fn change_basis(&self, p: &ExactMatrix) -> Result<Algebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::SizeMismatch(format!("basis change of size {}x{} for dimension {n}", p.rows(), p.cols())));
        }
        if self.degrees.iter().any(|d| *d != self.degrees[0]) || self.weights.iter().any(|w| *w != self.weights[0]) {
            return Err(Error::Validation(vec!["basis change needs a homogeneous basis".into()]));
        }
        let inv = p.inverse().ok_or_else(|| Error::Validation(vec!["basis change is singular".into()]))?;
        let mut mul = vec![vec![vec![]; n]; n];
        for (i, row) in mul.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = inv.apply(&self.mul_vec(&p.column(i).to_vec(), &p.column(j).to_vec()));
            }
        }
        Ok(Algebra {
            names: (1..=n).map(|i| format!("b{i}")).collect(),
            degrees: self.degrees.clone(),
            weights: self.weights.clone(),
            unit: inv.apply(&self.unit),
            mul,
        })
    }

    /// Lists violated axioms: associativity, unit laws, homogeneity.
    pub fn validate(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        if self.degrees.len() != n || self.weights.len() != n || self.mul.len() != n || self.mul.iter().any(|r| r.len() != n) {
            out.push("structure tensor has the wrong shape".to_string());
            return out;
        }
        for i in 0..n {
            let e = basis_vec(i);
            if !sparse_eq(&self.mul_vec(&self.unit, &e), &e) {
                out.push(format!("unit does not act as identity on the left of `{}`", self.names[i]));
            }
            if !sparse_eq(&self.mul_vec(&e, &self.unit), &e) {
                out.push(format!("unit does not act as identity on the right of `{}`", self.names[i]));
            }
            for j in 0..n {
                for (k, _) in &self.mul[i][j] {
                    if self.degrees[*k] != self.degrees[i] + self.degrees[j] || self.weights[*k] != self.weights[i] + self.weights[j] {
                        out.push(format!("`{}`*`{}` is not homogeneous", self.names[i], self.names[j]));
                    }
                }
                for k in 0..n {
                    let l = self.mul_vec(&self.mul[i][j], &basis_vec(k));
                    let r = self.mul_vec(&basis_vec(i), &self.mul[j][k]);
                    if !sparse_eq(&l, &r) {
                        out.push(format!(
                            "associativity fails on ({}, {}, {}): {} vs {}",
                            self.names[i],
                            self.names[j],
                            self.names[k],
                            show(&self.names, &l),
                            show(&self.names, &r)
                        ));
                    }
                }
            }
        }
        out
    }
}

/// `A_left`-`A_right` bimodule.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    pub weights: Vec<u32>,
    /// `left[a][m] = e_a · m`.
    pub left: Vec<Vec<SparseVec<Rational>>>,
    /// `right[m][a] = m · e_a`.
    pub right: Vec<Vec<SparseVec<Rational>>>,
}

impl Bimodule {
    /// `A` as a bimodule over itself.
    pub fn regular(a: &Algebra) -> Self {
        Bimodule {
            names: a.names.clone(),
            degrees: a.degrees.clone(),
            weights: a.weights.clone(),
            left: a.mul.clone(),
            right: a.mul.clone(),
        }
    }

    /// Degree-0 bimodule from dense tensors `left[a][m][k]`, `right[m][a][k]`.
    pub fn from_dense(names: Vec<String>, left: Vec<Vec<Vec<Rational>>>, right: Vec<Vec<Vec<Rational>>>) -> Self {
        let n = names.len();
        Bimodule {
            names,
            degrees: vec![0; n],
            weights: vec![0; n],
            left: left.iter().map(|r| r.iter().map(|v| dense_to_sparse(v)).collect()).collect(),
            right: right.iter().map(|r| r.iter().map(|v| dense_to_sparse(v)).collect()).collect(),
        }
    }

    /// The one-dimensional bimodule `k` over `k`.
    pub fn ground() -> Self {
        Bimodule::regular(&Algebra::ground())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn act_left(&self, a: &SparseVec<Rational>, m: &SparseVec<Rational>) -> SparseVec<Rational> {
        bilinear(a, m, |i, j| self.left[i][j].clone())
    }

    pub fn act_right(&self, m: &SparseVec<Rational>, a: &SparseVec<Rational>) -> SparseVec<Rational> {
        bilinear(m, a, |i, j| self.right[i][j].clone())
    }

    pub fn validate(&self, left_alg: &Algebra, right_alg: &Algebra) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        if self.left.len() != left_alg.dim()
            || self.left.iter().any(|r| r.len() != n)
            || self.right.len() != n
            || self.right.iter().any(|r| r.len() != right_alg.dim())
            || self.degrees.len() != n
            || self.weights.len() != n
        {
            out.push("action tensors have the wrong shape".to_string());
            return out;
        }
        for m in 0..n {
            let e = basis_vec(m);
            if self.act_left(&left_alg.unit, &e) != e {
                out.push(format!("left unit does not fix `{}`", self.names[m]));
            }
            if self.act_right(&e, &right_alg.unit) != e {
                out.push(format!("right unit does not fix `{}`", self.names[m]));
            }
            for a in 0..left_alg.dim() {
                for b in 0..left_alg.dim() {
                    let l = self.act_left(&left_alg.mul[a][b], &e);
                    let r = self.act_left(&basis_vec(a), &self.left[b][m]);
                    if l != r {
                        out.push(format!("left action not associative on ({}, {}, {})", left_alg.names[a], left_alg.names[b], self.names[m]));
                    }
                }
                for b in 0..right_alg.dim() {
                    let l = self.act_right(&self.left[a][m], &basis_vec(b));
                    let r = self.act_left(&basis_vec(a), &self.right[m][b]);
                    if l != r {
                        out.push(format!("(am)b != a(mb) on ({}, {}, {})", left_alg.names[a], self.names[m], right_alg.names[b]));
                    }
                }
            }
            for a in 0..right_alg.dim() {
                for b in 0..right_alg.dim() {
                    let l = self.act_right(&self.right[m][a], &basis_vec(b));
                    let r = self.act_right(&e, &right_alg.mul[a][b]);
                    if l != r {
                        out.push(format!("right action not associative on ({}, {}, {})", self.names[m], right_alg.names[a], right_alg.names[b]));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Left or right module; `act[a][m]` is `a·m` or `m·a` according to `side`.
#[derive(Clone, Debug, PartialEq)]
pub struct OneSidedModule {
    pub side: Side,
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    pub weights: Vec<u32>,
    pub act: Vec<Vec<SparseVec<Rational>>>,
}

impl OneSidedModule {
    pub fn from_dense(side: Side, names: Vec<String>, act: Vec<Vec<Vec<Rational>>>) -> Self {
        let n = names.len();
        OneSidedModule {
            side,
            names,
            degrees: vec![0; n],
            weights: vec![0; n],
            act: act.iter().map(|r| r.iter().map(|v| dense_to_sparse(v)).collect()).collect(),
        }
    }

    /// `k` over `k`.
    pub fn ground(side: Side) -> Self {
        OneSidedModule { side, names: vec!["1".into()], degrees: vec![0], weights: vec![0], act: vec![vec![basis_vec(0)]] }
    }

    /// The module `k` over `a` on which `a` acts through the algebra map
    /// sending the unit to 1 and every other listed basis element to 0.
    pub fn augmentation(a: &Algebra, side: Side, unit_index: usize) -> Self {
        let act = (0..a.dim()).map(|i| vec![if i == unit_index { basis_vec(0) } else { vec![] }]).collect();
        OneSidedModule { side, names: vec!["1".into()], degrees: vec![0], weights: vec![0], act }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Action of algebra vector `a` on module vector `m`.
    pub fn act_vec(&self, a: &SparseVec<Rational>, m: &SparseVec<Rational>) -> SparseVec<Rational> {
        bilinear(a, m, |i, j| self.act[i][j].clone())
    }

    pub fn validate(&self, alg: &Algebra) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        if self.act.len() != alg.dim() || self.act.iter().any(|r| r.len() != n) || self.degrees.len() != n || self.weights.len() != n {
            out.push("action tensor has the wrong shape".to_string());
            return out;
        }
        for m in 0..n {
            let e = basis_vec(m);
            if self.act_vec(&alg.unit, &e) != e {
                out.push(format!("unit does not fix `{}`", self.names[m]));
            }
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    // left: a(bm) = (ab)m ; right: (ma)b = m(ab)
                    let (l, r) = match self.side {
                        Side::Left => (self.act_vec(&basis_vec(a), &self.act[b][m]), self.act_vec(&alg.mul[a][b], &e)),
                        Side::Right => (self.act_vec(&basis_vec(b), &self.act[a][m]), self.act_vec(&alg.mul[a][b], &e)),
                    };
                    if l != r {
                        out.push(format!("action not associative on ({}, {}, {})", alg.names[a], alg.names[b], self.names[m]));
                    }
                }
            }
        }
        out
    }
}

/// Separable subalgebra `S` spanned by orthogonal idempotents, together with
/// a separability element `e = Σ u_i ⊗ v_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableIdempotent {
    pub idempotents: Vec<SparseVec<Rational>>,
    pub element: Vec<(SparseVec<Rational>, SparseVec<Rational>)>,
}

impl SeparableIdempotent {
    /// `S = k·1`.
    pub fn trivial(a: &Algebra) -> Self {
        SeparableIdempotent::from_idempotents(vec![a.unit.clone()])
    }

    /// `e = Σ s ⊗ s` over the given orthogonal idempotents.
    pub fn from_idempotents(idempotents: Vec<SparseVec<Rational>>) -> Self {
        let element = idempotents.iter().map(|s| (s.clone(), s.clone())).collect();
        SeparableIdempotent { idempotents, element }
    }

    /// Checks orthogonality, `Σ u_i v_i = 1` and `(s⊗1)e = (1⊗s)e`.
    pub fn validate(&self, a: &Algebra) -> Vec<String> {
        let mut out = Vec::new();
        for (i, s) in self.idempotents.iter().enumerate() {
            for (j, t) in self.idempotents.iter().enumerate() {
                let p = a.mul_vec(s, t);
                let expect = if i == j { s.clone() } else { vec![] };
                if p != expect {
                    out.push(format!("idempotents #{i} and #{j} are not orthogonal idempotents"));
                }
            }
        }
        let mut sum: BTreeMap<usize, Rational> = BTreeMap::new();
        for (u, v) in &self.element {
            for (k, c) in a.mul_vec(u, v) {
                *sum.entry(k).or_insert_with(Rational::zero) += c;
            }
        }
        let sum: SparseVec<Rational> = sum.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if sum != a.unit {
            out.push("separability element does not multiply to 1".to_string());
        }
        let tensor = |pairs: Vec<(SparseVec<Rational>, SparseVec<Rational>)>| {
            let mut t: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
            for (u, v) in pairs {
                for (i, x) in &u {
                    for (j, y) in &v {
                        *t.entry((*i, *j)).or_insert_with(Rational::zero) += x * y;
                    }
                }
            }
            t.retain(|_, c| !c.is_zero());
            t
        };
        for (i, s) in self.idempotents.iter().enumerate() {
            let l = tensor(self.element.iter().map(|(u, v)| (a.mul_vec(s, u), v.clone())).collect());
            let r = tensor(self.element.iter().map(|(u, v)| (u.clone(), a.mul_vec(v, s))).collect());
            if l != r {
                out.push(format!("(s⊗1)e != (1⊗s)e for idempotent #{i}"));
            }
        }
        out
    }

    /// For each basis element `x` of `a`, the unique `(i, j)` with
    /// `s_i x s_j = x`, if every basis element has one.
    pub fn basis_types(&self, a: &Algebra) -> Option<Vec<(usize, usize)>> {
        (0..a.dim())
            .map(|x| {
                let e = basis_vec(x);
                let left = self.idempotents.iter().position(|s| a.mul_vec(s, &e) == e)?;
                let right = self.idempotents.iter().position(|s| a.mul_vec(&e, s) == e)?;
                Some((left, right))
            })
            .collect()
    }

    /// Same as [`Self::basis_types`] for a bimodule over `a`.
    pub fn bimodule_types(&self, m: &Bimodule) -> Option<Vec<(usize, usize)>> {
        (0..m.dim())
            .map(|x| {
                let e = basis_vec(x);
                let left = self.idempotents.iter().position(|s| m.act_left(s, &e) == e)?;
                let right = self.idempotents.iter().position(|s| m.act_right(&e, s) == e)?;
                Some((left, right))
            })
            .collect()
    }

    /// Idempotent fixing each basis element of a one-sided module.
    pub fn module_types(&self, m: &OneSidedModule) -> Option<Vec<usize>> {
        (0..m.dim())
            .map(|x| {
                let e = basis_vec(x);
                self.idempotents.iter().position(|s| m.act_vec(s, &e) == e)
            })
            .collect()
    }
}

/// `Mat_n(a)` with basis `E_{ij}^x` ordered by `(i, j, x)`.
pub fn matrix_algebra(a: &Algebra, n: usize) -> Algebra {
    let d = a.dim();
    let idx = |i: usize, j: usize, x: usize| (i * n + j) * d + x;
    let mut names = Vec::with_capacity(n * n * d);
    let mut degrees = Vec::new();
    let mut weights = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for x in 0..d {
                names.push(format!("E{}{}.{}", i + 1, j + 1, a.names[x]));
                degrees.push(a.degrees[x]);
                weights.push(a.weights[x]);
            }
        }
    }
    let dim = n * n * d;
    let mut mul = vec![vec![vec![]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for x in 0..d {
                    for y in 0..d {
                        mul[idx(i, j, x)][idx(j, l, y)] = a.mul[x][y].iter().map(|(z, c)| (idx(i, l, *z), c.clone())).collect();
                    }
                }
            }
        }
    }
    let unit = (0..n).flat_map(|i| a.unit.iter().map(move |(x, c)| (idx(i, i, *x), c.clone()))).collect::<Vec<_>>();
    let mut unit = unit;
    unit.sort_by_key(|e| e.0);
    Algebra { names, degrees, weights, unit, mul }
}

/// Algebras on vertices, bimodules on edges and one-sided modules on framing legs.
#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedQuiver {
    pub framed: FramedQuiver,
    pub vertex_algebras: Vec<Algebra>,
    /// `A_{s(e)}`-`A_{t(e)}` bimodule per edge.
    pub edge_modules: Vec<Bimodule>,
    /// Right `A_{j(w)}` module per `w` in `W+`.
    pub plus_modules: Vec<OneSidedModule>,
    /// Left `A_{j(w)}` module per `w` in `W-`.
    pub minus_modules: Vec<OneSidedModule>,
}

impl DecoratedQuiver {
    pub fn unframed(quiver: Quiver, vertex_algebras: Vec<Algebra>, edge_modules: Vec<Bimodule>) -> Self {
        DecoratedQuiver { framed: FramedQuiver::unframed(quiver), vertex_algebras, edge_modules, plus_modules: vec![], minus_modules: vec![] }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.framed.quiver
    }

    /// Runs every presentation check; errors list the violations.
    pub fn validate(&self) -> Result<()> {
        self.framed.check()?;
        let q = self.quiver();
        let mut problems = Vec::new();
        if self.vertex_algebras.len() != q.vertices.len() || self.edge_modules.len() != q.edges.len() {
            return Err(Error::Validation(vec!["decoration counts do not match the quiver".into()]));
        }
        if self.plus_modules.len() != self.framed.plus.len() || self.minus_modules.len() != self.framed.minus.len() {
            return Err(Error::Validation(vec!["framing module counts do not match the framing".into()]));
        }
        for (v, a) in q.vertices.iter().zip(&self.vertex_algebras) {
            problems.extend(a.validate().into_iter().map(|p| format!("vertex `{v}`: {p}")));
        }
        for (e, m) in q.edges.iter().zip(&self.edge_modules) {
            let (s, t) = (&self.vertex_algebras[e.source], &self.vertex_algebras[e.target]);
            if m.left.len() != s.dim() || m.right.iter().any(|r| r.len() != t.dim()) {
                return Err(Error::EndpointMismatch {
                    edge: e.name.clone(),
                    reason: format!("actions must be by `{}` on the left and `{}` on the right", q.vertices[e.source], q.vertices[e.target]),
                });
            }
            problems.extend(m.validate(s, t).into_iter().map(|p| format!("edge `{}`: {p}", e.name)));
        }
        for (side, legs, mods) in [(Side::Right, &self.framed.plus, &self.plus_modules), (Side::Left, &self.framed.minus, &self.minus_modules)] {
            for ((w, v), m) in legs.iter().zip(mods) {
                if m.side != side {
                    return Err(Error::SideMismatch { expected: if side == Side::Left { "left" } else { "right" } });
                }
                problems.extend(m.validate(&self.vertex_algebras[*v]).into_iter().map(|p| format!("framing `{w}`: {p}")));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }
}

/// What a basis element of `A_Q` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LetterKind {
    Vertex(usize),
    Edge(usize),
}

/// `A_Q` with `S = span{1_v}` and the origin of every basis element.
#[derive(Clone, Debug)]
pub struct QuiverAlgebra {
    pub algebra: Algebra,
    pub separable: SeparableIdempotent,
    pub kinds: Vec<LetterKind>,
    /// `(source vertex, target vertex)` per basis element; `1_s x 1_t = x`.
    pub ends: Vec<(usize, usize)>,
    /// Offset of each vertex algebra and each edge module in the basis.
    pub vertex_offsets: Vec<usize>,
    pub edge_offsets: Vec<usize>,
}

impl QuiverAlgebra {
    /// `M_+` as a right `A_Q` module: each `M_w` extended by zero, weight 1.
    pub fn plus_module(&self, dq: &DecoratedQuiver) -> OneSidedModule {
        self.framing_module(dq, Side::Right)
    }

    /// `M_-` as a left `A_Q` module.
    pub fn minus_module(&self, dq: &DecoratedQuiver) -> OneSidedModule {
        self.framing_module(dq, Side::Left)
    }

    /// Vertex that each basis element of `M_±` is attached to.
    pub fn framing_ends(&self, dq: &DecoratedQuiver, side: Side) -> Vec<usize> {
        let (legs, mods) = match side {
            Side::Right => (&dq.framed.plus, &dq.plus_modules),
            Side::Left => (&dq.framed.minus, &dq.minus_modules),
        };
        legs.iter().zip(mods).flat_map(|((_, v), m)| std::iter::repeat(*v).take(m.dim())).collect()
    }

    /// Index of the framing leg that each basis element of `M_±` belongs to.
    pub fn framing_legs(&self, dq: &DecoratedQuiver, side: Side) -> Vec<usize> {
        let mods = match side {
            Side::Right => &dq.plus_modules,
            Side::Left => &dq.minus_modules,
        };
        mods.iter().enumerate().flat_map(|(i, m)| std::iter::repeat(i).take(m.dim())).collect()
    }

    fn framing_module(&self, dq: &DecoratedQuiver, side: Side) -> OneSidedModule {
        let (legs, mods) = match side {
            Side::Right => (&dq.framed.plus, &dq.plus_modules),
            Side::Left => (&dq.framed.minus, &dq.minus_modules),
        };
        let dim: usize = mods.iter().map(OneSidedModule::dim).sum();
        let mut names = Vec::new();
        let mut act = vec![vec![vec![]; dim]; self.algebra.dim()];
        let mut off = 0;
        for ((w, v), m) in legs.iter().zip(mods) {
            names.extend(m.names.iter().map(|n| format!("{w}.{n}")));
            let voff = self.vertex_offsets[*v];
            for a in 0..m.act.len() {
                for x in 0..m.dim() {
                    act[voff + a][off + x] = m.act[a][x].iter().map(|(y, c)| (off + y, c.clone())).collect();
                }
            }
            off += m.dim();
        }
        OneSidedModule { side, names, degrees: vec![0; dim], weights: vec![1; dim], act }
    }
}

/// `A_Q = ⊕_v A_v ⊕ ⊕_e M_e[-1]` with square-zero edge part.
pub fn quiver_algebra(dq: &DecoratedQuiver) -> Result<QuiverAlgebra> {
    dq.validate()?;
    let q = dq.quiver();
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut weights = Vec::new();
    let mut kinds = Vec::new();
    let mut ends = Vec::new();
    let mut vertex_offsets = Vec::new();
    let mut edge_offsets = Vec::new();
    for (v, a) in dq.vertex_algebras.iter().enumerate() {
        vertex_offsets.push(names.len());
        names.extend(a.names.iter().map(|n| format!("{}.{n}", q.vertices[v])));
        degrees.extend(&a.degrees);
        weights.extend(&a.weights);
        kinds.extend(std::iter::repeat(LetterKind::Vertex(v)).take(a.dim()));
        ends.extend(std::iter::repeat((v, v)).take(a.dim()));
    }
    for (e, m) in dq.edge_modules.iter().enumerate() {
        edge_offsets.push(names.len());
        let edge = &q.edges[e];
        names.extend(m.names.iter().map(|n| format!("{}.{n}", edge.name)));
        degrees.extend(m.degrees.iter().map(|d| d - 1));
        weights.extend(m.weights.iter().map(|w| w + 1));
        kinds.extend(std::iter::repeat(LetterKind::Edge(e)).take(m.dim()));
        ends.extend(std::iter::repeat((edge.source, edge.target)).take(m.dim()));
    }
    let dim = names.len();
    let mut mul = vec![vec![vec![]; dim]; dim];
    let shift = |off: usize, v: &SparseVec<Rational>| v.iter().map(|(k, c)| (k + off, c.clone())).collect::<SparseVec<Rational>>();
    for (v, a) in dq.vertex_algebras.iter().enumerate() {
        let o = vertex_offsets[v];
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                mul[o + i][o + j] = shift(o, &a.mul[i][j]);
            }
        }
    }
    for (e, m) in dq.edge_modules.iter().enumerate() {
        let edge = &q.edges[e];
        let (mo, so, to) = (edge_offsets[e], vertex_offsets[edge.source], vertex_offsets[edge.target]);
        for x in 0..m.dim() {
            for a in 0..m.left.len() {
                mul[so + a][mo + x] = shift(mo, &m.left[a][x]);
            }
            for b in 0..m.right[x].len() {
                mul[mo + x][to + b] = shift(mo, &m.right[x][b]);
            }
        }
    }
    let unit: SparseVec<Rational> =
        dq.vertex_algebras.iter().enumerate().flat_map(|(v, a)| shift(vertex_offsets[v], &a.unit)).collect();
    let algebra = Algebra { names, degrees, weights, unit, mul };
    let separable = SeparableIdempotent::from_idempotents(
        dq.vertex_algebras.iter().enumerate().map(|(v, a)| shift(vertex_offsets[v], &a.unit)).collect(),
    );
    Ok(QuiverAlgebra { algebra, separable, kinds, ends, vertex_offsets, edge_offsets })
}

/// Action of `Mat_n(A)` on `C^n(L)` and on `(C^n)^*(M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalCoefficients {
    pub n: usize,
    /// `fund[X][v]`: `E_ij^a` on `e_p ⊗ x` (basis index `p * dim L + x`).
    pub fund: Vec<Vec<SparseVec<Rational>>>,
    /// `antifund[X][v]`: `E_ij^a` on `e_p^* ⊗ y` (basis index `p * dim M + y`).
    pub antifund: Vec<Vec<SparseVec<Rational>>>,
}

/// `E_ij^a (e_p ⊗ x) = δ_jp e_i ⊗ ax` and
/// `E_ij^a (e_p^* ⊗ y) = -(-1)^{|a||y|} δ_ip e_j^* ⊗ ya`.
pub fn fundamental_coefficients(a: &Algebra, l: &OneSidedModule, m: &OneSidedModule, n: usize) -> Result<FundamentalCoefficients> {
    if l.side != Side::Left {
        return Err(Error::SideMismatch { expected: "left" });
    }
    if m.side != Side::Right {
        return Err(Error::SideMismatch { expected: "right" });
    }
    let d = a.dim();
    let mut fund = Vec::with_capacity(n * n * d);
    let mut antifund = Vec::with_capacity(n * n * d);
    for i in 0..n {
        for j in 0..n {
            for x in 0..d {
                let mut f = vec![vec![]; n * l.dim()];
                for y in 0..l.dim() {
                    f[j * l.dim() + y] = l.act[x][y].iter().map(|(z, c)| (i * l.dim() + z, c.clone())).collect();
                }
                fund.push(f);
                let mut g = vec![vec![]; n * m.dim()];
                for y in 0..m.dim() {
                    let sign = if (a.degrees[x] * m.degrees[y]).rem_euclid(2) == 1 { q(1) } else { q(-1) };
                    g[i * m.dim() + y] = m.act[x][y].iter().map(|(z, c)| (j * m.dim() + z, &sign * c)).collect();
                }
                antifund.push(g);
            }
        }
    }
    Ok(FundamentalCoefficients { n, fund, antifund })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan() -> DecoratedQuiver {
        DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap(), vec![Algebra::ground()], vec![Bimodule::ground()])
    }

    #[test]
    fn standard_algebras_validate() {
        for a in [Algebra::ground(), Algebra::split(2), Algebra::dual_numbers(), Algebra::product(&[Algebra::dual_numbers(), Algebra::ground()])] {
            assert!(a.validate().is_empty(), "{:?}", a.validate());
        }
    }

    #[test]
    fn broken_associativity_is_named() {
        let mut a = Algebra::dual_numbers();
        a.mul[1][1] = basis_vec(0);
        a.mul[0][1] = basis_vec(1);
        let mut b = Algebra::split(2);
        b.mul[0][1] = basis_vec(0);
        let v = b.validate();
        assert!(v.iter().any(|p| p.contains("associativity fails on (e1, e1, e2)") || p.contains("associativity")), "{v:?}");
    }

    #[test]
    fn matrix_algebras() {
        let m = matrix_algebra(&Algebra::ground(), 2);
        assert_eq!(m.dim(), 4);
        // E12 E21 = E11
        assert_eq!(m.mul[1][2], basis_vec(0));
        assert_eq!(m.unit, vec![(0, q(1)), (3, q(1))]);
        let m = matrix_algebra(&Algebra::dual_numbers(), 2);
        assert_eq!(m.dim(), 8);
        assert!(m.validate().is_empty());
    }

    #[test]
    fn quiver_algebras() {
        let qa = quiver_algebra(&DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[]).unwrap(), vec![Algebra::ground()], vec![])).unwrap();
        assert_eq!(qa.algebra.dim(), 1);

        let qa = quiver_algebra(&jordan()).unwrap();
        assert_eq!(qa.algebra.dim(), 2);
        assert_eq!(qa.algebra.degrees, vec![0, -1]);
        assert!(qa.algebra.mul[1][1].is_empty());
        assert_eq!(qa.algebra.mul[0][1], basis_vec(1));
        assert_eq!(qa.algebra.mul[1][0], basis_vec(1));
        assert!(qa.algebra.validate().is_empty());
        assert!(qa.separable.validate(&qa.algebra).is_empty());

        let two = DecoratedQuiver::unframed(
            Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2")]).unwrap(),
            vec![Algebra::ground(), Algebra::ground()],
            vec![Bimodule::ground()],
        );
        let qa = quiver_algebra(&two).unwrap();
        assert_eq!(qa.algebra.dim(), 3);
        assert_eq!(qa.algebra.mul[0][2], basis_vec(2));
        assert!(qa.algebra.mul[2][0].is_empty());
        assert_eq!(qa.ends[2], (0, 1));
        assert!(qa.algebra.validate().is_empty());
    }

    #[test]
    fn endpoint_mismatch() {
        let bad = DecoratedQuiver::unframed(
            Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2")]).unwrap(),
            vec![Algebra::dual_numbers(), Algebra::ground()],
            vec![Bimodule::ground()],
        );
        assert!(matches!(quiver_algebra(&bad), Err(Error::EndpointMismatch { .. })));
    }

    #[test]
    fn separability() {
        let a = Algebra::split(2);
        let s = SeparableIdempotent::from_idempotents(vec![basis_vec(0), basis_vec(1)]);
        assert!(s.validate(&a).is_empty());
        assert!(SeparableIdempotent::trivial(&a).validate(&a).is_empty());
        let bad = SeparableIdempotent::from_idempotents(vec![basis_vec(0)]);
        assert!(!bad.validate(&a).is_empty());
    }

    #[test]
    fn fundamental_actions() {
        let k = Algebra::ground();
        let (l, m) = (OneSidedModule::ground(Side::Left), OneSidedModule::ground(Side::Right));
        let f = fundamental_coefficients(&k, &l, &m, 1).unwrap();
        assert_eq!(f.fund[0][0], basis_vec(0));
        assert_eq!(f.antifund[0][0], vec![(0, q(-1))]);
        let f = fundamental_coefficients(&k, &l, &m, 2).unwrap();
        // E12 = index 1: e2 -> e1, e1 -> 0
        assert_eq!(f.fund[1][1], basis_vec(0));
        assert!(f.fund[1][0].is_empty());
        assert!(matches!(fundamental_coefficients(&k, &m, &m, 1), Err(Error::SideMismatch { .. })));
    }
}
