//! The Lie side: `gl_N` of a decorated framed quiver, its Chevalley-Eilenberg
//! complex, invariant theory of `gl_N`, and the comparison with the
//! Hochschild side.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{quiver_algebra, Algebra, DecoratedQuiver, SeparableIdempotent, Side};
use crate::complexes::{
    compare_cells, homology_dims_in, quotient_complex, sym_algebra_dims, BasedSpace, BigradedDims, Cell, ChainComplex,
    Label, Verdict,
};
use crate::error::{Error, Result};
use crate::hochschild::{connes_complex, Caps};
use crate::linalg::{q, ExactMatrix, FieldMode, Rational, SparseVec};
use crate::local::{cycle_local_dims, path_local_dims};
use crate::quiver::{enumerate_cycles, enumerate_framed_paths};

/// Row or column position of a matrix entry: `(vertex, index)`. The framing
/// vertex is `vertices` with a single index.
type Slot = (usize, usize);

/// A super Lie algebra of block matrices over a graded algebra, given by its
/// basis, bracket tensor and the data needed for the torus and Weyl group of
/// `⊕_v gl_N(k)`.
#[derive(Clone, Debug)]
pub struct LieData {
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    pub weights: Vec<u32>,
    /// `bracket[x][y] = [x, y]`.
    pub bracket: Vec<Vec<SparseVec<Rational>>>,
    /// `E_ij ⊗ 1_v` for every vertex `v`, as vectors.
    pub reductive: Vec<SparseVec<Rational>>,
    n: usize,
    vertices: usize,
    slots: Vec<(Slot, Slot, usize)>,
}

/// Graded algebra with idempotent ends per basis element; the block
/// algebra whose `N × N` matrices (1 × 1 at the framing vertex) give the Lie
/// algebra.
struct Blocks {
    names: Vec<String>,
    degrees: Vec<i64>,
    weights: Vec<u32>,
    ends: Vec<(usize, usize)>,
    mul: Vec<Vec<SparseVec<Rational>>>,
    units: Vec<SparseVec<Rational>>,
}

impl LieData {
    /// `gl_n(A)` with the super commutator.
    pub fn gl(a: &Algebra, n: usize) -> Self {
        let blocks = Blocks {
            names: a.names.clone(),
            degrees: a.degrees.clone(),
            weights: a.weights.clone(),
            ends: vec![(0, 0); a.dim()],
            mul: a.mul.clone(),
            units: vec![a.unit.clone()],
        };
        Self::from_blocks(&blocks, 1, n)
    }

    /// `⊕_v gl_N(A_v) ⋉ (⊕_e Mat_N(M_e) ⊕ ⊕ C^N(M_-) ⊕ ⊕ (C^N)^*(M_+))[-1]`.
    pub fn from_quiver(dq: &DecoratedQuiver, n: usize) -> Result<Self> {
        let qa = quiver_algebra(dq)?;
        let plus = qa.plus_module(dq);
        let minus = qa.minus_module(dq);
        let a = &qa.algebra;
        let v = dq.quiver().vertices.len();
        let (da, dp, dm) = (a.dim(), plus.dim(), minus.dim());
        let total = da + dp + dm;
        let mut names = a.names.clone();
        names.extend(plus.names.iter().map(|s| format!("+{s}")));
        names.extend(minus.names.iter().map(|s| format!("-{s}")));
        let mut degrees = a.degrees.clone();
        degrees.extend(plus.degrees.iter().chain(&minus.degrees).map(|d| d - 1));
        let mut weights = a.weights.clone();
        weights.extend(plus.weights.iter().chain(&minus.weights));
        let mut ends = qa.ends.clone();
        ends.extend(qa.framing_ends(dq, Side::Right).into_iter().map(|t| (v, t)));
        ends.extend(qa.framing_ends(dq, Side::Left).into_iter().map(|s| (s, v)));
        let shift = |off: usize, w: &SparseVec<Rational>| w.iter().map(|(k, c)| (k + off, c.clone())).collect::<SparseVec<Rational>>();
        let mut mul = vec![vec![vec![]; total]; total];
        for x in 0..da {
            for y in 0..da {
                mul[x][y] = a.mul[x][y].clone();
            }
        }
        for m in 0..dp {
            for x in 0..da {
                mul[da + m][x] = shift(da, &plus.act[x][m]);
            }
        }
        for m in 0..dm {
            for x in 0..da {
                mul[x][da + dp + m] = shift(da + dp, &minus.act[x][m]);
            }
        }
        let units = qa.separable.idempotents.clone();
        let blocks = Blocks { names, degrees, weights, ends, mul, units };
        Ok(Self::from_blocks(&blocks, v, n))
    }

    fn from_blocks(b: &Blocks, vertices: usize, n: usize) -> Self {
        let size = |v: usize| if v == vertices { 1 } else { n };
        let mut slots = Vec::new();
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut weights = Vec::new();
        for (x, &(s, t)) in b.ends.iter().enumerate() {
            for i in 0..size(s) {
                for j in 0..size(t) {
                    slots.push(((s, i), (t, j), x));
                    names.push(if n == 1 && vertices == 1 { b.names[x].clone() } else { format!("{}[{}{}]", b.names[x], i + 1, j + 1) });
                    degrees.push(b.degrees[x]);
                    weights.push(b.weights[x]);
                }
            }
        }
        let index: HashMap<(Slot, Slot, usize), usize> = slots.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let product = |p: usize, r: usize| -> SparseVec<Rational> {
            let ((s1, c1), x) = ((slots[p].0, slots[p].1), slots[p].2);
            let ((c2, t2), y) = ((slots[r].0, slots[r].1), slots[r].2);
            if c1 != c2 {
                return vec![];
            }
            b.mul[x][y].iter().map(|(z, c)| (index[&(s1, t2, *z)], c.clone())).collect()
        };
        let dim = slots.len();
        let mut bracket = vec![vec![vec![]; dim]; dim];
        for p in 0..dim {
            for r in 0..dim {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, c) in product(p, r) {
                    *acc.entry(k).or_insert_with(Rational::zero) += c;
                }
                let sign = if (degrees[p] * degrees[r]).rem_euclid(2) == 1 { q(1) } else { q(-1) };
                for (k, c) in product(r, p) {
                    *acc.entry(k).or_insert_with(Rational::zero) += c * &sign;
                }
                bracket[p][r] = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        let mut reductive = Vec::new();
        for (v, u) in b.units.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    reductive.push(u.iter().map(|(x, c)| (index[&((v, i), (v, j), *x)], c.clone())).collect());
                }
            }
        }
        LieData { names, degrees, weights, bracket, reductive, n, vertices, slots }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn bracket_vec(&self, x: &SparseVec<Rational>, y: &SparseVec<Rational>) -> SparseVec<Rational> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in &self.bracket[*i][*j] {
                    *acc.entry(*k).or_insert_with(Rational::zero) += a * b * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Violations of super antisymmetry, super Jacobi and weight
    /// preservation on basis elements.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let dim = self.dim();
        let par = |x: usize| self.degrees[x].rem_euclid(2);
        let neg = |v: &SparseVec<Rational>| v.iter().map(|(k, c)| (*k, -c)).collect::<SparseVec<Rational>>();
        for x in 0..dim {
            for y in 0..dim {
                for (k, _) in &self.bracket[x][y] {
                    if self.weights[*k] != self.weights[x] + self.weights[y] || self.degrees[*k] != self.degrees[x] + self.degrees[y] {
                        out.push(format!("[{}, {}] not homogeneous", self.names[x], self.names[y]));
                    }
                }
                let mut sym = self.bracket[y][x].clone();
                if par(x) * par(y) == 0 {
                    sym = neg(&sym);
                }
                if sym != self.bracket[x][y] {
                    out.push(format!("[{}, {}] not super antisymmetric", self.names[x], self.names[y]));
                }
            }
        }
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    let e = |i: usize| vec![(i, q(1))];
                    let lhs = self.bracket_vec(&e(x), &self.bracket[y][z]);
                    let a = self.bracket_vec(&self.bracket[x][y], &e(z));
                    let mut b = self.bracket_vec(&e(y), &self.bracket[x][z]);
                    if par(x) * par(y) == 1 {
                        b = neg(&b);
                    }
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (k, c) in lhs {
                        *acc.entry(k).or_insert_with(Rational::zero) += c;
                    }
                    for (k, c) in a.into_iter().chain(b) {
                        *acc.entry(k).or_insert_with(Rational::zero) -= c;
                    }
                    if acc.values().any(|c| !c.is_zero()) {
                        out.push(format!("Jacobi fails on {}, {}, {}", self.names[x], self.names[y], self.names[z]));
                    }
                }
            }
        }
        out
    }

    /// Weight of the basis element under the diagonal torus of `⊕_v gl_N`.
    fn torus(&self, x: usize) -> [Option<usize>; 2] {
        let ((s, i), (t, j), _) = self.slots[x];
        let at = |v: usize, k: usize| (v < self.vertices).then_some(v * self.n + k);
        [at(s, i), at(t, j)]
    }

    /// Image of each basis element under simultaneous index permutations,
    /// one per vertex.
    fn permuted(&self, perms: &[Vec<usize>]) -> Vec<usize> {
        let index: HashMap<(Slot, Slot, usize), usize> = self.slots.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let act = |(v, i): Slot| if v < self.vertices { (v, perms[v][i]) } else { (v, i) };
        self.slots.iter().map(|&(s, t, x)| index[&(act(s), act(t), x)]).collect()
    }
}

/// Which part of the Chevalley-Eilenberg complex to build. Both reductions
/// compute the same homology in characteristic zero: the torus acts
/// semisimply and trivially on homology, and the Weyl group permutes the
/// zero-weight sector by chain automorphisms homotopic to the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CeReduction {
    None,
    Torus,
    TorusWeyl,
}

/// A Chevalley-Eilenberg complex together with the monomial behind each
/// basis vector. Monomials are sorted lists of Lie algebra basis indices.
#[derive(Clone, Debug)]
pub struct CeComplex {
    pub complex: ChainComplex,
    pub monomials: Vec<Vec<Vec<usize>>>,
    pub reduction: CeReduction,
}

fn parity(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

/// Sorts `v` in the graded symmetric algebra; `None` if an odd letter
/// repeats, otherwise whether the sign flipped.
fn normal_order(v: &mut [usize], sd: &[i64]) -> Option<bool> {
    let mut neg = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            if parity(sd[v[j - 1]]) && parity(sd[v[j]]) {
                neg = !neg;
            }
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1] && parity(sd[w[0]])) {
        return None;
    }
    Some(neg)
}

fn add_term(acc: &mut BTreeMap<Vec<usize>, Rational>, mut word: Vec<usize>, sd: &[i64], c: Rational) {
    if let Some(neg) = normal_order(&mut word, sd) {
        let e = acc.entry(word).or_insert_with(Rational::zero);
        if neg {
            *e -= c;
        } else {
            *e += c;
        }
    }
}

impl LieData {
    fn shifted_degrees(&self) -> Vec<i64> {
        self.degrees.iter().map(|d| d + 1).collect()
    }

    /// `d(y_1 ... y_n) = Σ_{i<j} ± Q(y_i y_j) y_1 .. ŷ_i .. ŷ_j .. y_n` with
    /// `Q(sx sy) = (-1)^{|x|} s[x, y]`.
    pub fn ce_differential(&self, m: &[usize]) -> BTreeMap<Vec<usize>, Rational> {
        let sd = self.shifted_degrees();
        let mut acc = BTreeMap::new();
        let prefix: Vec<i64> = std::iter::once(0).chain(m.iter().scan(0, |s, &x| {
            *s += sd[x];
            Some(*s)
        })).collect();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let (x, y) = (m[i], m[j]);
                let mut sign = sd[x] * prefix[i] + sd[y] * (prefix[j] - sd[x]) + self.degrees[x];
                if self.bracket[x][y].is_empty() {
                    continue;
                }
                sign = sign.rem_euclid(2);
                let rest: Vec<usize> = m.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, &z)| z).collect();
                for (z, c) in &self.bracket[x][y] {
                    let mut word = Vec::with_capacity(rest.len() + 1);
                    word.push(*z);
                    word.extend(&rest);
                    add_term(&mut acc, word, &sd, if sign == 1 { -c.clone() } else { c.clone() });
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    /// `ρ(x)(y_1 ... y_n) = Σ_p y_1 .. [x, y_p] .. y_n` for even `x`.
    fn adjoint(&self, x: &SparseVec<Rational>, m: &[usize]) -> BTreeMap<Vec<usize>, Rational> {
        let sd = self.shifted_degrees();
        let mut acc = BTreeMap::new();
        for p in 0..m.len() {
            for (g, a) in x {
                for (z, c) in &self.bracket[*g][m[p]] {
                    let mut word = m.to_vec();
                    word[p] = *z;
                    add_term(&mut acc, word, &sd, a * c);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    fn monomials(&self, max_degree: i64, max_weight: u32, torus_zero: bool) -> Result<Vec<Vec<Vec<usize>>>> {
        let sd = self.shifted_degrees();
        for x in 0..self.dim() {
            if sd[x] < 0 || (sd[x] == 0 && self.weights[x] == 0) {
                return Err(Error::Unbounded(format!("Lie algebra element {} has shifted degree {} and weight {}", self.names[x], sd[x], self.weights[x])));
            }
        }
        let mut out = vec![Vec::new(); (max_degree.max(-1) + 1) as usize];
        let mut torus = vec![0i32; self.n * self.vertices];
        let mut cur = Vec::new();
        self.walk(0, &sd, max_degree, max_weight, torus_zero, &mut torus, &mut cur, &mut out);
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        start: usize,
        sd: &[i64],
        deg_left: i64,
        wt_left: u32,
        torus_zero: bool,
        torus: &mut Vec<i32>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if !torus_zero || torus.iter().all(|t| *t == 0) {
            let d: i64 = cur.iter().map(|&x| sd[x]).sum();
            out[d as usize].push(cur.clone());
        }
        for x in start..self.dim() {
            if sd[x] > deg_left || self.weights[x] > wt_left {
                continue;
            }
            let [r, c] = self.torus(x);
            if let Some(r) = r {
                torus[r] += 1;
            }
            if let Some(c) = c {
                torus[c] -= 1;
            }
            cur.push(x);
            let next = if parity(sd[x]) { x + 1 } else { x };
            self.walk(next, sd, deg_left - sd[x], wt_left - self.weights[x], torus_zero, torus, cur, out);
            cur.pop();
            if let Some(r) = r {
                torus[r] -= 1;
            }
            if let Some(c) = c {
                torus[c] += 1;
            }
        }
    }

    fn weyl_maps(&self) -> Vec<Vec<usize>> {
        let one: Vec<Vec<usize>> = (0..self.n).permutations(self.n).collect();
        (0..self.vertices)
            .map(|_| one.clone())
            .multi_cartesian_product()
            .map(|perms| self.permuted(&perms))
            .collect()
    }
}

/// Canonical orbit representative under a group of letter permutations:
/// `g·m = ±rep`, so `[m] = ±[rep]` in coinvariants, or `None` if the class
/// of `m` vanishes.
struct Orbits<'a> {
    maps: &'a [Vec<usize>],
    sd: &'a [i64],
    cache: HashMap<Vec<usize>, Option<(Vec<usize>, bool)>>,
}

impl Orbits<'_> {
    fn class(&mut self, m: &[usize]) -> Option<(Vec<usize>, bool)> {
        if let Some(hit) = self.cache.get(m) {
            return hit.clone();
        }
        let mut best: Option<(Vec<usize>, bool)> = None;
        let mut killed = false;
        for g in self.maps {
            let mut img: Vec<usize> = m.iter().map(|&x| g[x]).collect();
            let Some(neg) = normal_order(&mut img, self.sd) else {
                killed = true;
                break;
            };
            match &best {
                Some((b, s)) if *b == img => {
                    if *s != neg {
                        killed = true;
                        break;
                    }
                }
                Some((b, _)) if *b < img => {}
                _ => best = Some((img, neg)),
            }
        }
        let res = if killed { None } else { best };
        self.cache.insert(m.to_vec(), res.clone());
        res
    }
}

fn monomial_label(ld: &LieData, sd: &[i64], m: &[usize]) -> Label {
    let name = if m.is_empty() { "1".to_string() } else { m.iter().map(|&x| ld.names[x].as_str()).join(" ") };
    Label::new(name, m.iter().map(|&x| sd[x]).sum(), m.iter().map(|&x| ld.weights[x]).sum())
}

/// `Sym(g[1])` with the Chevalley-Eilenberg differential, built to degree
/// `caps.degree + 1` and weight `caps.weight`.
pub fn ce_complex(ld: &LieData, caps: Caps) -> Result<ChainComplex> {
    Ok(ce_complex_with(ld, caps, CeReduction::None)?.complex)
}

pub fn ce_complex_with(ld: &LieData, caps: Caps, reduction: CeReduction) -> Result<CeComplex> {
    let top = caps.degree + 1;
    let sd = ld.shifted_degrees();
    let all = ld.monomials(top, caps.weight, reduction != CeReduction::None)?;
    let maps = if reduction == CeReduction::TorusWeyl { ld.weyl_maps() } else { vec![(0..ld.dim()).collect()] };
    let mut orbits = Orbits { maps: &maps, sd: &sd, cache: HashMap::new() };
    let monomials: Vec<Vec<Vec<usize>>> = all
        .into_iter()
        .map(|ms| {
            ms.into_iter()
                .filter(|m| matches!(orbits.class(m), Some((rep, _)) if rep == *m))
                .collect()
        })
        .collect();
    let index: Vec<HashMap<&[usize], usize>> =
        monomials.iter().map(|ms| ms.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect()).collect();
    let spaces = monomials
        .iter()
        .map(|ms| BasedSpace::new(ms.iter().map(|m| monomial_label(ld, &sd, m)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let mut differentials = vec![ExactMatrix::zeros(0, monomials[0].len())];
    for n in 1..monomials.len() {
        let cols = monomials[n]
            .iter()
            .map(|m| {
                let mut col: BTreeMap<usize, Rational> = BTreeMap::new();
                for (w, c) in ld.ce_differential(m) {
                    if let Some((rep, neg)) = orbits.class(&w) {
                        let e = col.entry(index[n - 1][rep.as_slice()]).or_insert_with(Rational::zero);
                        if neg {
                            *e -= c;
                        } else {
                            *e += c;
                        }
                    }
                }
                col.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        differentials.push(ExactMatrix::from_columns(monomials[n - 1].len(), cols));
    }
    let complex = ChainComplex::new(0, spaces, differentials)?;
    Ok(CeComplex { complex, monomials, reduction })
}

/// `ρ(x)` on each degree of an unreduced CE complex, one matrix per basis
/// element of `⊕_v gl_N(k)`.
pub fn adjoint_action(ld: &LieData, ce: &CeComplex) -> Result<Vec<BTreeMap<i64, ExactMatrix>>> {
    if ce.reduction != CeReduction::None {
        return Err(Error::Internal("adjoint action needs the unreduced complex".into()));
    }
    let index: Vec<HashMap<&[usize], usize>> =
        ce.monomials.iter().map(|ms| ms.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect()).collect();
    let mut out = Vec::new();
    for x in &ld.reductive {
        let mut per = BTreeMap::new();
        for (n, ms) in ce.monomials.iter().enumerate() {
            let mut cols = Vec::new();
            for m in ms {
                let mut col = Vec::new();
                for (w, c) in ld.adjoint(x, m) {
                    // weight is preserved, so every term is inside the caps
                    let i = index[n].get(w.as_slice()).ok_or_else(|| Error::Internal("action leaves the complex".into()))?;
                    col.push((*i, c));
                }
                col.sort_by_key(|(i, _)| *i);
                cols.push(col);
            }
            per.insert(n as i64, ExactMatrix::from_columns(ms.len(), cols));
        }
        out.push(per);
    }
    Ok(out)
}

/// Degreewise quotient of `c` by the span of `ρ(x)v` over the given
/// operators.
pub fn gl_coinvariant_reduce(c: &ChainComplex, action: &[BTreeMap<i64, ExactMatrix>]) -> Result<ChainComplex> {
    let mut relations: BTreeMap<i64, Vec<SparseVec<Rational>>> = BTreeMap::new();
    for op in action {
        for (n, m) in op {
            let rel = relations.entry(*n).or_default();
            for j in 0..m.cols() {
                if !m.column(j).is_empty() {
                    rel.push(m.column(j).to_vec());
                }
            }
        }
    }
    quotient_complex(c, &relations)
}

/// A permutation of `0..n` as its list of images.
pub type Perm = Vec<usize>;

/// Cycles of `sigma`, each starting at its least element and following
/// `μ -> sigma(μ)`.
pub fn cycles(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cyc.push(k);
            k = sigma[k];
        }
        out.push(cyc);
    }
    out
}

fn is_perm(sigma: &[usize]) -> bool {
    let set: BTreeSet<usize> = sigma.iter().copied().collect();
    set.len() == sigma.len() && sigma.iter().all(|&k| k < sigma.len())
}

/// `T(σ)(α_1, ..., α_n) = Π_cycles Tr(α_{μ_1} ... α_{μ_j})`.
pub fn trace_map_t(sigma: &[usize], alphas: &[ExactMatrix]) -> Result<Rational> {
    if sigma.len() != alphas.len() || !is_perm(sigma) {
        return Err(Error::SizeMismatch(format!("permutation of {} points with {} matrices", sigma.len(), alphas.len())));
    }
    let n = alphas.first().map_or(0, ExactMatrix::rows);
    if alphas.iter().any(|a| a.rows() != n || a.cols() != n) {
        return Err(Error::SizeMismatch("matrices must all be square of one size".into()));
    }
    let mut out = q(1);
    for cyc in cycles(sigma) {
        let mut prod = alphas[cyc[0]].clone();
        for &k in &cyc[1..] {
            prod = prod.mul(&alphas[k]);
        }
        out *= (0..n).map(|i| prod.get(i, i)).fold(Rational::zero(), |s, x| s + x);
    }
    Ok(out)
}

/// `E_ab` as an `n × n` matrix, zero-based.
pub fn matrix_unit(n: usize, a: usize, b: usize) -> ExactMatrix {
    ExactMatrix::from_triplets(n, n, [(a, b, q(1))])
}

/// `T^*(E_{a_1 b_1}, ..., E_{a_k b_k}) = Σ_σ T(σ)(...) σ` over `S_k`, for
/// zero-based index pairs below `n`. Zero coefficients are dropped.
pub fn t_star(units: &[(usize, usize)], n: usize) -> Result<BTreeMap<Perm, Rational>> {
    if let Some((a, b)) = units.iter().find(|(a, b)| *a >= n || *b >= n) {
        return Err(Error::SizeMismatch(format!("matrix unit E_{a}{b} outside {n} x {n}")));
    }
    let alphas: Vec<ExactMatrix> = units.iter().map(|&(a, b)| matrix_unit(n, a, b)).collect();
    let mut out = BTreeMap::new();
    for sigma in (0..units.len()).permutations(units.len()) {
        let c = trace_map_t(&sigma, &alphas)?;
        if !c.is_zero() {
            out.insert(sigma, c);
        }
    }
    Ok(out)
}

/// `σ ∘ ω^{-1}` read left to right: first `σ`, then `ω^{-1}`.
pub fn t_star_expected(omega: &[usize], sigma: &[usize]) -> Perm {
    let mut inv = vec![0; omega.len()];
    for (i, &w) in omega.iter().enumerate() {
        inv[w] = i;
    }
    sigma.iter().map(|&s| inv[s]).collect()
}

/// `dim (gl_N^{⊗n})_{gl_N}` by exact rank, against `n!`.
pub fn invariant_dim_check(n: usize, big_n: usize) -> (usize, usize) {
    let nn = big_n * big_n;
    let ambient = nn.pow(n as u32);
    let digits = |mut v: usize| -> Vec<usize> {
        let mut d = vec![0; n];
        for slot in d.iter_mut().rev() {
            *slot = v % nn;
            v /= nn;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, x| acc * nn + x);
    let mut relations = Vec::new();
    for a in 0..big_n {
        for b in 0..big_n {
            for v in 0..ambient {
                let d = digits(v);
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for p in 0..n {
                    let (c, e) = (d[p] / big_n, d[p] % big_n);
                    // [E_ab, E_ce] = δ_bc E_ae - δ_ea E_cb
                    let mut w = d.clone();
                    if b == c {
                        w[p] = a * big_n + e;
                        *acc.entry(encode(&w)).or_insert_with(Rational::zero) += q(1);
                    }
                    if e == a {
                        w[p] = c * big_n + b;
                        *acc.entry(encode(&w)).or_insert_with(Rational::zero) -= q(1);
                    }
                }
                let rel: SparseVec<Rational> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !rel.is_empty() {
                    relations.push(rel);
                }
            }
        }
    }
    let lhs = crate::linalg::Quotient::new(ambient, relations).dim();
    (lhs, (1..=n).product())
}

/// Bigraded dimensions of the free graded commutative algebra on
/// `HC_n(A_v)` at `(n+1, 0)`, `F_ℓ` at `(j, len ℓ)` and `F_ρ` at `(j, n+2)`.
pub fn rhs_generators(dq: &DecoratedQuiver, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    let mut gens = BigradedDims::new();
    for a in &dq.vertex_algebras {
        if caps.degree >= 1 {
            let c = connes_complex(a, &SeparableIdempotent::trivial(a), Caps::new(caps.degree - 1, caps.weight), field)?;
            for ((n, w), k) in homology_dims_in(&c, caps.degree - 1, field)?.iter() {
                if n >= 0 {
                    gens.add(n + 1, w, k);
                }
            }
        }
    }
    for cyc in enumerate_cycles(dq.quiver(), caps.weight as usize) {
        gens.merge(&cycle_local_dims(dq, &cyc, caps, field)?);
    }
    if !dq.framed.plus.is_empty() && !dq.framed.minus.is_empty() && caps.weight >= 2 {
        for p in enumerate_framed_paths(&dq.framed, caps.weight as usize - 2) {
            gens.merge(&path_local_dims(dq, &p, caps, field)?);
        }
    }
    Ok(gens.restricted(caps.degree, caps.weight))
}

pub fn rhs_dims(dq: &DecoratedQuiver, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    sym_algebra_dims(&rhs_generators(dq, caps, field)?, caps.degree, caps.weight)
}

/// Cell-by-cell comparison of Lie algebra homology of `gl_N(A_Q)` with the
/// free algebra on Hochschild-side generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n: usize,
    pub degree_cap: i64,
    pub weight_cap: u32,
    pub stable_degree: i64,
    pub cells: Vec<Cell>,
}

impl ComparisonReport {
    /// No mismatch among the cells inside the stable range.
    pub fn matches(&self) -> bool {
        self.cells.iter().all(|c| c.verdict != Verdict::Mismatch)
    }

    pub fn outside_stable_range(&self) -> usize {
        self.cells.iter().filter(|c| c.verdict == Verdict::OutsideStableRange).count()
    }
}

/// Lie algebra homology of `gl_N(A_Q)` per `(degree, weight)`.
pub fn lie_homology(dq: &DecoratedQuiver, n: usize, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    let ld = LieData::from_quiver(dq, n)?;
    let ce = ce_complex_with(&ld, caps, CeReduction::TorusWeyl)?;
    homology_dims_in(&ce.complex, caps.degree, field)
}

/// Compares both sides on degrees `0..=caps.degree`; degrees above
/// `stable_degree` (default `n`) are annotated, not judged.
pub fn verify_lqt(dq: &DecoratedQuiver, n: usize, caps: Caps, stable_degree: Option<i64>, field: FieldMode) -> Result<ComparisonReport> {
    let stable = stable_degree.unwrap_or(n as i64);
    let lhs = lie_homology(dq, n, caps, field)?;
    let rhs = rhs_dims(dq, caps, field)?;
    let cells = compare_cells(&lhs, &rhs, 0..=caps.degree, caps.weight, Some(stable));
    Ok(ComparisonReport { n, degree_cap: caps.degree, weight_cap: caps.weight, stable_degree: stable, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Bimodule, OneSidedModule};
    use crate::complexes::homology_dims;
    use crate::quiver::{FramedQuiver, Quiver};

    fn point(a: Algebra) -> DecoratedQuiver {
        DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[]).unwrap(), vec![a], vec![])
    }

    fn jordan() -> DecoratedQuiver {
        DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap(), vec![Algebra::ground()], vec![Bimodule::ground()])
    }

    fn framed_bare() -> DecoratedQuiver {
        DecoratedQuiver {
            framed: FramedQuiver { quiver: Quiver::new(vec!["v".into()], &[]).unwrap(), plus: vec![("w+".into(), 0)], minus: vec![("w-".into(), 0)] },
            vertex_algebras: vec![Algebra::ground()],
            edge_modules: vec![],
            plus_modules: vec![OneSidedModule::ground(Side::Right)],
            minus_modules: vec![OneSidedModule::ground(Side::Left)],
        }
    }

    fn by_degree(d: &BigradedDims, cap: i64) -> Vec<usize> {
        (0..=cap).map(|n| d.iter().filter(|((m, _), _)| *m == n).map(|(_, k)| k).sum()).collect()
    }

    #[test]
    fn gl_over_ground() {
        let gl1 = LieData::gl(&Algebra::ground(), 1);
        assert_eq!(by_degree(&homology_dims(&ce_complex(&gl1, Caps::degree(1)).unwrap(), 1).unwrap(), 1), vec![1, 1]);
        let gl2 = LieData::gl(&Algebra::ground(), 2);
        assert!(gl2.validate().is_empty());
        assert_eq!(by_degree(&homology_dims(&ce_complex(&gl2, Caps::degree(3)).unwrap(), 3).unwrap(), 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn reductions_agree() {
        let gl2 = LieData::gl(&Algebra::ground(), 2);
        for r in [CeReduction::Torus, CeReduction::TorusWeyl] {
            let c = ce_complex_with(&gl2, Caps::degree(4), r).unwrap();
            assert_eq!(by_degree(&homology_dims(&c.complex, 4).unwrap(), 4), vec![1, 1, 0, 1, 1]);
        }
    }

    #[test]
    fn quiver_lie_algebras_are_lie() {
        for dq in [jordan(), framed_bare(), point(Algebra::dual_numbers())] {
            let ld = LieData::from_quiver(&dq, 2).unwrap();
            assert_eq!(ld.validate(), Vec::<String>::new());
        }
    }

    #[test]
    fn jordan_n1_weight_one() {
        // gl_1 ⋉ k[-1]: even generator y of weight 1 and odd x with d(x y) = ±[x, a] = 0
        let ld = LieData::from_quiver(&jordan(), 1).unwrap();
        let h = homology_dims(&ce_complex(&ld, Caps::new(1, 1)).unwrap(), 1).unwrap();
        assert_eq!(h.get(0, 1), 1);
        assert_eq!(h.get(1, 1), 1);
    }

    #[test]
    fn adjoint_coinvariants_of_gl() {
        for n in [2, 3] {
            let ld = LieData::gl(&Algebra::ground(), n);
            let ce = ce_complex_with(&ld, Caps::degree(1), CeReduction::None).unwrap();
            let act = adjoint_action(&ld, &ce).unwrap();
            let red = gl_coinvariant_reduce(&ce.complex, &act).unwrap();
            assert_eq!(red.dim(1), 1);
        }
        let ld = LieData::gl(&Algebra::ground(), 2);
        let ce = ce_complex_with(&ld, Caps::degree(3), CeReduction::None).unwrap();
        let red = gl_coinvariant_reduce(&ce.complex, &adjoint_action(&ld, &ce).unwrap()).unwrap();
        assert_eq!(homology_dims(&red, 3).unwrap(), homology_dims(&ce.complex, 3).unwrap());
        assert_eq!(gl_coinvariant_reduce(&ce.complex, &[]).unwrap().dim(2), ce.complex.dim(2));
    }

    #[test]
    fn trace_map_examples() {
        let e = |a, b| matrix_unit(2, a, b);
        assert_eq!(trace_map_t(&[1, 0], &[e(0, 0), e(0, 0)]).unwrap(), q(1));
        assert_eq!(trace_map_t(&[1, 0], &[e(0, 1), e(0, 1)]).unwrap(), q(0));
        let a = ExactMatrix::from_dense(&[vec![1, 2], vec![3, 4]]);
        let b = ExactMatrix::from_dense(&[vec![0, 1], vec![5, -2]]);
        assert_eq!(trace_map_t(&[0, 1], &[a.clone(), b.clone()]).unwrap(), q(5 * -2));
        assert!(matches!(trace_map_t(&[0], &[a, b]), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn t_star_examples() {
        let one = |p: Perm| BTreeMap::from([(p, q(1))]);
        assert_eq!(t_star(&[(0, 0), (1, 1)], 2).unwrap(), one(vec![0, 1]));
        assert_eq!(t_star(&[(0, 1), (1, 0)], 2).unwrap(), one(vec![1, 0]));
        assert_eq!(t_star(&[(0, 0), (0, 0)], 2).unwrap(), BTreeMap::from([(vec![0, 1], q(1)), (vec![1, 0], q(1))]));
        for omega in (0..3).permutations(3) {
            for sigma in (0..3).permutations(3) {
                let units: Vec<(usize, usize)> = (0..3).map(|i| (omega[i], sigma[i])).collect();
                assert_eq!(t_star(&units, 3).unwrap(), one(t_star_expected(&omega, &sigma)));
            }
        }
    }

    #[test]
    fn invariant_dims() {
        assert_eq!(invariant_dim_check(1, 1), (1, 1));
        assert_eq!(invariant_dim_check(2, 2), (2, 2));
        assert_eq!(invariant_dim_check(2, 3), (2, 2));
        assert_eq!(invariant_dim_check(3, 3), (6, 6));
        assert!(invariant_dim_check(2, 1).0 < 2);
    }

    #[test]
    fn rhs_examples() {
        let r = rhs_dims(&point(Algebra::ground()), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(by_degree(&r, 3), vec![1, 1, 0, 1]);
        let g = rhs_generators(&jordan(), Caps::new(3, 2), FieldMode::Rational).unwrap();
        assert_eq!(g.get(0, 1), 1);
        assert_eq!(g.get(0, 2), 1);
        let g = rhs_generators(&framed_bare(), Caps::new(2, 2), FieldMode::Rational).unwrap();
        assert_eq!(g.get(0, 2), 1);
    }

    #[test]
    fn point_matches() {
        let r = verify_lqt(&point(Algebra::ground()), 3, Caps::degree(3), None, FieldMode::Rational).unwrap();
        assert!(r.matches(), "{r:?}");
        let r = verify_lqt(&point(Algebra::ground()), 1, Caps::degree(3), None, FieldMode::Rational).unwrap();
        assert!(r.outside_stable_range() > 0);
    }

    #[test]
    fn framed_vertex_matches() {
        let r = verify_lqt(&framed_bare(), 2, Caps::new(2, 2), None, FieldMode::Rational).unwrap();
        assert!(r.matches(), "{r:?}");
    }

    #[test]
    fn jordan_small_matches() {
        let r = verify_lqt(&jordan(), 2, Caps::new(2, 2), None, FieldMode::Rational).unwrap();
        assert!(r.matches(), "{r:?}");
    }
}
