//! Exact linear algebra over `Q` or `F_p`.
//!
//! Every matrix in the crate stores arbitrary-precision rationals. Ranks can be
//! taken either over `Q` (the default) or after reduction modulo a prime, which
//! is only meant for speed experiments.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Prime used by `FieldMode::Prime` when none is given.
pub const DEFAULT_PRIME: u64 = 1_000_003;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3/4"` and similar into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldMode {
    #[default]
    Rational,
    Prime { p: u64 },
}

impl FieldMode {
    pub fn is_char_zero(&self) -> bool {
        matches!(self, FieldMode::Rational)
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "Q"),
            FieldMode::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// A scalar of the configured ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    Prime { value: u64, p: u64 },
}

impl FieldElement {
    pub fn from_rational(x: &Rational, mode: FieldMode) -> Result<Self> {
        match mode {
            FieldMode::Rational => Ok(FieldElement::Rational(x.clone())),
            FieldMode::Prime { p } => {
                let field = PrimeField { p };
                Ok(FieldElement::Prime { value: field.embed(x)?, p })
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(x) => x.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    fn binary(&self, other: &Self, qop: fn(&Rational, &Rational) -> Rational, pop: fn(u64, u64, u64) -> u64) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(qop(a, b)),
            (FieldElement::Prime { value: a, p }, FieldElement::Prime { value: b, p: p2 }) if p == p2 => {
                FieldElement::Prime { value: pop(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed field elements {self:?} and {other:?}"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a + b, |a, b, p| (a + b) % p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a * b, |a, b, p| a * b % p)
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(a) if a.is_zero() => Err(Error::DivisionByZero),
            FieldElement::Rational(a) => Ok(FieldElement::Rational(a.recip())),
            FieldElement::Prime { value: 0, .. } => Err(Error::DivisionByZero),
            FieldElement::Prime { value, p } => Ok(FieldElement::Prime { value: PrimeField { p: *p }.inv(value), p: *p }),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Arithmetic used by the elimination kernels.
pub(crate) trait Field {
    type E: Clone + fmt::Debug;
    fn embed(&self, x: &Rational) -> Result<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn zero(&self) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

pub(crate) struct RationalField;

impl Field for RationalField {
    type E = Rational;
    fn embed(&self, x: &Rational) -> Result<Rational> {
        Ok(x.clone())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
}

pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    fn reduce(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        r.try_into().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type E = u64;
    fn embed(&self, x: &Rational) -> Result<u64> {
        let d = self.reduce(x.denom());
        if d == 0 {
            return Err(Error::NotInvertibleModP(x.denom().to_string(), self.p));
        }
        Ok(self.reduce(x.numer()) * self.inv(&d) % self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn zero(&self) -> u64 {
        0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        self.pow(*a, self.p - 2)
    }
}

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `x - c * y` for sparse vectors.
fn axpy<F: Field>(f: &F, x: &SparseVec<F::E>, c: &F::E, y: &SparseVec<F::E>) -> SparseVec<F::E> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = f.sub(&f.zero(), &f.mul(c, &y[j].1));
            out.push((y[j].0, v));
            j += 1;
        } else {
            let v = f.sub(&x[i].1, &f.mul(c, &y[j].1));
            if !f.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built echelon basis; pivot vectors are normalized so that
/// their leading entry is one.
pub(crate) struct Echelon<F: Field> {
    field: F,
    pivots: HashMap<usize, SparseVec<F::E>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivots.contains_key(&i)
    }

    /// Eliminates leading entries until the lead is not a pivot.
    fn reduce_lead(&self, mut v: SparseVec<F::E>) -> SparseVec<F::E> {
        while let Some((lead, c)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(b) => v = axpy(&self.field, &v, &c, b),
                None => break,
            }
        }
        v
    }

    /// Returns `true` if `v` was independent of the basis so far.
    pub fn insert(&mut self, v: SparseVec<F::E>) -> bool {
        let v = self.reduce_lead(v);
        let Some((lead, c)) = v.first().cloned() else {
            return false;
        };
        let inv = self.field.inv(&c);
        let v: SparseVec<F::E> = v.into_iter().map(|(i, x)| (i, self.field.mul(&x, &inv))).collect();
        self.pivots.insert(lead, v);
        true
    }

    /// Reduces `v` to the representative with zero entries at every pivot
    /// coordinate.
    pub fn reduce_full(&self, mut v: SparseVec<F::E>) -> SparseVec<F::E> {
        let mut pos = 0;
        while pos < v.len() {
            let (idx, c) = v[pos].clone();
            match self.pivots.get(&idx) {
                Some(b) => {
                    // b has no entries below idx, so everything before pos is untouched
                    v = axpy(&self.field, &v, &c, b);
                }
                None => pos += 1,
            }
        }
        v
    }
}

/// Sparse matrix with exact rational entries, stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<Rational>>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(24) {
            let row: Vec<String> = (0..self.cols.min(24)).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        ExactMatrix { rows: n, cols: n, columns }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut acc: Vec<HashMap<usize, Rational>> = vec![HashMap::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            *acc[c].entry(r).or_insert_with(Rational::zero) += v;
        }
        let columns = acc.into_iter().map(normalize_map).collect();
        ExactMatrix { rows, cols, columns }
    }

    /// Builds a matrix from column vectors given as `(row, value)` lists.
    pub fn from_columns(rows: usize, cols: Vec<Vec<(usize, Rational)>>) -> Self {
        let n = cols.len();
        let triplets = cols.into_iter().enumerate().flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        Self::from_triplets(rows, n, triplets)
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            row.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(c, v)| (r, c, q(*v)))
        });
        Self::from_triplets(nrows, ncols, triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.columns[c].binary_search_by_key(&r, |e| e.0) {
            Ok(i) => self.columns[c][i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn mul(&self, other: &ExactMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: HashMap<usize, Rational> = HashMap::new();
                for (k, b) in col {
                    for (r, a) in &self.columns[*k] {
                        *acc.entry(*r).or_insert_with(Rational::zero) += a * b;
                    }
                }
                normalize_map(acc)
            })
            .collect();
        ExactMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn apply(&self, v: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (k, b) in v {
            for (r, a) in &self.columns[*k] {
                *acc.entry(*r).or_insert_with(Rational::zero) += a * b;
            }
        }
        normalize_map(acc)
    }

    pub fn add(&self, other: &ExactMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_triplets(self.rows, self.cols, self.entries().chain(other.entries()).map(|(r, c, v)| (r, c, v.clone())))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_triplets(self.rows, self.cols, self.entries().map(|(r, c, v)| (r, c, v * s)))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (i, r) in rows.iter().enumerate() {
            row_pos[*r] = i;
        }
        let columns = cols
            .iter()
            .map(|c| {
                let mut col: Vec<_> = self.columns[*c]
                    .iter()
                    .filter(|(r, _)| row_pos[*r] != usize::MAX)
                    .map(|(r, v)| (row_pos[*r], v.clone()))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        ExactMatrix { rows: rows.len(), cols: cols.len(), columns }
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        self.rank_in(FieldMode::Rational).expect("rational rank cannot fail")
    }

    /// Rank over the configured field. Fails in `F_p` mode if an entry has a
    /// denominator divisible by `p`.
    pub fn rank_in(&self, mode: FieldMode) -> Result<usize> {
        match mode {
            FieldMode::Rational => rank_generic(RationalField, self),
            FieldMode::Prime { p } => rank_generic(PrimeField { p }, self),
        }
    }

    /// Columns spanning the kernel over `Q`, in reduced form.
    pub fn kernel_basis(&self) -> ExactMatrix {
        // reduced row echelon form of the rows
        let mut rows: Vec<SparseVec<Rational>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            rows[r].push((c, v.clone()));
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|e| e.0);
        }
        let mut ech = Echelon::new(RationalField);
        for row in rows {
            ech.insert(row);
        }
        let mut pivot_rows: Vec<(usize, SparseVec<Rational>)> =
            ech.pivots.keys().map(|k| (*k, ech.reduce_full_except(*k))).collect();
        pivot_rows.sort_by_key(|e| e.0);
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.is_pivot(*c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for f in &free {
            let mut col = vec![(*f, Rational::one())];
            for (p, row) in &pivot_rows {
                if let Ok(i) = row.binary_search_by_key(f, |e| e.0) {
                    col.push((*p, -row[i].1.clone()));
                }
            }
            col.sort_by_key(|e| e.0);
            basis.push(col);
        }
        ExactMatrix::from_columns(self.cols, basis)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        let n = self.rows;
        if self.cols != n {
            return None;
        }
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n).map(|r| (0..n).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect()).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let (x, y) = (&a[col][c] * &f, &inv[col][c] * &f);
                        a[r][c] -= x;
                        inv[r][c] -= y;
                    }
                }
            }
        }
        Some(ExactMatrix::from_triplets(n, n, (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).map(|(r, c)| (r, c, inv[r][c].clone()))))
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&ExactMatrix]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let mut columns = Vec::new();
        for b in blocks {
            assert_eq!(b.rows, rows);
            columns.extend(b.columns.iter().cloned());
        }
        ExactMatrix { rows, cols: columns.len(), columns }
    }
}

impl Echelon<RationalField> {
    /// Fully reduced pivot row `k` (zero at all other pivot columns).
    fn reduce_full_except(&self, k: usize) -> SparseVec<Rational> {
        let v = self.pivots[&k].clone();
        let (head, tail) = v.split_at(1);
        let mut out = head.to_vec();
        out.extend(self.reduce_full(tail.to_vec()));
        out
    }
}

fn normalize_map(m: HashMap<usize, Rational>) -> SparseVec<Rational> {
    let mut v: Vec<_> = m.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_by_key(|e| e.0);
    v
}

fn rank_generic<F: Field>(field: F, m: &ExactMatrix) -> Result<usize> {
    // eliminate along the smaller dimension, sparsest vectors first
    let source = if m.rows < m.cols { m.transpose() } else { m.clone() };
    let mut vecs: Vec<SparseVec<F::E>> = Vec::with_capacity(source.cols);
    for col in &source.columns {
        if col.is_empty() {
            continue;
        }
        let mut v = Vec::with_capacity(col.len());
        for (r, x) in col {
            let e = field.embed(x)?;
            if !field.is_zero(&e) {
                v.push((*r, e));
            }
        }
        vecs.push(v);
    }
    vecs.sort_by_key(|v| v.len());
    let mut ech = Echelon::new(field);
    let limit = source.rows.min(source.cols);
    for v in vecs {
        if ech.rank() == limit {
            break;
        }
        ech.insert(v);
    }
    Ok(ech.rank())
}

/// `dim ker(d_out) - rank(d_in)` after checking `d_out * d_in = 0`.
pub fn homology_dim(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<usize> {
    homology_dim_in(d_in, d_out, FieldMode::Rational, 0)
}

pub fn homology_dim_in(d_in: &ExactMatrix, d_out: &ExactMatrix, mode: FieldMode, degree: i64) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing differential has {} columns, incoming has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::CompositionNonzero { degree });
    }
    let kernel = d_out.cols() - d_out.rank_in(mode)?;
    Ok(kernel - d_in.rank_in(mode)?)
}

/// Projection of a coordinate space onto its quotient by a subspace, using
/// the non-pivot coordinates of a reduced echelon basis of the subspace as
/// the quotient basis.
pub struct Quotient {
    ambient: usize,
    echelon: Echelon<RationalField>,
    kept: Vec<usize>,
    position: Vec<usize>,
}

impl Quotient {
    pub fn new(ambient: usize, relations: impl IntoIterator<Item = SparseVec<Rational>>) -> Self {
        let mut echelon = Echelon::new(RationalField);
        for r in relations {
            debug_assert!(r.iter().all(|(i, _)| *i < ambient));
            echelon.insert(r);
        }
        let kept: Vec<usize> = (0..ambient).filter(|i| !echelon.is_pivot(*i)).collect();
        let mut position = vec![usize::MAX; ambient];
        for (k, i) in kept.iter().enumerate() {
            position[*i] = k;
        }
        Quotient { ambient, echelon, kept, position }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    /// Ambient coordinates whose images form the quotient basis.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: SparseVec<Rational>) -> SparseVec<Rational> {
        self.echelon
            .reduce_full(v)
            .into_iter()
            .map(|(i, x)| (self.position[i], x))
            .collect()
    }

    /// Matrix of the projection, `dim x ambient`.
    pub fn projection_matrix(&self) -> ExactMatrix {
        let cols = (0..self.ambient).map(|i| self.project(vec![(i, Rational::one())])).collect();
        ExactMatrix::from_columns(self.dim(), cols)
    }

    /// Matrix of the section sending each quotient basis vector to its kept
    /// ambient coordinate, `ambient x dim`.
    pub fn section_matrix(&self) -> ExactMatrix {
        let cols = self.kept.iter().map(|i| vec![(*i, Rational::one())]).collect();
        ExactMatrix::from_columns(self.ambient, cols)
    }

    /// Whether `v` lies in the subspace being divided out.
    pub fn contains(&self, v: SparseVec<Rational>) -> bool {
        self.echelon.reduce_full(v).is_empty()
    }
}

/// Induced map `target_q ∘ map ∘ section(source_q)` between quotients.
/// Fails if `map` does not send the source relations into the target ones.
pub fn induced_map(map: &ExactMatrix, source: &Quotient, target: &Quotient, source_relations: &[SparseVec<Rational>]) -> Option<ExactMatrix> {
    for r in source_relations {
        if !target.contains(map.apply(r)) {
            return None;
        }
    }
    Some(induced_map_unchecked(map, source, target))
}

pub fn induced_map_unchecked(map: &ExactMatrix, source: &Quotient, target: &Quotient) -> ExactMatrix {
    let cols = source.kept().iter().map(|k| target.project(map.column(*k).to_vec())).collect();
    ExactMatrix::from_columns(target.dim(), cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(ExactMatrix::from_dense(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(ExactMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(ExactMatrix::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(ExactMatrix::identity(2).kernel_basis().cols(), 0);
        assert_eq!(ExactMatrix::zeros(2, 2).kernel_basis().cols(), 2);
        let m = ExactMatrix::from_dense(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // span of (1, -1)
        assert_eq!(k.get(0, 0), -k.get(1, 0));
    }

    #[test]
    fn homology_dim_examples() {
        let zero = ExactMatrix::zeros(1, 1);
        assert_eq!(homology_dim(&zero, &zero).unwrap(), 1);
        assert_eq!(homology_dim(&ExactMatrix::identity(1), &zero).unwrap(), 0);
        let d = ExactMatrix::identity(1);
        assert!(matches!(homology_dim(&d, &d), Err(Error::CompositionNonzero { .. })));
    }

    #[test]
    fn prime_mode_rank_and_bad_denominator() {
        let m = ExactMatrix::from_dense(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.rank_in(FieldMode::Prime { p: DEFAULT_PRIME }).unwrap(), 2);
        // det = -2 vanishes mod 2
        assert_eq!(m.rank_in(FieldMode::Prime { p: 2 }).unwrap(), 1);
        let bad = ExactMatrix::from_triplets(1, 1, [(0, 0, q_frac(1, 7))]);
        assert!(bad.rank_in(FieldMode::Prime { p: 7 }).is_err());
    }

    #[test]
    fn field_element_arithmetic() {
        let a = FieldElement::from_rational(&q_frac(1, 2), FieldMode::Prime { p: 7 }).unwrap();
        let two = FieldElement::from_rational(&q(2), FieldMode::Prime { p: 7 }).unwrap();
        assert_eq!(a.mul(&two), FieldElement::Prime { value: 1, p: 7 });
        assert_eq!(FieldElement::Rational(q(0)).inv(), Err(Error::DivisionByZero));
        assert_eq!(FieldElement::Prime { value: 0, p: 7 }.inv(), Err(Error::DivisionByZero));
        let r = FieldElement::Rational(q(3)).div(&FieldElement::Rational(q(4))).unwrap();
        assert_eq!(r, FieldElement::Rational(q_frac(3, 4)));
        assert_eq!(a.sub(&a).is_zero(), true);
        assert_eq!(a.add(&a), FieldElement::Prime { value: 1, p: 7 });
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/4"), Some(q_frac(3, 4)));
        assert_eq!(parse_rational("-2"), Some(q(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn quotient_projection() {
        // R^3 / span(e0 - e1)
        let quo = Quotient::new(3, vec![vec![(0, q(1)), (1, q(-1))]]);
        assert_eq!(quo.dim(), 2);
        assert_eq!(quo.project(vec![(0, q(1))]), quo.project(vec![(1, q(1))]));
        assert!(quo.contains(vec![(0, q(2)), (1, q(-2))]));
        let p = quo.projection_matrix();
        assert!(p.mul(&quo.section_matrix()) == ExactMatrix::identity(2));
    }
}
