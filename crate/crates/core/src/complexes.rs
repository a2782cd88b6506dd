//! Based graded spaces, chain complexes, multicomplexes and quotients of them.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{induced_map_unchecked, ExactMatrix, FieldMode, Quotient, Rational, SparseVec};

/// Basis element of a [`BasedSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub name: String,
    pub degree: i64,
    pub weight: u32,
}

impl Label {
    pub fn new(name: impl Into<String>, degree: i64, weight: u32) -> Self {
        Label { name: name.into(), degree, weight }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasedSpace {
    labels: Vec<Label>,
    index: HashMap<String, usize>,
}

impl BasedSpace {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.name.clone(), i).is_some() {
                return Err(Error::Internal(format!("duplicate basis label `{}`", l.name)));
            }
        }
        Ok(BasedSpace { labels, index })
    }

    pub fn empty() -> Self {
        BasedSpace::default()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// The shift `V[k]`: every internal degree goes up by `k`.
    pub fn shift(&self, k: i64) -> BasedSpace {
        let labels = self.labels.iter().map(|l| Label { degree: l.degree + k, ..l.clone() }).collect();
        BasedSpace { labels, index: self.index.clone() }
    }

    /// Indices of basis elements, grouped by weight.
    pub fn weight_blocks(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut blocks: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, l) in self.labels.iter().enumerate() {
            blocks.entry(l.weight).or_default().push(i);
        }
        blocks
    }

    fn restrict(&self, kept: &[usize]) -> BasedSpace {
        BasedSpace::new(kept.iter().map(|i| self.labels[*i].clone()).collect()).expect("labels stay unique")
    }
}

/// Dimensions indexed by `(homological degree, weight)`; zero cells are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedDims(BTreeMap<(i64, u32), usize>);

impl BigradedDims {
    pub fn new() -> Self {
        BigradedDims::default()
    }

    pub fn get(&self, degree: i64, weight: u32) -> usize {
        self.0.get(&(degree, weight)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: i64, weight: u32, n: usize) {
        if n > 0 {
            *self.0.entry((degree, weight)).or_insert(0) += n;
        }
    }

    pub fn merge(&mut self, other: &BigradedDims) {
        for ((d, w), n) in other.iter() {
            self.add(d, w, n);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, u32), usize)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total dimension in each degree, summed over weights.
    pub fn by_degree(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|d| self.0.iter().filter(|((dd, _), _)| *dd == d).map(|(_, n)| *n).sum()).collect()
    }

    /// Shifts every degree by `k`.
    pub fn shifted(&self, k: i64) -> BigradedDims {
        BigradedDims(self.0.iter().map(|((d, w), n)| ((d + k, *w), *n)).collect())
    }

    pub fn restricted(&self, max_degree: i64, max_weight: u32) -> BigradedDims {
        BigradedDims(self.0.iter().filter(|((d, w), _)| *d <= max_degree && *w <= max_weight).map(|(k, v)| (*k, *v)).collect())
    }
}

impl FromIterator<((i64, u32), usize)> for BigradedDims {
    fn from_iter<T: IntoIterator<Item = ((i64, u32), usize)>>(iter: T) -> Self {
        let mut out = BigradedDims::new();
        for ((d, w), n) in iter {
            out.add(d, w, n);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    OutsideStableRange,
}

/// One `(degree, weight)` cell of a two-sided comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub degree: i64,
    pub weight: u32,
    pub lhs: usize,
    pub rhs: usize,
    pub verdict: Verdict,
}

/// Cell-by-cell comparison on `degrees x 0..=max_weight`. Degrees above
/// `stable_degree` are annotated instead of judged.
pub fn compare_cells(
    lhs: &BigradedDims,
    rhs: &BigradedDims,
    degrees: std::ops::RangeInclusive<i64>,
    max_weight: u32,
    stable_degree: Option<i64>,
) -> Vec<Cell> {
    let mut out = Vec::new();
    for degree in degrees {
        for weight in 0..=max_weight {
            let (l, r) = (lhs.get(degree, weight), rhs.get(degree, weight));
            let verdict = match stable_degree {
                Some(s) if degree > s => Verdict::OutsideStableRange,
                _ if l == r => Verdict::Match,
                _ => Verdict::Mismatch,
            };
            out.push(Cell { degree, weight, lhs: l, rhs: r, verdict });
        }
    }
    out
}

/// Chain complex on a contiguous degree range `lo..=hi`. The differential
/// `d_n` goes from degree `n` to degree `n - 1` (the space below `lo` is zero).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    spaces: Vec<BasedSpace>,
    differentials: Vec<ExactMatrix>,
}

impl ChainComplex {
    /// Checks shapes, `d² = 0` and weight preservation.
    pub fn new(lo: i64, spaces: Vec<BasedSpace>, differentials: Vec<ExactMatrix>) -> Result<Self> {
        if spaces.len() != differentials.len() {
            return Err(Error::DimensionMismatch(format!("{} spaces but {} differentials", spaces.len(), differentials.len())));
        }
        for (i, d) in differentials.iter().enumerate() {
            let below = if i == 0 { 0 } else { spaces[i - 1].dim() };
            if d.cols() != spaces[i].dim() || d.rows() != below {
                return Err(Error::DimensionMismatch(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    lo + i as i64,
                    d.rows(),
                    d.cols(),
                    below,
                    spaces[i].dim()
                )));
            }
            for (r, c, _) in d.entries() {
                if spaces[i - 1].labels[r].weight != spaces[i].labels[c].weight {
                    return Err(Error::Internal(format!("d_{} does not preserve weight", lo + i as i64)));
                }
            }
            if i > 0 && !differentials[i - 1].mul(d).is_zero() {
                return Err(Error::CompositionNonzero { degree: lo + i as i64 });
            }
        }
        Ok(ChainComplex { lo, spaces, differentials })
    }

    /// Complex with every differential zero.
    pub fn with_zero_differential(lo: i64, spaces: Vec<BasedSpace>) -> Self {
        let differentials = spaces
            .iter()
            .enumerate()
            .map(|(i, s)| ExactMatrix::zeros(if i == 0 { 0 } else { spaces[i - 1].dim() }, s.dim()))
            .collect();
        ChainComplex { lo, spaces, differentials }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree that was built.
    pub fn hi(&self) -> i64 {
        self.lo + self.spaces.len() as i64 - 1
    }

    pub fn space(&self, n: i64) -> Option<&BasedSpace> {
        if n < self.lo {
            return None;
        }
        self.spaces.get((n - self.lo) as usize)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.space(n).map_or(0, BasedSpace::dim)
    }

    /// `d_n`, a `dim(n-1) x dim(n)` matrix.
    pub fn differential(&self, n: i64) -> ExactMatrix {
        if n < self.lo || n > self.hi() {
            return ExactMatrix::zeros(self.dim(n - 1), self.dim(n));
        }
        self.differentials[(n - self.lo) as usize].clone()
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    /// Drops everything above degree `hi`.
    pub fn truncated(&self, hi: i64) -> ChainComplex {
        let keep = ((hi - self.lo + 1).max(0) as usize).min(self.spaces.len());
        ChainComplex { lo: self.lo, spaces: self.spaces[..keep].to_vec(), differentials: self.differentials[..keep].to_vec() }
    }
}

/// Homology dimensions in degrees `lo..=degree_cap`, split by weight.
pub fn homology_dims(c: &ChainComplex, degree_cap: i64) -> Result<BigradedDims> {
    homology_dims_in(c, degree_cap, FieldMode::Rational)
}

pub fn homology_dims_in(c: &ChainComplex, degree_cap: i64, mode: FieldMode) -> Result<BigradedDims> {
    if c.hi() < degree_cap + 1 {
        return Err(Error::InsufficientTruncation { needed: degree_cap + 1, have: c.hi() });
    }
    let mut out = BigradedDims::new();
    // rank of d_n restricted to each weight block, for n in lo..=cap+1
    let mut ranks: BTreeMap<(i64, u32), usize> = BTreeMap::new();
    for n in c.lo()..=degree_cap + 1 {
        let d = c.differential(n);
        let src = c.space(n).expect("degree in range");
        let tgt_blocks = c.space(n - 1).map(BasedSpace::weight_blocks).unwrap_or_default();
        for (w, cols) in src.weight_blocks() {
            let rows = tgt_blocks.get(&w).cloned().unwrap_or_default();
            let r = if rows.is_empty() { 0 } else { d.select(&rows, &cols).rank_in(mode)? };
            ranks.insert((n, w), r);
        }
    }
    for n in c.lo()..=degree_cap {
        for (w, cols) in c.space(n).expect("degree in range").weight_blocks() {
            let kernel = cols.len() - ranks.get(&(n, w)).copied().unwrap_or(0);
            let image = ranks.get(&(n + 1, w)).copied().unwrap_or(0);
            out.add(n, w, kernel - image);
        }
    }
    Ok(out)
}

/// Quotient of `c` by a subcomplex given degreewise by spanning vectors.
/// Fails if the differential does not preserve the relations.
pub fn quotient_complex(c: &ChainComplex, relations: &BTreeMap<i64, Vec<SparseVec<Rational>>>) -> Result<ChainComplex> {
    let empty = Vec::new();
    let quotients: Vec<Quotient> =
        c.degrees().map(|n| Quotient::new(c.dim(n), relations.get(&n).unwrap_or(&empty).iter().cloned())).collect();
    let mut spaces = Vec::new();
    let mut diffs = Vec::new();
    for (i, n) in c.degrees().enumerate() {
        let d = c.differential(n);
        spaces.push(c.space(n).expect("in range").restrict(quotients[i].kept()));
        if i == 0 {
            diffs.push(ExactMatrix::zeros(0, quotients[i].dim()));
            continue;
        }
        for r in relations.get(&n).unwrap_or(&empty) {
            if !quotients[i - 1].contains(d.apply(r)) {
                return Err(Error::ActionNotChainMap { degree: n });
            }
        }
        diffs.push(induced_map_unchecked(&d, &quotients[i], &quotients[i - 1]));
    }
    ChainComplex::new(c.lo(), spaces, diffs)
}

/// Action of a finite group by generators; each generator gives one matrix per
/// degree of the complex it acts on.
#[derive(Clone, Debug, Default)]
pub struct GroupAction {
    pub generators: Vec<BTreeMap<i64, ExactMatrix>>,
}

impl GroupAction {
    pub fn trivial() -> Self {
        GroupAction::default()
    }

    pub fn check_chain_map(&self, c: &ChainComplex) -> Result<()> {
        for g in &self.generators {
            for n in c.degrees() {
                let gn = g.get(&n).cloned().unwrap_or_else(|| ExactMatrix::identity(c.dim(n)));
                let gm = g.get(&(n - 1)).cloned().unwrap_or_else(|| ExactMatrix::identity(c.dim(n - 1)));
                let d = c.differential(n);
                if d.mul(&gn) != gm.mul(&d) {
                    return Err(Error::ActionNotChainMap { degree: n });
                }
            }
        }
        Ok(())
    }
}

/// Degreewise quotient by `span{v - g v}` with the induced differential.
pub fn coinvariant_complex(c: &ChainComplex, a: &GroupAction) -> Result<ChainComplex> {
    a.check_chain_map(c)?;
    let mut relations: BTreeMap<i64, Vec<SparseVec<Rational>>> = BTreeMap::new();
    for g in &a.generators {
        for (n, m) in g {
            let rel = relations.entry(*n).or_default();
            for i in 0..m.cols() {
                let mut v: SparseVec<Rational> = m.column(i).iter().map(|(r, x)| (*r, -x.clone())).collect();
                match v.binary_search_by_key(&i, |e| e.0) {
                    Ok(k) => v[k].1 += Rational::one(),
                    Err(k) => v.insert(k, (i, Rational::one())),
                }
                v.retain(|(_, x)| *x != Rational::from_integer(0.into()));
                if !v.is_empty() {
                    rel.push(v);
                }
            }
        }
    }
    quotient_complex(c, &relations)
}

/// Spaces indexed by integer tuples with one differential per axis. Axis `k`
/// lowers the `k`-th index by one. Axis differentials square to zero and
/// pairwise anticommute, so the total differential is their plain sum.
#[derive(Clone, Debug)]
pub struct Multicomplex {
    axes: usize,
    /// Largest total degree that was built completely.
    built_total: i64,
    spaces: BTreeMap<Vec<i64>, BasedSpace>,
    maps: BTreeMap<(usize, Vec<i64>), ExactMatrix>,
}

impl Multicomplex {
    pub fn new(axes: usize, built_total: i64) -> Self {
        Multicomplex { axes, built_total, spaces: BTreeMap::new(), maps: BTreeMap::new() }
    }

    pub fn axes(&self) -> usize {
        self.axes
    }

    pub fn built_total(&self) -> i64 {
        self.built_total
    }

    pub fn insert_space(&mut self, index: Vec<i64>, space: BasedSpace) {
        assert_eq!(index.len(), self.axes);
        self.spaces.insert(index, space);
    }

    /// Sets the axis differential leaving `index`.
    pub fn insert_map(&mut self, axis: usize, index: Vec<i64>, m: ExactMatrix) {
        self.maps.insert((axis, index), m);
    }

    pub fn space(&self, index: &[i64]) -> Option<&BasedSpace> {
        self.spaces.get(index)
    }

    pub fn indices(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.spaces.keys()
    }

    fn target(index: &[i64], axis: usize) -> Vec<i64> {
        let mut t = index.to_vec();
        t[axis] -= 1;
        t
    }

    /// Axis map leaving `index`, zero if absent or if the target is absent.
    pub fn map(&self, axis: usize, index: &[i64]) -> ExactMatrix {
        let t = Self::target(index, axis);
        let rows = self.spaces.get(&t).map_or(0, BasedSpace::dim);
        let cols = self.spaces.get(index).map_or(0, BasedSpace::dim);
        match self.maps.get(&(axis, index.to_vec())) {
            Some(m) if rows > 0 => m.clone(),
            _ => ExactMatrix::zeros(rows, cols),
        }
    }

    /// Checks `d_k² = 0` and `d_k d_l + d_l d_k = 0` on every built index.
    pub fn validate(&self) -> Result<()> {
        for idx in self.spaces.keys() {
            let total: i64 = idx.iter().sum();
            for k in 0..self.axes {
                let t = Self::target(idx, k);
                for l in 0..self.axes {
                    let a = self.map(l, &t).mul(&self.map(k, idx));
                    let sum = if l == k {
                        a
                    } else {
                        let t2 = Self::target(idx, l);
                        a.add(&self.map(k, &t2).mul(&self.map(l, idx)))
                    };
                    if !sum.is_zero() {
                        return Err(Error::CompositionNonzero { degree: total });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Total complex in degrees up to `cap + 1`.
pub fn total_complex(m: &Multicomplex, cap: i64) -> Result<ChainComplex> {
    if m.built_total < cap + 1 {
        return Err(Error::InsufficientTruncation { needed: cap + 1, have: m.built_total });
    }
    m.validate()?;
    let totals: Vec<i64> = m.spaces.keys().map(|i| i.iter().sum()).collect();
    let lo = totals.iter().copied().min().unwrap_or(0);
    let hi = cap + 1;
    // per total degree: summands in index order with offsets
    let mut layout: BTreeMap<i64, Vec<(Vec<i64>, usize)>> = BTreeMap::new();
    let mut spaces = Vec::new();
    for n in lo..=hi {
        let mut labels = Vec::new();
        let mut parts = Vec::new();
        for (idx, s) in m.spaces.iter().filter(|(i, _)| i.iter().sum::<i64>() == n) {
            parts.push((idx.clone(), labels.len()));
            let tag = idx.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            labels.extend(s.labels().iter().map(|l| Label { name: format!("[{tag}]{}", l.name), ..l.clone() }));
        }
        layout.insert(n, parts);
        spaces.push(BasedSpace::new(labels)?);
    }
    let mut diffs = Vec::new();
    for n in lo..=hi {
        let rows = if n == lo { 0 } else { spaces[(n - 1 - lo) as usize].dim() };
        let cols = spaces[(n - lo) as usize].dim();
        let mut triplets = Vec::new();
        if n > lo {
            let below: HashMap<&Vec<i64>, usize> = layout[&(n - 1)].iter().map(|(i, o)| (i, *o)).collect();
            for (idx, col_off) in &layout[&n] {
                for k in 0..m.axes {
                    let t = Multicomplex::target(idx, k);
                    let Some(row_off) = below.get(&t) else { continue };
                    for (r, c, v) in m.map(k, idx).entries() {
                        triplets.push((row_off + r, col_off + c, v.clone()));
                    }
                }
            }
        }
        diffs.push(ExactMatrix::from_triplets(rows, cols, triplets));
    }
    ChainComplex::new(lo, spaces, diffs)
}

/// Dimensions of the free graded-commutative algebra on the given generators:
/// polynomial on even degrees, exterior on odd degrees.
pub fn sym_algebra_dims(generators: &BigradedDims, degree_cap: i64, weight_cap: u32) -> Result<BigradedDims> {
    if degree_cap < 0 {
        return Ok(BigradedDims::new());
    }
    let (nd, nw) = (degree_cap as usize + 1, weight_cap as usize + 1);
    let mut acc = vec![vec![0u128; nw]; nd];
    acc[0][0] = 1;
    for ((d, w), mult) in generators.iter() {
        if d < 0 {
            return Err(Error::Unbounded(format!("generator in negative degree {d}")));
        }
        if d == 0 && w == 0 {
            return Err(Error::Unbounded("generator of degree 0 and weight 0".into()));
        }
        if d > degree_cap || w > weight_cap {
            continue;
        }
        let (d, w) = (d as usize, w as usize);
        for _ in 0..mult {
            if d % 2 == 0 {
                // times 1/(1 - x^d y^w), ascending so earlier cells are already updated
                for i in d..nd {
                    for j in w..nw {
                        acc[i][j] += acc[i - d][j - w];
                    }
                }
            } else {
                // times (1 + x^d y^w), descending
                for i in (d..nd).rev() {
                    for j in (w..nw).rev() {
                        acc[i][j] += acc[i - d][j - w];
                    }
                }
            }
        }
    }
    let mut out = BigradedDims::new();
    for (i, row) in acc.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out.add(i as i64, j as u32, *v as usize);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn space(prefix: &str, n: usize, degree: i64) -> BasedSpace {
        BasedSpace::new((0..n).map(|i| Label::new(format!("{prefix}{i}"), degree, 0)).collect()).unwrap()
    }

    #[test]
    fn homology_of_small_complexes() {
        let c = ChainComplex::with_zero_differential(0, vec![space("a", 1, 0), BasedSpace::empty()]);
        let h = homology_dims(&c, 0).unwrap();
        assert_eq!(h.get(0, 0), 1);

        let c = ChainComplex::new(0, vec![space("a", 1, 0), space("b", 1, 1), BasedSpace::empty()], vec![
            ExactMatrix::zeros(0, 1),
            ExactMatrix::identity(1),
            ExactMatrix::zeros(1, 0),
        ])
        .unwrap();
        assert!(homology_dims(&c, 1).unwrap().is_empty());
        assert!(matches!(homology_dims(&c, 2), Err(Error::InsufficientTruncation { .. })));
    }

    #[test]
    fn nonzero_square_is_rejected() {
        let r = ChainComplex::new(0, vec![space("a", 1, 0), space("b", 1, 1), space("c", 1, 2)], vec![
            ExactMatrix::zeros(0, 1),
            ExactMatrix::identity(1),
            ExactMatrix::identity(1),
        ]);
        assert!(matches!(r, Err(Error::CompositionNonzero { degree: 2 })));
    }

    #[test]
    fn swap_coinvariants_with_both_signs() {
        let c = ChainComplex::with_zero_differential(0, vec![space("v", 2, 0), BasedSpace::empty()]);
        let swap = ExactMatrix::from_dense(&[vec![0, 1], vec![1, 0]]);
        let act = GroupAction { generators: vec![BTreeMap::from([(0, swap)])] };
        let quo = coinvariant_complex(&c, &act).unwrap();
        assert_eq!(quo.dim(0), 1);

        let signed = ExactMatrix::from_dense(&[vec![0, -1], vec![-1, 0]]);
        let act = GroupAction { generators: vec![BTreeMap::from([(0, signed.clone())])] };
        let quo = coinvariant_complex(&c, &act).unwrap();
        assert_eq!(quo.dim(0), 1);
        // v0 + v1 is killed by the relation v - g v = v0 + v1
        let rel = vec![(0, q(1)), (1, q(1))];
        assert!(Quotient::new(2, vec![rel.clone()]).contains(rel));

        assert_eq!(coinvariant_complex(&c, &GroupAction::trivial()).unwrap().dim(0), 2);
    }

    #[test]
    fn non_chain_map_action_rejected() {
        let c = ChainComplex::new(0, vec![space("a", 2, 0), space("b", 1, 1), BasedSpace::empty()], vec![
            ExactMatrix::zeros(0, 2),
            ExactMatrix::from_dense(&[vec![1], vec![0]]),
            ExactMatrix::zeros(1, 0),
        ])
        .unwrap();
        let swap = ExactMatrix::from_dense(&[vec![0, 1], vec![1, 0]]);
        let act = GroupAction { generators: vec![BTreeMap::from([(0, swap)])] };
        assert!(matches!(coinvariant_complex(&c, &act), Err(Error::ActionNotChainMap { .. })));
    }

    #[test]
    fn total_of_zero_bicomplex_is_diagonal_sum() {
        let mut m = Multicomplex::new(2, 3);
        for p in 0..=3i64 {
            for q in 0..=(3 - p) {
                m.insert_space(vec![p, q], space(&format!("x{p}{q}_"), 1, p + q));
            }
        }
        let t = total_complex(&m, 2).unwrap();
        for n in 0..=3 {
            assert_eq!(t.dim(n), n as usize + 1);
        }
    }

    #[test]
    fn total_of_single_axis_is_itself() {
        let mut m = Multicomplex::new(1, 2);
        m.insert_space(vec![0], space("a", 1, 0));
        m.insert_space(vec![1], space("b", 1, 1));
        m.insert_space(vec![2], space("c", 1, 2));
        m.insert_map(0, vec![1], ExactMatrix::identity(1));
        let t = total_complex(&m, 1).unwrap();
        assert_eq!(t.differential(1), ExactMatrix::identity(1));
        assert!(t.differential(2).is_zero());
    }

    #[test]
    fn sym_dims_examples() {
        let one = |cells: &[(i64, u32)]| cells.iter().map(|c| (*c, 1)).collect::<BigradedDims>();
        let s = sym_algebra_dims(&one(&[(1, 0)]), 3, 0).unwrap();
        assert_eq!(s.by_degree(0, 3), vec![1, 1, 0, 0]);
        let s = sym_algebra_dims(&one(&[(2, 0)]), 4, 0).unwrap();
        assert_eq!(s.by_degree(0, 4), vec![1, 0, 1, 0, 1]);
        let s = sym_algebra_dims(&one(&[(1, 0), (3, 0)]), 4, 0).unwrap();
        assert_eq!(s.by_degree(0, 4), vec![1, 1, 0, 1, 1]);
        // two weight-one generators in degree 0: polynomial ring in two variables
        let mut g = BigradedDims::new();
        g.add(0, 1, 2);
        let s = sym_algebra_dims(&g, 0, 3).unwrap();
        assert_eq!((s.get(0, 1), s.get(0, 2), s.get(0, 3)), (2, 3, 4));
    }
}
