//! Hochschild bar complexes (plain and over a separable `S`), the splitting
//! maps between them, Connes complexes, cyclic bicomplexes and Tor.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{Algebra, Bimodule, OneSidedModule, SeparableIdempotent, Side};
use crate::complexes::{homology_dims_in, quotient_complex, BigradedDims, ChainComplex, Multicomplex};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, FieldMode, Quotient, Rational, SparseVec};
use crate::words::{collect, enumerate, Combination, Letters, Link, Slot, WordSpaces};

/// Homology is reported up to `degree`; only weights up to `weight` are built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub degree: i64,
    pub weight: u32,
}

impl Caps {
    pub fn new(degree: i64, weight: u32) -> Self {
        Caps { degree, weight }
    }

    /// Degree cap with weight 0 only.
    pub fn degree(degree: i64) -> Self {
        Caps { degree, weight: 0 }
    }
}

/// How `⊗_S` is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TensorS {
    /// Filter when every basis element is `S`-homogeneous, quotient otherwise.
    #[default]
    Auto,
    /// Keep only words whose neighbours share an idempotent.
    Filter,
    /// Quotient plain words by the balancing relations.
    Quotient,
}

pub(crate) fn push_algebra(l: &mut Letters, a: &Algebra) -> usize {
    let off = l.push_block(a.names.iter().cloned(), &a.degrees, &a.weights);
    l.set_products((off, a.dim()), (off, a.dim()), off, |i, j| a.mul[i][j].clone());
    off
}

pub(crate) fn push_bimodule(l: &mut Letters, m: &Bimodule, left: (usize, usize), right: (usize, usize)) -> usize {
    let off = l.push_block(m.names.iter().cloned(), &m.degrees, &m.weights);
    l.set_products((off, m.dim()), right, off, |x, b| m.right[x][b].clone());
    l.set_products(left, (off, m.dim()), off, |a, x| m.left[a][x].clone());
    off
}

pub(crate) fn push_module(l: &mut Letters, m: &OneSidedModule, alg: (usize, usize)) -> usize {
    let off = l.push_block(m.names.iter().cloned(), &m.degrees, &m.weights);
    match m.side {
        Side::Right => l.set_products((off, m.dim()), alg, off, |x, a| m.act[a][x].clone()),
        Side::Left => l.set_products(alg, (off, m.dim()), off, |a, x| m.act[a][x].clone()),
    }
    off
}

fn shift(v: &SparseVec<Rational>, off: usize) -> SparseVec<Rational> {
    v.iter().map(|(i, c)| (i + off, c.clone())).collect()
}

fn sign(parity: i64) -> Rational {
    if parity.rem_euclid(2) == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Letters `M ⊕ A` for `B(A, M)`, with `ends` set when `S` allows it.
struct BarSetup {
    letters: Letters,
    m: (usize, usize),
    a: (usize, usize),
    idempotents: Vec<SparseVec<Rational>>,
    filtered: bool,
}

impl BarSetup {
    fn new(a: &Algebra, m: &Bimodule, s: &SeparableIdempotent, how: TensorS) -> Result<Self> {
        let mut letters = Letters::default();
        let a_off = letters.len() + m.dim();
        let m_off = push_bimodule(&mut letters, m, (a_off, a.dim()), (a_off, a.dim()));
        let a_off2 = push_algebra(&mut letters, a);
        debug_assert_eq!(a_off, a_off2);
        let types = match how {
            TensorS::Quotient => None,
            _ => s.basis_types(a).zip(s.bimodule_types(m)),
        };
        if how == TensorS::Filter && types.is_none() {
            return Err(Error::Internal("S does not split the basis into idempotent blocks".into()));
        }
        if let Some((ta, tm)) = &types {
            for (i, t) in tm.iter().enumerate() {
                letters.ends[m_off + i] = *t;
            }
            for (i, t) in ta.iter().enumerate() {
                letters.ends[a_off + i] = *t;
            }
        }
        let idempotents = s.idempotents.iter().map(|e| shift(e, a_off)).collect();
        Ok(BarSetup { letters, m: (m_off, m.dim()), a: (a_off, a.dim()), idempotents, filtered: types.is_some() })
    }

    fn range(r: (usize, usize)) -> Vec<usize> {
        (r.0..r.0 + r.1).collect()
    }

    fn spaces(&self, caps: Caps) -> Result<WordSpaces> {
        let pattern = [Slot::One(Self::range(self.m)), Slot::Many(Self::range(self.a))];
        let link = if self.filtered { Link::Cyclic } else { Link::Free };
        let words = enumerate(&self.letters, &pattern, caps.degree + 2, caps.weight, link)?;
        Ok(WordSpaces::new(&self.letters, words, -1, -1, caps.degree + 1))
    }
}

/// Balancing relations `(.., x s, y, ..) - (.., x, s y, ..)` in every degree.
fn balancing_relations(l: &Letters, sp: &WordSpaces, idempotents: &[SparseVec<Rational>], cyclic: bool) -> Result<BTreeMap<i64, Vec<SparseVec<Rational>>>> {
    let mut out = BTreeMap::new();
    for n in sp.lo..=sp.hi {
        let mut rels = Vec::new();
        for w in sp.degree_words(n) {
            let len = w.len();
            let positions = if cyclic { len } else { len.saturating_sub(1) };
            for i in 0..positions {
                let j = (i + 1) % len;
                for s in idempotents {
                    let mut left: Vec<SparseVec<Rational>> = w.iter().map(|x| vec![(*x, Rational::one())]).collect();
                    left[i] = l.product_vec(&left[i], s);
                    let mut right: Vec<SparseVec<Rational>> = w.iter().map(|x| vec![(*x, Rational::one())]).collect();
                    right[j] = l.product_vec(s, &right[j]);
                    let comb = collect(Letters::expand(&left).into_iter().chain(Letters::expand(&right).into_iter().map(|(v, c)| (v, -c))));
                    if !comb.is_empty() {
                        rels.push(sp.vector(n, &comb)?);
                    }
                }
            }
        }
        out.insert(n, rels);
    }
    Ok(out)
}

/// `B_n(A, M) = M ⊗ A[1]^{⊗n}` with the Hochschild differential, built to degree `cap + 1`.
pub fn bar_complex(a: &Algebra, m: &Bimodule, caps: Caps) -> Result<ChainComplex> {
    let setup = BarSetup::new(a, m, &SeparableIdempotent::trivial(a), TensorS::Filter)?;
    let sp = setup.spaces(caps)?;
    sp.complex(&setup.letters, |w| setup.letters.b(w))
}

/// `B^S_n(A, M) = M ⊗_S A[1]^{⊗_S n} ⊗_S`.
pub fn relative_bar_complex(a: &Algebra, m: &Bimodule, s: &SeparableIdempotent, caps: Caps) -> Result<ChainComplex> {
    relative_bar_complex_with(a, m, s, caps, TensorS::Auto)
}

pub fn relative_bar_complex_with(a: &Algebra, m: &Bimodule, s: &SeparableIdempotent, caps: Caps, how: TensorS) -> Result<ChainComplex> {
    let setup = BarSetup::new(a, m, s, how)?;
    let sp = setup.spaces(caps)?;
    let c = sp.complex(&setup.letters, |w| setup.letters.b(w))?;
    if setup.filtered {
        return Ok(c);
    }
    quotient_complex(&c, &balancing_relations(&setup.letters, &sp, &setup.idempotents, true)?)
}

/// `φ`, `ψ` and `h` between the plain and the relative bar complex, per degree.
#[derive(Clone, Debug)]
pub struct SplittingMaps {
    pub plain: ChainComplex,
    pub relative: ChainComplex,
    pub phi: BTreeMap<i64, ExactMatrix>,
    pub psi: BTreeMap<i64, ExactMatrix>,
    /// `h_n : B_n -> B_{n+1}`, defined for `n <= cap`.
    pub h: BTreeMap<i64, ExactMatrix>,
}

impl SplittingMaps {
    /// Checks `φψ = id` in degrees `<= cap` and `dh + hd = id - ψφ` in degrees `<= cap - 1`.
    pub fn check(&self, cap: i64) -> Vec<String> {
        let mut bad = Vec::new();
        for n in self.plain.lo()..=cap {
            let pp = self.phi[&n].mul(&self.psi[&n]);
            if pp != ExactMatrix::identity(self.relative.dim(n)) {
                bad.push(format!("phi psi != id in degree {n}"));
            }
        }
        for n in self.plain.lo()..=cap - 1 {
            let dim = self.plain.dim(n);
            let dh = self.plain.differential(n + 1).mul(&self.h[&n]);
            let hd = match self.h.get(&(n - 1)) {
                Some(h) => h.mul(&self.plain.differential(n)),
                None => ExactMatrix::zeros(dim, dim),
            };
            let rhs = ExactMatrix::identity(dim).sub(&self.psi[&n].mul(&self.phi[&n]));
            if dh.add(&hd) != rhs {
                bad.push(format!("dh + hd != id - psi phi in degree {n}"));
            }
        }
        bad
    }
}

pub fn splitting_maps(a: &Algebra, m: &Bimodule, s: &SeparableIdempotent, caps: Caps) -> Result<SplittingMaps> {
    let setup = BarSetup::new(a, m, s, TensorS::Quotient)?;
    let l = &setup.letters;
    let sp = setup.spaces(caps)?;
    let plain = sp.complex(l, |w| l.b(w))?;
    let rels = balancing_relations(l, &sp, &setup.idempotents, true)?;
    let relative = quotient_complex(&plain, &rels)?;
    let a_off = setup.a.0;
    let pairs: Vec<(SparseVec<Rational>, SparseVec<Rational>)> = s.element.iter().map(|(u, v)| (shift(u, a_off), shift(v, a_off))).collect();
    let unit = |x: usize| vec![(x, Rational::one())];

    let mut phi = BTreeMap::new();
    let mut psi = BTreeMap::new();
    let mut h = BTreeMap::new();
    for n in sp.lo..=sp.hi {
        let q = Quotient::new(sp.dim(n), rels.get(&n).cloned().unwrap_or_default());
        phi.insert(n, q.projection_matrix());
        // ψ(x_0 ⊗ ... ⊗ x_k) = Σ v_{j_k} x_0 u_{j_0} ⊗ v_{j_0} x_1 u_{j_1} ⊗ ...
        let mut cols = Vec::new();
        for &k in q.kept() {
            let w = &sp.degree_words(n)[k];
            let len = w.len();
            let mut total: Combination = Vec::new();
            for js in tuples(pairs.len(), len) {
                let slots: Vec<SparseVec<Rational>> = (0..len)
                    .map(|p| {
                        let before = &pairs[js[(p + len - 1) % len]].1;
                        let after = &pairs[js[p]].0;
                        l.product_vec(&l.product_vec(before, &unit(w[p])), after)
                    })
                    .collect();
                total.extend(Letters::expand(&slots));
            }
            cols.push(sp.vector(n, &collect(total))?);
        }
        psi.insert(n, ExactMatrix::from_columns(sp.dim(n), cols));
        if n < sp.hi {
            let hn = sp.operator(n, 1, |w| homotopy(l, &pairs, w))?;
            h.insert(n, hn);
        }
    }
    Ok(SplittingMaps { plain, relative, phi, psi, h })
}

fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..base).map(move |j| [t.clone(), vec![j]].concat())).collect();
    }
    out
}

/// `h = Σ_i (-1)^i h_i` where `h_i` inserts `v_{j_i}` after slot `i`.
fn homotopy(l: &Letters, pairs: &[(SparseVec<Rational>, SparseVec<Rational>)], w: &[usize]) -> Combination {
    let unit = |x: usize| vec![(x, Rational::one())];
    let mut acc = Vec::new();
    for i in 0..w.len() {
        let s = sign(l.total_sdeg(&w[..=i]) + 1);
        for js in tuples(pairs.len(), i + 1) {
            let mut slots = Vec::with_capacity(w.len() + 1);
            for p in 0..=i {
                let mut x = unit(w[p]);
                if p > 0 {
                    x = l.product_vec(&pairs[js[p - 1]].1, &x);
                }
                slots.push(l.product_vec(&x, &pairs[js[p]].0));
            }
            slots.push(pairs[js[i]].1.clone());
            slots.extend(w[i + 1..].iter().map(|x| unit(*x)));
            acc.extend(Letters::expand(&slots).into_iter().map(|(v, c)| (v, &s * c)));
        }
    }
    collect(acc)
}

/// Letters `A` alone, for cyclic complexes.
struct CyclicSetup {
    letters: Letters,
    a: (usize, usize),
    idempotents: Vec<SparseVec<Rational>>,
    filtered: bool,
}

impl CyclicSetup {
    fn new(a: &Algebra, s: &SeparableIdempotent, how: TensorS) -> Result<Self> {
        let mut letters = Letters::default();
        let off = push_algebra(&mut letters, a);
        let types = if how == TensorS::Quotient { None } else { s.basis_types(a) };
        if how == TensorS::Filter && types.is_none() {
            return Err(Error::Internal("S does not split the basis into idempotent blocks".into()));
        }
        if let Some(ts) = &types {
            for (i, t) in ts.iter().enumerate() {
                letters.ends[off + i] = *t;
            }
        }
        let idempotents = s.idempotents.iter().map(|e| shift(e, off)).collect();
        Ok(CyclicSetup { letters, a: (off, a.dim()), idempotents, filtered: types.is_some() })
    }

    fn spaces(&self, caps: Caps, top: i64) -> Result<WordSpaces> {
        let all: Vec<usize> = (self.a.0..self.a.0 + self.a.1).collect();
        let pattern = [Slot::One(all.clone()), Slot::Many(all)];
        let link = if self.filtered { Link::Cyclic } else { Link::Free };
        let words = enumerate(&self.letters, &pattern, top + 1, caps.weight, link)?;
        Ok(WordSpaces::new(&self.letters, words, -1, -1, top))
    }
}

/// `C^{λ,S}_n = (A^{⊗_S (n+1)} ⊗_S)_{Z_{n+1}}` with the induced `b`, built to degree `cap + 1`.
pub fn connes_complex(a: &Algebra, s: &SeparableIdempotent, caps: Caps, field: FieldMode) -> Result<ChainComplex> {
    connes_complex_with(a, s, caps, field, TensorS::Auto)
}

pub fn connes_complex_with(a: &Algebra, s: &SeparableIdempotent, caps: Caps, field: FieldMode, how: TensorS) -> Result<ChainComplex> {
    if !field.is_char_zero() {
        return Err(Error::CharP);
    }
    let setup = CyclicSetup::new(a, s, how)?;
    let l = &setup.letters;
    let sp = setup.spaces(caps, caps.degree + 1)?;
    let c = sp.complex(l, |w| l.b(w))?;
    let mut rels = if setup.filtered { BTreeMap::new() } else { balancing_relations(l, &sp, &setup.idempotents, true)? };
    for n in sp.lo..=sp.hi {
        let entry = rels.entry(n).or_insert_with(Vec::new);
        for w in sp.degree_words(n) {
            let comb = collect(l.t(w).into_iter().map(|(v, c)| (v, -c)).chain([(w.clone(), Rational::one())]));
            if !comb.is_empty() {
                entry.push(sp.vector(n, &comb)?);
            }
        }
    }
    quotient_complex(&c, &rels)
}

/// First-quadrant cyclic bicomplex: column `p` has `b` (even `p`) or `-b'`
/// (odd `p`); rows go left by `1 - t` from odd columns and by `N` from even ones.
/// Uses the `S`-filtered words when `S` splits the basis and plain words otherwise.
pub fn cyclic_bicomplex(a: &Algebra, s: &SeparableIdempotent, caps: Caps) -> Result<Multicomplex> {
    let setup = CyclicSetup::new(a, s, TensorS::Auto).or_else(|_| CyclicSetup::new(a, &SeparableIdempotent::trivial(a), TensorS::Filter))?;
    let l = &setup.letters;
    let top = caps.degree + 1;
    let lo = -1;
    let sp = setup.spaces(caps, top - lo)?;
    let mut m = Multicomplex::new(2, top);
    let b = |n: i64| sp.operator(n, -1, |w| l.b(w));
    let neg_bprime = |n: i64| sp.operator(n, -1, |w| l.bprime(w).into_iter().map(|(v, c)| (v, -c)).collect());
    let one_minus_t = |n: i64| sp.operator(n, 0, |w| collect(l.t(w).into_iter().map(|(v, c)| (v, -c)).chain([(w.to_vec(), Rational::one())])));
    let norm = |n: i64| {
        sp.operator(n, 0, |w| {
            let mut acc = vec![(w.to_vec(), Rational::one())];
            let mut cur: Combination = vec![(w.to_vec(), Rational::one())];
            for _ in 1..w.len() {
                cur = cur.iter().flat_map(|(v, c)| l.t(v).into_iter().map(move |(x, d)| (x, c * d))).collect();
                acc.extend(cur.iter().cloned());
            }
            collect(acc)
        })
    };
    for p in 0..=(top - lo) {
        for q in lo..=(top - p) {
            let space = sp.space(l, q);
            m.insert_space(vec![p, q], space);
            if q > lo {
                m.insert_map(1, vec![p, q], if p % 2 == 0 { b(q)? } else { neg_bprime(q)? });
            }
            if p > 0 {
                m.insert_map(0, vec![p, q], if p % 2 == 1 { one_minus_t(q)? } else { norm(q)? });
            }
        }
    }
    Ok(m)
}

/// Two-sided bar complex `B^S(M, A, L)` with `b'`; degree is the number of `A[1]` factors.
pub fn tor_complex(m: &OneSidedModule, a: &Algebra, l: &OneSidedModule, s: &SeparableIdempotent, caps: Caps) -> Result<ChainComplex> {
    if m.side != Side::Right {
        return Err(Error::SideMismatch { expected: "right" });
    }
    if l.side != Side::Left {
        return Err(Error::SideMismatch { expected: "left" });
    }
    let mut letters = Letters::default();
    let a_off = m.dim();
    let m_off = push_module(&mut letters, m, (a_off, a.dim()));
    push_algebra(&mut letters, a);
    let l_off = push_module(&mut letters, l, (a_off, a.dim()));
    let types = s.basis_types(a).zip(s.module_types(m)).zip(s.module_types(l));
    if let Some(((ta, tm), tl)) = &types {
        for (i, t) in tm.iter().enumerate() {
            letters.ends[m_off + i] = (crate::words::ANY, *t);
        }
        for (i, t) in ta.iter().enumerate() {
            letters.ends[a_off + i] = *t;
        }
        for (i, t) in tl.iter().enumerate() {
            letters.ends[l_off + i] = (*t, crate::words::ANY);
        }
    }
    let range = |o: usize, n: usize| (o..o + n).collect::<Vec<_>>();
    let pattern = [Slot::One(range(m_off, m.dim())), Slot::Many(range(a_off, a.dim())), Slot::One(range(l_off, l.dim()))];
    let link = if types.is_some() { Link::Linear } else { Link::Free };
    let words = enumerate(&letters, &pattern, caps.degree + 3, caps.weight, link)?;
    let sp = WordSpaces::new(&letters, words, -2, 0, caps.degree + 1);
    let c = sp.complex(&letters, |w| letters.bprime(w))?;
    if types.is_some() {
        return Ok(c);
    }
    let idempotents: Vec<SparseVec<Rational>> = s.idempotents.iter().map(|e| shift(e, a_off)).collect();
    quotient_complex(&c, &balancing_relations(&letters, &sp, &idempotents, false)?)
}

/// `Tor^A(M, L)` through the relative two-sided bar complex.
pub fn tor_dims(m: &OneSidedModule, a: &Algebra, l: &OneSidedModule, s: &SeparableIdempotent, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    homology_dims_in(&tor_complex(m, a, l, s, caps)?, caps.degree, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis_vec;
    use crate::complexes::{homology_dims, total_complex};

    fn hh(a: &Algebra, cap: i64) -> Vec<usize> {
        homology_dims(&bar_complex(a, &Bimodule::regular(a), Caps::degree(cap)).unwrap(), cap).unwrap().by_degree(0, cap)
    }

    fn split_s() -> (Algebra, SeparableIdempotent) {
        let a = Algebra::split(2);
        let s = SeparableIdempotent::from_idempotents(vec![basis_vec(0), basis_vec(1)]);
        (a, s)
    }

    #[test]
    fn hochschild_examples() {
        assert_eq!(hh(&Algebra::ground(), 3), vec![1, 0, 0, 0]);
        assert_eq!(hh(&Algebra::dual_numbers(), 3), vec![2, 1, 1, 1]);
        assert_eq!(hh(&Algebra::split(2), 3), vec![2, 0, 0, 0]);
    }

    #[test]
    fn relative_bar_of_split_algebra() {
        let (a, s) = split_s();
        let m = Bimodule::regular(&a);
        for how in [TensorS::Filter, TensorS::Quotient] {
            let c = relative_bar_complex_with(&a, &m, &s, Caps::degree(2), how).unwrap();
            assert_eq!(c.dim(0), 2);
            assert_eq!(homology_dims(&c, 2).unwrap().by_degree(0, 2), vec![2, 0, 0]);
        }
    }

    #[test]
    fn splitting_identities() {
        let (a, s) = split_s();
        let maps = splitting_maps(&a, &Bimodule::regular(&a), &s, Caps::degree(4)).unwrap();
        assert!(maps.check(4).is_empty(), "{:?}", maps.check(4));
        let k = Algebra::dual_numbers();
        let maps = splitting_maps(&k, &Bimodule::regular(&k), &SeparableIdempotent::trivial(&k), Caps::degree(3)).unwrap();
        assert!(maps.check(3).is_empty());
    }

    #[test]
    fn connes_examples() {
        let k = Algebra::ground();
        let c = connes_complex(&k, &SeparableIdempotent::trivial(&k), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(homology_dims(&c, 3).unwrap().by_degree(0, 3), vec![1, 0, 1, 0]);
        let (a, s) = split_s();
        let c = connes_complex(&a, &s, Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(homology_dims(&c, 3).unwrap().by_degree(0, 3), vec![2, 0, 2, 0]);
        let d = Algebra::dual_numbers();
        let c = connes_complex(&d, &SeparableIdempotent::trivial(&d), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(homology_dims(&c, 0).unwrap().get(0, 0), 2);
        assert!(matches!(
            connes_complex(&k, &SeparableIdempotent::trivial(&k), Caps::degree(3), FieldMode::Prime { p: 7 }),
            Err(Error::CharP)
        ));
    }

    #[test]
    fn bicomplex_matches_connes() {
        for a in [Algebra::ground(), Algebra::split(2), Algebra::dual_numbers()] {
            let s = SeparableIdempotent::trivial(&a);
            let t = total_complex(&cyclic_bicomplex(&a, &s, Caps::degree(3)).unwrap(), 3).unwrap();
            let c = connes_complex(&a, &s, Caps::degree(3), FieldMode::Rational).unwrap();
            assert_eq!(homology_dims(&t, 3).unwrap(), homology_dims(&c, 3).unwrap());
        }
    }

    #[test]
    fn tor_examples() {
        let k = Algebra::ground();
        let s = SeparableIdempotent::trivial(&k);
        let t = tor_dims(&OneSidedModule::ground(Side::Right), &k, &OneSidedModule::ground(Side::Left), &s, Caps::degree(2), FieldMode::Rational).unwrap();
        assert_eq!(t.by_degree(0, 2), vec![1, 0, 0]);

        let d = Algebra::dual_numbers();
        let (mr, ml) = (OneSidedModule::augmentation(&d, Side::Right, 0), OneSidedModule::augmentation(&d, Side::Left, 0));
        let t = tor_dims(&mr, &d, &ml, &SeparableIdempotent::trivial(&d), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(t.by_degree(0, 3), vec![1, 1, 1, 1]);

        let (a, s) = split_s();
        let first = OneSidedModule { act: vec![vec![basis_vec(0)], vec![vec![]]], ..OneSidedModule::ground(Side::Right) };
        let second = OneSidedModule { act: vec![vec![vec![]], vec![basis_vec(0)]], ..OneSidedModule::ground(Side::Left) };
        let t = tor_dims(&first, &a, &second, &s, Caps::degree(3), FieldMode::Rational).unwrap();
        assert!(t.is_empty());
        assert!(matches!(tor_dims(&second, &a, &first, &s, Caps::degree(3), FieldMode::Rational), Err(Error::SideMismatch { .. })));
    }
}
