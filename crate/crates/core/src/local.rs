//! Cycle-local and path-local complexes of a decorated quiver, and the
//! decomposition of `HC(A_Q)` over cycles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{quiver_algebra, DecoratedQuiver, QuiverAlgebra, SeparableIdempotent, Side};
use crate::complexes::{coinvariant_complex, compare_cells, homology_dims_in, BigradedDims, Cell, ChainComplex, GroupAction};
use crate::error::{Error, Result};
use crate::hochschild::{connes_complex, push_algebra, push_module, tor_dims, Caps};
use crate::linalg::FieldMode;
use crate::quiver::{enumerate_cycles, enumerate_framed_paths, Cycle, FramedPath};
use crate::words::{enumerate, Letters, Link, Slot, WordSpaces};

fn range(off: usize, len: usize) -> Vec<usize> {
    (off..off + len).collect()
}

fn vertex_letters(dq: &DecoratedQuiver, qa: &QuiverAlgebra, v: usize) -> Vec<usize> {
    range(qa.vertex_offsets[v], dq.vertex_algebras[v].dim())
}

fn edge_letters(dq: &DecoratedQuiver, qa: &QuiverAlgebra, e: usize) -> Vec<usize> {
    range(qa.edge_offsets[e], dq.edge_modules[e].dim())
}

/// `C(Q, ℓ)` for the closed edge sequence `edges`, totalized, with the
/// `Z_{deg ℓ}` block rotation divided out. Built to degree `degree_cap + 1`.
pub fn cycle_local_complex(dq: &DecoratedQuiver, qa: &QuiverAlgebra, edges: &[usize], degree_cap: i64) -> Result<ChainComplex> {
    let q = dq.quiver();
    if edges.is_empty() {
        return Err(Error::Validation(vec!["empty cycle".into()]));
    }
    let cycle = Cycle::new(q, edges.to_vec())?;
    let m = edges.len();
    let d = cycle.degree();
    let mut letters = Letters::default();
    push_algebra(&mut letters, &qa.algebra);
    let mut pattern = Vec::new();
    for e in edges {
        pattern.push(Slot::One(edge_letters(dq, qa, *e)));
        pattern.push(Slot::Many(vertex_letters(dq, qa, q.edges[*e].target)));
    }
    let weight = letters_weight_bound(&letters, &pattern);
    let words = enumerate(&letters, &pattern, degree_cap + 1, weight, Link::Free)?;
    let sp = WordSpaces::new(&letters, words, 0, 0, degree_cap + 1);
    let c = sp.complex(&letters, |w| letters.b(w))?;
    if d == 1 {
        return Ok(c);
    }
    let edge_ids: Vec<bool> = (0..letters.len()).map(|x| qa.kinds.get(x).is_some_and(|k| matches!(k, crate::algebra::LetterKind::Edge(_)))).collect();
    let units = m / d;
    // move the first `units` blocks to the back
    let rotate = |w: &[usize]| {
        let starts: Vec<usize> = w.iter().enumerate().filter(|(_, x)| edge_ids[**x]).map(|(i, _)| i).collect();
        let cut = starts[units];
        let (r, s) = letters.rotate(w, w.len() - cut);
        vec![(r, s)]
    };
    let mut g = BTreeMap::new();
    for n in c.degrees() {
        g.insert(n, sp.operator(n, 0, rotate)?);
    }
    coinvariant_complex(&c, &GroupAction { generators: vec![g] })
}

fn letters_weight_bound(letters: &Letters, pattern: &[Slot]) -> u32 {
    pattern
        .iter()
        .map(|s| match s {
            Slot::One(set) => set.iter().map(|x| letters.weight[*x]).max().unwrap_or(0),
            Slot::Many(_) => 0,
        })
        .sum()
}

/// `F_ℓ`: homology of the cycle-local complex, degrees `0..=caps.degree`.
pub fn cycle_local_dims(dq: &DecoratedQuiver, c: &Cycle, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    let qa = quiver_algebra(dq)?;
    homology_dims_in(&cycle_local_complex(dq, &qa, c.edges(), caps.degree)?, caps.degree, field)
}

/// `C(Q^fr, ρ)`: the two-sided bar complex along the framed path, with `b'`.
pub fn path_local_complex(dq: &DecoratedQuiver, qa: &QuiverAlgebra, p: &FramedPath, degree_cap: i64) -> Result<ChainComplex> {
    p.check(&dq.framed)?;
    let q = dq.quiver();
    let plus = qa.plus_module(dq);
    let minus = qa.minus_module(dq);
    let mut letters = Letters::default();
    let a = (push_algebra(&mut letters, &qa.algebra), qa.algebra.dim());
    let p_off = push_module(&mut letters, &plus, a);
    let m_off = push_module(&mut letters, &minus, a);
    let plus_legs = qa.framing_legs(dq, Side::Right);
    let minus_legs = qa.framing_legs(dq, Side::Left);
    let mut pattern = vec![Slot::One((0..plus.dim()).filter(|i| plus_legs[*i] == p.plus).map(|i| p_off + i).collect())];
    let mut at = dq.framed.plus[p.plus].1;
    pattern.push(Slot::Many(vertex_letters(dq, qa, at)));
    for e in &p.edges {
        pattern.push(Slot::One(edge_letters(dq, qa, *e)));
        at = q.edges[*e].target;
        pattern.push(Slot::Many(vertex_letters(dq, qa, at)));
    }
    pattern.push(Slot::One((0..minus.dim()).filter(|i| minus_legs[*i] == p.minus).map(|i| m_off + i).collect()));
    let weight = letters_weight_bound(&letters, &pattern);
    let words = enumerate(&letters, &pattern, degree_cap + 3, weight, Link::Free)?;
    let sp = WordSpaces::new(&letters, words, -2, 0, degree_cap + 1);
    sp.complex(&letters, |w| letters.bprime(w))
}

/// `F_ρ`: homology of the path-local complex, weight `n + 2`.
pub fn path_local_dims(dq: &DecoratedQuiver, p: &FramedPath, caps: Caps, field: FieldMode) -> Result<BigradedDims> {
    let qa = quiver_algebra(dq)?;
    homology_dims_in(&path_local_complex(dq, &qa, p, caps.degree)?, caps.degree, field)
}

/// Both sides of `HC(A_Q) = ⊕_v HC(A_v) ⊕ ⊕_ℓ F_ℓ[-1]`, degrees `-1..=cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub lhs: BigradedDims,
    pub rhs: BigradedDims,
    pub cells: Vec<Cell>,
}

impl DecompositionReport {
    pub fn matches(&self) -> bool {
        self.cells.iter().all(|c| c.verdict != crate::complexes::Verdict::Mismatch)
    }
}

pub fn hc_of_quiver_algebra(dq: &DecoratedQuiver, caps: Caps, field: FieldMode) -> Result<DecompositionReport> {
    let qa = quiver_algebra(dq)?;
    let lhs = homology_dims_in(&connes_complex(&qa.algebra, &qa.separable, caps, field)?, caps.degree, field)?;
    let mut rhs = BigradedDims::new();
    for a in &dq.vertex_algebras {
        let c = connes_complex(a, &SeparableIdempotent::trivial(a), Caps::new(caps.degree, caps.weight), field)?;
        rhs.merge(&homology_dims_in(&c, caps.degree, field)?);
    }
    for c in enumerate_cycles(dq.quiver(), caps.weight as usize) {
        let f = homology_dims_in(&cycle_local_complex(dq, &qa, c.edges(), caps.degree + 1)?, caps.degree + 1, field)?;
        rhs.merge(&f.shifted(-1));
    }
    let cells = compare_cells(&lhs, &rhs, -1..=caps.degree, caps.weight, None);
    Ok(DecompositionReport { lhs, rhs, cells })
}

/// Both sides of `Tor^{A_Q}(M_+, M_-) = ⊕_ρ F_ρ`, degrees `0..=cap`.
pub fn tor_of_quiver_algebra(dq: &DecoratedQuiver, caps: Caps, field: FieldMode) -> Result<DecompositionReport> {
    let qa = quiver_algebra(dq)?;
    let (plus, minus) = (qa.plus_module(dq), qa.minus_module(dq));
    let lhs = tor_dims(&plus, &qa.algebra, &minus, &qa.separable, caps, field)?;
    let mut rhs = BigradedDims::new();
    if caps.weight >= 2 {
        for p in enumerate_framed_paths(&dq.framed, caps.weight as usize - 2) {
            rhs.merge(&homology_dims_in(&path_local_complex(dq, &qa, &p, caps.degree)?, caps.degree, field)?);
        }
    }
    let cells = compare_cells(&lhs, &rhs, 0..=caps.degree, caps.weight, None);
    Ok(DecompositionReport { lhs, rhs, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Bimodule, OneSidedModule};
    use crate::quiver::{FramedQuiver, Quiver};

    fn jordan(a: Algebra, m: Bimodule) -> DecoratedQuiver {
        DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap(), vec![a], vec![m])
    }

    fn two_cycle() -> DecoratedQuiver {
        DecoratedQuiver::unframed(
            Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2"), ("f", "2", "1")]).unwrap(),
            vec![Algebra::ground(), Algebra::ground()],
            vec![Bimodule::ground(), Bimodule::ground()],
        )
    }

    fn framed_bare(a: Algebra, plus: OneSidedModule, minus: OneSidedModule) -> DecoratedQuiver {
        DecoratedQuiver {
            framed: FramedQuiver { quiver: Quiver::new(vec!["v".into()], &[]).unwrap(), plus: vec![("w+".into(), 0)], minus: vec![("w-".into(), 0)] },
            vertex_algebras: vec![a],
            edge_modules: vec![],
            plus_modules: vec![plus],
            minus_modules: vec![minus],
        }
    }

    #[test]
    fn jordan_cycles() {
        let dq = jordan(Algebra::ground(), Bimodule::ground());
        let q = dq.quiver();
        let f = cycle_local_dims(&dq, &Cycle::new(q, vec![0]).unwrap(), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![((0, 1), 1)]);
        let f = cycle_local_dims(&dq, &Cycle::new(q, vec![0, 0]).unwrap(), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![((0, 2), 1)]);
    }

    #[test]
    fn two_vertex_cycle() {
        let dq = two_cycle();
        let f = cycle_local_dims(&dq, &Cycle::new(dq.quiver(), vec![0, 1]).unwrap(), Caps::degree(3), FieldMode::Rational).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![((0, 2), 1)]);
    }

    #[test]
    fn rotation_independence() {
        let d = Algebra::dual_numbers();
        let dq = DecoratedQuiver::unframed(
            Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2"), ("f", "2", "1")]).unwrap(),
            vec![d.clone(), d.clone()],
            vec![Bimodule::regular(&d), Bimodule::regular(&d)],
        );
        let qa = quiver_algebra(&dq).unwrap();
        for cap in [2] {
            let a = homology_dims_in(&cycle_local_complex(&dq, &qa, &[0, 1, 0, 1], cap).unwrap(), cap, FieldMode::Rational).unwrap();
            let b = homology_dims_in(&cycle_local_complex(&dq, &qa, &[1, 0, 1, 0], cap).unwrap(), cap, FieldMode::Rational).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn framed_paths() {
        let dq = framed_bare(Algebra::ground(), OneSidedModule::ground(Side::Right), OneSidedModule::ground(Side::Left));
        let p = FramedPath { plus: 0, edges: vec![], minus: 0 };
        let f = path_local_dims(&dq, &p, Caps::degree(2), FieldMode::Rational).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![((0, 2), 1)]);

        let d = Algebra::dual_numbers();
        let dq = framed_bare(d.clone(), OneSidedModule::augmentation(&d, Side::Right, 0), OneSidedModule::augmentation(&d, Side::Left, 0));
        let f = path_local_dims(&dq, &p, Caps::degree(2), FieldMode::Rational).unwrap();
        assert_eq!(f.by_degree(0, 2), vec![1, 1, 1]);

        let mut dq = framed_bare(Algebra::ground(), OneSidedModule::ground(Side::Right), OneSidedModule::ground(Side::Left));
        dq.framed.quiver = Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap();
        dq.edge_modules = vec![Bimodule::ground()];
        let p = FramedPath { plus: 0, edges: vec![0], minus: 0 };
        let f = path_local_dims(&dq, &p, Caps::degree(2), FieldMode::Rational).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![((0, 3), 1)]);
    }

    #[test]
    fn tor_decompositions() {
        let dq = framed_bare(Algebra::ground(), OneSidedModule::ground(Side::Right), OneSidedModule::ground(Side::Left));
        let r = tor_of_quiver_algebra(&dq, Caps::new(2, 2), FieldMode::Rational).unwrap();
        assert!(r.matches(), "{:?}", r.cells);
        assert_eq!(r.lhs.iter().collect::<Vec<_>>(), vec![((0, 2), 1)]);

        let mut dq = dq;
        dq.framed.quiver = Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap();
        dq.edge_modules = vec![Bimodule::ground()];
        let r = tor_of_quiver_algebra(&dq, Caps::new(2, 4), FieldMode::Rational).unwrap();
        assert!(r.matches(), "{:?}", r.cells);
    }

    #[test]
    fn hc_decompositions() {
        let point = DecoratedQuiver::unframed(Quiver::new(vec!["v".into()], &[]).unwrap(), vec![Algebra::ground()], vec![]);
        let r = hc_of_quiver_algebra(&point, Caps::new(3, 0), FieldMode::Rational).unwrap();
        assert!(r.matches());
        assert_eq!(r.lhs.by_degree(0, 3), vec![1, 0, 1, 0]);

        let r = hc_of_quiver_algebra(&jordan(Algebra::ground(), Bimodule::ground()), Caps::new(3, 3), FieldMode::Rational).unwrap();
        assert!(r.matches(), "{:?}", r.cells);

        let r = hc_of_quiver_algebra(&two_cycle(), Caps::new(3, 2), FieldMode::Rational).unwrap();
        assert!(r.matches(), "{:?}", r.cells);
    }
}
