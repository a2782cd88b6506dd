//! Tensor words over a table of letters with a partial product, and the
//! bar-type operators on them (merges, Koszul rotation, `b`, `b'`).
//!
//! Every letter carries its shifted degree `sdeg` (internal degree + 1).
//! Merging `x, y` at position `i` has sign `(-1)^{sdeg_0 + ... + sdeg_{i-1}} (-1)^{|x|}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::complexes::{BasedSpace, ChainComplex, Label};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rational, SparseVec};

pub type Word = Vec<usize>;
pub type Combination = Vec<(Word, Rational)>;

/// Wildcard end used for letters that only ever sit at a word boundary.
pub const ANY: usize = usize::MAX;

fn sign(parity: i64) -> Rational {
    if parity.rem_euclid(2) == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Letters {
    pub names: Vec<String>,
    pub sdeg: Vec<i64>,
    pub weight: Vec<u32>,
    /// `(left idempotent, right idempotent)` for homogeneous letters.
    pub ends: Vec<(usize, usize)>,
    merge: HashMap<(usize, usize), SparseVec<Rational>>,
}

impl Letters {
    /// Appends a block of letters with the given internal degrees and returns
    /// the id of the first one.
    pub fn push_block(&mut self, names: impl IntoIterator<Item = String>, degrees: &[i64], weights: &[u32]) -> usize {
        let off = self.names.len();
        self.names.extend(names);
        self.sdeg.extend(degrees.iter().map(|d| d + 1));
        self.weight.extend(weights);
        self.ends.resize(self.names.len(), (ANY, ANY));
        off
    }

    /// Records `(x_off + i)·(y_off + j) = Σ c_k (out_off + k)` for every
    /// nonzero entry `table(i, j)`.
    pub fn set_products(&mut self, x: (usize, usize), y: (usize, usize), out_off: usize, table: impl Fn(usize, usize) -> SparseVec<Rational>) {
        let (x_off, x_len) = x;
        let (y_off, y_len) = y;
        for i in 0..x_len {
            for j in 0..y_len {
                let v = table(i, j);
                if !v.is_empty() {
                    self.merge.insert((x_off + i, y_off + j), v.into_iter().map(|(k, c)| (k + out_off, c)).collect());
                }
            }
        }
    }

    pub fn product(&self, x: usize, y: usize) -> Option<&SparseVec<Rational>> {
        self.merge.get(&(x, y))
    }

    /// Product of a letter combination with a letter combination.
    pub fn product_vec(&self, x: &SparseVec<Rational>, y: &SparseVec<Rational>) -> SparseVec<Rational> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(v) = self.merge.get(&(*i, *j)) {
                    for (k, c) in v {
                        *acc.entry(*k).or_insert_with(Rational::zero) += a * b * c;
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn total_sdeg(&self, w: &[usize]) -> i64 {
        w.iter().map(|x| self.sdeg[*x]).sum()
    }

    pub fn total_weight(&self, w: &[usize]) -> u32 {
        w.iter().map(|x| self.weight[*x]).sum()
    }

    pub fn word_name(&self, w: &[usize]) -> String {
        w.iter().map(|x| self.names[*x].as_str()).collect::<Vec<_>>().join("|")
    }

    /// Merge of positions `i, i+1`.
    pub fn merge_at(&self, w: &[usize], i: usize) -> Combination {
        let Some(v) = self.merge.get(&(w[i], w[i + 1])) else { return Vec::new() };
        let s = sign(self.total_sdeg(&w[..i]) + self.sdeg[w[i]] - 1);
        v.iter()
            .map(|(k, c)| {
                let mut out = Vec::with_capacity(w.len() - 1);
                out.extend_from_slice(&w[..i]);
                out.push(*k);
                out.extend_from_slice(&w[i + 2..]);
                (out, &s * c)
            })
            .collect()
    }

    /// Moves the last `k` letters to the front with the Koszul sign.
    pub fn rotate(&self, w: &[usize], k: usize) -> (Word, Rational) {
        let cut = w.len() - k;
        let s = sign(self.total_sdeg(&w[..cut]) * self.total_sdeg(&w[cut..]));
        let mut out = w[cut..].to_vec();
        out.extend_from_slice(&w[..cut]);
        (out, s)
    }

    /// `b' = Σ_{i < n} merge_i`.
    pub fn bprime(&self, w: &[usize]) -> Combination {
        let mut acc = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            acc.extend(self.merge_at(w, i));
        }
        collect(acc)
    }

    /// `b = b' + (rotate the last letter to the front, then merge_0)`.
    pub fn b(&self, w: &[usize]) -> Combination {
        let mut acc = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            acc.extend(self.merge_at(w, i));
        }
        if w.len() >= 2 {
            let (r, s) = self.rotate(w, 1);
            acc.extend(self.merge_at(&r, 0).into_iter().map(|(x, c)| (x, &s * c)));
        }
        collect(acc)
    }

    /// Koszul cyclic operator on a whole word.
    pub fn t(&self, w: &[usize]) -> Combination {
        let (r, s) = self.rotate(w, 1);
        vec![(r, s)]
    }

    /// Every composable arrangement of letter combinations, one per slot.
    pub fn expand(slots: &[SparseVec<Rational>]) -> Combination {
        let mut acc: Combination = vec![(Vec::new(), Rational::one())];
        for slot in slots {
            let mut next = Vec::with_capacity(acc.len() * slot.len());
            for (w, c) in &acc {
                for (x, d) in slot {
                    let mut v = w.clone();
                    v.push(*x);
                    next.push((v, c * d));
                }
            }
            acc = next;
        }
        collect(acc)
    }
}

/// Sums equal words and drops zeros; output is sorted by word.
pub fn collect(terms: impl IntoIterator<Item = (Word, Rational)>) -> Combination {
    let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
    for (w, c) in terms {
        *acc.entry(w).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// One slot of a word pattern.
#[derive(Clone, Debug)]
pub enum Slot {
    /// Exactly one letter from the set.
    One(Vec<usize>),
    /// Any number of letters from the set.
    Many(Vec<usize>),
}

/// How adjacent letters must match through `Letters::ends`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    Free,
    Linear,
    Cyclic,
}

fn links(letters: &Letters, x: usize, y: usize) -> bool {
    let (a, b) = (letters.ends[x].1, letters.ends[y].0);
    a == ANY || b == ANY || a == b
}

/// All words matching `pattern` with `Σ sdeg <= max_sdeg` and weight `<= max_weight`.
pub fn enumerate(letters: &Letters, pattern: &[Slot], max_sdeg: i64, max_weight: u32, link: Link) -> Result<Vec<Word>> {
    for slot in pattern {
        let set = match slot {
            Slot::One(s) | Slot::Many(s) => s,
        };
        for x in set {
            if letters.sdeg[*x] < 0 {
                return Err(Error::Unbounded(format!("letter `{}` has internal degree below -1", letters.names[*x])));
            }
            if matches!(slot, Slot::Many(_)) && letters.sdeg[*x] == 0 && letters.weight[*x] == 0 {
                return Err(Error::Unbounded(format!("letter `{}` has degree -1 and weight 0", letters.names[*x])));
            }
        }
    }
    let mut out = Vec::new();
    let mut word = Vec::new();
    walk(letters, pattern, 0, &mut word, 0, 0, max_sdeg, max_weight, link, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    letters: &Letters,
    pattern: &[Slot],
    slot: usize,
    word: &mut Word,
    sdeg: i64,
    weight: u32,
    max_sdeg: i64,
    max_weight: u32,
    link: Link,
    out: &mut Vec<Word>,
) {
    if slot == pattern.len() {
        let closes = link != Link::Cyclic || word.is_empty() || links(letters, *word.last().unwrap(), word[0]);
        if closes {
            out.push(word.clone());
        }
        return;
    }
    if let Slot::Many(_) = &pattern[slot] {
        walk(letters, pattern, slot + 1, word, sdeg, weight, max_sdeg, max_weight, link, out);
    }
    let mut try_letter = |x: usize, next_slot: usize, word: &mut Word| {
        let (s, w) = (sdeg + letters.sdeg[x], weight + letters.weight[x]);
        if s > max_sdeg || w > max_weight {
            return;
        }
        if link != Link::Free {
            if let Some(last) = word.last() {
                if !links(letters, *last, x) {
                    return;
                }
            }
        }
        word.push(x);
        walk(letters, pattern, next_slot, word, s, w, max_sdeg, max_weight, link, out);
        word.pop();
    };
    match &pattern[slot] {
        Slot::One(set) => {
            for x in set {
                try_letter(*x, slot + 1, word);
            }
        }
        Slot::Many(set) => {
            for x in set {
                try_letter(*x, slot, word);
            }
        }
    }
}

/// Words grouped by homological degree `Σ sdeg + offset`, as based spaces.
#[derive(Clone, Debug)]
pub struct WordSpaces {
    pub lo: i64,
    pub hi: i64,
    pub words: Vec<Vec<Word>>,
    pub index: Vec<HashMap<Word, usize>>,
}

impl WordSpaces {
    pub fn new(letters: &Letters, words: Vec<Word>, offset: i64, lo: i64, hi: i64) -> Self {
        let n = (hi - lo + 1).max(0) as usize;
        let mut by_degree: Vec<Vec<Word>> = vec![Vec::new(); n];
        for w in words {
            let d = letters.total_sdeg(&w) + offset;
            if d >= lo && d <= hi {
                by_degree[(d - lo) as usize].push(w);
            }
        }
        for ws in &mut by_degree {
            ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        }
        let index = by_degree.iter().map(|ws| ws.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()).collect();
        WordSpaces { lo, hi, words: by_degree, index }
    }

    pub fn degree_words(&self, n: i64) -> &[Word] {
        if n < self.lo || n > self.hi {
            return &[];
        }
        &self.words[(n - self.lo) as usize]
    }

    pub fn position(&self, n: i64, w: &[usize]) -> Option<usize> {
        if n < self.lo || n > self.hi {
            return None;
        }
        self.index[(n - self.lo) as usize].get(w).copied()
    }

    pub fn dim(&self, n: i64) -> usize {
        self.degree_words(n).len()
    }

    pub fn space(&self, letters: &Letters, n: i64) -> BasedSpace {
        let labels = self
            .degree_words(n)
            .iter()
            .map(|w| Label::new(letters.word_name(w), letters.total_sdeg(w), letters.total_weight(w)))
            .collect();
        BasedSpace::new(labels).expect("distinct words have distinct names")
    }

    /// Matrix of a degree-`shift` operator from degree `n` to `n + shift`.
    pub fn operator(&self, n: i64, shift: i64, op: impl Fn(&[usize]) -> Combination) -> Result<ExactMatrix> {
        let mut triplets = Vec::new();
        for (c, w) in self.degree_words(n).iter().enumerate() {
            for (v, x) in op(w) {
                let r = self.position(n + shift, &v).ok_or_else(|| Error::Internal(format!("word {v:?} left the enumerated space")))?;
                triplets.push((r, c, x));
            }
        }
        Ok(ExactMatrix::from_triplets(self.dim(n + shift), self.dim(n), triplets))
    }

    /// Coordinates of a combination in degree `n`.
    pub fn vector(&self, n: i64, comb: &Combination) -> Result<SparseVec<Rational>> {
        let mut v: Vec<(usize, Rational)> = comb
            .iter()
            .map(|(w, c)| self.position(n, w).map(|i| (i, c.clone())).ok_or_else(|| Error::Internal(format!("word {w:?} not enumerated"))))
            .collect::<Result<_>>()?;
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    /// Chain complex on `lo..=hi` with differential `op`.
    pub fn complex(&self, letters: &Letters, op: impl Fn(&[usize]) -> Combination) -> Result<ChainComplex> {
        let mut spaces = Vec::new();
        let mut diffs = Vec::new();
        for n in self.lo..=self.hi {
            spaces.push(self.space(letters, n));
            diffs.push(if n == self.lo { ExactMatrix::zeros(0, self.dim(n)) } else { self.operator(n, -1, &op)? });
        }
        ChainComplex::new(self.lo, spaces, diffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// `k[x]/(x^2)` letters `1, x`.
    fn dual() -> Letters {
        let mut l = Letters::default();
        l.push_block(["1".to_string(), "x".to_string()], &[0, 0], &[0, 0]);
        l.set_products((0, 2), (0, 2), 0, |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, q(1))],
            _ => vec![],
        });
        l
    }

    #[test]
    fn enumeration_respects_budget() {
        let l = dual();
        let ws = enumerate(&l, &[Slot::One(vec![0, 1]), Slot::Many(vec![0, 1])], 3, 0, Link::Free).unwrap();
        assert_eq!(ws.len(), 2 + 4 + 8);
    }

    #[test]
    fn b_squares_to_zero() {
        let l = dual();
        let ws = enumerate(&l, &[Slot::One(vec![0, 1]), Slot::Many(vec![0, 1])], 5, 0, Link::Free).unwrap();
        let sp = WordSpaces::new(&l, ws, -1, 0, 4);
        assert!(sp.complex(&l, |w| l.b(w)).is_ok());
        assert!(sp.complex(&l, |w| l.bprime(w)).is_ok());
    }

    #[test]
    fn rotation_sign() {
        let l = dual();
        let (w, s) = l.rotate(&[0, 1, 1], 1);
        assert_eq!(w, vec![1, 0, 1]);
        assert_eq!(s, q(1));
        let (_, s) = l.rotate(&[0, 1], 1);
        assert_eq!(s, q(-1));
    }
}
