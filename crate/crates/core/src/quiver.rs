//! Quivers, framed quivers, cycles up to rotation and framed paths.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(edge, source, target)` names.
    pub fn new(vertices: Vec<String>, edges: &[(&str, &str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        if index.len() != vertices.len() {
            return Err(Error::Validation(vec!["duplicate vertex name".into()]));
        }
        let mut out = Vec::new();
        for (name, s, t) in edges {
            let find = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownName(v.to_string()));
            out.push(Edge { name: name.to_string(), source: find(s)?, target: find(t)? });
        }
        let q = Quiver { vertices, edges: out };
        q.check()?;
        Ok(q)
    }

    pub fn check(&self) -> Result<()> {
        let mut problems = Vec::new();
        let mut seen = HashMap::new();
        for e in &self.edges {
            if e.source >= self.vertices.len() || e.target >= self.vertices.len() {
                problems.push(format!("edge `{}` has an endpoint outside the vertex set", e.name));
            }
            if seen.insert(e.name.as_str(), ()).is_some() || self.vertices.contains(&e.name) {
                problems.push(format!("name `{}` is used twice", e.name));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    fn cmp_edges(&self, a: &[usize], b: &[usize]) -> Ordering {
        let names = |s: &[usize]| s.iter().map(|e| self.edges[*e].name.as_str()).collect::<Vec<_>>();
        names(a).cmp(&names(b))
    }
}

/// A quiver with framing legs `W+ -> Q0` and `Q0 -> W-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedQuiver {
    pub quiver: Quiver,
    /// `(name, j(w))` for each `w` in `W+`.
    pub plus: Vec<(String, usize)>,
    pub minus: Vec<(String, usize)>,
}

impl FramedQuiver {
    pub fn unframed(quiver: Quiver) -> Self {
        FramedQuiver { quiver, plus: Vec::new(), minus: Vec::new() }
    }

    pub fn check(&self) -> Result<()> {
        self.quiver.check()?;
        let n = self.quiver.vertices.len();
        let bad: Vec<String> = self
            .plus
            .iter()
            .chain(&self.minus)
            .filter(|(_, v)| *v >= n)
            .map(|(w, _)| format!("framing vertex `{w}` attaches outside the quiver"))
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(bad))
        }
    }
}

/// Cyclic class of a closed path, stored as its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    edges: Vec<usize>,
}

impl Cycle {
    /// Checks incidence and canonicalizes.
    pub fn new(q: &Quiver, edges: Vec<usize>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Validation(vec!["empty cycle".into()]));
        }
        for i in 0..edges.len() {
            let (a, b) = (&q.edges[edges[i]], &q.edges[edges[(i + 1) % edges.len()]]);
            if a.target != b.source {
                return Err(Error::Validation(vec![format!("`{}` does not end where `{}` starts", a.name, b.name)]));
            }
        }
        let best = (0..edges.len())
            .map(|r| rotate(&edges, r))
            .min_by(|x, y| q.cmp_edges(x, y))
            .expect("nonempty");
        Ok(Cycle { edges: best })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degree(&self) -> usize {
        cycle_degree(self)
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.edges.iter().map(|e| q.edges[*e].name.clone()).collect()
    }
}

fn rotate(v: &[usize], r: usize) -> Vec<usize> {
    v[r..].iter().chain(&v[..r]).copied().collect()
}

/// Largest `d` such that the cycle is a `d`-th power.
pub fn cycle_degree(c: &Cycle) -> usize {
    let n = c.edges.len();
    let period = (1..=n).find(|p| n % p == 0 && rotate(&c.edges, *p) == c.edges).unwrap_or(n);
    n / period
}

/// One canonical representative per cyclic class, lengths `1..=max_len`,
/// ordered by length and then by edge names.
pub fn enumerate_cycles(q: &Quiver, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        let mut found = Vec::new();
        let mut walk = Vec::with_capacity(n);
        for start in 0..q.vertices.len() {
            closed_walks(q, start, start, n, &mut walk, &mut found);
        }
        found.retain(|w: &Vec<usize>| (0..n).all(|r| q.cmp_edges(w, &rotate(w, r)) != Ordering::Greater));
        found.sort_by(|a, b| q.cmp_edges(a, b));
        found.dedup();
        out.extend(found.into_iter().map(|edges| Cycle { edges }));
    }
    out
}

fn closed_walks(q: &Quiver, start: usize, at: usize, left: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        if at == start {
            out.push(walk.clone());
        }
        return;
    }
    for (i, e) in q.edges.iter().enumerate() {
        if e.source == at {
            walk.push(i);
            closed_walks(q, start, e.target, left - 1, walk, out);
            walk.pop();
        }
    }
}

/// `(w+, e1, ..., en, w-)` with indices into the framing lists and edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramedPath {
    pub plus: usize,
    pub edges: Vec<usize>,
    pub minus: usize,
}

impl FramedPath {
    pub fn check(&self, fq: &FramedQuiver) -> Result<()> {
        let q = &fq.quiver;
        let mut at = fq.plus.get(self.plus).ok_or_else(|| Error::UnknownName(format!("W+ #{}", self.plus)))?.1;
        for e in &self.edges {
            let edge = q.edges.get(*e).ok_or_else(|| Error::UnknownName(format!("edge #{e}")))?;
            if edge.source != at {
                return Err(Error::Validation(vec![format!("edge `{}` does not continue the path", edge.name)]));
            }
            at = edge.target;
        }
        let end = fq.minus.get(self.minus).ok_or_else(|| Error::UnknownName(format!("W- #{}", self.minus)))?.1;
        if end != at {
            return Err(Error::Validation(vec!["path does not end at its W- vertex".into()]));
        }
        Ok(())
    }

    pub fn names(&self, fq: &FramedQuiver) -> Vec<String> {
        let mut v = vec![fq.plus[self.plus].0.clone()];
        v.extend(self.edges.iter().map(|e| fq.quiver.edges[*e].name.clone()));
        v.push(fq.minus[self.minus].0.clone());
        v
    }
}

/// All framed paths with at most `max_len` interior edges, ordered by
/// `(w+, w-, length, edge names)`.
pub fn enumerate_framed_paths(fq: &FramedQuiver, max_len: usize) -> Vec<FramedPath> {
    let q = &fq.quiver;
    let mut out = Vec::new();
    for (pi, (_, start)) in fq.plus.iter().enumerate() {
        for (mi, (_, end)) in fq.minus.iter().enumerate() {
            let mut found = Vec::new();
            let mut walk = Vec::new();
            for n in 0..=max_len {
                open_walks(q, *start, *end, n, &mut walk, &mut found);
            }
            found.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| q.cmp_edges(a, b)));
            out.extend(found.into_iter().map(|edges| FramedPath { plus: pi, edges, minus: mi }));
        }
    }
    out
}

fn open_walks(q: &Quiver, at: usize, end: usize, left: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        if at == end {
            out.push(walk.clone());
        }
        return;
    }
    for (i, e) in q.edges.iter().enumerate() {
        if e.source == at {
            walk.push(i);
            open_walks(q, e.target, end, left - 1, walk, out);
            walk.pop();
        }
    }
}

/// Adds a loop `v*` at every vertex.
pub fn augment(q: &Quiver) -> Quiver {
    let mut edges = q.edges.clone();
    edges.extend(q.vertices.iter().enumerate().map(|(i, v)| Edge { name: format!("{v}*"), source: i, target: i }));
    Quiver { vertices: q.vertices.clone(), edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan() -> Quiver {
        Quiver::new(vec!["v".into()], &[("a", "v", "v")]).unwrap()
    }

    #[test]
    fn cycles_of_small_quivers() {
        let q = jordan();
        let cs = enumerate_cycles(&q, 3);
        assert_eq!(cs.iter().map(Cycle::len).collect::<Vec<_>>(), vec![1, 2, 3]);

        let q = Quiver::new(vec!["v".into()], &[("a", "v", "v"), ("b", "v", "v")]).unwrap();
        let two: Vec<Vec<String>> = enumerate_cycles(&q, 2).iter().filter(|c| c.len() == 2).map(|c| c.names(&q)).collect();
        assert_eq!(two, vec![vec!["a", "a"], vec!["a", "b"], vec!["b", "b"]]);

        let q = Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2"), ("f", "2", "1")]).unwrap();
        let cs = enumerate_cycles(&q, 2);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].names(&q), vec!["e", "f"]);
    }

    #[test]
    fn degrees() {
        let q = Quiver::new(vec!["v".into()], &[("a", "v", "v"), ("b", "v", "v")]).unwrap();
        assert_eq!(Cycle::new(&q, vec![0]).unwrap().degree(), 1);
        assert_eq!(Cycle::new(&q, vec![0, 0]).unwrap().degree(), 2);
        assert_eq!(Cycle::new(&q, vec![0, 1, 0, 1]).unwrap().degree(), 2);
        assert_eq!(Cycle::new(&q, vec![1, 0, 0]).unwrap().edges(), &[0, 0, 1]);
    }

    #[test]
    fn framed_paths() {
        let bare = FramedQuiver {
            quiver: Quiver::new(vec!["v".into()], &[]).unwrap(),
            plus: vec![("w+".into(), 0)],
            minus: vec![("w-".into(), 0)],
        };
        assert_eq!(enumerate_framed_paths(&bare, 3).len(), 1);

        let looped = FramedQuiver { quiver: jordan(), ..bare.clone() };
        assert_eq!(enumerate_framed_paths(&looped, 2).len(), 3);

        let line = FramedQuiver {
            quiver: Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2")]).unwrap(),
            plus: vec![("w+".into(), 0)],
            minus: vec![("w-".into(), 1)],
        };
        let ps = enumerate_framed_paths(&line, 3);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].names(&line), vec!["w+", "e", "w-"]);
        assert!(ps[0].check(&line).is_ok());
    }

    #[test]
    fn augmentation_adds_loops() {
        let q = Quiver::new(vec!["1".into(), "2".into()], &[("e", "1", "2")]).unwrap();
        let p = augment(&q);
        assert_eq!(p.edges.len(), 3);
        assert!(p.edges[1..].iter().all(|e| e.source == e.target));
        assert_eq!(augment(&Quiver::new(vec!["v".into()], &[]).unwrap()).edges.len(), 1);
    }
}
