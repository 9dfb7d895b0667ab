//! Immutable simple graphs with bitset adjacency rows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of vertices stored as 64-bit words.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted element lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl VertexSet {
    /// The empty set over a universe of `n` vertices.
    pub fn new(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = VertexSet::new(n);
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        let w = v / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / 64) {
            *w &= !(1u64 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Least element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| {
                f(
                    self.words.get(i).copied().unwrap_or(0),
                    other.words.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        VertexSet { words }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn trimmed(&self) -> &[u64] {
        let end = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        let n = v.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_iter(n, v))
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph together with its map back to the parent.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the parent id of local vertex `i`.
    pub map: Vec<usize>,
}

impl Induced {
    /// Parent-side set for a local set.
    pub fn lift(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_iter(parent_n, local.iter().map(|v| self.map[v]))
    }

    /// Local id of a parent vertex.
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.map.iter().position(|&p| p == parent)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    /// Build a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
            }
        }
        g
    }

    /// Path on `n` vertices in id order.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// Cycle on `n ≥ 3` vertices in id order.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Union of closed neighborhoods of `s`.
    pub fn closed_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// Vertices outside `s` with a neighbor in `s`.
    pub fn open_of_set(&self, s: &VertexSet) -> VertexSet {
        self.closed_of_set(s).difference(s)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Every vertex of `a` adjacent to every vertex of `b` (sets disjoint).
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(&self.rows[v]))
    }

    /// No edges between `a` and `b`.
    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.rows[v].is_disjoint(b))
    }

    /// Induced subgraph on `s`, local ids in increasing parent order.
    pub fn induced(&self, s: &VertexSet) -> Result<Induced> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.induced_on(&s.to_vec()))
    }

    /// Induced subgraph on an explicit vertex list, keeping that order.
    /// The list may be empty.
    pub fn induced_on(&self, list: &[usize]) -> Induced {
        let k = list.len();
        let mut g = Graph::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(list[i], list[j]) {
                    g.rows[i].insert(j);
                    g.rows[j].insert(i);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(list.iter().map(|&v| l[v].clone()).collect());
        }
        Induced {
            graph: g,
            map: list.to_vec(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = VertexSet::full(self.n).difference(&self.rows[u]);
            row.remove(u);
            g.rows[u] = row;
        }
        g.labels = self.labels.clone();
        g
    }

    /// Connected components of `G[s]`, each sorted, ordered by least vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.rows[v]);
                }
                next.intersect_with(s);
                next.subtract(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.subtract(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Components of the complement, largest first, ties by least vertex.
    pub fn anticomponents(&self) -> Vec<VertexSet> {
        let mut comps = self.complement().components();
        comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
        comps
    }

    /// Vertices adjacent to all others, and the rest.
    pub fn universal_clique_peel(&self) -> (VertexSet, VertexSet) {
        let mut u = VertexSet::new(self.n);
        for v in 0..self.n {
            if self.rows[v].len() + 1 == self.n {
                u.insert(v);
            }
        }
        let core = self.vertices().difference(&u);
        (u, core)
    }

    /// Partition into closed-neighborhood twin classes.
    pub fn twin_decomposition(&self) -> TwinDecomposition {
        let closed: Vec<VertexSet> = (0..self.n).map(|v| self.closed(v)).collect();
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if class_of[v] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members = vec![v];
            class_of[v] = idx;
            for u in self.rows[v].iter() {
                if u > v && class_of[u] == usize::MAX && closed[u] == closed[v] {
                    class_of[u] = idx;
                    members.push(u);
                }
            }
            classes.push(members);
        }
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let skeleton = self.induced_on(&reps).graph;
        TwinDecomposition {
            classes,
            skeleton,
            class_of,
        }
    }

    /// Join with another graph: every vertex of `self` adjacent to every
    /// vertex of `other`, whose ids are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.rows[u].insert(self.n + v);
                g.rows[self.n + v].insert(u);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.rows[self.n + u].insert(self.n + v);
            g.rows[self.n + v].insert(self.n + u);
        }
        g
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.rows[perm[u]].insert(perm[v]);
            g.rows[perm[v]].insert(perm[u]);
        }
        g
    }
}

/// Twin classes and the skeleton graph on least-id representatives.
#[derive(Clone, Debug)]
pub struct TwinDecomposition {
    /// Classes ordered by least member; members sorted.
    pub classes: Vec<Vec<usize>>,
    /// Skeleton vertex `i` is `classes[i][0]`.
    pub skeleton: Graph,
    pub class_of: Vec<usize>,
}

impl TwinDecomposition {
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let a = VertexSet::from_iter(130, [1, 64, 129]);
        let b = VertexSet::from_iter(130, [64, 2]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 64, 129]);
        assert_eq!(a.intersection(&b).to_vec(), vec![64]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 129]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(1));
        assert!(VertexSet::from_iter(130, [64]).is_subset(&a));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::OutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
    }

    #[test]
    fn diamond_degrees() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let d: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(d, vec![3, 2, 3, 2]);
        let two = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(two.m(), 0);
    }

    #[test]
    fn induced_paths() {
        let c7 = Graph::cycle(7);
        let p = c7.induced(&VertexSet::from_iter(7, [0, 1, 2])).unwrap();
        assert_eq!(p.graph.edges(), vec![(0, 1), (1, 2)]);
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        let p = diamond.induced(&VertexSet::from_iter(4, [0, 1, 2])).unwrap();
        assert_eq!(p.graph.degree(1), 2);
        assert!(c7.induced(&VertexSet::new(7)).is_err());
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::complete(3).complement().m(), 0);
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn anticomponents_examples() {
        assert_eq!(Graph::complete(4).anticomponents().len(), 4);
        assert_eq!(Graph::cycle(7).anticomponents()[0].len(), 7);
        let g = Graph::complete(2).join(&Graph::empty(2));
        let ac = g.anticomponents();
        assert_eq!(ac[0].to_vec(), vec![2, 3]);
        assert_eq!(ac[1].to_vec(), vec![0]);
        assert_eq!(ac[2].to_vec(), vec![1]);
    }

    #[test]
    fn twins_and_peel() {
        let k4 = Graph::complete(4).twin_decomposition();
        assert_eq!(k4.classes, vec![vec![0, 1, 2, 3]]);
        assert_eq!(k4.skeleton.n(), 1);
        let c7 = Graph::cycle(7);
        assert_eq!(c7.twin_decomposition().classes.len(), 7);
        let (u, core) = Graph::complete(5).universal_clique_peel();
        assert_eq!((u.len(), core.len()), (5, 0));
        let (u, core) = c7.universal_clique_peel();
        assert_eq!((u.len(), core.len()), (0, 7));
        let j = Graph::complete(2).join(&c7);
        let (u, core) = j.universal_clique_peel();
        assert_eq!(u.to_vec(), vec![0, 1]);
        assert_eq!(core.len(), 7);
    }
}
