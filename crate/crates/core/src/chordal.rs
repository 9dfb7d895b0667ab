//! Chordality testing and exact optimization on chordal graphs.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::solution::{Coloring, WeightedSet};

/// A simplicial elimination ordering: the later neighbors of each vertex
/// form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

impl EliminationOrder {
    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Later neighbors of each vertex.
    pub fn later_neighbors(&self, g: &Graph) -> Vec<VertexSet> {
        let mut later = VertexSet::full(g.n());
        let mut out = vec![VertexSet::new(g.n()); g.n()];
        for &v in &self.order {
            later.remove(v);
            out[v] = g.neighbors(v).intersection(&later);
        }
        out
    }
}

/// Maximum cardinality search; returns vertices in visit order.
fn mcs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !done[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        done[best] = true;
        visit.push(best);
        for u in g.neighbors(best).iter() {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit
}

/// First vertex whose later neighbors are not a clique, with a
/// nonadjacent pair among them.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != parent && !g.has_edge(parent, u) {
                    return Some((v, parent, u));
                }
            }
        }
    }
    None
}

/// A hole of length at least 4, if one exists.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let hint = peo_violation(g, &mcs(g).into_iter().rev().collect::<Vec<_>>());
    let mut tries: Vec<(usize, usize, usize)> = hint.into_iter().collect();
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    tries.push((v, x, y));
                }
            }
        }
        for (v, x, y) in tries.drain(..) {
            let mut allowed = g.vertices().difference(&g.closed(v));
            allowed.insert(x);
            allowed.insert(y);
            if let Some(path) = shortest_path(g, &allowed, x, y) {
                let mut cycle = vec![v];
                cycle.extend(path);
                return Some(crate::patterns::canonical_cycle(&cycle));
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, allowed: &VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for x in g.neighbors(u).intersection(allowed).iter() {
            if prev[x] == usize::MAX {
                prev[x] = u;
                queue.push_back(x);
            }
        }
    }
    None
}

/// A verified simplicial elimination ordering, or a hole.
pub fn perfect_elimination_order(g: &Graph) -> std::result::Result<EliminationOrder, Vec<usize>> {
    let order: Vec<usize> = mcs(g).into_iter().rev().collect();
    if peo_violation(g, &order).is_none() {
        Ok(EliminationOrder { order })
    } else {
        Err(find_hole(g).expect("a graph without a PEO has a hole"))
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_ok()
}

fn peo_or_err(g: &Graph) -> Result<EliminationOrder> {
    perfect_elimination_order(g).map_err(Error::NotChordal)
}

/// Maximum weight stable set of a chordal graph. Vertices of weight ≤ 0
/// never enter the answer.
pub fn chordal_mwis(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    let peo = peo_or_err(g)?;
    let later = peo.later_neighbors(g);
    let mut residual: Vec<Rational> = w.iter().map(|x| if *x > Rational::zero() { *x } else { Rational::zero() }).collect();
    let mut red = Vec::new();
    for &v in &peo.order {
        let r = residual[v];
        if r > Rational::zero() {
            red.push(v);
            for u in later[v].iter() {
                residual[u] = if residual[u] > r { residual[u] - r } else { Rational::zero() };
            }
        }
    }
    let mut set = VertexSet::new(g.n());
    for &v in red.iter().rev() {
        if g.neighbors(v).is_disjoint(&set) {
            set.insert(v);
        }
    }
    Ok(WeightedSet::from_set(set, w))
}

/// Maximum weight clique of a chordal graph; only positive-weight
/// vertices are taken, so the answer may be empty.
pub fn chordal_max_weight_clique(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    let peo = peo_or_err(g)?;
    let later = peo.later_neighbors(g);
    let mut best = WeightedSet::empty(g.n());
    for &v in &peo.order {
        let mut c = later[v].clone();
        c.insert(v);
        let c = VertexSet::from_iter(g.n(), c.iter().filter(|&u| w[u] > Rational::zero()));
        let cand = WeightedSet::from_set(c, w);
        if cand.weight > best.weight {
            best = cand;
        }
    }
    Ok(best)
}

/// Optimal coloring of a chordal graph: greedy along the reverse of a
/// perfect elimination ordering.
pub fn chordal_coloring(g: &Graph) -> Result<Coloring> {
    let peo = peo_or_err(g)?;
    let mut colors = vec![0usize; g.n()];
    for &v in peo.order.iter().rev() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
        colors[v] = (1..).find(|c| !used.contains(c)).unwrap();
    }
    Ok(Coloring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::unit_weights;

    fn r(v: &[i128]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn peo_examples() {
        assert!(perfect_elimination_order(&Graph::complete(4)).is_ok());
        let hole = perfect_elimination_order(&Graph::cycle(4)).unwrap_err();
        assert_eq!(hole, vec![0, 1, 2, 3]);
        let hole = perfect_elimination_order(&Graph::cycle(7)).unwrap_err();
        assert_eq!(hole.len(), 7);
    }

    #[test]
    fn mwis_examples() {
        let p3 = Graph::path(3);
        let s = chordal_mwis(&p3, &unit_weights(3)).unwrap();
        assert_eq!(s.vertices.to_vec(), vec![0, 2]);
        let s = chordal_mwis(&Graph::complete(4), &r(&[1, 2, 3, 4])).unwrap();
        assert_eq!(s.vertices.to_vec(), vec![3]);
        let s = chordal_mwis(&Graph::complete(4), &r(&[-1, -2, 0, -4])).unwrap();
        assert!(s.vertices.is_empty());
        assert!(chordal_mwis(&Graph::cycle(5), &unit_weights(5)).is_err());
    }

    #[test]
    fn clique_examples() {
        let s = chordal_max_weight_clique(&Graph::complete(4), &unit_weights(4)).unwrap();
        assert_eq!(s.vertices.len(), 4);
        let s = chordal_max_weight_clique(&Graph::path(3), &r(&[5, 1, 5])).unwrap();
        assert_eq!(s.weight, Rational::from_integer(6));
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = chordal_max_weight_clique(&diamond, &unit_weights(4)).unwrap();
        assert_eq!(s.weight, Rational::from_integer(3));
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(chordal_coloring(&Graph::complete(4)).unwrap().count, 4);
        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let c = chordal_coloring(&tree).unwrap();
        assert_eq!(c.count, 2);
        assert!(c.is_proper(&tree));
    }
}
