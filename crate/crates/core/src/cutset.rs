//! Clique-cutset decomposition into atoms and the coloring merge.
//!
//! Cutsets come from a minimal elimination ordering (MCS-M): every clique
//! minimal separator of the graph appears as the set of higher fill
//! neighbors of some vertex, so scanning those sets is a complete search.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solution::Coloring;

/// A clique `clique` whose removal leaves `side_a` and `side_b`
/// (both nonempty) with no edges between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCut {
    pub clique: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Result of MCS-M.
struct MinimalOrder {
    /// Elimination order, first eliminated first.
    order: Vec<usize>,
    /// Rows of the filled (triangulated) graph.
    fill: Vec<VertexSet>,
    /// Vertices whose higher fill neighborhood is a minimal separator of
    /// the filled graph.
    generators: VertexSet,
}

fn mcs_m(g: &Graph) -> MinimalOrder {
    let n = g.n();
    let mut fill: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut weight = vec![0usize; n];
    let mut unnumbered = VertexSet::full(n);
    let mut order = vec![0usize; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut generators = VertexSet::new(n);
    let mut prev_label = None;
    for i in (0..n).rev() {
        let v = unnumbered
            .iter()
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unnumbered vertex");
        order[i] = v;
        // the label does not grow: a new minimal separator starts here
        if prev_label.is_some_and(|p| weight[v] <= p) {
            generators.insert(v);
        }
        prev_label = Some(weight[v]);
        unnumbered.remove(v);
        // vertices reachable from v through unnumbered vertices of smaller weight
        let mut reached = VertexSet::new(n);
        let mut raise = Vec::new();
        for b in buckets.iter_mut() {
            b.clear();
        }
        for u in g.neighbors(v).intersection(&unnumbered).iter() {
            reached.insert(u);
            raise.push(u);
            buckets[weight[u]].push(u);
        }
        let mut level = 0;
        while level <= n {
            let Some(u) = buckets[level].pop() else {
                level += 1;
                continue;
            };
            let fresh = g.neighbors(u).intersection(&unnumbered).difference(&reached);
            for z in fresh.iter() {
                reached.insert(z);
                if weight[z] > level {
                    raise.push(z);
                    buckets[weight[z]].push(z);
                } else {
                    buckets[level].push(z);
                }
            }
        }
        for u in raise {
            weight[u] += 1;
            fill[v].insert(u);
            fill[u].insert(v);
        }
    }
    MinimalOrder { order, fill, generators }
}

/// Higher fill neighbors of each vertex.
fn madj(order: &[usize], fill: &[VertexSet]) -> Vec<VertexSet> {
    let n = order.len();
    let mut later = VertexSet::full(n);
    let mut out = vec![VertexSet::new(n); n];
    for &v in order {
        later.remove(v);
        out[v] = fill[v].intersection(&later);
    }
    out
}

fn component_of(g: &Graph, within: &VertexSet, v: usize) -> VertexSet {
    let mut comp = VertexSet::singleton(g.n(), v);
    let mut frontier = comp.clone();
    while !frontier.is_empty() {
        let mut next = VertexSet::new(g.n());
        for u in frontier.iter() {
            next.union_with(g.neighbors(u));
        }
        next.intersect_with(within);
        next.subtract(&comp);
        comp.union_with(&next);
        frontier = next;
    }
    comp
}

/// A clique-cut-partition, if the graph has one.
pub fn has_clique_cutset(g: &Graph) -> Option<CliqueCut> {
    if g.n() < 2 {
        return None;
    }
    let MinimalOrder { order, fill, .. } = mcs_m(g);
    let madj = madj(&order, &fill);
    let all = g.vertices();
    for &x in &order {
        let s = &madj[x];
        if !g.is_clique(s) {
            continue;
        }
        let rest = all.difference(s);
        let comp = component_of(g, &rest, x);
        let other = rest.difference(&comp);
        if !other.is_empty() {
            return Some(CliqueCut {
                clique: s.clone(),
                side_a: comp,
                side_b: other,
            });
        }
    }
    None
}

/// A node of the decomposition tree. Vertex ids refer to the root graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum Node {
    Leaf {
        vertices: Vec<usize>,
    },
    Internal {
        vertices: Vec<usize>,
        cutset: Vec<usize>,
        left: Box<Node>,
        right: Box<Node>,
    },
}

impl Node {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Node::Leaf { vertices } | Node::Internal { vertices, .. } => vertices,
        }
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a [usize]>) {
        match self {
            Node::Leaf { vertices } => out.push(vertices),
            Node::Internal { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }
}

/// Binary clique-cutset decomposition tree. At each internal node the
/// left child is an atom split off along `cutset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompTree {
    pub n: usize,
    pub root: Node,
}

impl DecompTree {
    /// Leaf vertex lists (sorted root ids), left to right.
    pub fn leaves(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    /// Indented text rendering.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        dump_node(&self.root, 0, &mut s);
        s
    }

    /// Check the structural invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        validate_node(g, &self.root)?;
        let mut covered = VertexSet::new(g.n());
        for leaf in self.leaves() {
            covered.union_with(&VertexSet::from_iter(g.n(), leaf.iter().copied()));
        }
        if covered != g.vertices() {
            return Err(Error::Internal("leaves do not cover the graph".into()));
        }
        Ok(())
    }
}

fn dump_node(node: &Node, depth: usize, s: &mut String) {
    let pad = "  ".repeat(depth);
    match node {
        Node::Leaf { vertices } => {
            let _ = writeln!(s, "{pad}atom n={} {:?}", vertices.len(), vertices);
        }
        Node::Internal { cutset, left, right, .. } => {
            let _ = writeln!(s, "{pad}cut {cutset:?}");
            dump_node(left, depth + 1, s);
            dump_node(right, depth + 1, s);
        }
    }
}

fn validate_node(g: &Graph, node: &Node) -> Result<()> {
    if let Node::Internal {
        vertices,
        cutset,
        left,
        right,
    } = node
    {
        let n = g.n();
        let s = VertexSet::from_iter(n, cutset.iter().copied());
        if !g.is_clique(&s) {
            return Err(Error::Internal(format!("cutset {cutset:?} is not a clique")));
        }
        let l = VertexSet::from_iter(n, left.vertices().iter().copied());
        let r = VertexSet::from_iter(n, right.vertices().iter().copied());
        if l.union(&r) != VertexSet::from_iter(n, vertices.iter().copied()) || l.intersection(&r) != s {
            return Err(Error::Internal(format!("children do not meet in cutset {cutset:?}")));
        }
        let (a, b) = (l.difference(&s), r.difference(&s));
        if a.is_empty() || b.is_empty() || !g.is_anticomplete_to(&a, &b) {
            return Err(Error::Internal(format!("cutset {cutset:?} does not separate")));
        }
        validate_node(g, left)?;
        validate_node(g, right)?;
    }
    Ok(())
}

/// Decompose `g` by clique cutsets until every leaf is an atom.
///
/// The work happens on the twin skeleton: blowing vertices up into cliques
/// neither creates nor destroys clique cutsets, so the skeleton's tree with
/// every vertex replaced by its twin class is a tree for `g`.
pub fn decompose(g: &Graph) -> DecompTree {
    let twins = g.twin_decomposition();
    let all: Vec<usize> = (0..twins.skeleton.n()).collect();
    let root = decompose_list(&twins.skeleton, &all);
    DecompTree {
        n: g.n(),
        root: expand_node(&root, &twins.classes),
    }
}

fn expand_node(node: &Node, classes: &[Vec<usize>]) -> Node {
    let expand = |list: &[usize]| {
        let mut out: Vec<usize> = list.iter().flat_map(|&s| classes[s].iter().copied()).collect();
        out.sort_unstable();
        out
    };
    match node {
        Node::Leaf { vertices } => Node::Leaf { vertices: expand(vertices) },
        Node::Internal { vertices, cutset, left, right } => Node::Internal {
            vertices: expand(vertices),
            cutset: expand(cutset),
            left: Box::new(expand_node(left, classes)),
            right: Box::new(expand_node(right, classes)),
        },
    }
}

// Decompose G[list] where `list` is sorted; ids in the result are root ids.
fn decompose_list(g: &Graph, list: &[usize]) -> Node {
    if list.len() <= 2 && (list.len() < 2 || g.has_edge(list[0], list[1])) {
        return Node::Leaf {
            vertices: list.to_vec(),
        };
    }
    let sub = g.induced_on(list);
    let h = &sub.graph;
    let n = h.n();
    let MinimalOrder { order, fill, generators } = mcs_m(h);
    let madj = madj(&order, &fill);
    let mut remaining = h.vertices();
    let mut steps: Vec<(VertexSet, VertexSet)> = Vec::new();
    for &x in &order {
        if !generators.contains(x) || !remaining.contains(x) {
            continue;
        }
        let s = &madj[x];
        if !s.is_subset(&remaining) || !h.is_clique(s) {
            continue;
        }
        let rest = remaining.difference(s);
        let comp = component_of(h, &rest, x);
        if rest.difference(&comp).is_empty() {
            continue;
        }
        steps.push((s.clone(), comp.union(s)));
        remaining.subtract(&comp);
    }
    let lift = |set: &VertexSet| -> Vec<usize> { set.iter().map(|v| sub.map[v]).collect() };
    let mut node = atom_or_split(g, lift(&remaining));
    let mut covered = remaining;
    for (s, atom) in steps.into_iter().rev() {
        covered.union_with(&atom);
        let left = atom_or_split(g, lift(&atom));
        node = Node::Internal {
            vertices: lift(&covered),
            cutset: lift(&s),
            left: Box::new(left),
            right: Box::new(node),
        };
    }
    debug_assert_eq!(covered.len(), n);
    node
}

// The minimal-ordering scan yields atoms; re-check and split further if not.
fn atom_or_split(g: &Graph, list: Vec<usize>) -> Node {
    let sub = g.induced_on(&list);
    if has_clique_cutset(&sub.graph).is_some() {
        decompose_list(g, &list)
    } else {
        Node::Leaf { vertices: list }
    }
}

/// Merge per-leaf colorings (local ids follow each leaf's sorted vertex
/// list, colors in `1..=k`) into a proper k-coloring of the root graph.
pub fn merge_colorings(g: &Graph, tree: &DecompTree, leaf_colorings: &[Coloring], k: usize) -> Result<Coloring> {
    let leaves = tree.leaves();
    if leaves.len() != leaf_colorings.len() {
        return Err(Error::Invalid(format!(
            "{} leaf colorings for {} leaves",
            leaf_colorings.len(),
            leaves.len()
        )));
    }
    let mut colors = vec![0usize; g.n()];
    let mut next_leaf = 0;
    merge_node(g, &tree.root, leaf_colorings, k, &mut next_leaf, &mut colors)?;
    let c = Coloring { colors, count: k };
    if let Some((u, v)) = c.conflict(g) {
        return Err(Error::Invalid(format!("merged coloring has monochromatic edge {u}-{v}")));
    }
    Ok(Coloring::new(c.colors))
}

fn merge_node(
    g: &Graph,
    node: &Node,
    leaf_colorings: &[Coloring],
    k: usize,
    next_leaf: &mut usize,
    colors: &mut [usize],
) -> Result<()> {
    match node {
        Node::Leaf { vertices } => {
            let c = &leaf_colorings[*next_leaf];
            *next_leaf += 1;
            if c.colors.len() != vertices.len() {
                return Err(Error::Invalid(format!("leaf {vertices:?}: coloring has wrong length")));
            }
            let sub = g.induced_on(vertices);
            if c.colors.iter().any(|&x| x == 0 || x > k) || !c.is_proper(&sub.graph) {
                return Err(Error::Invalid(format!("leaf {vertices:?}: coloring is not a proper {k}-coloring")));
            }
            for (i, &v) in vertices.iter().enumerate() {
                colors[v] = c.colors[i];
            }
            Ok(())
        }
        Node::Internal {
            cutset, left, right, ..
        } => {
            if cutset.len() > k {
                return Err(Error::Invalid(format!("cutset {cutset:?} larger than k = {k}")));
            }
            merge_node(g, left, leaf_colorings, k, next_leaf, colors)?;
            let fixed: Vec<usize> = cutset.iter().map(|&v| colors[v]).collect();
            merge_node(g, right, leaf_colorings, k, next_leaf, colors)?;
            // permute the right side so the cutset keeps the left colors
            let mut perm = vec![0usize; k + 1];
            let mut taken = vec![false; k + 1];
            for (i, &v) in cutset.iter().enumerate() {
                perm[colors[v]] = fixed[i];
                taken[fixed[i]] = true;
            }
            let mut free = (1..=k).filter(|&c| !taken[c]);
            for c in 1..=k {
                if perm[c] == 0 {
                    perm[c] = free.next().expect("permutation completes");
                }
            }
            let left_set = VertexSet::from_iter(g.n(), left.vertices().iter().copied());
            for &v in right.vertices() {
                if !left_set.contains(v) {
                    colors[v] = perm[colors[v]];
                }
            }
            for (i, &v) in cutset.iter().enumerate() {
                colors[v] = fixed[i];
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    fn glued_c7() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let ring = [0, 7, 8, 9, 10, 11, 12];
        e.extend((0..7).map(|i| (ring[i], ring[(i + 1) % 7])));
        Graph::from_edges(13, &e).unwrap()
    }

    #[test]
    fn cutset_examples() {
        let cut = has_clique_cutset(&diamond()).unwrap();
        assert_eq!(cut.clique.to_vec(), vec![0, 2]);
        assert!(has_clique_cutset(&Graph::complete(5)).is_none());
        assert!(has_clique_cutset(&Graph::cycle(7)).is_none());
        assert!(has_clique_cutset(&Graph::empty(2)).is_some());
    }

    #[test]
    fn glued_squares_found() {
        // two C4s sharing edge 0-1; a per-vertex neighborhood scan misses this
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(has_clique_cutset(&g).unwrap().clique.to_vec(), vec![0, 1]);
    }

    #[test]
    fn decompose_examples() {
        let p7 = Graph::path(7);
        let t = decompose(&p7);
        t.validate(&p7).unwrap();
        assert_eq!(t.leaves().len(), 6);
        assert!(t.leaves().iter().all(|l| l.len() == 2));
        let c7 = Graph::cycle(7);
        assert_eq!(decompose(&c7).leaves().len(), 1);
        let g = glued_c7();
        let t = decompose(&g);
        t.validate(&g).unwrap();
        let mut sizes: Vec<_> = t.leaves().iter().map(|l| l.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![7, 7]);
    }

    #[test]
    fn merge_examples() {
        let p7 = Graph::path(7);
        let t = decompose(&p7);
        let cs = vec![Coloring::new(vec![1, 2]); t.leaves().len()];
        let c = merge_colorings(&p7, &t, &cs, 2).unwrap();
        assert!(c.is_proper(&p7));
        let d = diamond();
        let t = decompose(&d);
        let cs = vec![Coloring::new(vec![1, 2, 3]), Coloring::new(vec![3, 1, 2])];
        let c = merge_colorings(&d, &t, &cs, 3).unwrap();
        assert!(c.is_proper(&d));
        assert!(merge_colorings(&d, &t, &cs, 2).is_err());
    }
}
