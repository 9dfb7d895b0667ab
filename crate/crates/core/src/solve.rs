//! Exact coloring, maximum weight stable set and maximum weight clique,
//! assembled from the clique-cutset tree and per-atom certificates.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs::{bracelet_arcs, emerald_arcs, pca_color_report};
use crate::certificate::{verify_certificate, AtomCertificate, AtomKind, LanternPartition, RingPartition};
use crate::chordal::{chordal_max_weight_clique, chordal_mwis};
use crate::cutset::{decompose, merge_colorings, Node};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{brute_max_clique_capped, brute_mwis_capped};
use crate::patterns::class_membership;
use crate::rational::{unit_weights, Rational};
use crate::recognize::{recognize_atom_with, RecognizeOptions};
use crate::solution::{Coloring, WeightedSet};

/// Solver knobs.
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Inputs up to this size are checked for class membership first.
    pub check_threshold: usize,
    /// Worker threads for independent atoms; 0 uses the global pool.
    pub jobs: usize,
    /// Largest subgraph handed to a brute-force fallback.
    pub max_oracle: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_threshold: 64, jobs: 0, max_oracle: 22 }
    }
}

/// What happened on the way to an answer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub atoms: usize,
    /// Leaf subproblems solved; the stable set recursion revisits leaves.
    pub atom_solves: usize,
    /// Recognized classes (coloring and clique only).
    pub classes: BTreeMap<String, usize>,
    /// Subproblems that were not chordal and went to brute force.
    pub oracle_fallbacks: usize,
    /// Atoms whose coloring could not be proven optimal within budget.
    pub unproven: usize,
}

impl Diagnostics {
    fn absorb(&mut self, other: Diagnostics) {
        self.atoms += other.atoms;
        self.atom_solves += other.atom_solves;
        for (k, v) in other.classes {
            *self.classes.entry(k).or_default() += v;
        }
        self.oracle_fallbacks += other.oracle_fallbacks;
        self.unproven += other.unproven;
    }

    fn atom(kind: &AtomKind) -> Self {
        let mut d = Diagnostics { atoms: 1, atom_solves: 1, ..Default::default() };
        d.classes.insert(kind.name().to_string(), 1);
        d
    }
}

/// A solver answer with its diagnostics.
#[derive(Clone, Debug)]
pub struct Solved<T> {
    pub value: T,
    pub diagnostics: Diagnostics,
}

/// Atoms up to the threshold must lie in the class; larger ones are trusted
/// and caught later only if their structure fails recognition.
fn check_atom(h: &Graph, opts: &SolveOptions) -> Result<()> {
    if h.n() <= opts.check_threshold {
        if let Some(w) = class_membership(h).violation() {
            return Err(Error::ClassViolation {
                message: format!("an atom contains an induced {:?}", w.kind),
                witness: Some(w.clone()),
            });
        }
    }
    Ok(())
}

fn check_weights(g: &Graph, w: &[Rational]) -> Result<()> {
    if w.len() != g.n() {
        return Err(Error::Invalid(format!("{} weights for {} vertices", w.len(), g.n())));
    }
    Ok(())
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn leaf_certificate(h: &Graph, opts: &SolveOptions) -> Result<AtomCertificate> {
    recognize_atom_with(h, &RecognizeOptions { check_threshold: opts.check_threshold })
}

/// Minimum coloring.
pub fn min_coloring(g: &Graph) -> Result<Coloring> {
    Ok(min_coloring_with(g, &SolveOptions::default())?.value)
}

pub fn min_coloring_with(g: &Graph, opts: &SolveOptions) -> Result<Solved<Coloring>> {
    if g.n() == 0 {
        return Ok(Solved { value: Coloring::new(vec![]), diagnostics: Diagnostics::default() });
    }
    let tree = decompose(g);
    let leaves = tree.leaves();
    let results: Vec<Result<(Coloring, Diagnostics)>> = in_pool(opts.jobs, || {
        leaves
            .par_iter()
            .map(|leaf| {
                let h = g.induced_on(leaf).graph;
                let cert = leaf_certificate(&h, opts)?;
                let (c, proven) = color_atom_report(&h, &cert)?;
                let mut d = Diagnostics::atom(&cert.kind);
                d.unproven += usize::from(!proven);
                Ok((c, d))
            })
            .collect()
    });
    let mut diagnostics = Diagnostics::default();
    let mut colorings = Vec::with_capacity(results.len());
    for r in results {
        let (c, d) = r?;
        diagnostics.absorb(d);
        colorings.push(c);
    }
    let k = colorings.iter().map(|c| c.count).max().unwrap_or(0);
    let value = merge_colorings(g, &tree, &colorings, k)?;
    value.check(g, "merged coloring")?;
    Ok(Solved { value, diagnostics })
}

/// Optimal coloring of one atom from its certificate: the universal clique
/// takes the first colors, the core follows.
pub fn color_atom(g: &Graph, cert: &AtomCertificate) -> Result<Coloring> {
    Ok(color_atom_report(g, cert)?.0)
}

/// Core graph with the certificate relabeled onto it.
fn core_of(g: &Graph, cert: &AtomCertificate) -> (Graph, Vec<usize>, AtomKind) {
    let core = cert.core();
    let sub = g.induced_on(&core);
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in sub.map.iter().enumerate() {
        inv[v] = i;
    }
    let local = AtomCertificate { universal: vec![], kind: cert.kind.clone() }.relabel(&inv);
    (sub.graph, sub.map, local.kind)
}

fn color_atom_report(g: &Graph, cert: &AtomCertificate) -> Result<(Coloring, bool)> {
    let errs = verify_certificate(g, cert);
    if !errs.is_empty() {
        return Err(Error::Certificate(errs));
    }
    let (h, map, kind) = core_of(g, cert);
    let omega = |k: &AtomKind| -> Result<usize> {
        let c = AtomCertificate { universal: vec![], kind: k.clone() };
        Ok(clique_number_partition(&h, &c, &unit_weights(h.n()))?.vertices.len())
    };
    let (core, proven) = match &kind {
        AtomKind::Complete => (Coloring::new(vec![]), true),
        AtomKind::Bracelet(p) => {
            let r = pca_color_report(&h, &bracelet_arcs(&h, p)?)?;
            (r.coloring, r.optimal)
        }
        AtomKind::Emerald(e) => {
            let r = pca_color_report(&h, &emerald_arcs(&h, e)?)?;
            (r.coloring, r.optimal)
        }
        AtomKind::Lantern(p) => (greedy_color_lantern(&h, p, omega(&kind)?)?, true),
        AtomKind::Ring6(p) | AtomKind::Wreath(p) => (greedy_color_ring(&h, p, omega(&kind)?)?, true),
        AtomKind::Crown(p) => (greedy_color_ring(&h, &p.ring(), omega(&kind)?)?, true),
    };
    let u = cert.universal.len();
    let mut colors = vec![0; g.n()];
    for (i, &v) in cert.universal.iter().enumerate() {
        colors[v] = i + 1;
    }
    for (i, &v) in map.iter().enumerate() {
        colors[v] = core.colors[i] + u;
    }
    let c = Coloring::new(colors);
    if let Some((a, b)) = c.conflict(g) {
        return Err(Error::Internal(format!("atom coloring: edge {a}-{b} is monochromatic")));
    }
    Ok((c, proven))
}

fn finish_greedy(g: &Graph, colors: Vec<usize>, omega: usize, what: &str) -> Result<Coloring> {
    if let Some(v) = colors.iter().position(|&c| c == 0 || c > omega) {
        return Err(Error::Internal(format!("{what}: vertex {v} falls outside colors 1..={omega}")));
    }
    let c = Coloring::new(colors);
    match c.conflict(g) {
        Some((u, v)) => Err(Error::Internal(format!("{what}: edge {u}-{v} is monochromatic"))),
        None => Ok(c),
    }
}

/// Lantern coloring with ω colors: `B_i` count up from 1, `C_i` down from
/// ω, `A` down from ω, `D` up from 1, each list in its stored order.
pub fn greedy_color_lantern(g: &Graph, p: &LanternPartition, omega: usize) -> Result<Coloring> {
    let mut colors = vec![0usize; g.n()];
    let up = |list: &[usize], colors: &mut Vec<usize>| {
        for (j, &v) in list.iter().enumerate() {
            colors[v] = j + 1;
        }
    };
    let down = |list: &[usize], colors: &mut Vec<usize>| {
        for (j, &v) in list.iter().enumerate() {
            colors[v] = omega.saturating_sub(j);
        }
    };
    for b in &p.b {
        up(b, &mut colors);
    }
    for c in &p.c {
        down(c, &mut colors);
    }
    down(&p.a, &mut colors);
    up(&p.d, &mut colors);
    finish_greedy(g, colors, omega, "lantern coloring")
}

/// Ring coloring with ω colors: even parts count up from 1, odd parts
/// down from ω.
pub fn greedy_color_ring(g: &Graph, p: &RingPartition, omega: usize) -> Result<Coloring> {
    let mut colors = vec![0usize; g.n()];
    for (i, part) in p.parts.iter().enumerate() {
        for (j, &v) in part.iter().enumerate() {
            colors[v] = if i % 2 == 0 { j + 1 } else { omega.saturating_sub(j) };
        }
    }
    finish_greedy(g, colors, omega, "ring coloring")
}

/// Best clique inside `list` (ids of `g`), chordal route first.
fn window_clique(g: &Graph, list: &[usize], w: &[Rational], opts: &SolveOptions, diag: &mut Diagnostics) -> Result<WeightedSet> {
    let sub = g.induced_on(list);
    let lw: Vec<Rational> = sub.map.iter().map(|&v| w[v]).collect();
    let local = match chordal_max_weight_clique(&sub.graph, &lw) {
        Ok(s) => s,
        Err(Error::NotChordal(_)) => {
            diag.oracle_fallbacks += 1;
            brute_max_clique_capped(&sub.graph, &lw, opts.max_oracle)?
        }
        Err(e) => return Err(e),
    };
    Ok(WeightedSet::from_set(sub.lift(&local.vertices, g.n()), w))
}

fn cat(lists: &[&[usize]]) -> Vec<usize> {
    let mut v: Vec<usize> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Cliques of the core that every maximal clique falls into.
fn core_windows(kind: &AtomKind) -> Vec<Vec<usize>> {
    let ring = |p: &RingPartition| (0..p.k()).map(|i| cat(&[&p.parts[i], &p.parts[(i + 1) % p.k()]])).collect();
    match kind {
        AtomKind::Complete => vec![],
        AtomKind::Ring6(p) | AtomKind::Wreath(p) => ring(p),
        AtomKind::Crown(p) => ring(&p.ring()),
        AtomKind::Lantern(p) => {
            let mut out = Vec::new();
            for i in 0..p.r() {
                out.push(cat(&[&p.a, &p.b[i]]));
                out.push(cat(&[&p.b[i], &p.c[i]]));
                out.push(cat(&[&p.c[i], &p.d]));
            }
            out
        }
        AtomKind::Bracelet(p) => (0..7).map(|i| cat(&[&p.part(i + 6), &p.part(i), &p.part(i + 1)])).collect(),
        AtomKind::Emerald(e) => {
            let p = &e.parts;
            let s = p.i_star;
            let mut out: Vec<Vec<usize>> = (0..7).map(|i| cat(&[&p.part(i + 6), &p.part(i), &p.part(i + 1)])).collect();
            out.push(cat(&[&e.c, &p.star[(s + 2) % 7], &p.part(s + 3), &p.part(s + 4), &p.star[(s + 5) % 7]]));
            out
        }
    }
}

fn best_window(g: &Graph, kind: &AtomKind, w: &[Rational], opts: &SolveOptions, diag: &mut Diagnostics) -> Result<WeightedSet> {
    let mut best = WeightedSet::empty(g.n());
    for win in core_windows(kind) {
        let cand = window_clique(g, &win, w, opts, diag)?;
        if cand.weight > best.weight {
            best = cand;
        }
    }
    Ok(best)
}

/// Maximum weight clique of a ring or lantern from its windows.
pub fn clique_number_partition(g: &Graph, cert: &AtomCertificate, w: &[Rational]) -> Result<WeightedSet> {
    check_weights(g, w)?;
    match cert.kind {
        AtomKind::Ring6(_) | AtomKind::Wreath(_) | AtomKind::Crown(_) | AtomKind::Lantern(_) => {}
        ref k => return Err(Error::Invalid(format!("window clique rule does not apply to {}", k.name()))),
    }
    let mut diag = Diagnostics::default();
    let core = best_window(g, &cert.kind, w, &SolveOptions::default(), &mut diag)?;
    Ok(with_universal(core, &cert.universal, w))
}

fn with_universal(mut set: WeightedSet, universal: &[usize], w: &[Rational]) -> WeightedSet {
    for &u in universal {
        if w[u] > Rational::zero() {
            set.vertices.insert(u);
        }
    }
    WeightedSet::from_set(set.vertices, w)
}

/// Maximum weight clique.
pub fn max_weight_clique(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    Ok(max_weight_clique_with(g, w, &SolveOptions::default())?.value)
}

pub fn max_weight_clique_with(g: &Graph, w: &[Rational], opts: &SolveOptions) -> Result<Solved<WeightedSet>> {
    check_weights(g, w)?;
    let tree = decompose(g);
    let leaves = tree.leaves();
    let results: Vec<Result<(WeightedSet, Diagnostics)>> = in_pool(opts.jobs, || {
        leaves
            .par_iter()
            .filter(|leaf| !leaf.is_empty())
            .map(|leaf| {
                let sub = g.induced_on(leaf);
                let h = &sub.graph;
                let lw: Vec<Rational> = sub.map.iter().map(|&v| w[v]).collect();
                let cert = leaf_certificate(h, opts)?;
                let mut d = Diagnostics::atom(&cert.kind);
                let core = best_window(h, &cert.kind, &lw, opts, &mut d)?;
                let local = with_universal(core, &cert.universal, &lw);
                Ok((WeightedSet::from_set(sub.lift(&local.vertices, g.n()), w), d))
            })
            .collect()
    });
    let mut best = WeightedSet::empty(g.n());
    let mut diagnostics = Diagnostics::default();
    for r in results {
        let (s, d) = r?;
        diagnostics.absorb(d);
        if s.weight > best.weight {
            best = s;
        }
    }
    if !best.is_valid_clique(g, w) {
        return Err(Error::Internal("clique solver returned a non-clique".into()));
    }
    Ok(Solved { value: best, diagnostics })
}

/// Maximum weight stable set of an atom, or of an induced subgraph of one:
/// the best of the empty set, a single universal vertex, and `w(v)` plus a
/// chordal solve on `G - N[v]` for each core vertex `v`.
pub fn mwis_atom(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    check_weights(g, w)?;
    let mut diag = Diagnostics::default();
    mwis_atom_inner(g, w, &SolveOptions::default(), &mut diag)
}

fn mwis_atom_inner(g: &Graph, w: &[Rational], opts: &SolveOptions, diag: &mut Diagnostics) -> Result<WeightedSet> {
    let n = g.n();
    let mut best = WeightedSet::empty(n);
    let (universal, core) = g.universal_clique_peel();
    for u in universal.iter() {
        if w[u] > best.weight {
            best = WeightedSet::from_set(VertexSet::singleton(n, u), w);
        }
    }
    for v in core.iter() {
        if w[v] <= Rational::zero() {
            continue;
        }
        let rest = core.difference(&g.closed(v));
        let sub = g.induced(&rest)?;
        let lw: Vec<Rational> = sub.map.iter().map(|&x| w[x]).collect();
        let local = match chordal_mwis(&sub.graph, &lw) {
            Ok(s) => s,
            Err(Error::NotChordal(_)) => {
                diag.oracle_fallbacks += 1;
                brute_mwis_capped(&sub.graph, &lw, opts.max_oracle)?
            }
            Err(e) => return Err(e),
        };
        if w[v] + local.weight > best.weight {
            let mut set = sub.lift(&local.vertices, n);
            set.insert(v);
            best = WeightedSet::from_set(set, w);
        }
    }
    Ok(best)
}

/// Maximum weight stable set.
pub fn mwis(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    Ok(mwis_with(g, w, &SolveOptions::default())?.value)
}

pub fn mwis_with(g: &Graph, w: &[Rational], opts: &SolveOptions) -> Result<Solved<WeightedSet>> {
    check_weights(g, w)?;
    let tree = decompose(g);
    let mut diagnostics = Diagnostics::default();
    let value = in_pool(opts.jobs, || mwis_node(g, &tree.root, w, opts, &mut diagnostics))?;
    diagnostics.atoms = tree.leaves().len();
    if !value.is_valid_stable(g, w) {
        return Err(Error::Internal("stable set solver returned a non-stable set".into()));
    }
    Ok(Solved { value, diagnostics })
}

/// Weights equal to `w` except zero on `zeroed`.
fn zero_on(w: &[Rational], zeroed: &VertexSet) -> Vec<Rational> {
    w.iter().enumerate().map(|(v, &x)| if zeroed.contains(v) { Rational::zero() } else { x }).collect()
}

fn mwis_node(g: &Graph, node: &Node, w: &[Rational], opts: &SolveOptions, diag: &mut Diagnostics) -> Result<WeightedSet> {
    let n = g.n();
    match node {
        Node::Leaf { vertices } => {
            if vertices.is_empty() {
                return Ok(WeightedSet::empty(n));
            }
            let sub = g.induced_on(vertices);
            let lw: Vec<Rational> = sub.map.iter().map(|&v| w[v]).collect();
            diag.atom_solves += 1;
            check_atom(&sub.graph, opts)?;
            let local = mwis_atom_inner(&sub.graph, &lw, opts, diag)?;
            Ok(WeightedSet::from_set(sub.lift(&local.vertices, n), w))
        }
        Node::Internal { cutset, left, right, .. } => {
            let s = VertexSet::from_iter(n, cutset.iter().copied());
            // a zeroed vertex never adds weight, so dropping it keeps the optimum
            let solve_avoiding = |avoid: &VertexSet, diag: &mut Diagnostics| -> Result<WeightedSet> {
                let got = mwis_node(g, left, &zero_on(w, avoid), opts, diag)?;
                Ok(WeightedSet::from_set(got.vertices.difference(avoid), w))
            };
            let base = solve_avoiding(&s, diag)?;
            let mut per_v = Vec::with_capacity(cutset.len());
            let mut w2 = w.to_vec();
            for &v in cutset {
                let iv = solve_avoiding(&g.closed(v), diag)?;
                w2[v] = w[v] + iv.weight - base.weight;
                per_v.push(iv);
            }
            let other = mwis_node(g, right, &w2, opts, diag)?;
            let hit: Vec<usize> = cutset.iter().copied().filter(|&v| other.vertices.contains(v)).collect();
            if hit.len() > 1 {
                return Err(Error::Internal(format!("stable set meets clique cutset {cutset:?} twice")));
            }
            let pick = match hit.first() {
                Some(v) => &per_v[cutset.iter().position(|x| x == v).unwrap()],
                None => &base,
            };
            Ok(WeightedSet::from_set(pick.vertices.union(&other.vertices), w))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forge;

    fn ints(v: &[i128]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    fn theta() -> Graph {
        Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 7), (6, 7)]).unwrap()
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(min_coloring(&Graph::path(7)).unwrap().count, 2);
        assert_eq!(min_coloring(&Graph::cycle(7)).unwrap().count, 3);
        let glued = forge::glue(&Graph::cycle(7), &Graph::cycle(7), &[(0, 0)]).unwrap();
        assert_eq!(min_coloring(&glued).unwrap().count, 3);
        let g = Graph::complete(5);
        let cert = crate::recognize::recognize_atom(&g).unwrap();
        assert_eq!(color_atom(&g, &cert).unwrap().count, 5);
        let j = Graph::complete(2).join(&Graph::cycle(7));
        let cert = crate::recognize::recognize_atom(&j).unwrap();
        assert_eq!(color_atom(&j, &cert).unwrap().count, 5);
        assert_eq!(min_coloring(&theta()).unwrap().count, 2);
    }

    #[test]
    fn lantern_trace() {
        let g = theta();
        let cert = crate::recognize::recognize_atom(&g).unwrap();
        let AtomKind::Lantern(p) = &cert.kind else { panic!() };
        let c = greedy_color_lantern(&g, p, 2).unwrap();
        for b in &p.b {
            assert!(b.iter().all(|&v| c.colors[v] == 1));
        }
        for x in &p.c {
            assert!(x.iter().all(|&v| c.colors[v] == 2));
        }
        assert_eq!(c.colors[p.a[0]], 2);
        assert_eq!(c.colors[p.d[0]], 1);
    }

    #[test]
    fn ring_trace() {
        let spec = forge::RingSpec { sizes: [1, 2, 3, 1, 2, 3], stairs: Default::default() };
        let (g, p) = forge::gen_ring6(&spec).unwrap();
        let cert = AtomCertificate { universal: vec![], kind: AtomKind::Ring6(p.clone()) };
        assert_eq!(clique_number_partition(&g, &cert, &unit_weights(g.n())).unwrap().weight, Rational::from_integer(5));
        let c = greedy_color_ring(&g, &p, 5).unwrap();
        let mut x2: Vec<usize> = p.parts[2].iter().map(|&v| c.colors[v]).collect();
        x2.sort_unstable();
        assert_eq!(x2, vec![1, 2, 3]);
        let x1: Vec<usize> = p.parts[1].iter().map(|&v| c.colors[v]).collect();
        assert_eq!(x1, vec![5, 4]);
        let c6 = AtomCertificate { universal: vec![], kind: AtomKind::Ring6(RingPartition { parts: (0..6).map(|i| vec![i]).collect() }) };
        assert_eq!(clique_number_partition(&Graph::cycle(6), &c6, &unit_weights(6)).unwrap().weight, Rational::from_integer(2));
    }

    #[test]
    fn mwis_examples() {
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = mwis(&diamond, &unit_weights(4)).unwrap();
        assert_eq!(s.weight, Rational::from_integer(2));
        assert_eq!(s.vertices.to_vec(), vec![1, 3]);
        assert_eq!(mwis(&Graph::cycle(7), &unit_weights(7)).unwrap().weight, Rational::from_integer(3));
        assert_eq!(mwis(&theta(), &unit_weights(8)).unwrap().weight, Rational::from_integer(4));
        let s = mwis_atom(&Graph::complete(4), &ints(&[1, 2, 3, 4])).unwrap();
        assert_eq!(s.vertices.to_vec(), vec![3]);
        let s = mwis_atom(&Graph::cycle(7), &ints(&[-1; 7])).unwrap();
        assert!(s.vertices.is_empty() && s.weight.is_zero());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_weight_clique(&Graph::cycle(7), &unit_weights(7)).unwrap().weight, Rational::from_integer(2));
        let (g, _) = forge::gen_emerald([1; 11]).unwrap();
        assert_eq!(max_weight_clique(&g, &unit_weights(11)).unwrap().weight, Rational::from_integer(3));
        let j = Graph::complete(2).join(&Graph::cycle(7));
        assert_eq!(max_weight_clique(&j, &unit_weights(9)).unwrap().weight, Rational::from_integer(4));
    }

    #[test]
    fn rejects_out_of_class() {
        assert!(matches!(min_coloring(&Graph::cycle(5)), Err(Error::ClassViolation { .. })));
        assert!(mwis(&Graph::cycle(4), &unit_weights(4)).is_err());
        assert!(mwis(&Graph::cycle(7), &unit_weights(3)).is_err());
    }
}
