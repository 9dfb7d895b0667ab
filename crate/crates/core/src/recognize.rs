//! Certificate-producing recognizers for the atom classes.
//!
//! All searches run on the twin skeleton of the peeled core; parts are then
//! expanded through the twin classes, ordered on the real graph and checked
//! with [`verify_certificate`].

use std::ops::ControlFlow;

use crate::certificate::{
    verify_certificate, AtomCertificate, AtomKind, BraceletPartition, CrownPartition, EmeraldPartition,
    LanternPartition, RingPartition, WreathOrCrown,
};
use crate::cutset::has_clique_cutset;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{class_membership, find_induced_path, find_k_hole, find_theta33, for_each_hole};

/// Knobs for [`recognize_atom_with`].
#[derive(Clone, Copy, Debug)]
pub struct RecognizeOptions {
    /// Inputs up to this size get a full class-membership and cutset check.
    pub check_threshold: usize,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions { check_threshold: 64 }
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::violation(msg)
}

fn z7(i: isize) -> usize {
    i.rem_euclid(7) as usize
}

fn set(n: usize, v: &[usize]) -> VertexSet {
    VertexSet::from_iter(n, v.iter().copied())
}

/// Sort by descending key, ties by id.
fn order_by(list: &mut [usize], key: impl Fn(usize) -> usize) {
    list.sort_by_key(|&v| (std::cmp::Reverse(key(v)), v));
}

/// Twin skeleton plus the expansion back to the graph it came from.
struct Skeleton {
    graph: Graph,
    classes: Vec<Vec<usize>>,
}

impl Skeleton {
    fn of(g: &Graph) -> Self {
        let t = g.twin_decomposition();
        Skeleton { graph: t.skeleton, classes: t.classes }
    }

    fn expand(&self, list: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = list.iter().flat_map(|&s| self.classes[s].iter().copied()).collect();
        out.sort_unstable();
        out
    }

    fn expand_all(&self, lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
        lists.iter().map(|l| self.expand(l)).collect()
    }
}

/// Seven parts around a fixed 7-hole, plus the 4-attached leftovers.
struct HoleParts {
    a: Vec<VertexSet>,
    c: Vec<usize>,
    ell: Option<usize>,
}

/// Grow a bracelet or thickened emerald from a 7-hole.
///
/// `g` must have no universal vertex and `hole` must dominate it. Vertices
/// seeing three consecutive hole vertices seed the parts; vertices seeing
/// four join a part whenever the bracelet stays a bracelet, and any that
/// cannot join must share one offset and form the emerald's extra clique.
pub fn build_bracelet_from_hole(g: &Graph, hole: &[usize]) -> Result<AtomKind> {
    let parts = hole_parts(g, hole)?;
    split_parts(g, &parts)
}

fn hole_parts(g: &Graph, hole: &[usize]) -> Result<HoleParts> {
    let n = g.n();
    if hole.len() != 7 || !crate::patterns::is_induced_cycle(g, hole) {
        return Err(Error::Invalid("not a 7-hole".into()));
    }
    let hset = set(n, hole);
    let mut a: Vec<VertexSet> = hole.iter().map(|&x| VertexSet::singleton(n, x)).collect();
    let mut cand: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        if hset.contains(v) {
            continue;
        }
        let seen: Vec<bool> = hole.iter().map(|&x| g.has_edge(v, x)).collect();
        let count = seen.iter().filter(|&&b| b).count();
        let runs = |len: usize| (0..7).find(|&s| (0..len).all(|k| seen[(s + k) % 7]));
        match count {
            0 => return Err(violation(format!("vertex {v} misses the 7-hole {hole:?}"))),
            7 => return Err(violation(format!("vertex {v} sees the whole 7-hole but is not universal"))),
            3 => match runs(3) {
                Some(s) => a[(s + 1) % 7].insert(v),
                None => return Err(violation(format!("vertex {v} has a forbidden attachment to {hole:?}"))),
            },
            4 => match runs(4) {
                // sees x_{l+2}..x_{l+5}
                Some(s) => cand.push((v, (s + 5) % 7)),
                None => return Err(violation(format!("vertex {v} has a forbidden attachment to {hole:?}"))),
            },
            _ => return Err(violation(format!("vertex {v} has a forbidden attachment to {hole:?}"))),
        }
    }
    loop {
        let mut moved = false;
        cand.retain(|&(c, l)| {
            let at = |k: isize| z7(l as isize + k);
            let nc = g.neighbors(c);
            let r2 = a[at(2)].difference(nc);
            let r5 = a[at(5)].difference(nc);
            if g.is_complete_to(&a[at(0)], &r2) {
                a[at(1)].union_with(&r2);
                a[at(2)].intersect_with(nc);
                a[at(3)].insert(c);
            } else if g.is_complete_to(&a[at(0)], &r5) {
                a[at(6)].union_with(&r5);
                a[at(5)].intersect_with(nc);
                a[at(4)].insert(c);
            } else {
                return true;
            }
            moved = true;
            false
        });
        if !moved {
            break;
        }
    }
    let ell = match cand.first() {
        None => None,
        Some(&(_, l)) => {
            if let Some(&(v, m)) = cand.iter().find(|p| p.1 != l) {
                return Err(violation(format!("vertex {v} attaches at offset {m}, others at {l}")));
            }
            Some(l)
        }
    };
    Ok(HoleParts { a, c: cand.into_iter().map(|p| p.0).collect(), ell })
}

fn split_parts(g: &Graph, hp: &HoleParts) -> Result<AtomKind> {
    let mut star = vec![Vec::new(); 7];
    let mut plus = vec![Vec::new(); 7];
    let mut minus = vec![Vec::new(); 7];
    for i in 0..7 {
        let next = &hp.a[(i + 2) % 7];
        let prev = &hp.a[(i + 5) % 7];
        for v in hp.a[i].iter() {
            let nv = g.neighbors(v);
            match (!nv.is_disjoint(next), !nv.is_disjoint(prev)) {
                (false, false) => star[i].push(v),
                (true, false) => plus[i].push(v),
                (false, true) => minus[i].push(v),
                (true, true) => {
                    return Err(violation(format!("vertex {v} of A{i} sees both A{} and A{}", (i + 2) % 7, (i + 5) % 7)))
                }
            }
        }
    }
    let i_star = match hp.ell {
        Some(l) => l,
        None => pick_pivot(&plus, &minus)
            .ok_or_else(|| violation("no pivot satisfies the emptiness axioms"))?,
    };
    let parts = BraceletPartition { star, plus, minus, i_star };
    Ok(match hp.ell {
        None => AtomKind::Bracelet(parts),
        Some(_) => {
            let mut c = hp.c.clone();
            c.sort_unstable();
            AtomKind::Emerald(EmeraldPartition { parts, c })
        }
    })
}

fn pick_pivot(plus: &[Vec<usize>], minus: &[Vec<usize>]) -> Option<usize> {
    let ok = |s: usize| {
        let m = |o: isize| z7(s as isize + o);
        [-3, 3].iter().all(|&o| plus[m(o)].is_empty() && minus[m(o)].is_empty())
            && minus[m(-2)].is_empty()
            && plus[m(2)].is_empty()
            && minus[m(-1)].is_empty()
            && plus[m(1)].is_empty()
    };
    (0..7)
        .find(|&s| ok(s) && !plus[s].is_empty() && !minus[s].is_empty())
        .or_else(|| (0..7).find(|&s| ok(s)))
}

/// Order plus/minus lists by shrinking closed neighborhoods inside the
/// bracelet (everything except the emerald's extra clique).
fn order_bracelet(g: &Graph, p: &mut BraceletPartition, extra: &[usize]) {
    let within = VertexSet::from_iter(g.n(), p.vertices()).difference(&set(g.n(), extra));
    let key = |v: usize| g.closed(v).intersection_len(&within);
    for l in p.plus.iter_mut().chain(p.minus.iter_mut()) {
        order_by(l, key);
    }
}

/// First 7-hole (canonical lexicographic order) that dominates `g`.
fn dominating_7_hole(g: &Graph) -> Option<Vec<usize>> {
    let all = g.vertices();
    let mut found = None;
    for_each_hole(g, 7, |h| {
        if g.closed_of_set(&set(g.n(), h)) == all {
            found = Some(h.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

fn bracelet_core(g: &Graph) -> Result<Option<AtomKind>> {
    let sk = Skeleton::of(g);
    let s = &sk.graph;
    let hole = match dominating_7_hole(s) {
        Some(h) => h,
        None => {
            return match find_k_hole(s, 7) {
                Some(w) => Err(violation(format!("no 7-hole dominates; e.g. {:?} does not", sk.expand(&w.vertices)))),
                None => Ok(None),
            }
        }
    };
    let kind = build_bracelet_from_hole(s, &hole)?;
    let lift = |p: &BraceletPartition| BraceletPartition {
        star: sk.expand_all(&p.star),
        plus: sk.expand_all(&p.plus),
        minus: sk.expand_all(&p.minus),
        i_star: p.i_star,
    };
    Ok(Some(match kind {
        AtomKind::Bracelet(p) => {
            let mut p = lift(&p);
            order_bracelet(g, &mut p, &[]);
            AtomKind::Bracelet(p)
        }
        AtomKind::Emerald(e) => {
            let c = sk.expand(&e.c);
            let mut p = lift(&e.parts);
            order_bracelet(g, &mut p, &c);
            AtomKind::Emerald(EmeraldPartition { parts: p, c })
        }
        _ => unreachable!(),
    }))
}

/// Lantern good partition from the twin skeleton: a degree-2 vertex next to
/// another degree-2 vertex and a hub pins the hub `A`.
pub fn recognize_lantern(g: &Graph) -> Option<LanternPartition> {
    if g.n() < 8 {
        return None;
    }
    let sk = Skeleton::of(g);
    let s = &sk.graph;
    let deg = |v: usize| s.degree(v);
    let mut hubs: Vec<usize> = Vec::new();
    for u in 0..s.n() {
        if deg(u) != 2 {
            continue;
        }
        let nb = s.neighbors(u).to_vec();
        for (w, v) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if deg(w) == 2 && deg(v) >= 3 && !hubs.contains(&v) {
                hubs.push(v);
            }
        }
    }
    hubs.into_iter().find_map(|v| {
        let p = lantern_from_hub(g, &sk.expand(&[v]))?;
        let cert = AtomCertificate { universal: vec![], kind: AtomKind::Lantern(p.clone()) };
        verify_certificate(g, &cert).is_empty().then_some(p)
    })
}

fn lantern_from_hub(g: &Graph, a: &[usize]) -> Option<LanternPartition> {
    let n = g.n();
    let aset = set(n, a);
    let b_all = g.open_of_set(&aset);
    let rest = g.vertices().difference(&aset).difference(&b_all);
    let d: Vec<usize> = rest.iter().filter(|&v| rest.is_subset(&g.closed(v))).collect();
    if d.is_empty() {
        return None;
    }
    let c_all = rest.difference(&set(n, &d));
    let mut arms: Vec<(Vec<usize>, Vec<usize>)> = g
        .components_within(&b_all.union(&c_all))
        .into_iter()
        .map(|comp| (comp.intersection(&b_all).to_vec(), comp.intersection(&c_all).to_vec()))
        .collect();
    if arms.len() < 3 || arms.iter().any(|(b, c)| b.is_empty() || c.is_empty()) {
        return None;
    }
    // the wavy arm, if any, goes first
    if let Some(i) = arms.iter().position(|(b, c)| !g.is_complete_to(&set(n, b), &set(n, c))) {
        arms.swap(0, i);
    }
    let (b1, c1) = (set(n, &arms[0].0), set(n, &arms[0].1));
    order_by(&mut arms[0].0, |v| g.neighbors(v).intersection_len(&c1));
    order_by(&mut arms[0].1, |v| g.neighbors(v).intersection_len(&b1));
    let (b, c) = arms.into_iter().unzip();
    Some(LanternPartition { a: a.to_vec(), b, c, d })
}

/// Ring good partition: take a 6-hole, swap each hole vertex for the
/// eligible vertex with the largest neighborhood, then group every vertex
/// by the three consecutive hole vertices it sees.
pub fn recognize_ring6(g: &Graph) -> Option<RingPartition> {
    let sk = Skeleton::of(g);
    let p = ring_on(&sk.graph)?;
    let mut parts = sk.expand_all(&p.parts);
    for part in parts.iter_mut() {
        order_by(part, |v| g.degree(v));
    }
    let p = RingPartition { parts };
    let cert = AtomCertificate { universal: vec![], kind: AtomKind::Ring6(p.clone()) };
    verify_certificate(g, &cert).is_empty().then_some(p)
}

fn ring_on(g: &Graph) -> Option<RingPartition> {
    let n = g.n();
    let mut h = find_k_hole(g, 6)?.vertices;
    for i in 0..6 {
        let (p, q) = (h[(i + 5) % 6], h[(i + 1) % 6]);
        let others: Vec<usize> = (0..6).filter(|&j| j != i && j != (i + 5) % 6 && j != (i + 1) % 6).map(|j| h[j]).collect();
        let best = (0..n)
            .filter(|&x| g.has_edge(x, p) && g.has_edge(x, q) && others.iter().all(|&o| !g.has_edge(x, o)))
            .max_by_key(|&x| (g.degree(x), std::cmp::Reverse(x)))?;
        h[i] = best;
    }
    let mut parts = vec![Vec::new(); 6];
    for v in 0..n {
        let seen: Vec<bool> = h.iter().map(|&x| x == v || g.has_edge(v, x)).collect();
        let i = (0..6).find(|&i| {
            (0..6).all(|j| seen[j] == (j == i || j == (i + 1) % 6 || j == (i + 5) % 6))
        })?;
        parts[i].push(v);
    }
    Some(RingPartition { parts })
}

/// Split a P7-free 6-ring into the wreath or crown shape.
pub fn classify_wreath_or_crown(g: &Graph, p: &RingPartition) -> Result<WreathOrCrown> {
    let n = g.n();
    if p.k() != 6 {
        return Err(Error::Invalid("ring partition must have six parts".into()));
    }
    let x: Vec<VertexSet> = p.parts.iter().map(|l| set(n, l)).collect();
    let full = |i: usize| g.is_complete_to(&x[i % 6], &x[(i + 1) % 6]);
    let wreathy = (0..6).all(|i| full(i) || full(i + 5));
    if wreathy {
        for r in 0..2 {
            if full(r) && full(r + 2) && full(r + 4) {
                return Ok(WreathOrCrown::Wreath(p.rotated(r)));
            }
        }
    } else {
        for parts in [p.parts.clone(), (0..6).map(|i| p.parts[(6 - i) % 6].clone()).collect()] {
            if let Some(c) = crown_from(g, &parts) {
                return Ok(WreathOrCrown::Crown(c));
            }
        }
    }
    let witness = find_induced_path(g, 7);
    Err(Error::ClassViolation { message: "6-ring is neither a wreath nor a crown".into(), witness })
}

fn crown_from(g: &Graph, parts: &[Vec<usize>]) -> Option<CrownPartition> {
    let n = g.n();
    let x: Vec<VertexSet> = parts.iter().map(|l| set(n, l)).collect();
    let mut c = Vec::with_capacity(6);
    let mut d = Vec::with_capacity(6);
    for i in 0..6 {
        let around = x[(i + 5) % 6].union(&x[(i + 1) % 6]);
        let s = parts[i].iter().take_while(|&&v| around.is_subset(g.neighbors(v))).count();
        c.push(parts[i][..s].to_vec());
        d.push(parts[i][s..].to_vec());
    }
    (0..6).find_map(|i_star| {
        let cand = CrownPartition { c: c.clone(), d: d.clone(), i_star };
        let cert = AtomCertificate { universal: vec![], kind: AtomKind::Crown(cand.clone()) };
        verify_certificate(g, &cert).is_empty().then_some(cand)
    })
}

/// Classify an atom and return its verified certificate.
pub fn recognize_atom(g: &Graph) -> Result<AtomCertificate> {
    recognize_atom_with(g, &RecognizeOptions::default())
}

pub fn recognize_atom_with(g: &Graph, opts: &RecognizeOptions) -> Result<AtomCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if g.n() <= opts.check_threshold {
        let report = class_membership(g);
        if let Some(w) = report.violation() {
            return Err(Error::ClassViolation {
                message: format!("contains an induced {:?}", w.kind),
                witness: Some(w.clone()),
            });
        }
        if let Some(cut) = has_clique_cutset(g) {
            return Err(violation(format!("not an atom: clique cutset {:?}", cut.clique.to_vec())));
        }
    }
    let (u, core) = g.universal_clique_peel();
    let universal = u.to_vec();
    if core.is_empty() {
        return Ok(AtomCertificate { universal, kind: AtomKind::Complete });
    }
    let h = g.induced(&core)?;
    let local = classify_core(&h.graph)?;
    let cert = AtomCertificate { universal: vec![], kind: local }.relabel(&h.map);
    let cert = AtomCertificate { universal, kind: cert.kind };
    let errs = verify_certificate(g, &cert);
    if errs.is_empty() {
        Ok(cert)
    } else {
        Err(Error::Certificate(errs))
    }
}

fn classify_core(h: &Graph) -> Result<AtomKind> {
    if let Some(kind) = bracelet_core(h)? {
        return Ok(kind);
    }
    if find_theta33(&Skeleton::of(h).graph).is_some() {
        return recognize_lantern(h)
            .map(AtomKind::Lantern)
            .ok_or_else(|| violation("contains a theta but is not a lantern"));
    }
    let ring = recognize_ring6(h).ok_or_else(|| violation("core fits no atom class"))?;
    Ok(match classify_wreath_or_crown(h, &ring)? {
        WreathOrCrown::Wreath(p) => AtomKind::Wreath(p),
        WreathOrCrown::Crown(p) => AtomKind::Crown(p),
    })
}
