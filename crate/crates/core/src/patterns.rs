//! Exhaustive detectors for induced paths, holes and the theta graph.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternKind {
    P7,
    C4,
    C5,
    C7,
    Theta33,
    /// Induced path on the given number of vertices.
    Path(usize),
    /// Induced cycle of the given length.
    Hole(usize),
}

/// An induced copy of a pattern, vertices in tracing order.
///
/// Paths and holes list vertices along the path or cycle. A theta lists
/// `a, b1, b2, b3, c1, c2, c3, d` with paths `a-bi-ci-d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    /// Re-check the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        if v.iter().any(|&x| x >= g.n()) {
            return false;
        }
        match self.kind {
            PatternKind::P7 => v.len() == 7 && is_induced_path(g, v),
            PatternKind::Path(k) => v.len() == k && is_induced_path(g, v),
            PatternKind::C4 => v.len() == 4 && is_induced_cycle(g, v),
            PatternKind::C5 => v.len() == 5 && is_induced_cycle(g, v),
            PatternKind::C7 => v.len() == 7 && is_induced_cycle(g, v),
            PatternKind::Hole(k) => v.len() == k && is_induced_cycle(g, v),
            PatternKind::Theta33 => is_theta33(g, v),
        }
    }
}

fn distinct(v: &[usize]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// `seq` traces an induced path of `g`.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    if !distinct(seq) {
        return false;
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// `seq` traces an induced cycle of length at least 4.
pub fn is_induced_cycle(g: &Graph, seq: &[usize]) -> bool {
    let k = seq.len();
    if k < 4 || !distinct(seq) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(seq[i], seq[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn is_theta33(g: &Graph, v: &[usize]) -> bool {
    if v.len() != 8 || !distinct(v) {
        return false;
    }
    let (a, b, c, d) = (v[0], &v[1..4], &v[4..7], v[7]);
    let mut expected = vec![];
    for i in 0..3 {
        expected.push((a, b[i]));
        expected.push((b[i], c[i]));
        expected.push((c[i], d));
    }
    let adj = |x: usize, y: usize| expected.iter().any(|&(p, q)| (p, q) == (x, y) || (q, p) == (x, y));
    for i in 0..8 {
        for j in i + 1..8 {
            if g.has_edge(v[i], v[j]) != adj(v[i], v[j]) {
                return false;
            }
        }
    }
    true
}

/// Rotate and reflect a cycle so the least vertex comes first and its
/// smaller neighbor second.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let (pos, _) = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| cycle[(pos + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cycle[(pos + k - i) % k]).collect();
    fwd.min(bwd)
}

/// Find an induced path on `k` vertices.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<PatternWitness> {
    if k == 0 || k > g.n() {
        return None;
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..g.n() {
        path.clear();
        path.push(start);
        let blocked = VertexSet::new(g.n());
        if extend_path(g, k, &mut path, &blocked) {
            return Some(PatternWitness {
                kind: if k == 7 { PatternKind::P7 } else { PatternKind::Path(k) },
                vertices: path,
            });
        }
    }
    None
}

// `blocked` holds the closed neighborhoods of all path vertices but the last.
fn extend_path(g: &Graph, k: usize, path: &mut Vec<usize>, blocked: &VertexSet) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().unwrap();
    let mut cand = g.neighbors(last).difference(blocked);
    for &p in path.iter() {
        cand.remove(p);
    }
    let next_blocked = blocked.union(&g.closed(last));
    for x in cand.iter() {
        path.push(x);
        if extend_path(g, k, path, &next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// Visit every k-hole once, in canonical form and lexicographic order.
pub fn for_each_hole<F>(g: &Graph, k: usize, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k < 4 {
        return;
    }
    let n = g.n();
    let mut path = Vec::with_capacity(k);
    for v0 in 0..n {
        let mut allowed = VertexSet::new(n);
        for v in v0 + 1..n {
            allowed.insert(v);
        }
        path.clear();
        path.push(v0);
        let blocked = VertexSet::new(n);
        if hole_dfs(g, k, &allowed, &mut path, &blocked, &mut f).is_break() {
            return;
        }
    }
}

// `blocked` holds closed neighborhoods of path[1..len-1].
fn hole_dfs<F>(
    g: &Graph,
    k: usize,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v0 = path[0];
    let last = *path.last().unwrap();
    let len = path.len();
    let mut cand = g.neighbors(last).intersection(allowed).difference(blocked);
    for &p in path.iter() {
        cand.remove(p);
    }
    if len == k - 1 {
        cand.intersect_with(g.neighbors(v0));
        for x in cand.iter() {
            if x > path[1] {
                path.push(x);
                let r = f(path);
                path.pop();
                r?;
            }
        }
        return ControlFlow::Continue(());
    }
    if len >= 2 {
        cand.subtract(g.neighbors(v0));
    }
    let next_blocked = if len >= 2 {
        blocked.union(&g.closed(last))
    } else {
        blocked.clone()
    };
    for x in cand.iter() {
        path.push(x);
        let r = hole_dfs(g, k, allowed, path, &next_blocked, f);
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Find the lexicographically least canonical k-hole.
pub fn find_k_hole(g: &Graph, k: usize) -> Option<PatternWitness> {
    let mut found = None;
    for_each_hole(g, k, |h| {
        found = Some(h.to_vec());
        ControlFlow::Break(())
    });
    found.map(|vertices| PatternWitness {
        kind: match k {
            4 => PatternKind::C4,
            5 => PatternKind::C5,
            7 => PatternKind::C7,
            _ => PatternKind::Hole(k),
        },
        vertices,
    })
}

/// Find an induced theta graph with three paths of length three.
pub fn find_theta33(g: &Graph) -> Option<PatternWitness> {
    let n = g.n();
    for a in 0..n {
        for d in a + 1..n {
            if g.has_edge(a, d) {
                continue;
            }
            let bs = g.neighbors(a).difference(g.neighbors(d));
            let cs = g.neighbors(d).difference(g.neighbors(a));
            let mut pairs = Vec::new();
            for b in bs.iter() {
                for c in g.neighbors(b).intersection(&cs).iter() {
                    pairs.push((b, c));
                }
            }
            let mut chosen = Vec::with_capacity(3);
            if pick_arms(g, &pairs, 0, &mut chosen) {
                let mut v = vec![a];
                v.extend(chosen.iter().map(|p: &(usize, usize)| p.0));
                v.extend(chosen.iter().map(|p| p.1));
                v.push(d);
                return Some(PatternWitness {
                    kind: PatternKind::Theta33,
                    vertices: v,
                });
            }
        }
    }
    None
}

fn pick_arms(g: &Graph, pairs: &[(usize, usize)], from: usize, chosen: &mut Vec<(usize, usize)>) -> bool {
    if chosen.len() == 3 {
        return true;
    }
    for i in from..pairs.len() {
        let (b, c) = pairs[i];
        let ok = chosen.iter().all(|&(b2, c2)| {
            b != b2 && c != c2 && !g.has_edge(b, b2) && !g.has_edge(c, c2) && !g.has_edge(b, c2) && !g.has_edge(c, b2)
        });
        if ok {
            chosen.push((b, c));
            if pick_arms(g, pairs, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Membership flags for the forbidden patterns, each with a witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub p7: Option<PatternWitness>,
    pub c4: Option<PatternWitness>,
    pub c5: Option<PatternWitness>,
    pub c7: Option<PatternWitness>,
    pub theta33: Option<PatternWitness>,
}

impl ClassReport {
    pub fn p7_free(&self) -> bool {
        self.p7.is_none()
    }
    pub fn c4_free(&self) -> bool {
        self.c4.is_none()
    }
    pub fn c5_free(&self) -> bool {
        self.c5.is_none()
    }
    pub fn c7_free(&self) -> bool {
        self.c7.is_none()
    }
    pub fn theta33_free(&self) -> bool {
        self.theta33.is_none()
    }

    /// The graph is (P7, C4, C5)-free.
    pub fn in_class(&self) -> bool {
        self.p7_free() && self.c4_free() && self.c5_free()
    }

    /// First witness against class membership.
    pub fn violation(&self) -> Option<&PatternWitness> {
        self.p7.as_ref().or(self.c4.as_ref()).or(self.c5.as_ref())
    }
}

/// Scan for P7, C4, C5, C7 in one pass over induced paths, then for the
/// theta graph.
pub fn class_membership(g: &Graph) -> ClassReport {
    let mut report = ClassReport::default();
    let mut path = Vec::with_capacity(7);
    for start in 0..g.n() {
        path.clear();
        path.push(start);
        let blocked = VertexSet::new(g.n());
        if sweep(g, &mut path, &blocked, &mut report).is_break() {
            break;
        }
    }
    for w in [&mut report.c4, &mut report.c5, &mut report.c7].into_iter().flatten() {
        w.vertices = canonical_cycle(&w.vertices);
    }
    report.theta33 = find_theta33(g);
    report
}

// `blocked` holds closed neighborhoods of path[1..len-1].
fn sweep(g: &Graph, path: &mut Vec<usize>, blocked: &VertexSet, r: &mut ClassReport) -> ControlFlow<()> {
    let last = *path.last().unwrap();
    let p0 = path[0];
    let len = path.len();
    let mut cand = g.neighbors(last).difference(blocked);
    for &p in path.iter() {
        cand.remove(p);
    }
    let next_blocked = if len >= 2 {
        blocked.union(&g.closed(last))
    } else {
        blocked.clone()
    };
    for x in cand.iter() {
        if len >= 2 && g.has_edge(x, p0) {
            let slot = match len + 1 {
                4 => &mut r.c4,
                5 => &mut r.c5,
                7 => &mut r.c7,
                _ => continue,
            };
            if slot.is_none() {
                let mut v = path.clone();
                v.push(x);
                let kind = match len + 1 {
                    4 => PatternKind::C4,
                    5 => PatternKind::C5,
                    _ => PatternKind::C7,
                };
                *slot = Some(PatternWitness { kind, vertices: v });
            }
        } else {
            path.push(x);
            let l = path.len();
            if l == 7 {
                if r.p7.is_none() {
                    r.p7 = Some(PatternWitness {
                        kind: PatternKind::P7,
                        vertices: path.clone(),
                    });
                }
            } else {
                let useful = r.p7.is_none()
                    || (r.c7.is_none() && l <= 6)
                    || (r.c5.is_none() && l <= 4)
                    || (r.c4.is_none() && l <= 3);
                if useful {
                    let res = sweep(g, path, &next_blocked, r);
                    if res.is_break() {
                        path.pop();
                        return res;
                    }
                }
            }
            path.pop();
        }
        if r.p7.is_some() && r.c4.is_some() && r.c5.is_some() && r.c7.is_some() {
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}
