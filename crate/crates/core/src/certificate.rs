//! Good partitions for the five atom classes and an exhaustive verifier.
//!
//! Vertex ids in a certificate refer to the graph it was built for. Every
//! ordered list is significant where a class demands nested neighborhoods.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Six (or generally `k`) circular cliques with nested neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPartition {
    pub parts: Vec<Vec<usize>>,
}

impl RingPartition {
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Rotate so that part `r` becomes part 0.
    pub fn rotated(&self, r: usize) -> RingPartition {
        let k = self.k();
        RingPartition {
            parts: (0..k).map(|i| self.parts[(i + r) % k].clone()).collect(),
        }
    }
}

/// Good triple of a 6-crown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownPartition {
    pub c: Vec<Vec<usize>>,
    pub d: Vec<Vec<usize>>,
    pub i_star: usize,
}

impl CrownPartition {
    /// The underlying ring: `X_i` is `C_i` followed by `D_i`.
    pub fn ring(&self) -> RingPartition {
        RingPartition {
            parts: (0..6)
                .map(|i| self.c[i].iter().chain(&self.d[i]).copied().collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum WreathOrCrown {
    Wreath(RingPartition),
    Crown(CrownPartition),
}

/// Hubs `a`, `d` and arms `b[i]`, `c[i]`. Arm 0 carries the dominance orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanternPartition {
    pub a: Vec<usize>,
    pub b: Vec<Vec<usize>>,
    pub c: Vec<Vec<usize>>,
    pub d: Vec<usize>,
}

impl LanternPartition {
    pub fn r(&self) -> usize {
        self.b.len()
    }
}

/// Seven circular cliques, each split into star/plus/minus, and the pivot.
///
/// `plus[i]` and `minus[i]` are listed in dominance order (largest closed
/// neighborhood first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceletPartition {
    pub star: Vec<Vec<usize>>,
    pub plus: Vec<Vec<usize>>,
    pub minus: Vec<Vec<usize>>,
    pub i_star: usize,
}

impl BraceletPartition {
    pub fn part(&self, i: usize) -> Vec<usize> {
        let i = i % 7;
        let mut v: Vec<usize> = self.star[i]
            .iter()
            .chain(&self.plus[i])
            .chain(&self.minus[i])
            .copied()
            .collect();
        v.sort_unstable();
        v
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..7).flat_map(|i| self.part(i)).collect();
        v.sort_unstable();
        v
    }

    /// Relabel so that the pivot becomes index 0.
    pub fn normalized(&self) -> BraceletPartition {
        let s = self.i_star;
        let rot = |x: &Vec<Vec<usize>>| (0..7).map(|i| x[(i + s) % 7].clone()).collect();
        BraceletPartition {
            star: rot(&self.star),
            plus: rot(&self.plus),
            minus: rot(&self.minus),
            i_star: 0,
        }
    }
}

/// Bracelet-shaped parts plus the extra clique `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmeraldPartition {
    pub parts: BraceletPartition,
    pub c: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "partition")]
pub enum AtomKind {
    Complete,
    Ring6(RingPartition),
    Wreath(RingPartition),
    Crown(CrownPartition),
    Lantern(LanternPartition),
    Bracelet(BraceletPartition),
    Emerald(EmeraldPartition),
}

impl AtomKind {
    pub fn name(&self) -> &'static str {
        match self {
            AtomKind::Complete => "complete",
            AtomKind::Ring6(_) => "ring6",
            AtomKind::Wreath(_) => "wreath",
            AtomKind::Crown(_) => "crown",
            AtomKind::Lantern(_) => "lantern",
            AtomKind::Bracelet(_) => "bracelet",
            AtomKind::Emerald(_) => "emerald",
        }
    }

    fn all_lists(&self) -> Vec<&Vec<usize>> {
        match self {
            AtomKind::Complete => vec![],
            AtomKind::Ring6(p) | AtomKind::Wreath(p) => p.parts.iter().collect(),
            AtomKind::Crown(p) => p.c.iter().chain(&p.d).collect(),
            AtomKind::Lantern(p) => std::iter::once(&p.a)
                .chain(&p.b)
                .chain(&p.c)
                .chain(std::iter::once(&p.d))
                .collect(),
            AtomKind::Bracelet(p) => p.star.iter().chain(&p.plus).chain(&p.minus).collect(),
            AtomKind::Emerald(p) => p
                .parts
                .star
                .iter()
                .chain(&p.parts.plus)
                .chain(&p.parts.minus)
                .chain(std::iter::once(&p.c))
                .collect(),
        }
    }

    fn map_ids(&mut self, f: &dyn Fn(usize) -> usize) {
        let m = |v: &mut Vec<usize>| v.iter_mut().for_each(|x| *x = f(*x));
        match self {
            AtomKind::Complete => {}
            AtomKind::Ring6(p) | AtomKind::Wreath(p) => p.parts.iter_mut().for_each(m),
            AtomKind::Crown(p) => p.c.iter_mut().chain(p.d.iter_mut()).for_each(m),
            AtomKind::Lantern(p) => {
                m(&mut p.a);
                m(&mut p.d);
                p.b.iter_mut().chain(p.c.iter_mut()).for_each(m);
            }
            AtomKind::Bracelet(p) => p
                .star
                .iter_mut()
                .chain(p.plus.iter_mut())
                .chain(p.minus.iter_mut())
                .for_each(m),
            AtomKind::Emerald(p) => {
                m(&mut p.c);
                p.parts
                    .star
                    .iter_mut()
                    .chain(p.parts.plus.iter_mut())
                    .chain(p.parts.minus.iter_mut())
                    .for_each(m)
            }
        }
    }
}

/// A peeled universal clique plus the class of the remaining core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomCertificate {
    pub universal: Vec<usize>,
    #[serde(flatten)]
    pub kind: AtomKind,
}

impl AtomCertificate {
    /// Vertices outside the universal clique.
    pub fn core(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.kind.all_lists().into_iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Rename every vertex id through `map` (e.g. atom-local to root ids).
    pub fn relabel(&self, map: &[usize]) -> AtomCertificate {
        let mut out = self.clone();
        out.universal.iter_mut().for_each(|x| *x = map[*x]);
        out.kind.map_ids(&|x| map[x]);
        out
    }
}

struct Checker<'a> {
    g: &'a Graph,
    errs: Vec<String>,
}

impl<'a> Checker<'a> {
    fn set(&self, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(self.g.n(), v.iter().copied())
    }

    fn fail(&mut self, msg: String) {
        self.errs.push(msg);
    }

    fn nonempty(&mut self, v: &[usize], name: &str) {
        if v.is_empty() {
            self.fail(format!("{name} is empty"));
        }
    }

    fn empty(&mut self, v: &[usize], name: &str) {
        if !v.is_empty() {
            self.fail(format!("{name} must be empty"));
        }
    }

    fn clique(&mut self, v: &[usize], name: &str) {
        if !self.g.is_clique(&self.set(v)) {
            self.fail(format!("{name} is not a clique"));
        }
    }

    fn complete(&mut self, a: &[usize], b: &[usize], what: &str) {
        if !self.g.is_complete_to(&self.set(a), &self.set(b)) {
            self.fail(format!("{what}: not complete"));
        }
    }

    fn anticomplete(&mut self, a: &[usize], b: &[usize], what: &str) {
        if !self.g.is_anticomplete_to(&self.set(a), &self.set(b)) {
            self.fail(format!("{what}: not anticomplete"));
        }
    }

    /// Closed neighborhoods restricted to `within`, must shrink along `order`.
    fn nested(&mut self, order: &[usize], within: &VertexSet, what: &str) {
        for w in order.windows(2) {
            let a = self.g.closed(w[0]).intersection(within);
            let b = self.g.closed(w[1]).intersection(within);
            if !b.is_subset(&a) {
                self.fail(format!("{what}: N[{}] not inside N[{}]", w[1], w[0]));
            }
        }
    }

    /// Vertex ids in range, universal clique genuinely universal, and the
    /// lists partition V.
    fn partition(&mut self, cert: &AtomCertificate) {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let lists = cert.kind.all_lists();
        for v in cert.universal.iter().chain(lists.into_iter().flatten()) {
            if *v >= n {
                self.fail(format!("vertex {v} out of range"));
                return;
            }
            if seen[*v] {
                self.fail(format!("vertex {v} listed twice"));
            }
            seen[*v] = true;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            self.fail(format!("vertex {v} not covered"));
        }
        for &u in &cert.universal {
            if self.g.degree(u) + 1 != n {
                self.fail(format!("universal vertex {u} misses a neighbor"));
            }
        }
    }

    fn ring(&mut self, p: &RingPartition, core: &VertexSet) {
        let k = p.k();
        if k != 6 {
            self.fail(format!("ring length {k}, expected 6"));
            return;
        }
        for i in 0..k {
            let name = format!("X{i}");
            self.nonempty(&p.parts[i], &name);
            if p.parts[i].is_empty() {
                continue;
            }
            self.clique(&p.parts[i], &name);
            let mut span: Vec<usize> = p.parts[(i + k - 1) % k].clone();
            span.extend(&p.parts[i]);
            span.extend(&p.parts[(i + 1) % k]);
            let span = self.set(&span);
            let first = self.g.closed(p.parts[i][0]).intersection(core);
            if first != span {
                self.fail(format!("N[u1] of X{i} is not X{}..X{}", (i + k - 1) % k, (i + 1) % k));
            }
            self.nested(&p.parts[i], core, &format!("ring order of {name}"));
            let last = *p.parts[i].last().unwrap();
            if !self.set(&p.parts[i]).is_subset(&self.g.closed(last)) {
                self.fail(format!("X{i} not inside N[u_t]"));
            }
        }
    }

    fn wreath(&mut self, p: &RingPartition, core: &VertexSet) {
        self.ring(p, core);
        if p.k() == 6 {
            for (i, j) in [(0, 1), (2, 3), (4, 5)] {
                self.complete(&p.parts[i], &p.parts[j], &format!("wreath pair X{i}-X{j}"));
            }
        }
    }

    fn crown(&mut self, p: &CrownPartition) {
        if p.c.len() != 6 || p.d.len() != 6 || p.i_star >= 6 {
            self.fail("crown needs six C, six D and i* in Z6".into());
            return;
        }
        let s = p.i_star;
        let at = |i: isize| ((s as isize + i).rem_euclid(6)) as usize;
        for i in 0..6 {
            self.nonempty(&p.c[i], &format!("C{i}"));
            self.clique(&p.c[i], &format!("C{i}"));
            self.clique(&p.d[i], &format!("D{i}"));
        }
        self.empty(&p.d[at(-2)], "D_{i*-2}");
        self.empty(&p.d[at(-1)], "D_{i*-1}");
        for o in 1..=3 {
            self.nonempty(&p.d[at(o)], &format!("D_{{i*+{o}}}"));
        }
        for i in 0..6 {
            for j in 0..6 {
                let dist = (i + 6 - j) % 6;
                let near = dist <= 1 || dist == 5;
                let tag = format!("C{i}/C{j}");
                if i != j {
                    if near {
                        self.complete(&p.c[i], &p.c[j], &tag);
                    } else {
                        self.anticomplete(&p.c[i], &p.c[j], &tag);
                    }
                    self.anticomplete(&p.d[i], &p.d[j], &format!("D{i}/D{j}"));
                }
                let tag = format!("D{i}/C{j}");
                if near {
                    self.complete(&p.d[i], &p.c[j], &tag);
                } else {
                    self.anticomplete(&p.d[i], &p.c[j], &tag);
                }
            }
        }
    }

    fn lantern(&mut self, p: &LanternPartition) {
        let r = p.r();
        if r < 3 || p.c.len() != r {
            self.fail(format!("lantern needs r >= 3 matching arms (got {r}, {})", p.c.len()));
            return;
        }
        self.nonempty(&p.a, "A");
        self.nonempty(&p.d, "D");
        self.clique(&p.a, "A");
        self.clique(&p.d, "D");
        self.anticomplete(&p.a, &p.d, "A/D");
        for i in 0..r {
            self.nonempty(&p.b[i], &format!("B{}", i + 1));
            self.nonempty(&p.c[i], &format!("C{}", i + 1));
            self.clique(&p.b[i], &format!("B{}", i + 1));
            self.clique(&p.c[i], &format!("C{}", i + 1));
            self.complete(&p.a, &p.b[i], &format!("A/B{}", i + 1));
            self.anticomplete(&p.a, &p.c[i], &format!("A/C{}", i + 1));
            self.complete(&p.d, &p.c[i], &format!("D/C{}", i + 1));
            self.anticomplete(&p.d, &p.b[i], &format!("D/B{}", i + 1));
            if i > 0 {
                self.complete(&p.b[i], &p.c[i], &format!("B{0}/C{0}", i + 1));
            }
            for j in i + 1..r {
                let arm_i: Vec<usize> = p.b[i].iter().chain(&p.c[i]).copied().collect();
                let arm_j: Vec<usize> = p.b[j].iter().chain(&p.c[j]).copied().collect();
                self.anticomplete(&arm_i, &arm_j, &format!("arm {}/arm {}", i + 1, j + 1));
            }
        }
        if p.b[0].is_empty() || p.c[0].is_empty() {
            return;
        }
        let b1 = self.set(&p.b[0]);
        let c1 = self.set(&p.c[0]);
        self.nested(&p.b[0], &c1, "B1 order");
        self.nested(&p.c[0], &b1, "C1 order");
        if !c1.is_subset(&self.g.closed(p.b[0][0])) {
            self.fail("first vertex of B1 not complete to C1".into());
        }
        if !b1.is_subset(&self.g.closed(p.c[0][0])) {
            self.fail("first vertex of C1 not complete to B1".into());
        }
    }

    fn bracelet(&mut self, p: &BraceletPartition, within: &VertexSet) {
        if p.star.len() != 7 || p.plus.len() != 7 || p.minus.len() != 7 || p.i_star >= 7 {
            self.fail("bracelet needs seven star/plus/minus lists and i* in Z7".into());
            return;
        }
        let a: Vec<Vec<usize>> = (0..7).map(|i| p.part(i)).collect();
        let m = |i: usize, o: isize| ((i as isize + o).rem_euclid(7)) as usize;
        for i in 0..7 {
            // (I)
            self.nonempty(&a[i], &format!("A{i}"));
            self.clique(&a[i], &format!("A{i}"));
            self.complete(&a[i], &a[m(i, 1)], &format!("(I) A{i}/A{}", m(i, 1)));
            self.anticomplete(&a[i], &a[m(i, 3)], &format!("(I) A{i}/A{}", m(i, 3)));
            // (II.a)-(II.c)
            let (prev2, next2) = (&a[m(i, -2)], &a[m(i, 2)]);
            self.anticomplete(&p.star[i], prev2, &format!("(II.a) A{i}* vs A{}", m(i, -2)));
            self.anticomplete(&p.star[i], next2, &format!("(II.a) A{i}* vs A{}", m(i, 2)));
            self.anticomplete(&p.plus[i], prev2, &format!("(II.b) A{i}+ vs A{}", m(i, -2)));
            self.anticomplete(&p.minus[i], next2, &format!("(II.c) A{i}- vs A{}", m(i, 2)));
            let n2 = self.set(next2);
            let p2 = self.set(prev2);
            for &v in &p.plus[i] {
                if self.g.neighbors(v).is_disjoint(&n2) {
                    self.fail(format!("(II.b) {v} in A{i}+ has no neighbor in A{}", m(i, 2)));
                }
            }
            for &v in &p.minus[i] {
                if self.g.neighbors(v).is_disjoint(&p2) {
                    self.fail(format!("(II.c) {v} in A{i}- has no neighbor in A{}", m(i, -2)));
                }
            }
            // (II.d), (II.e)
            self.nested(&p.plus[i], within, &format!("(II.d) order of A{i}+"));
            self.nested(&p.minus[i], within, &format!("(II.e) order of A{i}-"));
            // (II.f)
            let ok = a[i].iter().any(|&v| {
                let nv = self.g.neighbors(v);
                !p2.is_subset(nv) && !n2.is_subset(nv)
            });
            if !ok {
                self.fail(format!("(II.f) no vertex of A{i} misses both A{} and A{}", m(i, -2), m(i, 2)));
            }
        }
        let s = p.i_star;
        // (III)-(V)
        for o in [-3, 3] {
            self.empty(&p.plus[m(s, o)], &format!("(III) A{}+", m(s, o)));
            self.empty(&p.minus[m(s, o)], &format!("(III) A{}-", m(s, o)));
        }
        self.empty(&p.minus[m(s, -2)], &format!("(IV) A{}-", m(s, -2)));
        self.empty(&p.plus[m(s, 2)], &format!("(IV) A{}+", m(s, 2)));
        self.empty(&p.minus[m(s, -1)], &format!("(V) A{}-", m(s, -1)));
        self.empty(&p.plus[m(s, 1)], &format!("(V) A{}+", m(s, 1)));
        // parallel 2-skip exclusions
        for i in 0..7 {
            if p.plus[m(i, -1)].is_empty() != p.minus[m(i, 1)].is_empty() {
                self.fail(format!("skip pairing: A{}+ vs A{}-", m(i, -1), m(i, 1)));
            }
            if !p.plus[i].is_empty() {
                for (j, set) in [(3, &p.plus), (-3, &p.plus), (-2, &p.minus), (-1, &p.minus)] {
                    if !set[m(i, j)].is_empty() {
                        self.fail(format!("skip exclusion: A{i}+ with offset {j}"));
                    }
                }
            }
            if !p.minus[i].is_empty() {
                for (j, set) in [(1, &p.plus), (2, &p.plus), (3, &p.minus), (-3, &p.minus)] {
                    if !set[m(i, j)].is_empty() {
                        self.fail(format!("skip exclusion: A{i}- with offset {j}"));
                    }
                }
            }
        }
    }

    fn emerald(&mut self, p: &EmeraldPartition, core: &VertexSet) {
        let b = &p.parts;
        if b.star.len() != 7 || b.plus.len() != 7 || b.minus.len() != 7 || b.i_star >= 7 {
            self.fail("emerald needs seven star/plus/minus lists and i* in Z7".into());
            return;
        }
        let s = b.i_star;
        let m = |o: isize| ((s as isize + o).rem_euclid(7)) as usize;
        self.nonempty(&p.c, "C");
        self.clique(&p.c, "C");
        // six named subcliques around the pivot, everything else star-only
        self.nonempty(&b.minus[m(0)], "A_{i*}-");
        self.nonempty(&b.plus[m(0)], "A_{i*}+");
        self.nonempty(&b.star[m(2)], "A_{i*+2}*");
        self.nonempty(&b.minus[m(2)], "A_{i*+2}-");
        self.nonempty(&b.star[m(-2)], "A_{i*-2}*");
        self.nonempty(&b.plus[m(-2)], "A_{i*-2}+");
        self.empty(&b.star[m(0)], "A_{i*}*");
        self.empty(&b.plus[m(2)], "A_{i*+2}+");
        self.empty(&b.minus[m(-2)], "A_{i*-2}-");
        for o in [-3, -1, 1, 3] {
            self.empty(&b.plus[m(o)], &format!("A{}+", m(o)));
            self.empty(&b.minus[m(o)], &format!("A{}-", m(o)));
            let a = b.part(m(o));
            self.anticomplete(&a, &b.part(m(o - 2)), &format!("A{}/A{}", m(o), m(o - 2)));
            self.anticomplete(&a, &b.part(m(o + 2)), &format!("A{}/A{}", m(o), m(o + 2)));
        }
        let minus0 = &b.minus[m(0)];
        let plus0 = &b.plus[m(0)];
        self.complete(minus0, &b.plus[m(-2)], "A_{i*}- / A_{i*-2}+");
        self.anticomplete(minus0, &b.star[m(-2)], "A_{i*}- / A_{i*-2}*");
        self.anticomplete(minus0, &b.part(m(2)), "A_{i*}- / A_{i*+2}");
        self.complete(plus0, &b.minus[m(2)], "A_{i*}+ / A_{i*+2}-");
        self.anticomplete(plus0, &b.star[m(2)], "A_{i*}+ / A_{i*+2}*");
        self.anticomplete(plus0, &b.part(m(-2)), "A_{i*}+ / A_{i*-2}");
        let mut seen: Vec<usize> = b.star[m(2)].clone();
        seen.extend(b.part(m(3)));
        seen.extend(b.part(m(-3)));
        seen.extend(&b.star[m(-2)]);
        self.complete(&p.c, &seen, "C to its four parts");
        let mut away: Vec<usize> = b.plus[m(-2)].clone();
        for o in -1..=1 {
            away.extend(b.part(m(o)));
        }
        away.extend(&b.minus[m(2)]);
        self.anticomplete(&p.c, &away, "C to the other parts");
        let within = core.difference(&self.set(&p.c));
        self.bracelet(b, &within);
    }
}

/// Re-check every axiom of the claimed class. An empty list means pass.
pub fn verify_certificate(g: &Graph, cert: &AtomCertificate) -> Vec<String> {
    let mut ck = Checker { g, errs: Vec::new() };
    ck.partition(cert);
    if !ck.errs.is_empty() {
        return ck.errs;
    }
    let core = ck.set(&cert.core());
    match &cert.kind {
        AtomKind::Complete => {
            if !core.is_empty() {
                ck.fail("complete certificate with nonempty core".into());
            }
        }
        AtomKind::Ring6(p) => ck.ring(p, &core),
        AtomKind::Wreath(p) => ck.wreath(p, &core),
        AtomKind::Crown(p) => ck.crown(p),
        AtomKind::Lantern(p) => ck.lantern(p),
        AtomKind::Bracelet(p) => ck.bracelet(p, &core),
        AtomKind::Emerald(p) => ck.emerald(p, &core),
    }
    ck.errs
}
