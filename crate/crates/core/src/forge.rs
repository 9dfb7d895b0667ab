//! Seeded generators for every atom class and for clique-glued composites.
//!
//! Generators build vertices part by part in a fixed order, so the output is
//! a pure function of the spec. `shuffle` relabels a graph and its
//! certificate with a seeded permutation when scrambled ids are wanted.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificate::{
    verify_certificate, AtomCertificate, AtomKind, BraceletPartition, CrownPartition, EmeraldPartition,
    LanternPartition, RingPartition, WreathOrCrown,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bipartite adjacency with nested row prefixes: row `i` sees columns
/// `0..f[i]`. `f` is non-increasing, `f[0]` is the column count and the last
/// entry is at least 1, so every row and column has a neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    pub f: Vec<usize>,
}

impl Staircase {
    pub fn full(rows: usize, cols: usize) -> Self {
        Staircase { f: vec![cols; rows] }
    }

    pub fn random<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Self {
        let mut f = Vec::with_capacity(rows);
        let mut cur = cols;
        for i in 0..rows {
            if i > 0 {
                cur = rng.gen_range(1..=cur);
            }
            f.push(cur);
        }
        Staircase { f }
    }

    pub fn rows(&self) -> usize {
        self.f.len()
    }

    pub fn cols(&self) -> usize {
        self.f.first().copied().unwrap_or(0)
    }

    pub fn is_full(&self) -> bool {
        self.f.iter().all(|&x| x == self.cols())
    }

    pub fn check(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(format!("{what}: {m}")));
        if self.rows() != rows || self.cols() != cols {
            return bad(&format!("staircase is {}x{}, expected {rows}x{cols}", self.rows(), self.cols()));
        }
        if self.f.windows(2).any(|w| w[1] > w[0]) {
            return bad("staircase rows must be non-increasing");
        }
        if self.f.last().is_some_and(|&x| x == 0) {
            return bad("last staircase row is empty");
        }
        Ok(())
    }
}

/// Accumulates cliques and the edges between them.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 0, edges: Vec::new() }
    }

    fn clique(&mut self, size: usize) -> Vec<usize> {
        let part: Vec<usize> = (self.n..self.n + size).collect();
        self.n += size;
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                self.edges.push((u, v));
            }
        }
        part
    }

    fn complete(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.edges.push((u, v));
            }
        }
    }

    fn stair(&mut self, rows: &[usize], cols: &[usize], s: &Staircase) {
        for (i, &u) in rows.iter().enumerate() {
            for &v in &cols[..s.f[i]] {
                self.edges.push((u, v));
            }
        }
    }

    fn finish(self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("builder produces valid edges")
    }
}

fn checked(g: Graph, cert: AtomCertificate) -> Result<(Graph, AtomCertificate)> {
    let errs = verify_certificate(&g, &cert);
    if errs.is_empty() {
        Ok((g, cert))
    } else {
        Err(Error::InvalidSpec(errs.join("; ")))
    }
}

/// Six part sizes and, for each `i`, the staircase from `X_i` to `X_{i+1}`
/// (`None` = complete).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub sizes: [usize; 6],
    #[serde(default)]
    pub stairs: [Option<Staircase>; 6],
}

pub fn gen_ring6(spec: &RingSpec) -> Result<(Graph, RingPartition)> {
    if let Some(i) = spec.sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidSpec(format!("ring part X{i} is empty")));
    }
    let mut b = Builder::new();
    let parts: Vec<Vec<usize>> = spec.sizes.iter().map(|&s| b.clique(s)).collect();
    for i in 0..6 {
        let j = (i + 1) % 6;
        match &spec.stairs[i] {
            Some(s) => {
                s.check(spec.sizes[i], spec.sizes[j], &format!("ring stair X{i}-X{j}"))?;
                b.stair(&parts[i], &parts[j], s);
            }
            None => b.complete(&parts[i], &parts[j]),
        }
    }
    let p = RingPartition { parts };
    let (g, _) = checked(
        b.finish(),
        AtomCertificate { universal: vec![], kind: AtomKind::Ring6(p.clone()) },
    )?;
    Ok((g, p))
}

/// A ring whose pairs (0,1), (2,3), (4,5) are complete.
pub fn gen_wreath(sizes: [usize; 6], stairs: [Option<Staircase>; 3]) -> Result<(Graph, RingPartition)> {
    let [s1, s3, s5] = stairs;
    let spec = RingSpec { sizes, stairs: [None, s1, None, s3, None, s5] };
    let (g, p) = gen_ring6(&spec)?;
    checked(g, AtomCertificate { universal: vec![], kind: AtomKind::Wreath(p) })
        .map(|(g, c)| match c.kind {
            AtomKind::Wreath(p) => (g, p),
            _ => unreachable!(),
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrownKind {
    C63,
    C64,
}

/// Blow-up of C_6^3 or C_6^4 with pivot 2: `c` sizes for C_0..C_5 and `d`
/// sizes for D_2..D_5 (`d[0]` must be 0 for C_6^3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownSpec {
    pub kind: CrownKind,
    pub c: [usize; 6],
    pub d: [usize; 4],
}

pub fn gen_crown(spec: &CrownSpec) -> Result<(Graph, WreathOrCrown)> {
    let want_d2 = spec.kind == CrownKind::C64;
    if spec.c.contains(&0) || spec.d[1..].contains(&0) || (spec.d[0] > 0) != want_d2 {
        return Err(Error::InvalidSpec(format!("crown sizes do not fit {:?}", spec.kind)));
    }
    let mut b = Builder::new();
    let c: Vec<Vec<usize>> = spec.c.iter().map(|&s| b.clique(s)).collect();
    let mut d = vec![vec![], vec![]];
    d.extend(spec.d.iter().map(|&s| b.clique(s)));
    for i in 0..6 {
        b.complete(&c[i], &c[(i + 1) % 6]);
        for o in [5, 0, 1] {
            b.complete(&d[i], &c[(i + o) % 6]);
        }
    }
    let p = CrownPartition { c, d, i_star: 2 };
    let (g, _) = checked(
        b.finish(),
        AtomCertificate { universal: vec![], kind: AtomKind::Crown(p.clone()) },
    )?;
    Ok((g, WreathOrCrown::Crown(p)))
}

/// `b`/`c` list arm sizes; arm 0 uses `stair` (rows B_1, cols C_1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanternSpec {
    pub a: usize,
    pub d: usize,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    #[serde(default)]
    pub stair: Option<Staircase>,
}

pub fn gen_lantern(spec: &LanternSpec) -> Result<(Graph, LanternPartition)> {
    let r = spec.b.len();
    if r < 3 || spec.c.len() != r {
        return Err(Error::InvalidSpec("lantern needs r >= 3 arms with matching sizes".into()));
    }
    if spec.a == 0 || spec.d == 0 || spec.b.contains(&0) || spec.c.contains(&0) {
        return Err(Error::InvalidSpec("lantern parts must be nonempty".into()));
    }
    let mut bl = Builder::new();
    let a = bl.clique(spec.a);
    let b: Vec<Vec<usize>> = spec.b.iter().map(|&s| bl.clique(s)).collect();
    let c: Vec<Vec<usize>> = spec.c.iter().map(|&s| bl.clique(s)).collect();
    let d = bl.clique(spec.d);
    for i in 0..r {
        bl.complete(&a, &b[i]);
        bl.complete(&d, &c[i]);
        if i == 0 {
            if let Some(s) = &spec.stair {
                s.check(spec.b[0], spec.c[0], "lantern stair B1-C1")?;
                bl.stair(&b[0], &c[0], s);
                continue;
            }
        }
        bl.complete(&b[i], &c[i]);
    }
    let p = LanternPartition { a, b, c, d };
    let (g, _) = checked(
        bl.finish(),
        AtomCertificate { universal: vec![], kind: AtomKind::Lantern(p.clone()) },
    )?;
    Ok((g, p))
}

/// Per-index sizes of A_i^*, A_i^+, A_i^-, the pivot, and for each `i`
/// an optional staircase from A_i^+ (rows) to A_{i+2}^- (cols); a missing
/// staircase on a nonempty pair is drawn from `seed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceletSpec {
    pub star: [usize; 7],
    pub plus: [usize; 7],
    pub minus: [usize; 7],
    pub i_star: usize,
    #[serde(default)]
    pub stairs: [Option<Staircase>; 7],
}

impl BraceletSpec {
    /// Every A_i a single star vertex: C7.
    pub fn cycle() -> Self {
        BraceletSpec { star: [1; 7], plus: [0; 7], minus: [0; 7], i_star: 0, stairs: Default::default() }
    }

    /// Emptiness axioms around the pivot and the parallel-skip exclusions,
    /// checked on sizes alone.
    pub fn validate(&self) -> Result<()> {
        let m = |i: usize, o: isize| ((i as isize + o).rem_euclid(7)) as usize;
        let (p, q) = (&self.plus, &self.minus);
        let s = self.i_star;
        let mut errs = Vec::new();
        if s >= 7 {
            errs.push("i* must lie in 0..7".to_string());
        }
        for i in 0..7 {
            if self.star[i] + p[i] + q[i] == 0 {
                errs.push(format!("(I) A{i} is empty"));
            }
        }
        if s < 7 {
            for o in [-3, 3] {
                if p[m(s, o)] + q[m(s, o)] > 0 {
                    errs.push(format!("(III) A{} must be star-only", m(s, o)));
                }
            }
            if q[m(s, -2)] > 0 || p[m(s, 2)] > 0 {
                errs.push("(IV) A_{i*-2}^- and A_{i*+2}^+ must be empty".into());
            }
            if q[m(s, -1)] > 0 || p[m(s, 1)] > 0 {
                errs.push("(V) A_{i*-1}^- and A_{i*+1}^+ must be empty".into());
            }
        }
        for i in 0..7 {
            if (p[i] > 0) != (q[m(i, 2)] > 0) {
                errs.push(format!("skip pairing: A{i}+ and A{}- must be empty together", m(i, 2)));
            }
            if p[i] > 0 {
                for (o, set, tag) in [(3, p, "+"), (-3, p, "+"), (-2, q, "-"), (-1, q, "-")] {
                    if set[m(i, o)] > 0 {
                        errs.push(format!("skip exclusion: A{i}+ forbids A{}{tag}", m(i, o)));
                    }
                }
            }
            if q[i] > 0 {
                for (o, set, tag) in [(1, p, "+"), (2, p, "+"), (3, q, "-"), (-3, q, "-")] {
                    if set[m(i, o)] > 0 {
                        errs.push(format!("skip exclusion: A{i}- forbids A{}{tag}", m(i, o)));
                    }
                }
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidSpec(errs.join("; ")))
        }
    }
}

pub fn gen_bracelet(spec: &BraceletSpec, seed: u64) -> Result<(Graph, BraceletPartition)> {
    spec.validate()?;
    let mut rng = rng(seed);
    let mut b = Builder::new();
    let star: Vec<Vec<usize>> = spec.star.iter().map(|&s| b.clique(s)).collect();
    let plus: Vec<Vec<usize>> = spec.plus.iter().map(|&s| b.clique(s)).collect();
    let minus: Vec<Vec<usize>> = spec.minus.iter().map(|&s| b.clique(s)).collect();
    let part = |i: usize| -> Vec<usize> {
        let i = i % 7;
        star[i].iter().chain(&plus[i]).chain(&minus[i]).copied().collect()
    };
    for i in 0..7 {
        b.complete(&star[i], &plus[i]);
        b.complete(&star[i], &minus[i]);
        b.complete(&plus[i], &minus[i]);
        b.complete(&part(i), &part(i + 1));
        if spec.plus[i] == 0 {
            continue;
        }
        let j = (i + 2) % 7;
        let s = match &spec.stairs[i] {
            Some(s) => {
                s.check(spec.plus[i], spec.minus[j], &format!("stair A{i}+ to A{j}-"))?;
                s.clone()
            }
            None => Staircase::random(spec.plus[i], spec.minus[j], &mut rng),
        };
        b.stair(&plus[i], &minus[j], &s);
    }
    let p = BraceletPartition { star, plus, minus, i_star: spec.i_star };
    let (g, _) = checked(
        b.finish(),
        AtomCertificate { universal: vec![], kind: AtomKind::Bracelet(p.clone()) },
    )?;
    Ok((g, p))
}

/// Part order used by emerald specs and arc tables, relative to pivot 0.
pub const EMERALD_PARTS: [&str; 11] = ["c", "a1", "a2*", "a2-", "a3", "a4", "a5*", "a5+", "a6", "a0-", "a0+"];

/// Blow-up of the 11-vertex emerald; `sizes` follow [`EMERALD_PARTS`].
pub fn gen_emerald(sizes: [usize; 11]) -> Result<(Graph, EmeraldPartition)> {
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidSpec(format!("emerald part {} is empty", EMERALD_PARTS[i])));
    }
    let mut b = Builder::new();
    let parts: Vec<Vec<usize>> = sizes.iter().map(|&s| b.clique(s)).collect();
    let [c, a1, a2s, a2m, a3, a4, a5s, a5p, a6, a0m, a0p] = std::array::from_fn(|i| parts[i].clone());
    let cat = |xs: &[&Vec<usize>]| -> Vec<usize> { xs.iter().flat_map(|x| x.iter().copied()).collect() };
    let a = [cat(&[&a0m, &a0p]), a1.clone(), cat(&[&a2s, &a2m]), a3.clone(), a4.clone(), cat(&[&a5s, &a5p]), a6.clone()];
    for i in 0..7 {
        b.complete(&a[i], &a[(i + 1) % 7]);
    }
    b.complete(&a0m, &a0p);
    b.complete(&a2s, &a2m);
    b.complete(&a5s, &a5p);
    b.complete(&a0m, &a5p);
    b.complete(&a0p, &a2m);
    b.complete(&c, &cat(&[&a2s, &a3, &a4, &a5s]));
    let e = Vec::new;
    let p = EmeraldPartition {
        parts: BraceletPartition {
            star: vec![e(), a1, a2s, a3, a4, a5s, a6],
            plus: vec![a0p, e(), e(), e(), e(), a5p, e()],
            minus: vec![a0m, e(), a2m, e(), e(), e(), e()],
            i_star: 0,
        },
        c,
    };
    let (g, _) = checked(
        b.finish(),
        AtomCertificate { universal: vec![], kind: AtomKind::Emerald(p.clone()) },
    )?;
    Ok((g, p))
}

/// Identify each clique vertex `u` of `g1` with `v` of `g2` for `(u, v)` in
/// `map`. `g1` keeps its ids; the rest of `g2` follows in order.
pub fn glue(g1: &Graph, g2: &Graph, map: &[(usize, usize)]) -> Result<Graph> {
    let left = VertexSet::from_iter(g1.n(), map.iter().map(|p| p.0));
    let right = VertexSet::from_iter(g2.n(), map.iter().map(|p| p.1));
    if left.len() != map.len() || right.len() != map.len() {
        return Err(Error::Invalid("glue map is not injective".into()));
    }
    if !g1.is_clique(&left) || !g2.is_clique(&right) {
        return Err(Error::Invalid("glue map must join two cliques".into()));
    }
    let mut id = vec![usize::MAX; g2.n()];
    for &(u, v) in map {
        id[v] = u;
    }
    let mut next = g1.n();
    for slot in id.iter_mut().filter(|x| **x == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (id[u], id[v])));
    Graph::from_edges(next, &edges)
}

/// Join with K_k; the clique takes ids `n..n+k`.
pub fn add_universal_clique(g: &Graph, k: usize) -> Graph {
    g.join(&Graph::complete(k))
}

/// `add_universal_clique` applied to a certified atom.
pub fn with_universal(g: &Graph, cert: &AtomCertificate, k: usize) -> (Graph, AtomCertificate) {
    let mut c = cert.clone();
    c.universal.extend(g.n()..g.n() + k);
    (add_universal_clique(g, k), c)
}

/// Relabel a graph and its certificate by a seeded permutation.
pub fn shuffle(g: &Graph, cert: &AtomCertificate, seed: u64) -> (Graph, AtomCertificate) {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng(seed));
    (g.permute(&perm), cert.relabel(&perm))
}

/// A generator spec as read from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum InstanceSpec {
    Ring6(RingSpec),
    Wreath { sizes: [usize; 6], #[serde(default)] stairs: [Option<Staircase>; 3] },
    Crown(CrownSpec),
    Lantern(LanternSpec),
    Bracelet(BraceletSpec),
    Emerald { sizes: [usize; 11] },
}

/// Build an instance and its certificate from a spec. `universal` adds a
/// dominating clique; `shuffle_ids` scrambles ids with `seed`.
pub fn generate(spec: &InstanceSpec, seed: u64, universal: usize, shuffle_ids: bool) -> Result<(Graph, AtomCertificate)> {
    let (g, kind) = match spec {
        InstanceSpec::Ring6(s) => gen_ring6(s).map(|(g, p)| (g, AtomKind::Ring6(p)))?,
        InstanceSpec::Wreath { sizes, stairs } => {
            gen_wreath(*sizes, stairs.clone()).map(|(g, p)| (g, AtomKind::Wreath(p)))?
        }
        InstanceSpec::Crown(s) => match gen_crown(s)? {
            (g, WreathOrCrown::Crown(p)) => (g, AtomKind::Crown(p)),
            (g, WreathOrCrown::Wreath(p)) => (g, AtomKind::Wreath(p)),
        },
        InstanceSpec::Lantern(s) => gen_lantern(s).map(|(g, p)| (g, AtomKind::Lantern(p)))?,
        InstanceSpec::Bracelet(s) => gen_bracelet(s, seed).map(|(g, p)| (g, AtomKind::Bracelet(p)))?,
        InstanceSpec::Emerald { sizes } => gen_emerald(*sizes).map(|(g, p)| (g, AtomKind::Emerald(p)))?,
    };
    let cert = AtomCertificate { universal: vec![], kind };
    let (g, cert) = with_universal(&g, &cert, universal);
    Ok(if shuffle_ids { shuffle(&g, &cert, seed ^ 0x5eed) } else { (g, cert) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Wreath,
    Crown,
    Lantern,
    Bracelet,
    Emerald,
}

pub const FAMILIES: [Family; 5] = [Family::Wreath, Family::Crown, Family::Lantern, Family::Bracelet, Family::Emerald];

fn sizes<const K: usize, R: Rng>(rng: &mut R, lo: usize, hi: usize) -> [usize; K] {
    std::array::from_fn(|_| rng.gen_range(lo..=hi))
}

/// Trim random part sizes down to 1 until the total fits `max_n`.
fn fit<const K: usize>(mut s: [usize; K], floor: [usize; K], max_n: usize) -> [usize; K] {
    let mut i = 0;
    while s.iter().sum::<usize>() > max_n && s != floor {
        if s[i % K] > floor[i % K] {
            s[i % K] -= 1;
        }
        i += 1;
    }
    s
}

/// A random spec of the given family whose vertex count stays near `max_n`
/// (the minimal member of a family may exceed a tiny bound).
pub fn random_spec<R: Rng>(family: Family, max_n: usize, rng: &mut R) -> InstanceSpec {
    let big = if max_n >= 24 { 4 } else { 2 };
    match family {
        Family::Wreath => {
            let s = fit(sizes::<6, _>(rng, 1, big), [1; 6], max_n);
            let stairs = std::array::from_fn(|k| {
                let i = 2 * k + 1;
                rng.gen_bool(0.6).then(|| Staircase::random(s[i], s[(i + 1) % 6], rng))
            });
            InstanceSpec::Wreath { sizes: s, stairs }
        }
        Family::Crown => {
            let kind = if rng.gen_bool(0.5) { CrownKind::C63 } else { CrownKind::C64 };
            let mut floor = [1; 10];
            let mut s = sizes::<10, _>(rng, 1, big);
            if kind == CrownKind::C63 {
                floor[6] = 0;
                s[6] = 0;
            }
            let s = fit(s, floor, max_n);
            InstanceSpec::Crown(CrownSpec {
                kind,
                c: std::array::from_fn(|i| s[i]),
                d: std::array::from_fn(|i| s[6 + i]),
            })
        }
        Family::Lantern => {
            let r = if max_n >= 10 { rng.gen_range(3..=4) } else { 3 };
            let mut v: Vec<usize> = (0..2 * r + 2).map(|_| rng.gen_range(1..=big)).collect();
            let (mut i, len) = (0, v.len());
            while v.iter().sum::<usize>() > max_n && v.iter().any(|&x| x > 1) {
                if v[i % len] > 1 {
                    v[i % len] -= 1;
                }
                i += 1;
            }
            let b = v[2..2 + r].to_vec();
            let c = v[2 + r..].to_vec();
            let stair = rng.gen_bool(0.7).then(|| Staircase::random(b[0], c[0], rng));
            InstanceSpec::Lantern(LanternSpec { a: v[0], d: v[1], b, c, stair })
        }
        Family::Bracelet => loop {
            let i_star = rng.gen_range(0..7);
            let mut star = [0; 7];
            let mut plus = [0; 7];
            let mut minus = [0; 7];
            for (p, q) in [(5, 0), (0, 2), (6, 1)] {
                if rng.gen_bool(0.6) {
                    plus[(p + i_star) % 7] = rng.gen_range(1..=big);
                    minus[(q + i_star) % 7] = rng.gen_range(1..=big);
                }
            }
            for i in 0..7 {
                let lo = usize::from(plus[i] + minus[i] == 0 || rng.gen_bool(0.5));
                star[i] = if lo == 0 { 0 } else { rng.gen_range(1..=big) };
            }
            let total = |a: &[usize; 7], b: &[usize; 7], c: &[usize; 7]| {
                a.iter().chain(b).chain(c).sum::<usize>()
            };
            while total(&star, &plus, &minus) > max_n {
                match (0..7).find(|&i| star[i] > 1) {
                    Some(i) => star[i] -= 1,
                    None => match (0..7).find(|&i| plus[i] > 1 || minus[i] > 1) {
                        Some(i) if plus[i] > 1 => plus[i] -= 1,
                        Some(i) => minus[i] -= 1,
                        None => break,
                    },
                }
            }
            let spec = BraceletSpec { star, plus, minus, i_star, stairs: Default::default() };
            let s: u64 = rng.gen();
            if spec.validate().is_ok() && gen_bracelet(&spec, s).is_ok() {
                let mut spec = spec;
                // pin the drawn staircases so the spec alone reproduces the graph
                let mut r2 = self::rng(s);
                for i in 0..7 {
                    if spec.plus[i] > 0 {
                        let j = (i + 2) % 7;
                        spec.stairs[i] = Some(Staircase::random(spec.plus[i], spec.minus[j], &mut r2));
                    }
                }
                return InstanceSpec::Bracelet(spec);
            }
        },
        Family::Emerald => {
            let s = fit(sizes::<11, _>(rng, 1, big.min(3)), [1; 11], max_n);
            InstanceSpec::Emerald { sizes: s }
        }
    }
}

/// One corpus entry; `cert` is present for atoms only.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub cert: Option<AtomCertificate>,
}

/// Pick a maximal clique of `g` at random, capped at `k` vertices.
fn random_clique<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Vec<usize> {
    let mut cand = g.vertices();
    let mut out = Vec::new();
    while out.len() < k && !cand.is_empty() {
        let v = cand.to_vec()[rng.gen_range(0..cand.len())];
        out.push(v);
        cand.intersect_with(g.neighbors(v));
    }
    out
}

/// A seeded mix of certified atoms (some joined with a universal clique)
/// and clique-glued composites, every graph with at most `max_n` vertices
/// when the family allows it.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Instance> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let family = FAMILIES[k % FAMILIES.len()];
        k += 1;
        let kind = rng.gen_range(0..10);
        if kind < 6 {
            let u = if kind == 5 { rng.gen_range(1..=2) } else { 0 };
            let spec = random_spec(family, max_n.saturating_sub(u), &mut rng);
            let Ok((g, cert)) = generate(&spec, rng.gen(), u, true) else { continue };
            if g.n() > max_n {
                continue;
            }
            out.push(Instance { name: format!("{}-{}", cert.kind.name(), out.len()), graph: g, cert: Some(cert) });
        } else {
            let other = FAMILIES[rng.gen_range(0..FAMILIES.len())];
            let n1 = max_n / 2 + 2;
            let Ok((g1, _)) = generate(&random_spec(family, n1, &mut rng), rng.gen(), 0, true) else { continue };
            let room = max_n.saturating_sub(g1.n()).max(1);
            let (g2, _) = if rng.gen_bool(0.3) || room < 9 {
                let t = rng.gen_range(1..=room.clamp(1, 4));
                (Graph::complete(t), ())
            } else {
                match generate(&random_spec(other, room + 2, &mut rng), rng.gen(), 0, true) {
                    Ok((g, _)) => (g, ()),
                    Err(_) => continue,
                }
            };
            let size = rng.gen_range(0..=2);
            let c1 = random_clique(&g1, size, &mut rng);
            let c2 = random_clique(&g2, c1.len(), &mut rng);
            let m = c1.len().min(c2.len());
            let map: Vec<(usize, usize)> = c1[..m].iter().copied().zip(c2[..m].iter().copied()).collect();
            let Ok(g) = glue(&g1, &g2, &map) else { continue };
            if g.n() > max_n {
                continue;
            }
            out.push(Instance { name: format!("glued-{}", out.len()), graph: g, cert: None });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_alpha, brute_omega};

    #[test]
    fn ring_examples() {
        let (g, _) = gen_ring6(&RingSpec { sizes: [1; 6], stairs: Default::default() }).unwrap();
        assert_eq!(g.m(), 6);
        let (g, _) = gen_ring6(&RingSpec { sizes: [2; 6], stairs: Default::default() }).unwrap();
        assert_eq!(brute_omega(&g).unwrap(), 4);
    }

    #[test]
    fn crown_counts() {
        let c63 = CrownSpec { kind: CrownKind::C63, c: [1; 6], d: [0, 1, 1, 1] };
        assert_eq!(gen_crown(&c63).unwrap().0.n(), 9);
        let c64 = CrownSpec { kind: CrownKind::C64, c: [1; 6], d: [1; 4] };
        assert_eq!(gen_crown(&c64).unwrap().0.n(), 10);
    }

    #[test]
    fn lantern_and_emerald() {
        let spec = LanternSpec { a: 1, d: 1, b: vec![1; 3], c: vec![1; 3], stair: None };
        let (g, _) = gen_lantern(&spec).unwrap();
        assert_eq!((g.n(), g.m()), (8, 9));
        let (g, _) = gen_emerald([1; 11]).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(brute_alpha(&g).unwrap(), 3);
        let mut s = [1; 11];
        s[0] = 3;
        assert_eq!(gen_emerald(s).unwrap().0.n(), 13);
    }

    #[test]
    fn bracelet_specs() {
        let (g, _) = gen_bracelet(&BraceletSpec::cycle(), 0).unwrap();
        assert_eq!((g.n(), g.m()), (7, 7));
        let mut spec = BraceletSpec::cycle();
        spec.star[2] = 1;
        spec.plus[0] = 1;
        spec.minus[2] = 1;
        assert!(gen_bracelet(&spec, 0).is_ok());
        // A1+ with A3+ is legal only around pivot 3
        let mut two = BraceletSpec::cycle();
        two.plus[1] = 1;
        two.plus[3] = 1;
        two.minus[3] = 1;
        two.minus[5] = 1;
        for s in 0..7 {
            two.i_star = s;
            assert_eq!(two.validate().is_ok(), s == 3, "i* = {s}");
        }
        // plus-sets three apart never fit
        let mut bad = BraceletSpec::cycle();
        bad.plus[1] = 1;
        bad.plus[4] = 1;
        bad.minus[3] = 1;
        bad.minus[6] = 1;
        for s in 0..7 {
            bad.i_star = s;
            assert!(bad.validate().is_err(), "i* = {s}");
        }
    }

    #[test]
    fn glue_examples() {
        let k3 = Graph::complete(3);
        let d = glue(&k3, &k3, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!((d.n(), d.m()), (4, 5));
        let c = glue(&Graph::cycle(7), &Graph::cycle(7), &[(0, 0)]).unwrap();
        assert_eq!(c.n(), 13);
        assert!(glue(&Graph::cycle(7), &k3, &[(0, 0), (2, 1)]).is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = corpus(7, 40, 14);
        let b = corpus(7, 40, 14);
        assert_eq!(a.len(), 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph.edges(), y.graph.edges());
            assert!(x.graph.n() <= 14, "{} has {}", x.name, x.graph.n());
            if let Some(c) = &x.cert {
                assert!(verify_certificate(&x.graph, c).is_empty(), "{}", x.name);
            }
        }
    }
}
