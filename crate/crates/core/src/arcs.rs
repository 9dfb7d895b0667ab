//! Proper circular-arc models for bracelets and thickened emeralds, and
//! optimal coloring through them.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::{BraceletPartition, EmeraldPartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::solution::Coloring;

fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

fn modc(x: Rational, c: Rational) -> Rational {
    x - c * (x / c).floor()
}

/// Closed arcs on a circle; arc `v` runs clockwise from `arcs[v].0` to
/// `arcs[v].1`, both taken modulo the circumference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRepresentation {
    #[serde(with = "rational::as_string")]
    pub circumference: Rational,
    #[serde(with = "arc_list")]
    pub arcs: Vec<(Rational, Rational)>,
}

mod arc_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Arc(#[serde(with = "rational::pair_as_strings")] (Rational, Rational));

    pub fn serialize<S: Serializer>(v: &[(Rational, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
        let wrapped: Vec<Arc> = v.iter().map(|&p| Arc(p)).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(Rational, Rational)>, D::Error> {
        Ok(Vec::<Arc>::deserialize(d)?.into_iter().map(|a| a.0).collect())
    }
}

/// Integer form of a representation: endpoints replaced by their rank among
/// the distinct endpoint values. Every intersection and containment
/// question has the same answer on both forms.
struct Ranked {
    m: usize,
    start: Vec<usize>,
    len: Vec<usize>,
}

impl Ranked {
    /// Clockwise offset from `a` to `b`.
    fn offset(&self, a: usize, b: usize) -> usize {
        (b + self.m - a) % self.m
    }

    fn meets(&self, u: usize, v: usize) -> bool {
        self.offset(self.start[u], self.start[v]) <= self.len[u]
            || self.offset(self.start[v], self.start[u]) <= self.len[v]
    }

    fn contains(&self, u: usize, v: usize) -> bool {
        let d = self.offset(self.start[u], self.start[v]);
        d + self.len[v] <= self.len[u] && (d, self.len[v]) != (0, self.len[u])
    }
}

impl ArcRepresentation {
    /// Reduce every endpoint modulo the circumference.
    pub fn new(circumference: Rational, arcs: Vec<(Rational, Rational)>) -> Result<Self> {
        if circumference <= Rational::zero() {
            return Err(Error::Invalid("circumference must be positive".into()));
        }
        let c = circumference;
        let arcs = arcs.into_iter().map(|(s, e)| (modc(s, c), modc(e, c))).collect();
        Ok(ArcRepresentation { circumference, arcs })
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    /// Clockwise length of arc `v`.
    pub fn length(&self, v: usize) -> Rational {
        let (s, e) = self.arcs[v];
        modc(e - s, self.circumference)
    }

    fn ranked(&self) -> Ranked {
        let c = self.circumference;
        let norm: Vec<(Rational, Rational)> = self.arcs.iter().map(|&(s, e)| (modc(s, c), modc(e, c))).collect();
        let mut vals: Vec<Rational> = norm.iter().flat_map(|&(s, e)| [s, e]).collect();
        vals.sort();
        vals.dedup();
        let rank = |x: &Rational| vals.binary_search(x).unwrap();
        let m = vals.len().max(1);
        let start: Vec<usize> = norm.iter().map(|p| rank(&p.0)).collect();
        let len = norm.iter().zip(&start).map(|(p, &s)| (rank(&p.1) + m - s) % m).collect();
        Ranked { m, start, len }
    }

    /// The intersection graph (closed arcs, so touching arcs meet).
    pub fn realize(&self) -> Graph {
        let r = self.ranked();
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if r.meets(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("arc pairs are in range")
    }

    /// First pair `(u, v)` with arc `u` properly containing arc `v`.
    pub fn containment(&self) -> Option<(usize, usize)> {
        let r = self.ranked();
        let n = self.n();
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).find(|&(u, v)| u != v && r.contains(u, v))
    }

    pub fn is_proper(&self) -> bool {
        self.containment().is_none()
    }

    /// Largest number of arcs through one point of the circle.
    pub fn point_clique_number(&self) -> usize {
        let r = self.ranked();
        let mut diff = vec![0isize; r.m + 1];
        let mut wrapped = 0isize;
        for v in 0..self.n() {
            let (s, e) = (r.start[v], r.start[v] + r.len[v]);
            diff[s] += 1;
            if e < r.m {
                diff[e + 1] -= 1;
            } else {
                diff[r.m] -= 1;
                wrapped += 1;
                diff[e - r.m + 1] -= 1;
            }
        }
        let mut best = 0;
        let mut cur = wrapped;
        for d in diff.iter().take(r.m) {
            cur += d;
            best = best.max(cur);
        }
        best.max(0) as usize
    }

    /// Stability number: best over the first chosen arc of the interval
    /// greedy on the rest of the circle.
    pub fn stability_number(&self) -> usize {
        let r = self.ranked();
        let n = self.n();
        let mut best = 0;
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for a in 0..n {
            let rel = |v: usize| r.offset(r.start[a], r.start[v]);
            order.clear();
            order.extend((0..n).filter(|&v| v != a && rel(v) > r.len[a] && rel(v) + r.len[v] < r.m));
            order.sort_by_key(|&v| rel(v) + r.len[v]);
            let mut count = 1;
            let mut cur = r.len[a];
            for &v in &order {
                if rel(v) > cur {
                    count += 1;
                    cur = rel(v) + r.len[v];
                }
            }
            best = best.max(count);
        }
        best
    }

    /// Compare the realized graph with `g`; first differing pair on failure.
    pub fn check_realizes(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::Internal(format!("{} arcs for {} vertices", self.n(), g.n())));
        }
        let r = self.ranked();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if r.meets(u, v) != g.has_edge(u, v) {
                    return Err(Error::Internal(format!(
                        "arcs of {u} and {v} {} but the vertices are {}",
                        if r.meets(u, v) { "meet" } else { "are disjoint" },
                        if g.has_edge(u, v) { "adjacent" } else { "nonadjacent" }
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Give every member of a slot the slot's arc. Members after the first are
/// separated by widening all arcs by a quarter of the smallest endpoint gap
/// (turning tangencies into overlaps) and then shifting the k-th member by
/// k times a step too small to reorder any endpoints.
fn expand_slots(c: Rational, slots: &[(Rational, Rational)], members: &[Vec<usize>], n: usize) -> Result<ArcRepresentation> {
    let mut arcs = vec![(Rational::zero(), Rational::zero()); n];
    let mut seen = vec![false; n];
    let twins = members.iter().any(|m| m.len() > 1);
    let mut slots = slots.to_vec();
    let mut eps = Rational::zero();
    if twins {
        let delta = min_gap(c, &slots) / int(4);
        for s in slots.iter_mut() {
            *s = (s.0 - delta, s.1 + delta);
        }
        eps = min_gap(c, &slots) / int(2 * n as i128);
    }
    for (slot, list) in slots.iter().zip(members) {
        for (k, &v) in list.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::Internal(format!("vertex {v} placed twice or out of range")));
            }
            seen[v] = true;
            let shift = eps * int(k as i128);
            arcs[v] = (slot.0 + shift, slot.1 + shift);
        }
    }
    if let Some(v) = seen.iter().position(|&b| !b) {
        return Err(Error::Internal(format!("vertex {v} has no arc")));
    }
    ArcRepresentation::new(c, arcs)
}

fn min_gap(c: Rational, slots: &[(Rational, Rational)]) -> Rational {
    let mut vals: Vec<Rational> = slots.iter().flat_map(|&(s, e)| [modc(s, c), modc(e, c)]).collect();
    vals.sort();
    vals.dedup();
    let mut gap = c - vals[vals.len() - 1] + vals[0];
    for w in vals.windows(2) {
        gap = gap.min(w[1] - w[0]);
    }
    gap
}

/// Degrees for the emerald's eleven parts at pivot 0, in
/// [`crate::forge::EMERALD_PARTS`] order.
pub const EMERALD_DEGREES: [(i128, i128); 11] = [
    (60, 120),
    (-60, 10),
    (0, 70),
    (-30, 40),
    (30, 100),
    (80, 150),
    (110, 180),
    (140, 210),
    (170, 240),
    (190, 310),
    (-130, -10),
];

/// The eleven parts of an emerald partition at pivot 0.
fn emerald_parts(e: &EmeraldPartition) -> Vec<Vec<usize>> {
    let p = e.parts.normalized();
    vec![
        e.c.clone(),
        p.part(1),
        p.star[2].clone(),
        p.minus[2].clone(),
        p.part(3),
        p.part(4),
        p.star[5].clone(),
        p.plus[5].clone(),
        p.part(6),
        p.minus[0].clone(),
        p.plus[0].clone(),
    ]
}

/// Arc model of a thickened emerald. `e` must cover exactly the vertices
/// of `g`; the result is checked against `g` before it is returned.
pub fn emerald_arcs(g: &Graph, e: &EmeraldPartition) -> Result<ArcRepresentation> {
    let slots: Vec<(Rational, Rational)> = EMERALD_DEGREES.iter().map(|&(s, t)| (int(s), int(t))).collect();
    let rep = expand_slots(int(360), &slots, &emerald_parts(e), g.n())?;
    rep.check_realizes(g)?;
    if let Some((u, v)) = rep.containment() {
        return Err(Error::Internal(format!("arc {u} properly contains arc {v}")));
    }
    Ok(rep)
}

/// Anchor names of a canonical bracelet, in [`CanonicalBracelet::anchors`] order.
pub const ANCHORS: [&str; 7] = ["a3", "a4", "a0*", "a1*", "a2*", "a5*", "a6*"];
/// Left ends of the anchor intervals.
const ANCHOR_LEFT: [i128; 7] = [13, 1, 7, 9, 11, 3, 5];
/// Staircase pairs `(X, Y)` as (plus part, minus part).
pub const PAIRS: [(usize, usize); 3] = [(5, 0), (0, 2), (6, 1)];
const PAIR_LEFT: [(i128, i128); 3] = [(3, 6), (7, 10), (5, 8)];

/// A position in a canonical bracelet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    Anchor(usize),
    /// `X(pair, i)` is the i-th vertex (1-based) of the plus side.
    X(usize, usize),
    /// `Y(pair, i)` is the i-th vertex (1-based) of the minus side.
    Y(usize, usize),
}

impl Slot {
    pub fn name(&self) -> String {
        match *self {
            Slot::Anchor(k) => ANCHORS[k].to_string(),
            Slot::X(p, i) => format!("x{i}[a{}+]", PAIRS[p].0),
            Slot::Y(p, i) => format!("x{i}[a{}-]", PAIRS[p].1),
        }
    }

    /// Bracelet part at pivot 0.
    pub fn part(&self) -> usize {
        match *self {
            Slot::Anchor(k) => [3, 4, 0, 1, 2, 5, 6][k],
            Slot::X(p, _) => PAIRS[p].0,
            Slot::Y(p, _) => PAIRS[p].1,
        }
    }
}

/// A bracelet folded onto a canonical one. Every slot lists the input
/// vertices placed there: empty for padding, several for twins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalBracelet {
    pub t: usize,
    pub anchors: Vec<Vec<usize>>,
    /// `x[p][i - 1]` holds the vertices at `Slot::X(p, i)`.
    pub x: Vec<Vec<Vec<usize>>>,
    pub y: Vec<Vec<Vec<usize>>>,
}

impl CanonicalBracelet {
    /// Every slot with its members, anchors first.
    pub fn slots(&self) -> Vec<(Slot, &[usize])> {
        let mut out: Vec<(Slot, &[usize])> = self.anchors.iter().enumerate().map(|(k, m)| (Slot::Anchor(k), &m[..])).collect();
        for p in 0..3 {
            for i in 0..self.t {
                out.push((Slot::X(p, i + 1), &self.x[p][i][..]));
                out.push((Slot::Y(p, i + 1), &self.y[p][i][..]));
            }
        }
        out
    }

    /// The canonical bracelet itself, one vertex per slot in [`Self::slots`] order.
    pub fn graph(&self) -> Graph {
        let slots: Vec<Slot> = self.slots().into_iter().map(|s| s.0).collect();
        let n = slots.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (slots[u], slots[v]);
                let d = (a.part() + 7 - b.part()) % 7;
                let adjacent = match d {
                    0 | 1 | 6 => true,
                    2 | 5 => match (a, b) {
                        (Slot::X(p, i), Slot::Y(q, j)) | (Slot::Y(q, j), Slot::X(p, i)) => p == q && j <= i,
                        _ => false,
                    },
                    _ => false,
                };
                if adjacent {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("slot pairs are in range")
    }
}

/// Fold a bracelet onto a canonical bracelet of the smallest order.
///
/// Vertices of one anchor, or with the same neighbors across their
/// staircase pair, share a slot.
pub fn canonical_embed(g: &Graph, p: &BraceletPartition) -> Result<CanonicalBracelet> {
    let p = p.normalized();
    let bad = |msg: String| Err(Error::violation(msg));
    for i in [1, 2, 3, 4] {
        if !p.plus[i].is_empty() {
            return bad(format!("A{i}+ must be empty at pivot 0"));
        }
    }
    for i in [3, 4, 5, 6] {
        if !p.minus[i].is_empty() {
            return bad(format!("A{i}- must be empty at pivot 0"));
        }
    }
    let anchors: Vec<Vec<usize>> = [3, 4, 0, 1, 2, 5, 6].iter().map(|&i| p.star[i].clone()).collect();
    let mut x = Vec::with_capacity(3);
    let mut y = Vec::with_capacity(3);
    for &(i, j) in &PAIRS {
        let (xs, ys) = staircase_classes(g, &p.plus[i], &p.minus[j])
            .ok_or_else(|| Error::violation(format!("A{i}+ and A{j}- do not form a staircase")))?;
        x.push(xs);
        y.push(ys);
    }
    let t = x.iter().map(Vec::len).max().unwrap().max(1);
    for side in x.iter_mut().chain(y.iter_mut()) {
        side.resize(t, Vec::new());
    }
    Ok(CanonicalBracelet { t, anchors, x, y })
}

/// Group both sides by neighborhood across the pair and order them so that
/// the i-th X class sees exactly the first i Y classes.
fn staircase_classes(g: &Graph, xs: &[usize], ys: &[usize]) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let n = g.n();
    let (xset, yset) = (VertexSet::from_iter(n, xs.iter().copied()), VertexSet::from_iter(n, ys.iter().copied()));
    let group = |side: &[usize], other: &VertexSet, ascending: bool| {
        let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
        for &v in side {
            let nb = g.neighbors(v).intersection(other);
            match classes.iter_mut().find(|c| c.0 == nb) {
                Some(c) => c.1.push(v),
                None => classes.push((nb, vec![v])),
            }
        }
        classes.sort_by_key(|c| if ascending { c.0.len() } else { usize::MAX - c.0.len() });
        classes
    };
    let xc = group(xs, &yset, true);
    let yc = group(ys, &xset, false);
    if xc.len() != yc.len() {
        return None;
    }
    let mut prefix = VertexSet::new(n);
    for (i, (nb, _)) in xc.iter().enumerate() {
        prefix.union_with(&VertexSet::from_iter(n, yc[i].1.iter().copied()));
        if *nb != prefix {
            return None;
        }
    }
    let take = |c: Vec<(VertexSet, Vec<usize>)>| c.into_iter().map(|(_, mut m)| {
        m.sort_unstable();
        m
    }).collect();
    Some((take(xc), take(yc)))
}

/// Interval for each slot of `c` on the line, all of length 3.
pub fn bracelet_intervals(c: &CanonicalBracelet, s: Rational) -> Result<Vec<(Slot, (Rational, Rational))>> {
    let st = s * int(c.t as i128);
    if s <= Rational::zero() || st >= Rational::one() {
        return Err(Error::Invalid(format!("need 0 < s*t < 1, got s = {}", rational::format_rational(&s))));
    }
    let three = int(3);
    Ok(c.slots()
        .into_iter()
        .map(|(slot, _)| {
            let left = match slot {
                Slot::Anchor(k) => int(ANCHOR_LEFT[k]),
                Slot::X(p, i) => int(PAIR_LEFT[p].0) + s * int(i as i128),
                Slot::Y(p, i) => int(PAIR_LEFT[p].1) + s * int(i as i128),
            };
            (slot, (left, left + three))
        })
        .collect())
}

/// Bend the interval family into a circle by gluing the left end of `a4`
/// to the right end of `a3`.
pub fn close_circle(intervals: &[(Slot, (Rational, Rational))]) -> Result<ArcRepresentation> {
    let find = |k: usize| {
        intervals
            .iter()
            .find(|x| x.0 == Slot::Anchor(k))
            .map(|x| x.1)
            .ok_or_else(|| Error::Invalid(format!("no interval for {}", ANCHORS[k])))
    };
    let (a3, a4) = (find(0)?, find(1)?);
    if intervals.iter().any(|(_, (l, r))| *l < a4.0 || *r > a3.1) {
        return Err(Error::Invalid("a4 must be leftmost and a3 rightmost".into()));
    }
    ArcRepresentation::new(a3.1 - a4.0, intervals.iter().map(|x| x.1).collect())
}

/// Arc model of a bracelet through its canonical form. `p` must cover
/// exactly the vertices of `g`; the result is checked against `g`.
pub fn bracelet_arcs(g: &Graph, p: &BraceletPartition) -> Result<ArcRepresentation> {
    let canon = canonical_embed(g, p)?;
    let s = Rational::new(1, canon.t as i128 + 1);
    let intervals = bracelet_intervals(&canon, s)?;
    let circle = close_circle(&intervals)?;
    let members: Vec<Vec<usize>> = canon.slots().into_iter().map(|(_, m)| m.to_vec()).collect();
    let rep = expand_slots(circle.circumference, &circle.arcs, &members, g.n())?;
    rep.check_realizes(g)?;
    if (1..rep.n()).any(|v| rep.length(v) != rep.length(0)) {
        return Err(Error::Internal("bracelet arcs differ in length".into()));
    }
    Ok(rep)
}

/// A coloring from an arc model with its optimality status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcaColoring {
    pub coloring: Coloring,
    /// `max(ω, ⌈n/α⌉)`.
    pub lower_bound: usize,
    /// False only when the exact search ran out of budget.
    pub optimal: bool,
}

/// Search budget (nodes) for the exact fallback.
const SEARCH_BUDGET: u64 = 2_000_000;

/// Optimal coloring of a proper circular-arc graph.
pub fn pca_color(g: &Graph, rep: &ArcRepresentation) -> Result<Coloring> {
    Ok(pca_color_report(g, rep)?.coloring)
}

/// Color in circular start order with the smallest feasible cycle length
/// `k >= max(ω, ⌈n/α⌉)`; when that overshoots the bound, an exact search
/// settles the colors below.
pub fn pca_color_report(g: &Graph, rep: &ArcRepresentation) -> Result<PcaColoring> {
    rep.check_realizes(g).map_err(|e| Error::Invalid(format!("arcs do not realize the graph: {e}")))?;
    let n = g.n();
    if n == 0 {
        return Ok(PcaColoring { coloring: Coloring::new(vec![]), lower_bound: 0, optimal: true });
    }
    let omega = rep.point_clique_number();
    let alpha = rep.stability_number();
    let lower = omega.max(n.div_ceil(alpha));
    let r = rep.ranked();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (r.start[v], r.len[v], v));
    let (k, colors) = (lower..=n)
        .find_map(|k| cyclic_coloring(&r, &order, k).map(|c| (k, c)))
        .expect("k = n always succeeds");
    let mut best = Coloring::new(colors);
    let mut optimal = k == lower;
    if !optimal {
        optimal = true;
        for k in lower..best.count {
            match k_coloring(g, k, SEARCH_BUDGET) {
                Search::Found(c) => {
                    best = Coloring::new(c);
                    break;
                }
                Search::None => {}
                Search::Budget => {
                    optimal = false;
                    break;
                }
            }
        }
    }
    if let Some((u, v)) = best.conflict(g) {
        return Err(Error::Internal(format!("arc coloring: edge {u}-{v} is monochromatic")));
    }
    Ok(PcaColoring { coloring: best, lower_bound: lower, optimal })
}

/// Color the i-th position of the circular order with `i mod k`, after
/// padding the order with dummies up to a multiple of `k`. Dummies go only
/// where every window of forward neighbors stays below `k` positions.
fn cyclic_coloring(r: &Ranked, order: &[usize], k: usize) -> Option<Vec<usize>> {
    let n = order.len();
    // forward degree: followers (circularly) whose start lies on the arc
    let mut fwd = vec![0usize; n];
    for i in 0..n {
        let a = order[i];
        let mut d = 0;
        while d + 1 < n {
            let b = order[(i + d + 1) % n];
            if r.offset(r.start[a], r.start[b]) <= r.len[a] {
                d += 1;
            } else {
                break;
            }
        }
        if d >= k {
            return None;
        }
        fwd[i] = d;
    }
    let mut need = (k - n % k) % k;
    let mut slack: Vec<usize> = fwd.iter().map(|&d| k - 1 - d).collect();
    let mut dummies = vec![0usize; n];
    // gap j sits after position j; window i covers gaps i..i+fwd[i]
    for j in 0..n {
        if need == 0 {
            break;
        }
        let covering: Vec<usize> = (0..n.min(k)).map(|back| (j + n - back) % n).filter(|&i| (j + n - i) % n < fwd[i]).collect();
        let room = covering.iter().map(|&i| slack[i]).min().unwrap_or(need).min(need);
        for &i in &covering {
            slack[i] -= room;
        }
        dummies[j] = room;
        need -= room;
    }
    if need > 0 {
        return None;
    }
    let mut colors = vec![0; r.start.len()];
    let mut pos = 0;
    for i in 0..n {
        colors[order[i]] = pos % k + 1;
        pos += 1 + dummies[i];
    }
    Some(colors)
}

enum Search {
    Found(Vec<usize>),
    None,
    Budget,
}

/// DSATUR backtracking for a `k`-coloring.
fn k_coloring(g: &Graph, k: usize, budget: u64) -> Search {
    struct St<'a> {
        g: &'a Graph,
        k: usize,
        colors: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    fn rec(st: &mut St, done: usize) -> Option<bool> {
        let n = st.g.n();
        if done == n {
            return Some(true);
        }
        st.nodes += 1;
        if st.nodes > st.budget {
            return None;
        }
        let mut pick = None;
        let mut best = (0, 0);
        let mut used_max = 0;
        for v in 0..n {
            used_max = used_max.max(st.colors[v]);
            if st.colors[v] != 0 {
                continue;
            }
            let mut seen = vec![false; st.k + 1];
            let mut sat = 0;
            for u in st.g.neighbors(v).iter() {
                let c = st.colors[u];
                if c != 0 && !seen[c] {
                    seen[c] = true;
                    sat += 1;
                }
            }
            let key = (sat + 1, st.g.degree(v) + 1);
            if key > best {
                best = key;
                pick = Some(v);
            }
        }
        let v = pick.unwrap();
        for c in 1..=st.k.min(used_max + 1) {
            if st.g.neighbors(v).iter().any(|u| st.colors[u] == c) {
                continue;
            }
            st.colors[v] = c;
            match rec(st, done + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            st.colors[v] = 0;
        }
        Some(false)
    }
    let mut st = St { g, k, colors: vec![0; g.n()], nodes: 0, budget };
    match rec(&mut st, 0) {
        Some(true) => Search::Found(st.colors),
        Some(false) => Search::None,
        None => Search::Budget,
    }
}
