//! Brute-force ground truth. Everything here works on a plain boolean
//! matrix and shares no search code with the solvers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::solution::WeightedSet;

pub const CHROMATIC_CAP: usize = 16;
pub const MWIS_CAP: usize = 22;
pub const CLIQUE_CAP: usize = 22;
pub const HOLE_CAP: usize = 16;

type Matrix = Vec<Vec<bool>>;

fn matrix(g: &Graph) -> Matrix {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::OracleCap { n, cap })
    } else {
        Ok(())
    }
}

/// Chromatic number by backtracking; colors are opened in order.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    brute_chromatic_capped(g, CHROMATIC_CAP)
}

pub fn brute_chromatic_capped(g: &Graph, max_n: usize) -> Result<usize> {
    let n = g.n();
    cap(n, max_n)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = matrix(g);
    // color high-degree vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].iter().filter(|&&b| b).count()));
    for k in 1..=n {
        let mut color = vec![0usize; n];
        if try_color(&adj, &order, 0, k, 0, &mut color) {
            return Ok(k);
        }
    }
    unreachable!()
}

fn try_color(adj: &Matrix, order: &[usize], i: usize, k: usize, used: usize, color: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 1..=(used + 1).min(k) {
        if order[..i].iter().all(|&u| !adj[v][u] || color[u] != c) {
            color[v] = c;
            if try_color(adj, order, i + 1, k, used.max(c), color) {
                return true;
            }
        }
    }
    color[v] = 0;
    false
}

/// Maximum weight stable set by include/exclude branching.
pub fn brute_mwis(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    brute_mwis_capped(g, w, MWIS_CAP)
}

pub fn brute_mwis_capped(g: &Graph, w: &[Rational], max_n: usize) -> Result<WeightedSet> {
    cap(g.n(), max_n)?;
    let adj = matrix(g);
    let mut best = (Rational::from_integer(0), Vec::new());
    let mut cur = Vec::new();
    let alive = vec![true; g.n()];
    branch(&adj, w, 0, &alive, Rational::from_integer(0), &mut cur, &mut best, false);
    Ok(WeightedSet::from_set(VertexSet::from_iter(g.n(), best.1), w))
}

/// Maximum weight clique: stable sets of the complement.
pub fn brute_max_clique(g: &Graph, w: &[Rational]) -> Result<WeightedSet> {
    brute_max_clique_capped(g, w, CLIQUE_CAP)
}

pub fn brute_max_clique_capped(g: &Graph, w: &[Rational], max_n: usize) -> Result<WeightedSet> {
    cap(g.n(), max_n)?;
    let adj = matrix(g);
    let mut best = (Rational::from_integer(0), Vec::new());
    let mut cur = Vec::new();
    let alive = vec![true; g.n()];
    branch(&adj, w, 0, &alive, Rational::from_integer(0), &mut cur, &mut best, true);
    Ok(WeightedSet::from_set(VertexSet::from_iter(g.n(), best.1), w))
}

// Stable sets of `adj` (or of its complement when `clique` is set).
#[allow(clippy::too_many_arguments)]
fn branch(
    adj: &Matrix,
    w: &[Rational],
    i: usize,
    alive: &[bool],
    acc: Rational,
    cur: &mut Vec<usize>,
    best: &mut (Rational, Vec<usize>),
    clique: bool,
) {
    let n = adj.len();
    let mut i = i;
    while i < n && (!alive[i] || w[i] <= Rational::from_integer(0)) {
        i += 1;
    }
    let rest: Rational = (i..n).filter(|&v| alive[v] && w[v] > Rational::from_integer(0)).map(|v| w[v]).sum();
    if acc + rest <= best.0 {
        return;
    }
    if i == n {
        if acc > best.0 {
            *best = (acc, cur.clone());
        }
        return;
    }
    let mut next = alive.to_vec();
    for v in i + 1..n {
        let conflict = if clique { !adj[i][v] } else { adj[i][v] };
        if conflict {
            next[v] = false;
        }
    }
    cur.push(i);
    branch(adj, w, i + 1, &next, acc + w[i], cur, best, clique);
    cur.pop();
    branch(adj, w, i + 1, alive, acc, cur, best, clique);
}

pub fn brute_alpha(g: &Graph) -> Result<usize> {
    let w = vec![Rational::from_integer(1); g.n()];
    Ok(brute_mwis(g, &w)?.vertices.len())
}

pub fn brute_omega(g: &Graph) -> Result<usize> {
    let w = vec![Rational::from_integer(1); g.n()];
    Ok(brute_max_clique(g, &w)?.vertices.len())
}

/// Number of holes of each length, by checking every vertex subset.
pub fn hole_census(g: &Graph) -> Result<BTreeMap<usize, usize>> {
    let n = g.n();
    cap(n, HOLE_CAP)?;
    let adj = matrix(g);
    let mut out = BTreeMap::new();
    for mask in 1u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k < 4 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if is_cycle(&adj, &vs) {
            *out.entry(k).or_insert(0) += 1;
        }
    }
    Ok(out)
}

fn is_cycle(adj: &Matrix, vs: &[usize]) -> bool {
    for &v in vs {
        if vs.iter().filter(|&&u| adj[v][u]).count() != 2 {
            return false;
        }
    }
    // 2-regular: a cycle iff connected
    let mut seen = vec![vs[0]];
    let mut stack = vec![vs[0]];
    while let Some(v) = stack.pop() {
        for &u in vs {
            if adj[v][u] && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == vs.len()
}

/// Some vertex subset induces `P_k` (checked on every k-subset).
pub fn brute_has_induced_path(g: &Graph, k: usize) -> bool {
    let adj = matrix(g);
    subsets(g.n(), k).any(|vs| {
        let edges = pairs(&vs).filter(|&(a, b)| adj[a][b]).count();
        edges + 1 == k && vs.iter().all(|&v| vs.iter().filter(|&&u| adj[v][u]).count() <= 2) && connected(&adj, &vs)
    })
}

/// Some vertex subset induces `C_k`.
pub fn brute_has_hole(g: &Graph, k: usize) -> bool {
    let adj = matrix(g);
    subsets(g.n(), k).any(|vs| is_cycle(&adj, &vs))
}

/// Some 8-subset induces the theta graph with three length-3 paths.
pub fn brute_has_theta33(g: &Graph) -> bool {
    let adj = matrix(g);
    subsets(g.n(), 8).any(|vs| {
        let deg = |v: usize| vs.iter().filter(|&&u| adj[v][u]).count();
        let hubs: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) == 3).collect();
        if pairs(&vs).filter(|&(a, b)| adj[a][b]).count() != 9 || hubs.len() != 2 {
            return false;
        }
        if vs.iter().any(|&v| !hubs.contains(&v) && deg(v) != 2) || adj[hubs[0]][hubs[1]] {
            return false;
        }
        // each neighbor of the first hub leads in one more step to a neighbor
        // of the second hub
        let (a, d) = (hubs[0], hubs[1]);
        vs.iter().filter(|&&b| adj[a][b]).all(|&b| {
            vs.iter()
                .any(|&c| c != a && adj[b][c] && adj[c][d] && !adj[a][c] && !adj[b][d])
        })
    })
}

/// A clique whose removal disconnects the graph, searched over all cliques.
pub fn brute_has_clique_cutset(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "brute_has_clique_cutset is exponential");
    let adj = matrix(g);
    for mask in 0u32..(1u32 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if pairs(&vs).any(|(a, b)| !adj[a][b]) {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
        if rest.len() >= 2 && !connected(&adj, &rest) {
            return true;
        }
    }
    false
}

fn connected(adj: &Matrix, vs: &[usize]) -> bool {
    let mut seen = vec![vs[0]];
    let mut stack = vec![vs[0]];
    while let Some(v) = stack.pop() {
        for &u in vs {
            if adj[v][u] && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == vs.len()
}

fn pairs(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..vs.len()).flat_map(move |i| (i + 1..vs.len()).map(move |j| (vs[i], vs[j])))
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Graph {
        let mut e = vec![];
        for i in 0..3 {
            let (b, c) = (2 + 2 * i, 3 + 2 * i);
            e.extend([(0, b), (b, c), (c, 1)]);
        }
        Graph::from_edges(8, &e).unwrap()
    }

    #[test]
    fn chromatic() {
        assert_eq!(brute_chromatic(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(brute_chromatic(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(brute_chromatic(&theta()).unwrap(), 2);
        assert!(brute_chromatic(&Graph::empty(17)).is_err());
    }

    #[test]
    fn stable_and_clique() {
        assert_eq!(brute_alpha(&Graph::empty(2)).unwrap(), 2);
        assert_eq!(brute_alpha(&Graph::complete(4)).unwrap(), 1);
        assert_eq!(brute_alpha(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(brute_alpha(&theta()).unwrap(), 4);
        assert_eq!(brute_omega(&Graph::cycle(7)).unwrap(), 2);
        assert_eq!(brute_omega(&Graph::complete(5)).unwrap(), 5);
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(brute_omega(&diamond).unwrap(), 3);
    }

    #[test]
    fn negative_weights_give_empty() {
        let w = vec![Rational::from_integer(-1); 4];
        let s = brute_mwis(&Graph::cycle(4), &w).unwrap();
        assert!(s.vertices.is_empty());
    }

    #[test]
    fn census() {
        assert_eq!(hole_census(&Graph::cycle(7)).unwrap(), BTreeMap::from([(7, 1)]));
        assert!(hole_census(&Graph::complete(4)).unwrap().is_empty());
        assert_eq!(hole_census(&theta()).unwrap(), BTreeMap::from([(6, 3)]));
    }

    #[test]
    fn subset_patterns() {
        assert!(brute_has_theta33(&theta()));
        assert!(!brute_has_theta33(&Graph::cycle(8)));
        assert!(brute_has_induced_path(&Graph::path(7), 7));
        assert!(!brute_has_induced_path(&Graph::cycle(7), 7));
        assert!(brute_has_hole(&Graph::cycle(5), 5));
    }
}
