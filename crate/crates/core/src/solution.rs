//! Solution records shared by the solvers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};

/// A vertex coloring with colors `1..=count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// Wrap a color vector; `count` is the largest color used.
    pub fn new(colors: Vec<usize>) -> Self {
        let count = colors.iter().copied().max().unwrap_or(0);
        Coloring { colors, count }
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        if self.colors.len() != g.n() {
            return Some((usize::MAX, usize::MAX));
        }
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.iter().all(|&c| c >= 1) && self.conflict(g).is_none()
    }

    pub(crate) fn check(&self, g: &Graph, what: &str) -> Result<()> {
        if self.colors.len() != g.n() || self.colors.iter().any(|&c| c == 0) {
            return Err(Error::Internal(format!("{what}: incomplete coloring")));
        }
        match self.conflict(g) {
            Some((u, v)) => Err(Error::Internal(format!("{what}: edge {u}-{v} is monochromatic"))),
            None => Ok(()),
        }
    }
}

/// A vertex set with its exact total weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSet {
    pub vertices: VertexSet,
    #[serde(with = "rational::as_string")]
    pub weight: Rational,
}

impl WeightedSet {
    pub fn empty(n: usize) -> Self {
        WeightedSet {
            vertices: VertexSet::new(n),
            weight: rational::zero(),
        }
    }

    pub fn from_set(vertices: VertexSet, w: &[Rational]) -> Self {
        let weight = vertices.iter().map(|v| w[v]).sum();
        WeightedSet { vertices, weight }
    }

    /// Weight recomputes and the set is stable.
    pub fn is_valid_stable(&self, g: &Graph, w: &[Rational]) -> bool {
        g.is_stable(&self.vertices) && self.vertices.iter().map(|v| w[v]).sum::<Rational>() == self.weight
    }

    /// Weight recomputes and the set is a clique.
    pub fn is_valid_clique(&self, g: &Graph, w: &[Rational]) -> bool {
        g.is_clique(&self.vertices) && self.vertices.iter().map(|v| w[v]).sum::<Rational>() == self.weight
    }
}
