//! Generators for the graph families used throughout the crate.
//!
//! Labelings are fixed so callers can address named vertices:
//! * `K*_n`: clique `x_1..x_n` on ids `0..n`, pendant `y_i` on id `n + i - 1`.
//! * `S*_n`: center `x` on id 0, middle `y_i` on id `i`, tip `z_i` on id `n + i`.
//! * paths and cycles are labeled in traversal order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{Graph, GraphError};

fn at_least(family: &'static str, min: usize, size: usize) -> Result<(), GraphError> {
    if size < min {
        Err(GraphError::FamilyTooSmall { family, min, size })
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        g.try_add_edge(u, v).expect("generator edges are simple");
    }
    g
}

pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    at_least("path", 1, n)?;
    Ok(build(n, (1..n).map(|i| (i - 1, i))))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", 3, n)?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    at_least("complete", 1, n)?;
    Ok(build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))))
}

/// Edgeless graph; `n = 0` is allowed.
pub fn gen_empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// The star `K_{1,n}` with center 0.
pub fn gen_star(n: usize) -> Result<Graph, GraphError> {
    at_least("star", 1, n)?;
    Ok(build(n + 1, (1..=n).map(|i| (0, i))))
}

/// `K*_n`: a clique on `n` vertices with one pendant vertex hung on each.
pub fn gen_k_star(n: usize) -> Result<Graph, GraphError> {
    at_least("kstar", 1, n)?;
    let clique = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let pendants = (0..n).map(|i| (i, n + i));
    Ok(build(2 * n, clique.chain(pendants)))
}

/// `S*_n`: a spider with `n` legs of length two.
pub fn gen_s_star(n: usize) -> Result<Graph, GraphError> {
    at_least("sstar", 1, n)?;
    let spokes = (1..=n).map(|i| (0, i));
    let tips = (1..=n).map(|i| (i, n + i));
    Ok(build(2 * n + 1, spokes.chain(tips)))
}

/// Named graph family, as used on the command line (`kstar:3`, `path:5`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    KStar,
    SStar,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Empty,
        Family::Star,
        Family::KStar,
        Family::SStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::KStar => "kstar",
            Family::SStar => "sstar",
        }
    }

    pub fn generate(self, size: usize) -> Result<Graph, GraphError> {
        match self {
            Family::Path => gen_path(size),
            Family::Cycle => gen_cycle(size),
            Family::Complete => gen_complete(size),
            Family::Empty => Ok(gen_empty(size)),
            Family::Star => gen_star(size),
            Family::KStar => gen_k_star(size),
            Family::SStar => gen_s_star(size),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown graph family `{s}`"))
    }
}
