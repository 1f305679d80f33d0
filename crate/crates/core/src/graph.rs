//! Simple undirected graphs over dense vertex ids, vertex sets and BFS layers.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building or querying a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("{family} family requires size >= {min}, got {size}")]
    FamilyTooSmall { family: &'static str, min: usize, size: usize },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bit row per vertex. Rows are symmetric and
/// loop-free; every constructor in this crate maintains that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`, rejecting loops, duplicates and out-of-range ids.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.rows[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighbourhood of `v` in ascending id order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// Adjacency row of `v` as a bit set.
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Closed neighbourhood of `v` as a bit set.
    pub fn closed_row(&self, v: usize) -> FixedBitSet {
        let mut r = self.rows[v].clone();
        r.insert(v);
        r
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            out.extend(self.rows[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Sorted (descending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut rows = self.rows.clone();
        for (v, r) in rows.iter_mut().enumerate() {
            r.toggle_range(..);
            r.set(v, false);
        }
        debug_assert_eq!(rows.len(), n);
        Graph { rows }
    }

    /// Subgraph induced by `vertices`; vertex `j` of the result is `vertices[j]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i].insert(j);
                    g.rows[j].insert(i);
                }
            }
        }
        g
    }

    pub fn check_vertex_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.iter().find(|&v| v >= self.order()) {
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: self.order() }),
            None => Ok(()),
        }
    }

    /// `N[X]`: the members of `set` together with all their neighbours.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut acc = FixedBitSet::with_capacity(self.order());
        for v in set.iter() {
            acc.union_with(&self.rows[v]);
            acc.insert(v);
        }
        VertexSet::from_bitset(&acc)
    }

    /// Whether `dominators` dominates `target`, i.e. `target ⊆ N[dominators]`.
    pub fn dominates(&self, dominators: &VertexSet, target: &VertexSet) -> bool {
        target.iter().all(|y| {
            dominators.contains(y) || dominators.iter().any(|x| self.has_edge(x, y))
        })
    }

    /// Distances from `root`; `None` for unreachable vertices.
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Breadth-first layers `N^i(root)` of the component containing `root`.
    pub fn bfs_layers(&self, root: usize) -> LayerDecomposition {
        assert!(root < self.order(), "root {root} out of range");
        let mut layers: Vec<VertexSet> = Vec::new();
        for (v, d) in self.distances(root).into_iter().enumerate() {
            if let Some(d) = d {
                if layers.len() <= d {
                    layers.resize_with(d + 1, VertexSet::new);
                }
                layers[d].insert(v);
            }
        }
        LayerDecomposition { root, layers }
    }

    /// True iff `n ≥ 1` and a BFS from vertex 0 reaches everything.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.distances(0).iter().all(Option::is_some)
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.order() == 0 {
            Err(GraphError::Empty)
        } else if !self.is_connected() {
            Err(GraphError::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Eccentricity of `v` within its component.
    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances(v).into_iter().flatten().max().unwrap_or(0)
    }

    /// Minimum-eccentricity vertex, lowest id on ties.
    pub fn center(&self) -> Option<usize> {
        self.vertices().min_by_key(|&v| (self.eccentricity(v), v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// An ordered set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn from_bitset(bits: &FixedBitSet) -> Self {
        bits.ones().collect()
    }

    pub fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        for v in self.iter() {
            b.insert(v);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(&self.0 | &other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(&self.0 - &other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(&self.0 & &other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

/// Distance layers around a root: `layers[i]` holds the vertices at distance
/// exactly `i`. Trailing empty layers are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub root: usize,
    pub layers: Vec<VertexSet>,
}

impl LayerDecomposition {
    /// Layer `i`, or the empty set past the last layer.
    pub fn layer(&self, i: usize) -> VertexSet {
        self.layers.get(i).cloned().unwrap_or_default()
    }

    /// Index of the deepest nonempty layer.
    pub fn depth(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(VertexSet::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn edge_list_examples() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, gen_complete(2).unwrap());
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, gen_path(3).unwrap());
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p3 = gen_path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(&[1].into()), VertexSet::full(3));
        assert_eq!(p3.closed_neighborhood(&VertexSet::new()), VertexSet::new());
        // K*_3: x_1..x_3 = 0..3, y_1..y_3 = 3..6
        let ks = gen_k_star(3).unwrap();
        assert_eq!(ks.closed_neighborhood(&[0, 1, 2].into()), VertexSet::full(6));
    }

    #[test]
    fn dominates_examples() {
        let p3 = gen_path(3).unwrap();
        assert!(p3.dominates(&[1].into(), &VertexSet::full(3)));
        assert!(!p3.dominates(&[0].into(), &[2].into()));
        let ks = gen_k_star(3).unwrap();
        assert!(ks.dominates(&[3, 4, 5].into(), &VertexSet::full(6)));
    }

    #[test]
    fn bfs_layer_examples() {
        let p5 = gen_path(5).unwrap();
        let l = p5.bfs_layers(0);
        assert_eq!(
            l.layers,
            vec![[0].into(), [1].into(), [2].into(), [3].into(), [4].into()]
        );
        let k5 = gen_complete(5).unwrap();
        assert_eq!(k5.bfs_layers(0).layers, vec![[0].into(), [1, 2, 3, 4].into()]);
        // S*_3: x = 0, y = 1..4, z = 4..7
        let ss = gen_s_star(3).unwrap();
        assert_eq!(
            ss.bfs_layers(0).layers,
            vec![[0].into(), [1, 2, 3].into(), [4, 5, 6].into()]
        );
    }

    #[test]
    fn bfs_layers_cover_only_the_root_component() {
        let g = Graph::from_edge_list(5, &[(0, 1), (3, 4)]).unwrap();
        let l = g.bfs_layers(3);
        assert_eq!(l.layers, vec![[3].into(), [4].into()]);
        assert_eq!(l.layer(7), VertexSet::new());
    }

    #[test]
    fn connectivity_examples() {
        assert!(gen_complete(2).unwrap().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(!Graph::empty(0).is_connected());
        assert!(gen_k_star(4).unwrap().is_connected());
        assert_eq!(Graph::empty(0).require_connected(), Err(GraphError::Empty));
        assert_eq!(Graph::empty(3).require_connected(), Err(GraphError::Disconnected));
    }

    #[test]
    fn center_prefers_low_ids() {
        assert_eq!(gen_path(7).unwrap().center(), Some(3));
        assert_eq!(gen_path(6).unwrap().center(), Some(2));
        assert_eq!(gen_s_star(3).unwrap().center(), Some(0));
    }

    #[test]
    fn complement_round_trip() {
        let g = gen_k_star(3).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.size() + g.complement().size(), 15);
    }
}
