//! Induced-subgraph containment, `H`-freeness and the `≤` order on
//! forbidden families.

use itertools::Itertools;
use serde::Serialize;

use crate::graph::{Graph, GraphError};

/// An injective map from pattern vertices to host vertices; `map[p]` is the
/// image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn image(&self, pattern_vertex: usize) -> usize {
        self.0[pattern_vertex]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Re-checks injectivity and the induced condition edge by edge.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let map = &self.0;
        if map.len() != pattern.order() || map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        if !map.iter().all_unique() {
            return false;
        }
        (0..map.len()).tuple_combinations().all(|(p, q)| {
            pattern.has_edge(p, q) == host.has_edge(map[p], map[q])
        })
    }
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        for h in self.host.vertices() {
            if self.used[h] || self.host.degree(h) < need {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&q| {
                self.pattern.has_edge(p, q) == self.host.has_edge(h, self.map[q])
            });
            if !consistent {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[h] = false;
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Exhaustive backtracking: pattern vertices are placed in descending degree
/// order (lowest id first on ties), host candidates are tried in ascending id
/// and filtered by degree and by adjacency to the vertices already placed.
/// `None` certifies that `host` is `pattern`-free.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut order: Vec<usize> = pattern.vertices().collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut search = Search {
        host,
        pattern,
        order,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
    };
    search.extend(0).then_some(Embedding(search.map))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && contains_induced(a, b).is_some()
}

/// Reference implementation of [`contains_induced`]: tries every
/// `|V(pattern)|`-subset of the host under every ordering.
pub fn contains_induced_brute_force(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > host.order() {
        return false;
    }
    host.vertices().combinations(k).any(|subset| {
        subset.iter().copied().permutations(k).any(|perm| {
            (0..k)
                .tuple_combinations()
                .all(|(p, q)| pattern.has_edge(p, q) == host.has_edge(perm[p], perm[q]))
        })
    })
}

/// Outcome of an `H`-freeness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Freeness {
    Free,
    /// The first forbidden pattern found, by index into the pattern list.
    Contains { pattern: usize, embedding: Embedding },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// Tests `host` against each pattern in turn; an empty list is vacuously free.
pub fn is_free(host: &Graph, patterns: &[Graph]) -> Freeness {
    patterns
        .iter()
        .enumerate()
        .find_map(|(i, h)| {
            contains_induced(host, h).map(|embedding| Freeness::Contains { pattern: i, embedding })
        })
        .unwrap_or(Freeness::Free)
}

/// `left ≤ right`: every member of `right` induced-contains some member of `left`.
pub fn leq_relation(left: &[Graph], right: &[Graph]) -> bool {
    right
        .iter()
        .all(|h2| left.iter().any(|h1| contains_induced(h2, h1).is_some()))
}

/// One-sided filter for `P_m`-freeness: in a `P_m`-free connected graph no
/// BFS from any root reaches a layer of index `m - 1`, because shortest paths
/// are induced. A `true` result does not imply `P_m`-freeness.
pub fn bfs_depth_consistent_with_path_free(g: &Graph, m: usize) -> Result<bool, GraphError> {
    g.require_connected()?;
    let Some(limit) = m.checked_sub(1) else {
        return Ok(false);
    };
    Ok(g.vertices().all(|v| g.eccentricity(v) < limit))
}
