//! Exact domination number and the set reducers used by the layered
//! construction.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("domination number of the empty graph is undefined")]
    EmptyGraph,
    #[error("candidate set does not dominate the target set")]
    NotDominating,
    #[error("vertex {0} has no private neighbour in the target set")]
    NoPrivateNeighbor(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A minimum dominating set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: VertexSet,
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    g.closed_neighborhood(set).len() == g.order()
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    closed: Vec<FixedBitSet>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl BranchAndBound<'_> {
    fn search(&mut self, budget: usize, dominated: &FixedBitSet) -> bool {
        self.nodes += 1;
        let n = self.g.order();
        let undominated = n - dominated.count_ones(..);
        if undominated == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        // no vertex can newly cover more than `best` vertices
        let best = self
            .closed
            .iter()
            .map(|c| c.difference(dominated).count())
            .max()
            .unwrap_or(1);
        if undominated.div_ceil(best) > budget {
            return false;
        }
        let mut free = dominated.clone();
        free.toggle_range(..);
        let v = free.minimum().expect("some vertex is undominated");
        let branches: Vec<usize> = self.closed[v].ones().collect();
        for w in branches {
            let mut next = dominated.clone();
            next.union_with(&self.closed[w]);
            self.chosen.push(w);
            if self.search(budget - 1, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// A dominating set of size at most `size`, if one exists. The search is
/// exhaustive, so `None` proves `γ(g) > size`.
pub fn dominating_set_within(g: &Graph, size: usize) -> Option<VertexSet> {
    let mut bb = BranchAndBound {
        g,
        closed: g.vertices().map(|v| g.closed_row(v)).collect(),
        chosen: Vec::new(),
        nodes: 0,
    };
    let start = FixedBitSet::with_capacity(g.order());
    bb.search(size, &start).then(|| bb.chosen.iter().copied().collect())
}

/// Domination number by branch and bound.
///
/// The target size grows from the trivial lower bound `⌈n / (Δ + 1)⌉`; each
/// round branches on the lowest-id undominated vertex `v` and tries every
/// `u ∈ N[v]` in ascending order. The first round that succeeds is optimal
/// because every smaller round was searched exhaustively.
pub fn gamma_exact(g: &Graph) -> Result<GammaResult, DominationError> {
    let n = g.order();
    if n == 0 {
        return Err(DominationError::EmptyGraph);
    }
    let lower = n.div_ceil(g.max_degree() + 1);
    for size in lower..=n {
        if let Some(witness) = dominating_set_within(g, size) {
            return Ok(GammaResult { gamma: witness.len(), witness });
        }
    }
    unreachable!("V(G) dominates itself")
}

/// Domination number by enumerating vertex subsets in ascending size. Only
/// meant as a cross-check for [`gamma_exact`] on small graphs.
pub fn gamma_brute_force(g: &Graph) -> Result<usize, DominationError> {
    if g.order() == 0 {
        return Err(DominationError::EmptyGraph);
    }
    (1..=g.order())
        .find(|&k| {
            g.vertices()
                .combinations(k)
                .any(|c| is_dominating(g, &c.into_iter().collect()))
        })
        .ok_or(DominationError::EmptyGraph)
}

/// Shrinks `candidates` to an inclusion-minimal subset that still dominates
/// `target`. Removal is attempted from the highest id downwards, so lower ids
/// are preferred in the result.
pub fn minimal_dominating_subset(
    g: &Graph,
    candidates: &VertexSet,
    target: &VertexSet,
) -> Result<VertexSet, DominationError> {
    g.check_vertex_set(candidates)?;
    g.check_vertex_set(target)?;
    if !g.dominates(candidates, target) {
        return Err(DominationError::NotDominating);
    }
    let mut kept = candidates.clone();
    for u in candidates.iter().rev() {
        kept.remove(u);
        if !g.dominates(&kept, target) {
            kept.insert(u);
        }
    }
    Ok(kept)
}

/// Greedy maximal independent subset of `pool`, scanning ascending ids.
pub fn maximal_independent_subset(g: &Graph, pool: &VertexSet) -> VertexSet {
    let mut picked = VertexSet::new();
    for v in pool.iter() {
        if picked.iter().all(|u| !g.has_edge(u, v)) {
            picked.insert(v);
        }
    }
    picked
}

/// For each `u ∈ dominators`, the lowest-id `x ∈ target` whose closed
/// neighbourhood meets `dominators` in `u` alone.
pub fn private_neighbors(
    g: &Graph,
    dominators: &VertexSet,
    target: &VertexSet,
) -> Result<BTreeMap<usize, usize>, DominationError> {
    g.check_vertex_set(dominators)?;
    g.check_vertex_set(target)?;
    let mut out = BTreeMap::new();
    for u in dominators.iter() {
        let private = target.iter().find(|&x| {
            (x == u || g.has_edge(x, u))
                && dominators.iter().all(|w| w == u || (w != x && !g.has_edge(x, w)))
        });
        match private {
            Some(x) => out.insert(u, x),
            None => return Err(DominationError::NoPrivateNeighbor(u)),
        };
    }
    Ok(out)
}

/// Size of a largest independent set of `g`.
pub fn independence_number(g: &Graph) -> usize {
    fn go(g: &Graph, pool: FixedBitSet) -> usize {
        let Some(v) = pool.minimum() else {
            return 0;
        };
        let mut without = pool.clone();
        without.set(v, false);
        let mut with = without.clone();
        with.difference_with(g.row(v));
        let take = 1 + go(g, with);
        if take > without.count_ones(..) {
            return take;
        }
        take.max(go(g, without))
    }
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    go(g, all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn gamma_examples() {
        for n in 1..=6 {
            assert_eq!(gamma_exact(&gen_complete(n).unwrap()).unwrap().gamma, 1);
        }
        assert_eq!(gamma_exact(&gen_path(7).unwrap()).unwrap().gamma, 3);
        assert_eq!(gamma_exact(&gen_k_star(4).unwrap()).unwrap().gamma, 4);
        assert_eq!(gamma_exact(&gen_cycle(4).unwrap()).unwrap().gamma, 2);
        assert_eq!(gamma_exact(&Graph::empty(0)), Err(DominationError::EmptyGraph));
    }

    #[test]
    fn c4_brute_force_by_hand() {
        let c4 = gen_cycle(4).unwrap();
        assert!((0..4).all(|v| !is_dominating(&c4, &[v].into())));
        assert!(is_dominating(&c4, &[0, 1].into()));
    }

    #[test]
    fn gamma_witness_is_certified() {
        let g = gen_s_star(5).unwrap();
        let r = gamma_exact(&g).unwrap();
        assert!(is_dominating(&g, &r.witness));
        assert_eq!(r.witness.len(), r.gamma);
        assert_eq!(dominating_set_within(&g, r.gamma - 1), None);
    }

    #[test]
    fn is_dominating_examples() {
        let p3 = gen_path(3).unwrap();
        assert!(is_dominating(&p3, &[1].into()));
        assert!(!is_dominating(&p3, &[0].into()));
        assert!(is_dominating(&gen_s_star(3).unwrap(), &[1, 2, 3].into()));
    }

    #[test]
    fn minimal_subset_examples() {
        let p3 = gen_path(3).unwrap();
        assert_eq!(minimal_dominating_subset(&p3, &[0, 1].into(), &[2].into()).unwrap(), [1].into());
        let k5 = gen_complete(5).unwrap();
        let all = VertexSet::full(5);
        assert_eq!(minimal_dominating_subset(&k5, &all, &all).unwrap(), [0].into());
        let s3 = gen_s_star(3).unwrap();
        assert_eq!(
            minimal_dominating_subset(&s3, &[1, 2, 3].into(), &[4, 5, 6].into()).unwrap(),
            [1, 2, 3].into()
        );
        assert_eq!(
            minimal_dominating_subset(&p3, &[0].into(), &[2].into()),
            Err(DominationError::NotDominating)
        );
        assert!(matches!(
            minimal_dominating_subset(&p3, &[5].into(), &[2].into()),
            Err(DominationError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn maximal_independent_examples() {
        let k4 = gen_complete(4).unwrap();
        assert_eq!(maximal_independent_subset(&k4, &VertexSet::full(4)), [0].into());
        assert_eq!(maximal_independent_subset(&gen_empty(4), &VertexSet::full(4)), VertexSet::full(4));
        let p5 = gen_path(5).unwrap();
        assert_eq!(maximal_independent_subset(&p5, &[1, 2, 3].into()), [1, 3].into());
    }

    #[test]
    fn private_neighbor_examples() {
        let s3 = gen_s_star(3).unwrap();
        let pn = private_neighbors(&s3, &[1, 2, 3].into(), &[4, 5, 6].into()).unwrap();
        assert_eq!(pn, BTreeMap::from([(1, 4), (2, 5), (3, 6)]));
        let p3 = gen_path(3).unwrap();
        assert_eq!(private_neighbors(&p3, &[1].into(), &[0, 2].into()).unwrap(), BTreeMap::from([(1, 0)]));
        let k3 = gen_k_star(3).unwrap();
        assert_eq!(private_neighbors(&k3, &[0].into(), &[3].into()).unwrap(), BTreeMap::from([(0, 3)]));
        // both 0 and 2 see 1 only through a shared neighbour set
        assert_eq!(
            private_neighbors(&p3, &[0, 2].into(), &[1].into()),
            Err(DominationError::NoPrivateNeighbor(0))
        );
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&gen_cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&gen_path(7).unwrap()), 4);
        assert_eq!(independence_number(&gen_complete(5).unwrap()), 1);
        assert_eq!(independence_number(&gen_empty(6)), 6);
        assert_eq!(independence_number(&gen_s_star(4).unwrap()), 5);
        assert_eq!(independence_number(&gen_empty(0)), 0);
    }
}
