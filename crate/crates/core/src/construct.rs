//! Layer-by-layer dominating set construction with certified size bounds.
//!
//! Around a root `a`, `{a}` covers layers 0 and 1. Every deeper layer `i` gets
//! its own dominator `Û_i = U ∪ X₀`:
//!
//! 1. `X` is a maximal independent subset of layer `i`;
//! 2. `U` is an inclusion-minimal subset of layer `i - 1` dominating `X`;
//! 3. `X₀` is an inclusion-minimal subset of `X` dominating what `U` misses.
//!
//! On a `{K*_k, S*_ℓ}`-free graph `|U| ≤ g(i)` and `|X₀| ≤ (R(k, ℓ) - 1) g(i)`,
//! and on a connected `P_m`-free graph no layer past `m - 2` exists, which
//! gives `|D| ≤ 1 + Σ_{i=2}^{m-2} f(i)`. Layers past `m - 2` are still
//! processed on other inputs, so the result always dominates.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundError, BoundTable, RamseySource};
use crate::domination::{maximal_independent_subset, minimal_dominating_subset, DominationError};
use crate::generators::{gen_k_star, gen_path, gen_s_star};
use crate::graph::{Graph, GraphError, LayerDecomposition, VertexSet};
use crate::subgraph::{is_free, Freeness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error("layer {0} is empty")]
    EmptyLayer(usize),
    #[error("layer construction needs i >= 2, got {0}")]
    LayerTooShallow(usize),
    #[error("root {root} out of range for graph on {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("certified bound failed on a graph verified free of the forbidden family")]
    BoundViolatedOnFreeGraph,
}

/// Intermediate sets of one layer step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerConstruction {
    pub layer: usize,
    /// Maximal independent subset `X` of the layer.
    pub independent: VertexSet,
    /// Minimal subset `U` of the previous layer dominating `X`.
    pub upper: VertexSet,
    /// Layer vertices outside `N[U]`.
    pub uncovered: VertexSet,
    /// Minimal subset `X₀` of `X` dominating `uncovered`.
    pub residual: VertexSet,
}

impl LayerConstruction {
    /// `Û = U ∪ X₀`.
    pub fn dominator(&self) -> VertexSet {
        self.upper.union(&self.residual)
    }
}

pub fn construct_layer(
    g: &Graph,
    layers: &LayerDecomposition,
    i: usize,
) -> Result<LayerConstruction, ConstructError> {
    if i < 2 {
        return Err(ConstructError::LayerTooShallow(i));
    }
    let layer = layers.layer(i);
    if layer.is_empty() {
        return Err(ConstructError::EmptyLayer(i));
    }
    let independent = maximal_independent_subset(g, &layer);
    let upper = minimal_dominating_subset(g, &layers.layer(i - 1), &independent)?;
    let uncovered = layer.difference(&g.closed_neighborhood(&upper));
    let residual = minimal_dominating_subset(g, &independent, &uncovered)?;
    Ok(LayerConstruction { layer: i, independent, upper, uncovered, residual })
}

/// `Û_i`: a set dominating layer `i`.
pub fn dominate_layer(
    g: &Graph,
    layers: &LayerDecomposition,
    i: usize,
) -> Result<VertexSet, ConstructError> {
    construct_layer(g, layers, i).map(|c| c.dominator())
}

/// Forbidden-family parameters `(k, ℓ, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl BoundParams {
    pub fn new(k: usize, l: usize, m: usize) -> Result<Self, BoundError> {
        if k == 0 || l == 0 || m == 0 {
            return Err(BoundError::ZeroParameter);
        }
        Ok(BoundParams { k, l, m })
    }

    /// `[K*_k, S*_ℓ, P_m]`.
    pub fn forbidden(&self) -> Vec<Graph> {
        vec![
            gen_k_star(self.k).expect("k >= 1"),
            gen_s_star(self.l).expect("l >= 1"),
            gen_path(self.m).expect("m >= 1"),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerRecord {
    pub layer: usize,
    /// `|Û_i|`.
    pub size: usize,
    /// `f(i)` when `2 ≤ i ≤ m - 2`; deeper layers carry no bound.
    #[serde(with = "crate::serde_big::option")]
    pub bound: Option<BigUint>,
    pub within_bound: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub params: Option<BoundParams>,
    pub root: usize,
    pub layers: Vec<LayerRecord>,
    /// `1 + Σ |Û_i|`.
    pub total_size: usize,
    /// `|D|`; can be below `total_size` when consecutive `Û_i` overlap.
    pub distinct_size: usize,
    #[serde(with = "crate::serde_big::option")]
    pub total_bound: Option<BigUint>,
    pub bound_held: Option<bool>,
    /// Whether every Ramsey value behind the bound is exact.
    pub ramsey_exact: Option<bool>,
    pub freeness_checked: bool,
    pub forbidden_free: Option<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct ConstructOptions {
    pub root: Option<usize>,
    pub params: Option<BoundParams>,
    /// Test the input against `[K*_k, S*_ℓ, P_m]`; needs `params`.
    pub check_freeness: bool,
}

/// Builds `D = {a} ∪ ⋃_i Û_i` over every nonempty layer `i ≥ 2`.
///
/// The root defaults to the lowest-id vertex of minimum eccentricity. When
/// freeness is checked and holds, a failed bound is reported as
/// [`ConstructError::BoundViolatedOnFreeGraph`].
pub fn construct_dominating_set(
    g: &Graph,
    options: &ConstructOptions,
) -> Result<(VertexSet, BoundReport), ConstructError> {
    g.require_connected()?;
    let n = g.order();
    let root = match options.root {
        Some(r) if r >= n => return Err(ConstructError::RootOutOfRange { root: r, n }),
        Some(r) => r,
        None => g.center().expect("nonempty graph"),
    };
    let layers = g.bfs_layers(root);
    let mut table = options
        .params
        .map(|p| BoundTable::new(p.k, p.l, RamseySource::Table))
        .transpose()?;

    let mut dominating: VertexSet = [root].into();
    let mut records = Vec::new();
    for i in 2..layers.layers.len() {
        let set = dominate_layer(g, &layers, i)?;
        let (bound, within_bound) = match (options.params, table.as_mut()) {
            (Some(p), Some(t)) if i + 2 <= p.m => {
                let f = t.f(i)?;
                let ok = BigUint::from(set.len()) <= f;
                (Some(f), Some(ok))
            }
            (Some(_), _) => (None, Some(false)),
            (None, _) => (None, None),
        };
        records.push(LayerRecord { layer: i, size: set.len(), bound, within_bound });
        dominating.extend(set.iter());
    }

    let total_size = 1 + records.iter().map(|r| r.size).sum::<usize>();
    let (total_bound, bound_held, ramsey_exact) = match (options.params, table.as_mut()) {
        (Some(p), Some(t)) => {
            let total = t.total(p.m)?;
            let held = BigUint::from(total_size) <= total
                && records.iter().all(|r| r.within_bound == Some(true));
            (Some(total), Some(held), Some(t.exact))
        }
        _ => (None, None, None),
    };
    let forbidden_free = match (options.check_freeness, options.params) {
        (true, Some(p)) => Some(matches!(is_free(g, &p.forbidden()), Freeness::Free)),
        _ => None,
    };
    if forbidden_free == Some(true) && bound_held == Some(false) {
        return Err(ConstructError::BoundViolatedOnFreeGraph);
    }
    let report = BoundReport {
        params: options.params,
        root,
        layers: records,
        total_size,
        distinct_size: dominating.len(),
        total_bound,
        bound_held,
        ramsey_exact,
        freeness_checked: forbidden_free.is_some(),
        forbidden_free,
    };
    Ok((dominating, report))
}
