//! Forbidden-subgraph witnesses for layers whose construction exceeds its bound.
//!
//! When `|U| > g(i)` or `|X₀| > (R(k, ℓ) - 1) g(i)` the layer sets themselves
//! contain an induced `K*_k` or `S*_ℓ`. The extraction mirrors the counting
//! arguments behind the bounds: private neighbours supply the pendant or tip
//! vertices, a Ramsey search splits a large set into a clique or an
//! independent set, and a pigeonhole step finds a vertex one layer up with
//! `ℓ` neighbours in that independent set. The pigeonhole step needs a small
//! dominator of the independent set; if the one built from layer `i - 2` is
//! itself too large, the same argument is applied there first.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundError, BoundTable, RamseySource};
use crate::construct::{construct_layer, ConstructError};
use crate::domination::{minimal_dominating_subset, private_neighbors, DominationError};
use crate::generators::{gen_k_star, gen_s_star};
use crate::graph::{Graph, LayerDecomposition, VertexSet};
use crate::ramsey::{ramsey_witness, RamseyOutcome};
use crate::subgraph::Embedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    /// A bound was exceeded but no witness could be assembled. This means the
    /// implementation is wrong, not that the bound is.
    #[error("internal contradiction at layer {layer}: {reason}")]
    Contradiction { layer: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    KStar,
    SStar,
}

impl Shape {
    pub fn pattern(self, size: usize) -> crate::graph::Graph {
        match self {
            Shape::KStar => gen_k_star(size),
            Shape::SStar => gen_s_star(size),
        }
        .expect("witness sizes are positive")
    }
}

/// Which bound was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// `|U| > g(i)`.
    UpperSet,
    /// `|X₀| > (R(k, ℓ) - 1) g(i)`.
    Residual,
}

/// An induced copy of `K*_size` or `S*_size`, labeled as by the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub shape: Shape,
    pub size: usize,
    pub embedding: Embedding,
    pub layer: usize,
    pub violation: Violation,
}

impl ForbiddenWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.embedding.is_valid(g, &self.shape.pattern(self.size))
    }
}

struct Extractor<'a> {
    g: &'a Graph,
    layers: &'a LayerDecomposition,
    table: BoundTable,
    k: usize,
    l: usize,
}

fn small(v: &BigUint, layer: usize) -> Result<usize, WitnessError> {
    v.to_usize().ok_or_else(|| WitnessError::Contradiction {
        layer,
        reason: format!("threshold {v} exceeds the vertex count"),
    })
}

impl Extractor<'_> {
    fn contradiction(layer: usize, reason: impl Into<String>) -> WitnessError {
        WitnessError::Contradiction { layer, reason: reason.into() }
    }

    fn finish(
        &self,
        shape: Shape,
        size: usize,
        map: Vec<usize>,
        layer: usize,
        violation: Violation,
    ) -> Result<ForbiddenWitness, WitnessError> {
        let w = ForbiddenWitness { shape, size, embedding: Embedding(map), layer, violation };
        if w.is_valid(self.g) {
            Ok(w)
        } else {
            Err(Self::contradiction(layer, format!("assembled {shape:?} is not induced")))
        }
    }

    /// `independent ⊆ layer j` is independent, `upper` is an inclusion-minimal
    /// subset of layer `j - 1` dominating it, and `|upper| > g(j)`.
    fn upper_set(
        &mut self,
        j: usize,
        independent: &VertexSet,
        upper: &VertexSet,
        violation: Violation,
    ) -> Result<ForbiddenWitness, WitnessError> {
        let pendant = private_neighbors(self.g, upper, independent)?;
        let g_prev = self.table.g(j - 1)?;
        let t = small(&(g_prev.clone() * (self.l - 1) + 1u32), j)?;
        match ramsey_witness(self.g, upper, self.k, t) {
            RamseyOutcome::Clique(clique) => {
                let mut map = clique.to_vec();
                map.extend(clique.iter().map(|u| pendant[&u]));
                self.finish(Shape::KStar, self.k, map, j, violation)
            }
            RamseyOutcome::Independent(spread) => {
                // a dominator of `spread` one layer up with at most g(j - 1) members
                let above = if j == 2 {
                    VertexSet::from([self.layers.root])
                } else {
                    minimal_dominating_subset(self.g, &self.layers.layer(j - 2), &spread)?
                };
                if above.len() > small(&g_prev, j).unwrap_or(usize::MAX) {
                    return self.upper_set(j - 1, &spread, &above, violation);
                }
                let (hub, legs) = above
                    .iter()
                    .map(|u| (u, spread.iter().filter(|&v| self.g.has_edge(u, v)).collect::<Vec<_>>()))
                    .find(|(_, nbrs)| nbrs.len() >= self.l)
                    .ok_or_else(|| Self::contradiction(j, "pigeonhole found no hub"))?;
                let legs = &legs[..self.l];
                let mut map = vec![hub];
                map.extend_from_slice(legs);
                map.extend(legs.iter().map(|u| pendant[u]));
                self.finish(Shape::SStar, self.l, map, j, violation)
            }
            RamseyOutcome::NotFound => Err(Self::contradiction(
                j,
                format!("{} vertices hold neither a {}-clique nor an independent {t}-set", upper.len(), self.k),
            )),
        }
    }

    /// `|residual| > (R(k, ℓ) - 1) g(i)` while `|upper| ≤ g(i)`.
    fn residual(
        &mut self,
        i: usize,
        upper: &VertexSet,
        residual: &VertexSet,
        uncovered: &VertexSet,
    ) -> Result<ForbiddenWitness, WitnessError> {
        let r = small(&self.table.ramsey_kl, i)?;
        let hub = upper
            .iter()
            .find(|&u| residual.iter().filter(|&x| self.g.has_edge(u, x)).count() >= r)
            .ok_or_else(|| Self::contradiction(i, "no upper vertex sees R(k, l) residual vertices"))?;
        let private = private_neighbors(self.g, residual, uncovered)?;
        // y ↦ x_y over the hub's residual neighbours
        let owner: std::collections::BTreeMap<usize, usize> = residual
            .iter()
            .filter(|&x| self.g.has_edge(hub, x))
            .map(|x| (private[&x], x))
            .collect();
        let tips: VertexSet = owner.keys().copied().collect();
        match ramsey_witness(self.g, &tips, self.k, self.l) {
            RamseyOutcome::Clique(clique) => {
                let mut map = clique.to_vec();
                map.extend(clique.iter().map(|y| owner[&y]));
                self.finish(Shape::KStar, self.k, map, i, Violation::Residual)
            }
            RamseyOutcome::Independent(spread) => {
                let mut map = vec![hub];
                map.extend(spread.iter().map(|y| owner[&y]));
                map.extend(spread.iter());
                self.finish(Shape::SStar, self.l, map, i, Violation::Residual)
            }
            RamseyOutcome::NotFound => Err(Self::contradiction(i, "residual tips too few for R(k, l)")),
        }
    }
}

/// Rebuilds layer `i` and, if either layer bound for `(k, ℓ)` is exceeded,
/// returns an induced `K*_k` or `S*_ℓ` explaining why. `Ok(None)` means both
/// bounds hold.
pub fn extract_forbidden_witness(
    g: &Graph,
    layers: &LayerDecomposition,
    i: usize,
    k: usize,
    l: usize,
) -> Result<Option<ForbiddenWitness>, WitnessError> {
    let c = construct_layer(g, layers, i)?;
    let mut ex = Extractor {
        g,
        layers,
        table: BoundTable::new(k, l, RamseySource::Table)?,
        k,
        l,
    };
    if BigUint::from(c.upper.len()) > ex.table.g(i)? {
        return ex.upper_set(i, &c.independent, &c.upper, Violation::UpperSet).map(Some);
    }
    if BigUint::from(c.residual.len()) > ex.table.residual_limit(i)? {
        return ex.residual(i, &c.upper, &c.residual, &c.uncovered).map(Some);
    }
    Ok(None)
}

/// Runs [`extract_forbidden_witness`] on every layer `i ≥ 2` around `root`.
pub fn extract_all_layers(
    g: &Graph,
    root: usize,
    k: usize,
    l: usize,
) -> Result<Vec<(usize, Option<ForbiddenWitness>)>, WitnessError> {
    let layers = g.bfs_layers(root);
    (2..layers.layers.len())
        .map(|i| extract_forbidden_witness(g, &layers, i, k, l).map(|w| (i, w)))
        .collect()
}
