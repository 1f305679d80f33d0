//! Graph corpora: exhaustive small connected graphs, all labeled graphs of a
//! given order, and seeded Erdős–Rényi samples filtered by freeness.

use std::collections::HashMap;
use std::ops::RangeInclusive;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::format::{parse_graph6_lines, to_graph6, FormatError};
use crate::graph::Graph;
use crate::subgraph::{is_free, isomorphic};

/// Connected graphs on 1..=8 vertices up to isomorphism, one graph6 line each,
/// as produced by [`connected_graphs`].
const CONNECTED_UPTO_8: &str = include_str!("../fixtures/connected_upto8.g6");

/// Largest order in the shipped fixture.
pub const FIXTURE_MAX_ORDER: usize = 8;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("corpus {path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("only {found} of {wanted} samples accepted after {attempts} attempts")]
    SamplingExhausted { wanted: usize, found: usize, attempts: usize },
}

/// The built-in corpus of connected graphs with at most eight vertices.
pub fn fixture_corpus() -> Vec<Graph> {
    parse_graph6_lines(CONNECTED_UPTO_8).expect("shipped fixture is valid graph6")
}

pub fn load_corpus(path: &Path) -> Result<Vec<Graph>, CorpusError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: name.clone(), source })?;
    parse_graph6_lines(&text).map_err(|source| CorpusError::Format { path: name, source })
}

/// Cheap isomorphism invariant used to bucket candidates before the exact test.
fn invariant(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut per_vertex: Vec<(usize, usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            let triangles = nbrs
                .iter()
                .enumerate()
                .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            let mut nd: Vec<usize> = nbrs.iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), triangles, nd)
        })
        .collect();
    per_vertex.sort_unstable();
    let mut key = vec![n, g.size()];
    for (d, t, nd) in per_vertex {
        key.push(d);
        key.push(t);
        key.extend(nd);
    }
    key
}

/// All connected graphs on `n` vertices, one per isomorphism class.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each class on `n` vertices arises by attaching a new vertex to a nonempty
/// subset of some connected graph on `n - 1` vertices. Candidates are bucketed
/// by an invariant and compared exactly within each bucket.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    if n == 0 {
        return Vec::new();
    }
    for order in 2..=n {
        let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &level {
            for mask in 1usize..(1 << (order - 1)) {
                let mut h = Graph::empty(order);
                for (u, v) in base.edges() {
                    h.try_add_edge(u, v).expect("copied edge");
                }
                for u in 0..order - 1 {
                    if mask >> u & 1 == 1 {
                        h.try_add_edge(u, order - 1).expect("new edge");
                    }
                }
                let bucket = buckets.entry(invariant(&h)).or_default();
                if bucket.iter().all(|&i| !isomorphic(&next[i], &h)) {
                    bucket.push(next.len());
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    assert!(pairs.len() < 40, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.try_add_edge(i, j).expect("distinct pairs");
            }
        }
        g
    })
}

/// Uniform `G(n, p)` sample.
pub fn erdos_renyi<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.try_add_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// Parameters for rejection sampling of connected `H`-free graphs.
#[derive(Debug, Clone)]
pub struct SampleSpec {
    pub orders: RangeInclusive<usize>,
    /// Edge probability is drawn uniformly from this range per sample.
    pub density: RangeInclusive<f64>,
    pub forbidden: Vec<Graph>,
    pub count: usize,
    pub max_attempts: usize,
}

const BATCH: usize = 512;

/// Draws connected graphs free of `spec.forbidden`.
///
/// Candidates are generated sequentially from a ChaCha8 stream seeded with
/// `seed` and filtered in parallel, so the result depends only on the seed.
pub fn sample_free_connected(seed: u64, spec: &SampleSpec) -> Result<Vec<Graph>, CorpusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(spec.count);
    let mut attempts = 0;
    while out.len() < spec.count {
        if attempts >= spec.max_attempts {
            return Err(CorpusError::SamplingExhausted {
                wanted: spec.count,
                found: out.len(),
                attempts,
            });
        }
        let batch: Vec<Graph> = (0..BATCH)
            .map(|_| {
                let n = rng.gen_range(spec.orders.clone());
                let p = rng.gen_range(spec.density.clone());
                erdos_renyi(&mut rng, n, p)
            })
            .collect();
        attempts += BATCH;
        let accepted: Vec<Graph> = batch
            .into_par_iter()
            .filter(|g| g.is_connected() && is_free(g, &spec.forbidden).is_free())
            .collect();
        out.extend(accepted);
    }
    out.truncate(spec.count);
    Ok(out)
}

/// The graph6 fixture text for all connected graphs up to `max_order`.
pub fn render_connected_fixture(max_order: usize) -> String {
    let mut out = String::new();
    for n in 1..=max_order {
        for g in connected_graphs(n) {
            out.push_str(&to_graph6(&g));
            out.push('\n');
        }
    }
    out
}
