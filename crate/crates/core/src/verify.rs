//! Verification suites over fixture and sampled corpora.
//!
//! Each suite checks one combinatorial property and yields a
//! [`CriterionReport`]. Graphs are checked in parallel but results are kept
//! in input order, and every random corpus is derived from the run seed, so a
//! report is a pure function of its configuration.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{f_value, g_value, theorem_bound};
use crate::construct::{construct_dominating_set, BoundParams, ConstructOptions};
use crate::corpus::{all_labeled_graphs, sample_free_connected, SampleSpec};
use crate::domination::{
    gamma_brute_force, gamma_exact, independence_number, is_dominating, maximal_independent_subset,
};
use crate::format::{parse_graph6, to_graph6};
use crate::generators::*;
use crate::graph::{Graph, VertexSet};
use crate::ramsey::{ramsey_witness, RamseyOutcome};
use crate::subgraph::{contains_induced, contains_induced_brute_force, is_free};
use crate::witness::{extract_all_layers, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paths,
    Families,
    Ore,
    Ckshep,
    Soundness,
    Proposition,
    Ramsey,
    Witness,
    Bounds,
    Oracle,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Paths,
        Suite::Families,
        Suite::Ore,
        Suite::Ckshep,
        Suite::Soundness,
        Suite::Proposition,
        Suite::Ramsey,
        Suite::Witness,
        Suite::Bounds,
        Suite::Oracle,
        Suite::Roundtrip,
    ];

    /// 1-based criterion number.
    pub fn id(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paths => "paths",
            Suite::Families => "families",
            Suite::Ore => "ore",
            Suite::Ckshep => "ckshep",
            Suite::Soundness => "soundness",
            Suite::Proposition => "proposition",
            Suite::Ramsey => "ramsey",
            Suite::Witness => "witness",
            Suite::Bounds => "bounds",
            Suite::Oracle => "oracle",
            Suite::Roundtrip => "roundtrip",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Suite::Paths => "gamma(P_n) = ceil(n/3) for 1 <= n <= 30, under 1 s each",
            Suite::Families => "gamma(K*_n) = gamma(S*_n) = gamma(P_{3n-2}) = n for 1 <= n <= 8",
            Suite::Ore => "gamma <= floor(n/2) on connected graphs with 2 <= n <= 8",
            Suite::Ckshep => "gamma <= ceil(n/3) on connected {K_{1,3}, K*_3}-free graphs, n <= 10",
            Suite::Soundness => "constructed D dominates and respects the bound on free samples",
            Suite::Proposition => "maximal independent sets dominate; alpha < k implies gamma <= k-1",
            Suite::Ramsey => "every graph on 6 vertices has a triangle or an independent triple",
            Suite::Witness => "violations yield valid forbidden witnesses; free samples yield none",
            Suite::Bounds => "g, f and the total bound match hand-derived values",
            Suite::Oracle => "exact solvers agree with brute-force enumeration",
            Suite::Roundtrip => "graph6 round-trips over the corpus; byte-level examples decode",
        }
    }

    /// Per-suite seed, so a suite's corpus does not depend on which other
    /// suites run alongside it.
    fn seed(self, base: u64) -> u64 {
        base ^ (self.id() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random graphs drawn per sampled family.
    pub samples: usize,
    /// Connected graphs with at most eight vertices.
    pub corpus: Vec<Graph>,
}

impl VerifyConfig {
    pub fn new(seed: u64, corpus: Vec<Graph>) -> Self {
        VerifyConfig { seed, samples: 1000, corpus }
    }
}

const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub suite: Suite,
    pub title: &'static str,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checked: usize,
    pub failed: usize,
    /// The first few failures, in input order.
    pub failures: Vec<String>,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {:<12} checked={} failed={}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.suite.name(),
            self.checked,
            self.failed,
            self.title
        )?;
        for msg in &self.failures {
            write!(f, "\n       - {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Runs `check` over `items` in parallel, recording results in order.
    fn each<T, F>(&mut self, items: Vec<T>, check: F)
    where
        T: Send,
        F: Fn(T) -> Result<(), String> + Sync + Send,
    {
        let results: Vec<Result<(), String>> = items.into_par_iter().map(check).collect();
        self.checked += results.len();
        self.failures.extend(results.into_iter().filter_map(Result::err));
    }

    fn finish(self, suite: Suite) -> CriterionReport {
        let failed = self.failures.len();
        CriterionReport {
            id: suite.id(),
            suite,
            title: suite.title(),
            passed: failed == 0 && self.checked > 0,
            checked: self.checked,
            failed,
            failures: self.failures.into_iter().take(MAX_LISTED_FAILURES).collect(),
        }
    }
}

fn gamma(g: &Graph) -> usize {
    gamma_exact(g).expect("corpus graphs are nonempty").gamma
}

fn sample(tally: &mut Tally, seed: u64, spec: SampleSpec) -> Vec<Graph> {
    match sample_free_connected(seed, &spec) {
        Ok(graphs) => graphs,
        Err(e) => {
            tally.check(false, || format!("sampling: {e}"));
            Vec::new()
        }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::default();
    let seed = suite.seed(config.seed);
    match suite {
        Suite::Paths => paths(&mut t),
        Suite::Families => families(&mut t),
        Suite::Ore => ore(&mut t, config),
        Suite::Ckshep => ckshep(&mut t, config, seed),
        Suite::Soundness => soundness(&mut t, config, seed),
        Suite::Proposition => proposition(&mut t, config),
        Suite::Ramsey => ramsey(&mut t),
        Suite::Witness => witness(&mut t, config, seed),
        Suite::Bounds => bounds(&mut t),
        Suite::Oracle => oracle(&mut t, config, seed),
        Suite::Roundtrip => roundtrip(&mut t, config),
    }
    t.finish(suite)
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> VerifyReport {
    let criteria: Vec<CriterionReport> = suites.iter().map(|&s| run_suite(s, config)).collect();
    VerifyReport {
        seed: config.seed,
        samples: config.samples,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

const PATH_TIME_LIMIT: Duration = Duration::from_secs(1);

fn paths(t: &mut Tally) {
    t.each((1..=30).collect(), |n: usize| {
        let g = gen_path(n).unwrap();
        let start = Instant::now();
        let got = gamma(&g);
        let elapsed = start.elapsed();
        if got != n.div_ceil(3) {
            Err(format!("P_{n}: gamma {got}, expected {}", n.div_ceil(3)))
        } else if elapsed >= PATH_TIME_LIMIT {
            Err(format!("P_{n}: took {elapsed:?}"))
        } else {
            Ok(())
        }
    });
}

fn families(t: &mut Tally) {
    t.each((1..=8).collect(), |n: usize| {
        for (name, g) in [
            ("K*", gen_k_star(n).unwrap()),
            ("S*", gen_s_star(n).unwrap()),
            ("P", gen_path(3 * n - 2).unwrap()),
        ] {
            let got = gamma(&g);
            if got != n {
                return Err(format!("{name} for n={n}: gamma {got}, expected {n}"));
            }
        }
        Ok(())
    });
}

fn ore(t: &mut Tally, config: &VerifyConfig) {
    let graphs: Vec<&Graph> = config.corpus.iter().filter(|g| g.order() >= 2).collect();
    t.each(graphs, |g| {
        let got = gamma(g);
        (got <= g.order() / 2)
            .then_some(())
            .ok_or_else(|| format!("{}: gamma {got} > n/2", to_graph6(g)))
    });
}

fn ckshep(t: &mut Tally, config: &VerifyConfig, seed: u64) {
    let forbidden = vec![gen_star(3).unwrap(), gen_k_star(3).unwrap()];
    let mut graphs: Vec<Graph> = config
        .corpus
        .iter()
        .filter(|g| is_free(g, &forbidden).is_free())
        .cloned()
        .collect();
    for (offset, n) in [9usize, 10].into_iter().enumerate() {
        let spec = SampleSpec {
            orders: n..=n,
            density: 0.45..=0.95,
            forbidden: forbidden.clone(),
            count: config.samples,
            max_attempts: 500 * config.samples.max(1),
        };
        graphs.extend(sample(t, seed.wrapping_add(offset as u64), spec));
    }
    t.each(graphs, |g| {
        let got = gamma(&g);
        let limit = g.order().div_ceil(3);
        (got <= limit)
            .then_some(())
            .ok_or_else(|| format!("{}: gamma {got} > {limit}", to_graph6(&g)))
    });
}

/// Parameter sets `(k, ℓ, m)` for the soundness samples.
pub const SOUNDNESS_PARAMS: [(usize, usize, usize); 2] = [(3, 2, 5), (3, 3, 6)];

fn soundness(t: &mut Tally, config: &VerifyConfig, seed: u64) {
    for (offset, (k, l, m)) in SOUNDNESS_PARAMS.into_iter().enumerate() {
        let params = BoundParams::new(k, l, m).unwrap();
        let spec = SampleSpec {
            orders: 4..=14,
            density: 0.3..=0.95,
            forbidden: params.forbidden(),
            count: config.samples,
            max_attempts: 500 * config.samples.max(1),
        };
        let graphs = sample(t, seed.wrapping_add(offset as u64), spec);
        let options = ConstructOptions { root: None, params: Some(params), check_freeness: true };
        t.each(graphs, |g| {
            let tag = || format!("{} with (k,l,m)=({k},{l},{m})", to_graph6(&g));
            let (d, report) = construct_dominating_set(&g, &options).map_err(|e| format!("{}: {e}", tag()))?;
            let bound = theorem_bound(k, l, m).unwrap();
            if !is_dominating(&g, &d) {
                return Err(format!("{}: D = {d:?} does not dominate", tag()));
            }
            if BigUint::from(d.len()) > bound || report.bound_held != Some(true) {
                return Err(format!("{}: |D| = {} exceeds bound {bound}", tag(), d.len()));
            }
            if report.forbidden_free != Some(true) {
                return Err(format!("{}: sample not reported free", tag()));
            }
            let got = gamma(&g);
            if got > d.len() {
                return Err(format!("{}: gamma {got} > |D| = {}", tag(), d.len()));
            }
            Ok(())
        });
    }
}

fn proposition(t: &mut Tally, config: &VerifyConfig) {
    let graphs: Vec<&Graph> = config.corpus.iter().collect();
    t.each(graphs, |g| {
        let mis = maximal_independent_subset(g, &VertexSet::full(g.order()));
        if !is_dominating(g, &mis) {
            return Err(format!("{}: maximal independent set {mis:?} does not dominate", to_graph6(g)));
        }
        let alpha = independence_number(g);
        let got = gamma(g);
        for k in 1..=4 {
            if alpha < k && got > k - 1 {
                return Err(format!("{}: alpha {alpha} < {k} but gamma {got}", to_graph6(g)));
            }
        }
        Ok(())
    });
    // the converse direction rests on gamma of the edgeless graph
    for n in 1..=8 {
        let got = gamma(&gen_empty(n));
        t.check(got == n, || format!("edgeless graph on {n} vertices: gamma {got}"));
    }
}

fn ramsey(t: &mut Tally) {
    let graphs: Vec<Graph> = all_labeled_graphs(6).collect();
    let full = VertexSet::full(6);
    t.each(graphs, |g| {
        let bad = |why: &str| Err(format!("{}: {why}", to_graph6(&g)));
        match ramsey_witness(&g, &full, 3, 3) {
            RamseyOutcome::Clique(c) => {
                let v = c.to_vec();
                let ok = v.len() == 3 && v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)));
                if ok { Ok(()) } else { bad("invalid clique") }
            }
            RamseyOutcome::Independent(s) => {
                let v = s.to_vec();
                let ok = v.len() == 3 && v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
                if ok { Ok(()) } else { bad("invalid independent set") }
            }
            RamseyOutcome::NotFound => bad("no triangle and no independent triple"),
        }
    });
}

/// Largest `ℓ'` with `g(k, ℓ', 2) < limit`, i.e. the tightest spider parameter
/// whose first layer bound a star with `limit` leaves still violates.
fn violating_spider_parameter(k: usize, limit: usize) -> usize {
    (1..limit)
        .take_while(|&l| g_value(k, l, 2).unwrap() < BigUint::from(limit))
        .last()
        .unwrap_or(1)
}

fn witness(t: &mut Tally, config: &VerifyConfig, seed: u64) {
    // S*_ℓ rooted at its center: layer 1 holds ℓ legs that all must be kept.
    for l in 2..=4 {
        let host = gen_s_star(l).unwrap();
        let lp = violating_spider_parameter(3, l);
        check_violation(t, &host, 0, 3, lp, Shape::SStar, &format!("S*_{l} (k=3, l={lp})"));
    }
    // K*_n rooted at a pendant: the far clique vertices form a K*_{n-1}.
    for n in 3..=5 {
        let host = gen_k_star(n).unwrap();
        check_violation(t, &host, n, n - 1, 1, Shape::KStar, &format!("K*_{n} (k={}, l=1)", n - 1));
    }

    let spec = SampleSpec {
        orders: 4..=12,
        density: 0.3..=0.95,
        forbidden: vec![gen_k_star(3).unwrap(), gen_s_star(2).unwrap()],
        count: config.samples,
        max_attempts: 500 * config.samples.max(1),
    };
    let graphs = sample(t, seed, spec);
    t.each(graphs, |g| {
        for root in g.vertices() {
            let found = extract_all_layers(&g, root, 3, 2).map_err(|e| format!("{} root {root}: {e}", to_graph6(&g)))?;
            if let Some((i, _)) = found.iter().find(|(_, w)| w.is_some()) {
                return Err(format!("{} root {root}: witness at layer {i} on a free graph", to_graph6(&g)));
            }
        }
        Ok(())
    });
}

fn check_violation(t: &mut Tally, host: &Graph, root: usize, k: usize, l: usize, shape: Shape, label: &str) {
    let found = match extract_all_layers(host, root, k, l) {
        Ok(found) => found,
        Err(e) => return t.check(false, || format!("{label}: {e}")),
    };
    let witnesses: Vec<_> = found.into_iter().filter_map(|(_, w)| w).collect();
    t.check(witnesses.iter().any(|w| w.shape == shape), || format!("{label}: no {shape:?} witness"));
    for w in &witnesses {
        let pattern = w.shape.pattern(w.size);
        let revalidated = w.embedding.is_valid(host, &pattern) && contains_induced(host, &pattern).is_some();
        t.check(revalidated, || format!("{label}: witness {w:?} does not validate"));
    }
}

fn bounds(t: &mut Tally) {
    let big = |v: u64| BigUint::from(v);
    for i in 1..=12 {
        t.check(g_value(2, 2, i) == Ok(big(1)), || format!("g(2,2,{i}) != 1"));
    }
    for i in 2..=12 {
        t.check(f_value(2, 2, i) == Ok(big(2)), || format!("f(2,2,{i}) != 2"));
    }
    t.check(g_value(3, 3, 2) == Ok(big(5)), || "g(3,3,2) != 5".into());
    t.check(f_value(3, 3, 2) == Ok(big(30)), || "f(3,3,2) != 30".into());
    t.check(theorem_bound(2, 2, 5) == Ok(big(5)), || "theorem_bound(2,2,5) != 5".into());
    for k in 1..=6 {
        for l in 1..=6 {
            t.check(theorem_bound(k, l, 3) == Ok(big(1)), || format!("theorem_bound({k},{l},3) != 1"));
        }
    }
}

fn oracle(t: &mut Tally, config: &VerifyConfig, seed: u64) {
    let small: Vec<&Graph> = config.corpus.iter().filter(|g| g.order() <= 7).collect();
    t.each(small, |g| {
        let exact = gamma(g);
        let brute = gamma_brute_force(g).unwrap();
        (exact == brute)
            .then_some(())
            .ok_or_else(|| format!("{}: gamma_exact {exact}, brute force {brute}", to_graph6(g)))
    });

    // patterns: connected graphs on at most 5 vertices and their complements
    let patterns: Vec<Graph> = config
        .corpus
        .iter()
        .filter(|g| g.order() <= 5)
        .flat_map(|g| [g.clone(), g.complement()])
        .collect();
    let hosts = {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..200)
            .map(|_| {
                let n = rng.gen_range(1..=9);
                let p = rng.gen_range(0.1..=0.9);
                crate::corpus::erdos_renyi(&mut rng, n, p)
            })
            .collect::<Vec<_>>()
    };
    t.each(hosts, |host| {
        for pattern in &patterns {
            let fast = contains_induced(&host, pattern);
            if let Some(e) = &fast {
                if !e.is_valid(&host, pattern) {
                    return Err(format!("{} in {}: invalid embedding", to_graph6(pattern), to_graph6(&host)));
                }
            }
            if fast.is_some() != contains_induced_brute_force(&host, pattern) {
                return Err(format!("{} in {}: disagrees with brute force", to_graph6(pattern), to_graph6(&host)));
            }
        }
        Ok(())
    });
}

fn roundtrip(t: &mut Tally, config: &VerifyConfig) {
    let graphs: Vec<&Graph> = config.corpus.iter().collect();
    t.each(graphs, |g| {
        let text = to_graph6(g);
        match parse_graph6(&text) {
            Ok(back) if &back == g => Ok(()),
            Ok(_) => Err(format!("{text}: decodes to a different graph")),
            Err(e) => Err(format!("{text}: {e}")),
        }
    });
    t.check(parse_graph6("D?").ok() == Some(gen_empty(5)), || "\"D?\" is not the edgeless graph on 5 vertices".into());
    t.check(parse_graph6("A_").ok() == Some(gen_complete(2).unwrap()), || "\"A_\" is not K_2".into());
}
