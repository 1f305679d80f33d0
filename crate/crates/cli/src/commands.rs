use std::num::NonZeroUsize;

use serde::Serialize;
use serde_json::{json, Value};

use domfree::bounds::{BoundTable, RamseySource};
use domfree::construct::{construct_dominating_set, BoundParams, BoundReport, ConstructError, ConstructOptions};
use domfree::corpus::{connected_graphs, fixture_corpus, load_corpus};
use domfree::domination::{gamma_exact, is_dominating};
use domfree::format::{to_edge_list, to_graph6};
use domfree::generators::{gen_k_star, gen_path, gen_s_star, Family};
use domfree::subgraph::{is_free, leq_relation, Freeness};
use domfree::verify::{self, CriterionReport, Suite, VerifyConfig};
use domfree::witness::{extract_all_layers, extract_forbidden_witness, ForbiddenWitness, WitnessError};
use domfree::Graph;

use crate::input::{parse_graph_arg, read_graph};
use crate::{Command, FamilyParams, InputFormat};

/// One report per run. Field order is fixed; maps inside are key-sorted.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    /// Canonical graph6 of the input graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub parameters: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<LayerWitness>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CriterionReport>>,
}

#[derive(Debug, Serialize)]
pub struct LayerWitness {
    pub layer: usize,
    pub witness: Option<ForbiddenWitness>,
}

pub struct Outcome {
    pub report: Report,
    /// A property or bound failed; exit status 1.
    pub violation: bool,
}

impl Report {
    fn new(command: &'static str, input: Option<&Graph>, parameters: Value, result: Value) -> Self {
        Report {
            command,
            input: input.map(to_graph6),
            parameters,
            result,
            bound_report: None,
            witnesses: None,
            checks: None,
        }
    }

    fn ok(self) -> Result<Outcome, String> {
        Ok(Outcome { report: self, violation: false })
    }
}

fn get(v: Option<NonZeroUsize>) -> Option<usize> {
    v.map(NonZeroUsize::get)
}

fn all_or_none(p: FamilyParams, command: &str) -> Result<Option<BoundParams>, String> {
    match (get(p.k), get(p.l), get(p.m)) {
        (Some(k), Some(l), Some(m)) => Ok(Some(BoundParams::new(k, l, m).map_err(|e| e.to_string())?)),
        (None, None, None) => Ok(None),
        _ => Err(format!("{command} needs all of --k, --l and --m, or none of them")),
    }
}

fn family_patterns(p: FamilyParams) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    if let Some(k) = get(p.k) {
        out.push((format!("kstar:{k}"), gen_k_star(k).expect("k >= 1")));
    }
    if let Some(l) = get(p.l) {
        out.push((format!("sstar:{l}"), gen_s_star(l).expect("l >= 1")));
    }
    if let Some(m) = get(p.m) {
        out.push((format!("path:{m}"), gen_path(m).expect("m >= 1")));
    }
    out
}

fn param_json(p: FamilyParams) -> Value {
    json!({ "k": get(p.k), "l": get(p.l), "m": get(p.m) })
}

pub fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Gamma { graph } => {
            let g = read_graph(&graph)?;
            let r = gamma_exact(&g).map_err(|e| e.to_string())?;
            Report::new("gamma", Some(&g), json!({}), json!({ "gamma": r.gamma, "dominating_set": r.witness })).ok()
        }

        Command::Free { graph, params, forbid } => {
            let g = read_graph(&graph)?;
            let mut patterns = family_patterns(params);
            for text in &forbid {
                patterns.push((text.clone(), parse_graph_arg(text)?));
            }
            if patterns.is_empty() {
                return Err("free needs at least one of --k, --l, --m or --forbid".into());
            }
            let graphs: Vec<Graph> = patterns.iter().map(|(_, h)| h.clone()).collect();
            let result = match is_free(&g, &graphs) {
                Freeness::Free => json!({ "free": true }),
                Freeness::Contains { pattern, embedding } => json!({
                    "free": false,
                    "pattern": patterns[pattern].0,
                    "embedding": embedding,
                }),
            };
            let names: Vec<&str> = patterns.iter().map(|(n, _)| n.as_str()).collect();
            Report::new("free", Some(&g), json!({ "forbidden": names }), result).ok()
        }

        Command::Dominate { graph, params, root, gamma } => {
            let g = read_graph(&graph)?;
            let bound_params = all_or_none(params, "dominate")?;
            let options = ConstructOptions { root, params: bound_params, check_freeness: bound_params.is_some() };
            let parameters = json!({ "k": get(params.k), "l": get(params.l), "m": get(params.m), "root": root });
            let (d, bound_report) = match construct_dominating_set(&g, &options) {
                Ok(found) => found,
                Err(ConstructError::BoundViolatedOnFreeGraph) => {
                    let result = json!({ "error": ConstructError::BoundViolatedOnFreeGraph.to_string() });
                    let report = Report::new("dominate", Some(&g), parameters, result);
                    return Ok(Outcome { report, violation: true });
                }
                Err(e) => return Err(e.to_string()),
            };
            let mut result = json!({
                "dominating_set": d,
                "size": d.len(),
                "is_dominating": is_dominating(&g, &d),
            });
            if gamma {
                result["gamma"] = json!(gamma_exact(&g).map_err(|e| e.to_string())?.gamma);
            }
            let mut report = Report::new("dominate", Some(&g), parameters, result);
            report.bound_report = Some(bound_report);
            report.ok()
        }

        Command::Witness { graph, k, l, root, layer } => {
            let g = read_graph(&graph)?;
            g.require_connected().map_err(|e| e.to_string())?;
            let root = match root {
                Some(r) if r >= g.order() => return Err(format!("root {r} out of range for graph on {} vertices", g.order())),
                Some(r) => r,
                None => g.center().expect("connected graphs are nonempty"),
            };
            let (k, l) = (k.get(), l.get());
            let found = match layer {
                Some(i) => extract_forbidden_witness(&g, &g.bfs_layers(root), i, k, l).map(|w| vec![(i, w)]),
                None => extract_all_layers(&g, root, k, l),
            };
            let parameters = json!({ "k": k, "l": l, "root": root, "layer": layer });
            let found = match found {
                Ok(found) => found,
                Err(e @ WitnessError::Contradiction { .. }) => {
                    let report = Report::new("witness", Some(&g), parameters, json!({ "error": e.to_string() }));
                    return Ok(Outcome { report, violation: true });
                }
                Err(e) => return Err(e.to_string()),
            };
            let witnesses: Vec<LayerWitness> = found.into_iter().map(|(layer, witness)| LayerWitness { layer, witness }).collect();
            let count = witnesses.iter().filter(|w| w.witness.is_some()).count();
            let mut report = Report::new("witness", Some(&g), parameters, json!({ "found": count }));
            report.witnesses = Some(witnesses);
            report.ok()
        }

        Command::Leq { left, right, params } => {
            let lhs = left.iter().map(|t| parse_graph_arg(t)).collect::<Result<Vec<_>, _>>()?;
            let (names, rhs): (Vec<String>, Vec<Graph>) = if right.is_empty() {
                if all_or_none(params, "leq without --right")?.is_none() {
                    return Err("leq needs --right or all of --k, --l and --m".into());
                }
                family_patterns(params).into_iter().unzip()
            } else {
                let graphs = right.iter().map(|t| parse_graph_arg(t)).collect::<Result<Vec<_>, _>>()?;
                (right, graphs)
            };
            let parameters = json!({ "left": left, "right": names });
            Report::new("leq", None, parameters, json!({ "leq": leq_relation(&lhs, &rhs) })).ok()
        }

        Command::Bounds { k, l, m, binomial } => {
            let source = if binomial { RamseySource::Binomial } else { RamseySource::Table };
            let params = FamilyParams { k: Some(k), l: Some(l), m: Some(m) };
            let mut table = BoundTable::new(k.get(), l.get(), source).map_err(|e| e.to_string())?;
            let m = m.get();
            let depth = m.saturating_sub(2).max(1);
            let mut f = Vec::new();
            for i in 2..=depth {
                f.push(json!({ "layer": i, "f": table.f(i).map_err(|e| e.to_string())?.to_string() }));
            }
            let total = table.total(m).map_err(|e| e.to_string())?;
            table.g(depth).map_err(|e| e.to_string())?;
            let g: Vec<String> = table.g.iter().map(ToString::to_string).collect();
            let result = json!({
                "ramsey_kl": table.ramsey_kl.to_string(),
                "g": g,
                "f": f,
                "total": total.to_string(),
                "exact": table.exact,
            });
            let mut parameters = param_json(params);
            parameters["ramsey"] = json!(source);
            Report::new("bounds", None, parameters, result).ok()
        }

        Command::Gen { family, size, format } => {
            let parameters = json!({ "family": family, "size": size });
            let graphs = if family == "connected" {
                connected_graphs(size)
            } else {
                let f: Family = family.parse()?;
                vec![f.generate(size).map_err(|e| e.to_string())?]
            };
            let rendered: Vec<Value> = graphs
                .iter()
                .map(|g| {
                    let mut v = json!({ "graph6": to_graph6(g), "order": g.order(), "size": g.size() });
                    if format == InputFormat::Edgelist {
                        v["edge_list"] = json!(to_edge_list(g));
                    }
                    v
                })
                .collect();
            let result = if family == "connected" {
                json!({ "count": rendered.len(), "graphs": rendered })
            } else {
                rendered.into_iter().next().expect("one generated graph")
            };
            Report::new("gen", None, parameters, result).ok()
        }

        Command::Verify { suites, seed, samples, corpus } => {
            let selected: Vec<Suite> = if suites.is_empty() || suites.iter().any(|s| s == "all") {
                Suite::ALL.to_vec()
            } else {
                suites.iter().map(|s| s.parse().map_err(|e: verify::UnknownSuite| e.to_string())).collect::<Result<_, _>>()?
            };
            let graphs = match &corpus {
                Some(path) => load_corpus(path).map_err(|e| e.to_string())?,
                None => fixture_corpus(),
            };
            let config = VerifyConfig { seed, samples, corpus: graphs };
            let outcome = verify::run(&selected, &config);
            for c in &outcome.criteria {
                eprintln!("{c}");
            }
            let parameters = json!({
                "suites": selected,
                "seed": seed,
                "samples": samples,
                "corpus": corpus.as_ref().map(|p| p.display().to_string()),
                "corpus_size": config.corpus.len(),
            });
            let passed = outcome.passed;
            let mut report = Report::new("verify", None, parameters, json!({ "passed": passed }));
            report.checks = Some(outcome.criteria);
            Ok(Outcome { report, violation: !passed })
        }
    }
}
