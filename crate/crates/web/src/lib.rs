//! Browser bindings: three operations, each taking plain strings and
//! returning a JSON document, so the page needs no bundler.
//!
//! The `*_json` functions are the native entry points (and what the tests
//! exercise); the `#[wasm_bindgen]` wrappers only convert errors.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use misbound::bounds::{curve_export, eppstein, nielsen, CurveRow};
use misbound::io::{parse_graphs, to_graph6};
use misbound::mibs::enumerate_mibs_canonical;
use misbound::mis::enumerate_mis;
use misbound::pipeline::{run_instance, InstanceConfig};
use misbound::report::to_json;
use misbound::{Graph, VertexSet};

/// Listed sets are capped so the page stays responsive.
pub const LIST_CAP: usize = 500;
/// Largest order the page will analyze.
pub const WEB_MAX_ORDER: usize = 24;

#[derive(Serialize)]
struct SizeRow {
    k: usize,
    mis_exactly: u64,
    mis_at_most: u64,
    eppstein: f64,
    nielsen: f64,
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    mis: u64,
    profile: Vec<u64>,
    by_size: Vec<SizeRow>,
    mis_sets: Vec<Vec<usize>>,
    mibs: u64,
    mibs_ordered_pairs: u64,
    mibs_sets: Vec<Vec<usize>>,
    truncated: bool,
}

fn one_graph(text: &str) -> Result<Graph, String> {
    let mut graphs = parse_graphs(text).map_err(|e| e.to_string())?;
    match graphs.len() {
        0 => Err("no graph given".into()),
        1 => {
            let g = graphs.pop().unwrap();
            if g.order() > WEB_MAX_ORDER {
                return Err(format!("the demo is limited to {WEB_MAX_ORDER} vertices"));
            }
            Ok(g)
        }
        k => Err(format!("expected one graph, got {k}")),
    }
}

fn lists(sets: impl Iterator<Item = VertexSet>) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut truncated = false;
    for s in sets {
        if out.len() == LIST_CAP {
            truncated = true;
            break;
        }
        out.push(s.to_vec());
    }
    (out, truncated)
}

fn json_string<T: Serialize>(v: &T) -> String {
    to_json(v).to_string()
}

/// Maximal independent sets by size against the bounds, and the maximal
/// induced bipartite subgraphs, for a graph in graph6 or edge-list form.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let g = one_graph(text)?;
    let n = g.order();
    let fam = enumerate_mis(&g);
    let mibs = enumerate_mibs_canonical(&g);
    let by_size = (0..=n)
        .map(|k| {
            Ok(SizeRow {
                k,
                mis_exactly: fam.profile.exactly(k),
                mis_at_most: fam.profile.at_most(k),
                eppstein: eppstein(n, k).map_err(|e| e.to_string())?.to_f64(),
                nielsen: nielsen(n, k).map_err(|e| e.to_string())?.to_f64(),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let (mis_sets, t1) = lists(fam.sets.iter().copied());
    let (mibs_sets, t2) = lists(mibs.records.iter().map(|r| r.vertices));
    Ok(json_string(&Analysis {
        graph6: to_graph6(&g),
        n,
        edges: g.edges().collect(),
        mis: fam.profile.total(),
        profile: fam.profile.counts().to_vec(),
        by_size,
        mis_sets,
        mibs: mibs.distinct_count,
        mibs_ordered_pairs: mibs.ordered_pair_count,
        mibs_sets,
        truncated: t1 || t2,
    }))
}

/// Per-vertex exponent curves over `k/n ∈ [1/5, 1/3]`.
pub fn curves_json(eta: f64, points: usize) -> Result<String, String> {
    let rows: Vec<CurveRow> = curve_export(eta, points).map_err(|e| e.to_string())?;
    Ok(json_string(&rows))
}

fn parse_set(text: &str) -> Result<Option<VertexSet>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(None);
    }
    let mut s = VertexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| format!("bad index {part:?}"))?;
        if v >= 64 {
            return Err(format!("index {v} out of range"));
        }
        s.insert(v);
    }
    Ok(Some(s))
}

/// The decomposition and transversal census for a K4-free graph of maximum
/// degree 3; `i0` and `s` are comma-separated lists, empty for defaults.
pub fn pipeline_json(text: &str, i0: &str, s: &str) -> Result<String, String> {
    let g = one_graph(text)?;
    let cfg = InstanceConfig {
        i0: parse_set(i0)?,
        s: parse_set(s)?,
        capture_k: Some(0),
    };
    let report = run_instance(&g, &cfg).map_err(|e| e.to_string())?;
    Ok(json_string(&report))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    analyze_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn curves(eta: f64, points: usize) -> Result<String, JsValue> {
    curves_json(eta, points).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn pipeline(text: &str, i0: &str, s: &str) -> Result<String, JsValue> {
    pipeline_json(text, i0, s).map_err(|e| JsValue::from_str(&e))
}
