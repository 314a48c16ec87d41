//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page only has one shape to check.

use norphism_core::dp::{feasible, DesignProblem, FVector, RCovector};
use norphism_core::gen;
use norphism_core::matrix::BoolMatrix;
use norphism_core::metric::{astar_with_bounds, format_rational, propagated_goal_bounds};
use norphism_core::norphism::resource_limit_schema;
use norphism_core::poset::Preorder;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

const MAX_CHAIN: usize = 8;
const MAX_NODES: usize = 30;

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn rows(m: &BoolMatrix) -> Value {
    let (r, c) = (m.rows(), m.cols());
    Value::from((0..r).map(|i| (0..c).map(|j| u8::from(m.get(i, j))).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn chain(n: usize) -> Result<Preorder, String> {
    if (1..=MAX_CHAIN).contains(&n) {
        Ok(Preorder::chain(n))
    } else {
        Err(format!("chain length must be between 1 and {MAX_CHAIN}"))
    }
}

fn pairs(text: &str) -> Result<Vec<(usize, usize)>, String> {
    serde_json::from_str(text).map_err(|e| format!("pairs: {e}"))
}

pub fn compose_value(n: usize, m: usize, k: usize, d: &str, e: &str) -> Result<Value, String> {
    let (p, q, r) = (chain(n)?, chain(m)?, chain(k)?);
    let d = DesignProblem::autoclose(p.clone(), q, &pairs(d)?).map_err(|e| format!("d: {e}"))?;
    let e = DesignProblem::autoclose(d.cod().clone(), r.clone(), &pairs(e)?).map_err(|e| format!("e: {e}"))?;
    let de = d.compose(&e).map_err(|e| e.to_string())?;
    // feasibility of "at least i" through d;e with budget "at most j"
    let table: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let f = FVector::from_seed(&p, &[i]).unwrap();
                    let b = RCovector::from_seed(&r, &[j]).unwrap();
                    feasible(&f, &de, &b).unwrap()
                })
                .collect()
        })
        .collect();
    Ok(json!({ "d": rows(d.rel()), "e": rows(e.rel()), "composite": rows(de.rel()), "feasible": table }))
}

/// Composes two design problems on chains and tabulates feasibility.
///
/// `d` and `e` are JSON arrays of `[i, j]` pairs, closed to valid relations.
#[wasm_bindgen]
pub fn compose_chains(n: usize, m: usize, k: usize, d: &str, e: &str) -> String {
    respond(compose_value(n, m, k, d, e))
}

pub fn resource_limit_value(space: &str, pools: &str) -> Result<Value, String> {
    let p = gen::generator_preorders()
        .into_iter()
        .find(|(name, _)| name == space)
        .map(|(_, p)| p)
        .ok_or_else(|| format!("unknown space `{space}`"))?;
    let seeds: Vec<Vec<String>> = serde_json::from_str(pools).map_err(|e| format!("pools: {e}"))?;
    let pools = seeds
        .iter()
        .map(|s| RCovector::from_names(&p, s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let n = resource_limit_schema(&p, &pools).map_err(|e| e.to_string())?;
    let endos = norphism_core::dp::enumerate_design_problems(&p, &p).map_err(|e| e.to_string())?;
    let banned = endos.iter().filter(|m| n.bans(m).unwrap()).count();
    Ok(json!({
        "elements": p.elements(),
        "pools": pools.iter().map(|r| r.indices()).collect::<Vec<_>>(),
        "banned": rows(n.rel()),
        "bans_identity": n.bans(&DesignProblem::identity(&p)).unwrap(),
        "endomorphisms": endos.len(),
        "banned_endomorphisms": banned,
    }))
}

/// Resource-limit norphism on a named small poset; `pools` is a JSON array
/// of element-name lists, each taken as the generators of a down-set.
#[wasm_bindgen]
pub fn resource_limit(space: &str, pools: &str) -> String {
    respond(resource_limit_value(space, pools))
}

pub fn astar_value(seed: u64, nodes: usize, density: f64) -> Result<Value, String> {
    if !(2..=MAX_NODES).contains(&nodes) {
        return Err(format!("node count must be between 2 and {MAX_NODES}"));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err("density must lie in [0, 1]".into());
    }
    let mut rng = gen::rng(seed);
    let g = gen::random_digraph(&mut rng, nodes, density, 9);
    let (a, c) = (0, g.node_count() - 1);
    let base = astar_with_bounds(&g, a, c, &[]).map_err(|e| e.to_string())?;
    let bounds = propagated_goal_bounds(&g, a, c).map_err(|e| e.to_string())?;
    let guided = astar_with_bounds(&g, a, c, &bounds).map_err(|e| e.to_string())?;
    let mut h = vec![Value::Null; g.node_count()];
    for b in &bounds {
        h[b.from] = format_rational(&b.mu).into();
    }
    Ok(json!({
        "nodes": g.nodes(),
        "edges": g.edges().iter().map(|e| json!([e.src, e.dst, format_rational(&e.weight)])).collect::<Vec<_>>(),
        "from": a,
        "to": c,
        "distance": guided.distance.map(|d| format_rational(&d)),
        "heuristic": h,
        "guided_expansions": guided.expansions,
        "baseline_expansions": base.expansions,
    }))
}

/// Random weighted digraph searched from the first to the last node, with
/// and without bounds propagated along shortest-path prefixes.
#[wasm_bindgen]
pub fn astar_demo(seed: u64, nodes: usize, density: f64) -> String {
    respond(astar_value(seed, nodes, density))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_on_two_chains() {
        let v = compose_value(2, 2, 2, "[[0, 1]]", "[[1, 1]]").unwrap();
        assert_eq!(v["composite"], json!([[0, 1], [0, 0]]));
        assert_eq!(v["feasible"], json!([[false, true], [false, false]]));
    }

    #[test]
    fn bad_input_is_reported() {
        let out: Value = serde_json::from_str(&compose_chains(2, 2, 2, "[[0, 5]]", "[]")).unwrap();
        assert!(out["error"].as_str().unwrap().starts_with("d:"));
        let out: Value = serde_json::from_str(&compose_chains(0, 2, 2, "[]", "[]")).unwrap();
        assert!(out["error"].is_string());
        let out: Value = serde_json::from_str(&resource_limit("nope", "[]")).unwrap();
        assert!(out["error"].is_string());
    }

    #[test]
    fn resource_limit_keeps_identity() {
        let v = resource_limit_value("diamond", r#"[["l"], ["r"]]"#).unwrap();
        assert_eq!(v["bans_identity"], json!(false));
        assert!(v["banned_endomorphisms"].as_u64().unwrap() > 0);
    }

    #[test]
    fn astar_never_expands_more() {
        for seed in 0..20 {
            let v = astar_value(seed, 12, 0.3).unwrap();
            assert!(v["guided_expansions"].as_u64() <= v["baseline_expansions"].as_u64());
        }
    }
}
