//! Browser bindings. Each export takes JSON text and returns JSON text; the
//! plain functions underneath are what the native tests exercise.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use tilecheck::belts::{all_belts, classify_fedorov, project_along_edge, venkov_mcmullen};
use tilecheck::document::parse_document;
use tilecheck::exact::{format_rat, int, Rat, VecN};
use tilecheck::harness::{contradiction_check, feasible_wheel_params, longest_belt_edge};
use tilecheck::planar::{verify_k_fold_2d, wheel_table};
use tilecheck::tiling::SampleSpec;
use wasm_bindgen::prelude::*;

/// Translates drawn per lattice axis on either side of the origin.
const DRAW_RANGE: i64 = 3;

fn approx<const N: usize>(v: &VecN<N>) -> Vec<f64> {
    v.coords().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

/// Classification, belts and drawing data for a zonotope or raw polytope
/// document.
pub fn solid_report(doc: &str) -> Result<Value, String> {
    let doc = parse_document(doc).map_err(|e| e.to_string())?;
    let p = doc.to_polytope().map_err(|e| e.to_string())?;
    let (count, sizes) = p.facet_signature();
    let label = match classify_fedorov(&p) {
        Ok(t) => t.label().to_string(),
        Err(e) => e.to_string(),
    };
    let belts: Vec<Value> = all_belts(&p)
        .map(|bs| {
            bs.iter()
                .map(|b| json!({ "direction": approx(&b.direction), "length": b.len() }))
                .collect()
        })
        .unwrap_or_default();
    let shadow = longest_belt_edge(&p)
        .and_then(|e| project_along_edge(&p, e))
        .map(|s| s.vertices().iter().map(approx).collect::<Vec<_>>())
        .ok();
    Ok(json!({
        "label": label,
        "facet_count": count,
        "facet_sizes": sizes,
        "volume": p.volume().map(|v| format_rat(&v)).ok(),
        "belt_criterion": serde_json::to_value(venkov_mcmullen(&p)).map_err(|e| e.to_string())?,
        "belts": belts,
        "vertices": p.vertices().iter().map(approx).collect::<Vec<_>>(),
        "edges": p.edges(),
        "shadow": shadow,
    }))
}

/// Wheel table, sampled multiplicity and drawable translates for a planar
/// tiling document.
pub fn planar_report(doc: &str) -> Result<Value, String> {
    let doc = parse_document(doc).map_err(|e| e.to_string())?;
    let (p, x, k) = doc.to_tiling2d().map_err(|e| e.to_string())?;
    let table = wheel_table(&p, &x, k).map_err(|e| e.to_string())?;
    let check = verify_k_fold_2d(&p, &x, k, &SampleSpec::default()).map_err(|e| e.to_string())?;
    let mut translates = Vec::new();
    for b in x.base_translates() {
        match x.period() {
            Some(l) => {
                for i in -DRAW_RANGE..=DRAW_RANGE {
                    for j in -DRAW_RANGE..=DRAW_RANGE {
                        let c: [Rat; 2] = [int(i), int(j)];
                        translates.push(approx(&(b + &l.point(&c))));
                    }
                }
            }
            None => translates.push(approx(b)),
        }
    }
    Ok(json!({
        "polygon": p.vertices().iter().map(approx).collect::<Vec<_>>(),
        "translates": translates,
        "wheels": serde_json::to_value(&table).map_err(|e| e.to_string())?,
        "multiplicity": serde_json::to_value(&check).map_err(|e| e.to_string())?,
        "passed": table.all_consistent && check.passed(),
    }))
}

/// Feasible `(κ, ℓ, ϖ, φ)` for half-length `m` and multiplicity `k`, with
/// the `φ ≥ 1` contradiction check where it applies.
pub fn params_report(m: u32, k: u32) -> Result<Value, String> {
    let t = feasible_wheel_params(m.into(), k.into()).map_err(|e| e.to_string())?;
    let c = if m >= 4 {
        Some(contradiction_check(m.into(), k.into()).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(json!({
        "params": serde_json::to_value(&t).map_err(|e| e.to_string())?,
        "contradiction": serde_json::to_value(&c).map_err(|e| e.to_string())?,
    }))
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = analyzeSolid)]
pub fn analyze_solid(doc: &str) -> Result<String, JsError> {
    export(solid_report(doc))
}

#[wasm_bindgen(js_name = analyzePlanar)]
pub fn analyze_planar(doc: &str) -> Result<String, JsError> {
    export(planar_report(doc))
}

#[wasm_bindgen(js_name = wheelParams)]
pub fn wheel_params(m: u32, k: u32) -> Result<String, JsError> {
    export(params_report(m, k))
}
