//! Browser bindings: classify catalog metrics or a custom Gram matrix on a catalog group, and
//! integrate geodesics for plotting. Every function returns a JSON string.

use lorhom3_core::catalog::{self, CatalogEntry};
use lorhom3_core::classify;
use lorhom3_core::geodesics::{self, GeodesicConfig};
use lorhom3_core::linalg::QMatrix;
use lorhom3_core::metric;
use lorhom3_core::rational::{self, Rational};
use lorhom3_core::InvariantMetric;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn entry(name: &str) -> Result<CatalogEntry, JsValue> {
    catalog::catalog_get(name).map_err(err)
}

fn connection(e: &CatalogEntry, m: &InvariantMetric) -> Result<Value, JsValue> {
    let gamma = metric::levi_civita(&e.algebra, m).map_err(err)?;
    let names = e.algebra.names();
    let mut rows = Vec::new();
    for i in 0..names.len() {
        for j in 0..names.len() {
            let v: Vec<String> = gamma.basis(i, j).iter().map(rational::format).collect();
            rows.push(json!({ "along": names[i], "of": names[j], "value": v }));
        }
    }
    Ok(Value::Array(rows))
}

fn analysis(e: &CatalogEntry, m: &InvariantMetric) -> Result<String, JsValue> {
    let report = classify::analyze_left_invariant(&e.algebra, m).map_err(err)?;
    let out = json!({
        "group": e.name,
        "basis": e.algebra.names(),
        "gram": m.gram(),
        "classification": report,
        "connection": connection(e, m)?,
    });
    Ok(out.to_string())
}

/// Names, anchors and descriptions of the catalog entries.
#[wasm_bindgen]
pub fn catalog_entries() -> String {
    let list: Vec<Value> = catalog::catalog()
        .iter()
        .map(|e| json!({ "name": e.name, "anchor": e.anchor, "description": e.description, "basis": e.algebra.names() }))
        .collect();
    Value::Array(list).to_string()
}

#[wasm_bindgen]
pub fn analyze_entry(name: &str) -> Result<String, JsValue> {
    let e = entry(name)?;
    analysis(&e, &e.metric)
}

/// Classifies the Gram matrix `gram` (rows separated by `;`, entries by `,`, each an integer or
/// `p/q`) on the Lie algebra of the catalog entry `group`.
#[wasm_bindgen]
pub fn analyze_custom(group: &str, gram: &str) -> Result<String, JsValue> {
    let e = entry(group)?;
    let rows: Vec<Vec<Rational>> = gram
        .split(';')
        .map(|r| r.split(',').map(|q| rational::parse(q.trim()).map_err(err)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let n = e.algebra.dim();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(err(format!("expected a {n}×{n} matrix")));
    }
    let m = InvariantMetric::new(QMatrix::from_rows(rows)).map_err(err)?;
    analysis(&e, &m)
}

/// Body-velocity geodesic of a catalog metric; samples are every accepted step.
#[wasm_bindgen]
pub fn geodesic(name: &str, v0: Vec<f64>, t_max: f64, rtol: f64) -> Result<String, JsValue> {
    let e = entry(name)?;
    let cfg = GeodesicConfig { t_max, rtol, ..GeodesicConfig::default() };
    let tr = geodesics::integrate_geodesic(&e.algebra, &e.metric, &v0, &cfg).map_err(err)?;
    Ok(json!({ "basis": e.algebra.names(), "trajectory": tr }).to_string())
}
