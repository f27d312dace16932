//! Browser bindings: Rees generation table, gluing-ideal staircase and cone
//! restriction, each returned as a JSON string.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ncsurf::cli::parse_family;
use ncsurf::conecalc::{restrict_cone, restrict_cone_via_relation, ConeElement, ConeSection};
use ncsurf::logres;
use ncsurf::monideal::format_monomial_set;

pub fn rees_json(family: &str, max_degree: i64) -> Result<Value, String> {
    let f = parse_family(family).map_err(|e| e.to_string())?;
    let r = f.rees_report(max_degree).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "m": row.m,
                "ideal": row.ideal.to_string(),
                "lower": row.subalgebra.to_string(),
                "new": format_monomial_set(f.vars(), &row.new_generators),
            })
        })
        .collect();
    Ok(json!({ "family": f.to_string(), "witness": r.witness, "rows": rows }))
}

pub fn gluing_json(m: u32) -> Result<Value, String> {
    if m == 0 {
        return Err("m must be at least 1".into());
    }
    let ideal = logres::gluing_ideal(m).map_err(|e| e.to_string())?;
    let gens: Vec<[i64; 2]> = ideal
        .generators()
        .iter()
        .map(|g| [g.0[0], g.0[1]])
        .collect();
    Ok(json!({ "m": m, "ideal": ideal.to_string(), "generators": gens }))
}

pub fn cone_json(m: u32, coeff: &str) -> Result<Value, String> {
    let c = ConeElement::parse(coeff).map_err(|e| e.to_string())?;
    let s = ConeSection::new(m, c);
    let chart = restrict_cone(&s).map_err(|e| e.to_string())?;
    let relation = restrict_cone_via_relation(&s)
        .map(|r| r.to_string())
        .unwrap_or_else(|e| format!("n/a ({e})"));
    Ok(json!({
        "coeff": s.coeff.to_string(),
        "weight": chart.weight,
        "chart": chart.to_string(),
        "relation": relation,
        "pole": chart.pole_order,
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = reesTable)]
pub fn rees_table(family: &str, max_degree: i32) -> Result<String, JsError> {
    to_js(rees_json(family, max_degree as i64))
}

#[wasm_bindgen(js_name = gluingIdeal)]
pub fn gluing_ideal(m: u32) -> Result<String, JsError> {
    to_js(gluing_json(m))
}

#[wasm_bindgen(js_name = coneRestrict)]
pub fn cone_restrict(m: u32, coeff: &str) -> Result<String, JsError> {
    to_js(cone_json(m, coeff))
}
