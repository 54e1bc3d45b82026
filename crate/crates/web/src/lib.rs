//! Browser bindings. Each export takes plain numbers and strings and returns a JSON string; the
//! `*_json` functions hold the logic so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cyclocode::circulant::mask_matrix;
use cyclocode::constructions::self_duality_criterion;
use cyclocode::{
    Budget, CodeReport, ConstructionKind, ConstructionRequest, CyclotomicContext, DistanceMethod,
    Error, Field, MaskVector, ResidueClass,
};

/// Largest `n = pq` drawn as a heatmap.
pub const MAX_HEATMAP_N: u64 = 400;

fn request(
    p: u64,
    q: u64,
    field: u32,
    kind: &str,
    alpha: &str,
    m: &str,
) -> Result<(ConstructionRequest, CyclotomicContext, Field), Error> {
    let ctx = CyclotomicContext::new(p, q)?;
    let f = Field::new(field)?;
    let kind: ConstructionKind = kind.parse()?;
    let alpha = match kind {
        ConstructionKind::Pure => None,
        ConstructionKind::Bordered => Some(f.parse(alpha.trim())?),
    };
    let req = ConstructionRequest {
        p,
        q,
        field_order: field,
        kind,
        mask: MaskVector::parse(&f, m)?,
        alpha,
    };
    Ok((req, ctx, f))
}

/// The residue partition of `Z_pq` with a label per residue.
pub fn partition_json(p: u64, q: u64) -> Result<String, String> {
    let ctx = CyclotomicContext::new(p, q).map_err(|e| e.to_string())?;
    let labels: Vec<String> = ctx.labels().iter().map(|c| c.to_string()).collect();
    let mut classes = serde_json::Map::new();
    for class in ResidueClass::ALL {
        classes.insert(class.to_string(), json!(ctx.members(class)));
    }
    Ok(json!({
        "p": p, "q": q, "n": ctx.n(), "g": ctx.g(), "x": ctx.x(), "e": ctx.e(),
        "labels": labels,
        "classes": classes,
        "minus_one": ctx.minus_one_class().to_string(),
    })
    .to_string())
}

/// The mask matrix as row-major element codes, with the coefficient criterion and the direct
/// self-duality verdict.
pub fn mask_json(p: u64, q: u64, field: u32, kind: &str, alpha: &str, m: &str) -> Result<String, String> {
    let (req, ctx, f) = request(p, q, field, kind, alpha, m).map_err(|e| e.to_string())?;
    let report = self_duality_criterion(&ctx, &f, req.kind, req.alpha, &req.mask)
        .map_err(|e| e.to_string())?;
    let code = req.build_with(&ctx, &f).map_err(|e| e.to_string())?;
    let cells = if ctx.n() <= MAX_HEATMAP_N {
        let mat = mask_matrix(&ctx, &f, &req.mask);
        let flat: Vec<u16> = (0..mat.rows()).flat_map(|i| mat.row(i).to_vec()).collect();
        json!(flat)
    } else {
        Value::Null
    };
    let tokens: Vec<String> = f.elements().map(|v| f.token(v)).collect();
    Ok(json!({
        "descriptor": req.descriptor(),
        "n": ctx.n(),
        "tokens": tokens,
        "cells": cells,
        "d": report.coefficients.format(&f),
        "conditions": report.conditions,
        "verdict": report.verdict,
        "closed_form_agrees": report.closed_form_agrees,
        "self_dual": code.is_self_dual(),
    })
    .to_string())
}

/// `[N, k, d]` with the self-dual bound, computed under an evaluation budget.
pub fn parameters_json(
    p: u64,
    q: u64,
    field: u32,
    kind: &str,
    alpha: &str,
    m: &str,
    max_evaluations: u64,
) -> Result<String, String> {
    let (req, ctx, f) = request(p, q, field, kind, alpha, m).map_err(|e| e.to_string())?;
    let code = req.build_with(&ctx, &f).map_err(|e| e.to_string())?;
    let budget = Budget {
        max_evaluations,
        ..Budget::default()
    };
    let value = match code.min_distance(DistanceMethod::Auto, budget) {
        Ok(d) => {
            let report = CodeReport::new(&req, &code, Some(d), None);
            let mut v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            v["parameters"] = json!(report.parameters());
            v["certificate"] = json!(d.certificate.iter().map(|&x| f.token(x)).collect::<Vec<_>>());
            v["complete"] = json!(true);
            v
        }
        Err(Error::BudgetExhausted { lower, upper, .. }) => {
            let report = CodeReport::new(&req, &code, None, None);
            let mut v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            v["parameters"] = json!(format!("[{}, {}, {lower}..{upper}]", report.length, report.k));
            v["complete"] = json!(false);
            v
        }
        Err(e) => return Err(e.to_string()),
    };
    Ok(value.to_string())
}

#[wasm_bindgen]
pub fn partition(p: u32, q: u32) -> Result<String, JsValue> {
    partition_json(p as u64, q as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn mask(p: u32, q: u32, field: u32, kind: &str, alpha: &str, m: &str) -> Result<String, JsValue> {
    mask_json(p as u64, q as u64, field, kind, alpha, m).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn parameters(
    p: u32,
    q: u32,
    field: u32,
    kind: &str,
    alpha: &str,
    m: &str,
    max_evaluations: f64,
) -> Result<String, JsValue> {
    let budget = if max_evaluations.is_finite() && max_evaluations > 0.0 {
        max_evaluations as u64
    } else {
        Budget::default().max_evaluations
    };
    parameters_json(p as u64, q as u64, field, kind, alpha, m, budget).map_err(|e| JsValue::from_str(&e))
}
