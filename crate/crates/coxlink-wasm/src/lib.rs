//! wasm-bindgen surface for the browser demo: parse a diagram document,
//! analyze it, render it, and enumerate its ordering orbits. All entry
//! points speak strings (document text in, JSON or SVG out) so the page
//! needs no glue types.
//!
//! The `*_impl` functions hold the logic and are callable on any target;
//! the exported wrappers only translate errors into `JsValue` (which can
//! exist only on wasm32).

use wasm_bindgen::prelude::*;

use coxlink::chord::coxeter_order;
use coxlink::doc::DiagramDocument;
use coxlink::report::{analyze, coxeter_orbits};
use coxlink::spectra::DEFAULT_TOL;
use coxlink::svg::render_system;

fn stringify(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn analyze_impl(text: &str) -> Result<String, String> {
    let doc = DiagramDocument::parse(text).map_err(stringify)?;
    let system = doc.to_system().map_err(stringify)?;
    let mut report = analyze(&system, DEFAULT_TOL).map_err(stringify)?;
    report.name = doc.name;
    serde_json::to_string_pretty(&report).map_err(stringify)
}

pub fn render_impl(text: &str) -> Result<String, String> {
    let doc = DiagramDocument::parse(text).map_err(stringify)?;
    let system = doc.to_system().map_err(stringify)?;
    Ok(render_system(&system, doc.name.as_deref()))
}

pub fn orderings_impl(text: &str) -> Result<String, String> {
    let doc = DiagramDocument::parse(text).map_err(stringify)?;
    let diagram = doc.to_system().map_err(stringify)?.diagram().clone();
    let orbits = coxeter_orbits(&diagram).map_err(stringify)?;
    let v: Vec<_> = orbits
        .iter()
        .map(|o| {
            serde_json::json!({
                "members": o.members,
                "orientations": o.system.orientations(),
                "char_poly": o.char_poly.coeffs_i64(),
                "char_poly_display": o.char_poly.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&v).map_err(stringify)
}

pub fn coxeter_order_impl(text: &str) -> Result<String, String> {
    let doc = DiagramDocument::parse(text).map_err(stringify)?;
    let system = doc.to_system().map_err(stringify)?;
    let ordered = coxeter_order(system.diagram());
    Ok(DiagramDocument::from_system(&ordered, doc.name).emit())
}

/// Full analysis of a diagram document, as pretty-printed JSON.
#[wasm_bindgen]
pub fn analyze_document(text: &str) -> Result<String, JsValue> {
    analyze_impl(text).map_err(|e| JsValue::from_str(&e))
}

/// SVG rendering of a diagram document.
#[wasm_bindgen]
pub fn render_document(text: &str) -> Result<String, JsValue> {
    render_impl(text).map_err(|e| JsValue::from_str(&e))
}

/// Coxeter-type ordering orbits of the underlying diagram, as JSON.
#[wasm_bindgen]
pub fn orderings_document(text: &str) -> Result<String, JsValue> {
    orderings_impl(text).map_err(|e| JsValue::from_str(&e))
}

/// A Coxeter-type ordering of the document's diagram, written back out
/// as a document (used by the page's "reorder" button).
#[wasm_bindgen]
pub fn coxeter_order_document(text: &str) -> Result<String, JsValue> {
    coxeter_order_impl(text).map_err(|e| JsValue::from_str(&e))
}
