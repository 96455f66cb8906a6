//! wasm-bindgen exports for the static page in `www/`.
//!
//! Each export wraps a plain function returning `Result<String, String>` so
//! the logic can be tested natively.

use coxstar::emit::to_json;
use coxstar::facemonoid::{self, table};
use coxstar::{demazure, CoxeterGroup, SubsetJ};
use wasm_bindgen::prelude::*;

/// Largest rank the page will tabulate.
pub const PAGE_RANK_BOUND: usize = 8;

fn text<E: ToString>(e: E) -> String {
    e.to_string()
}

/// The full ⋆ table as JSON (see `coxstar::emit`).
pub fn table_json(kind: &str) -> Result<String, String> {
    let group = CoxeterGroup::parse(kind).map_err(text)?;
    let bound = PAGE_RANK_BOUND.min(table::DEFAULT_RANK_BOUND);
    let t = facemonoid::full_table(&group, bound).map_err(text)?;
    Ok(to_json(&t))
}

/// Canonical words of `x * y` and `x |> y`, separated by a newline.
pub fn products(kind: &str, x: &str, y: &str) -> Result<String, String> {
    let group = CoxeterGroup::parse(kind).map_err(text)?;
    let x = group.parse_word(x).map_err(text)?;
    let y = group.parse_word(y).map_err(text)?;
    let star = demazure::star(&x, &y).map_err(text)?;
    let down = demazure::down(&x, &y).map_err(text)?;
    Ok(format!("{}\n{}", star.canonical_word(), down.canonical_word()))
}

/// Canonical word of the longest element of `W_J` and its length.
pub fn longest(kind: &str, subset: &str) -> Result<String, String> {
    let group = CoxeterGroup::parse(kind).map_err(text)?;
    let j = SubsetJ::parse(subset, group.rank()).map_err(text)?;
    let w = demazure::longest(&group, j).map_err(text)?;
    Ok(format!("{}\n{}", w.canonical_word(), w.len()))
}

#[wasm_bindgen(js_name = starTable)]
pub fn star_table_js(kind: &str) -> Result<String, JsError> {
    table_json(kind).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = products)]
pub fn products_js(kind: &str, x: &str, y: &str) -> Result<String, JsError> {
    products(kind, x, y).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = longest)]
pub fn longest_js(kind: &str, subset: &str) -> Result<String, JsError> {
    longest(kind, subset).map_err(|e| JsError::new(&e))
}
