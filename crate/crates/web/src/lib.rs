//! Browser bindings. Every entry point returns a JSON string: either a
//! diagram document or `{"error": "<name>: <message>"}`.

use obstructia::homotopy::{Level, ObstructionReport};
use obstructia::opengraph::{laxator_obstructions, pi1_laxator, OpenGraph};
use obstructia::setcat::{pi0_function, pi1_function, FiniteFunction};
use obstructia::states::StateContext;
use obstructia::Error;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest universe drawn element by element.
pub const DRAW_UNIVERSE_CAP: usize = 8;

fn diagram(r: &ObstructionReport) -> Value {
    let drawn = r.materialize(DRAW_UNIVERSE_CAP).ok().map(|p| {
        let q = p.poset();
        let levels = q.levels();
        let nodes: Vec<Value> = (0..q.len())
            .map(|a| json!({ "name": q.name(a), "level": levels[a], "basepoint": a == p.basepoint() }))
            .collect();
        json!({ "nodes": nodes, "covers": q.hasse() })
    });
    json!({
        "summary": r.summary(),
        "context": r.context,
        "basepoint": r.basepoint_name(),
        "minimal": r.minimal,
        "elements": r.element_count(),
        "diagram": drawn,
    })
}

fn level(n: u8) -> Result<Level, Error> {
    match n {
        0 => Ok(Level::Zero),
        1 => Ok(Level::One),
        _ => Err(obstructia::ParseError::new(1, format!("no level {n}")).into()),
    }
}

fn finish(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": format!("{}: {e}", e.name()) }).to_string(),
    }
}

/// Obstructions to surjectivity (level 0) or injectivity (level 1).
#[wasm_bindgen]
pub fn set_obstructions(fn_text: &str, level_n: u8) -> String {
    finish((|| {
        let f = FiniteFunction::parse(fn_text)?;
        let r = match level(level_n)? {
            Level::Zero => pi0_function(&f),
            Level::One => pi1_function(&f),
        };
        Ok(diagram(&r))
    })())
}

/// Obstructions to composing two open graphs' reachability relations.
#[wasm_bindgen]
pub fn opengraph_obstructions(g_text: &str, h_text: &str, level_n: u8) -> String {
    finish((|| {
        let (g, h) = (OpenGraph::parse(g_text)?, OpenGraph::parse(h_text)?);
        let r = match level(level_n)? {
            Level::Zero => laxator_obstructions(&g, &h)?,
            Level::One => pi1_laxator(&g, &h)?,
        };
        Ok(diagram(&r))
    })())
}

/// Non-separable states of a tensor of two GF(2) spaces.
#[wasm_bindgen]
pub fn gf2_obstructions(dim_a: usize, dim_b: usize, level_n: u8) -> String {
    finish((|| {
        let ctx = StateContext::gf2(dim_a, dim_b)?;
        Ok(diagram(&ctx.obstructions(level(level_n)?)))
    })())
}
