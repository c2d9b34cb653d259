//! Browser bindings. Every export takes plain strings and returns a JSON
//! string; the `*_json` functions are the same entry points for native use.
//!
//! Pictures are drawn in the plane spanned by the simple roots, with the
//! symmetrized form as the metric, so only finite types of rank 1 or 2 are
//! accepted.

use std::collections::HashMap;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use crystal_reflect::verify::{self, parse_csv};
use crystal_reflect::{CartanData, HighestWeightCrystal, Weight, Word};

const MAX_NODES: usize = 2000;

fn planar(preset: &str) -> Result<CartanData, String> {
    let c = CartanData::preset(preset).map_err(|e| e.to_string())?;
    if c.rank() > 2 || !c.is_finite_type() {
        return Err(format!("{preset}: only finite types of rank 1 or 2 can be drawn"));
    }
    Ok(c)
}

fn crystal<'a>(c: &'a CartanData, lambda_csv: &str) -> Result<HighestWeightCrystal<'a>, String> {
    let lambda = parse_csv(lambda_csv).map_err(|e| e.to_string())?;
    HighestWeightCrystal::new(c, Weight::dominant(lambda)).map_err(|e| e.to_string())
}

/// Plane coordinates of a weight.
fn project(c: &CartanData, w: &Weight) -> [f64; 2] {
    let a = |i: usize, j: usize| c.entry(i, j) as f64;
    let dom: Vec<f64> = w.dominant.iter().map(|&x| x as f64).collect();
    // simple-root coordinates: A^{-1} dominant + root
    let mut coords: Vec<f64> = if c.rank() == 1 {
        vec![dom[0] / a(0, 0)]
    } else {
        let det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        vec![
            (a(1, 1) * dom[0] - a(0, 1) * dom[1]) / det,
            (a(0, 0) * dom[1] - a(1, 0) * dom[0]) / det,
        ]
    };
    for (x, r) in coords.iter_mut().zip(&w.root.0) {
        *x += *r as f64;
    }
    let d = c.symmetrizer();
    let g = |i: usize, j: usize| (d[i] * c.entry(i, j)) as f64;
    let v1 = [g(0, 0).sqrt(), 0.0];
    if c.rank() == 1 {
        return [coords[0] * v1[0], 0.0];
    }
    let v2x = g(0, 1) / v1[0];
    let v2 = [v2x, (g(1, 1) - v2x * v2x).sqrt()];
    [coords[0] * v1[0] + coords[1] * v2[0], coords[1] * v2[1]]
}

fn weight_json(c: &CartanData, w: &Weight) -> Value {
    json!({ "dominant": w.dominant, "root": w.root.0, "xy": project(c, w) })
}

/// Vertex chains of `b (x) t_lambda` along every longest reduced word.
pub fn mv_polygon_json(preset: &str, lambda_csv: &str, b_word_csv: &str) -> Result<String, String> {
    let c = planar(preset)?;
    let hw = crystal(&c, lambda_csv)?;
    let b_word = parse_csv(b_word_csv).map_err(|e| e.to_string())?;
    let b = hw.binf().from_one_based(&b_word).map_err(|e| e.to_string())?;
    let top = c.positive_root_count().expect("finite type");
    let words: Vec<Word> = c.reduced_words(top).into_iter().filter(|w| w.len() == top).collect();
    let mut chains = Vec::new();
    for w in &words {
        let trace = hw.run_recursion(&b, w).map_err(|e| e.to_string())?;
        let vertices = hw.vertices(&trace).map_err(|m| format!("vertex mismatch at step {}", m.k))?;
        let lusztig = hw.lusztig_params(&trace).map_err(|_| "inconsistent parameters".to_string())?;
        chains.push(json!({
            "word": w.to_one_based(),
            "vertices": vertices.iter().map(|v| weight_json(&c, v)).collect::<Vec<_>>(),
            "lusztig": lusztig,
            "reflection_identity": trace.verify_eq1(),
        }));
    }
    Ok(json!({ "b": b.lowering_word().iter().map(|i| i + 1).collect::<Vec<_>>(), "chains": chains }).to_string())
}

/// Nodes and colored `f` arrows of a complete `B(lambda)`.
pub fn crystal_graph_json(preset: &str, lambda_csv: &str) -> Result<String, String> {
    let c = planar(preset)?;
    let hw = crystal(&c, lambda_csv)?;
    let en = hw.enumerate(usize::MAX);
    if en.len() > MAX_NODES {
        return Err(format!("{} elements, more than {MAX_NODES}", en.len()));
    }
    let index: HashMap<_, _> = en.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let nodes: Vec<Value> = en
        .iter()
        .map(|x| {
            let word: Vec<usize> = x.b().lowering_word().iter().map(|i| i + 1).collect();
            json!({ "word": word, "weight": weight_json(&c, &hw.weight(x)) })
        })
        .collect();
    let mut edges = Vec::new();
    for (k, x) in en.iter().enumerate() {
        for i in 0..c.rank() {
            if let Some(y) = hw.f(i, x) {
                edges.push(json!({ "from": k, "to": index[&y], "color": i + 1 }));
            }
        }
    }
    Ok(json!({ "nodes": nodes, "edges": edges }).to_string())
}

/// The recursion trace, as printed by `crystal-reflect trace`.
pub fn trace_json(preset: &str, lambda_csv: &str, b_word_csv: &str, word_csv: &str) -> Result<String, String> {
    let c = CartanData::preset(preset).map_err(|e| e.to_string())?;
    let parse = |s: &str| parse_csv(s).map_err(|e| e.to_string());
    let value = verify::trace_json(&c, &parse(lambda_csv)?, &parse(b_word_csv)?, &parse(word_csv)?, false)
        .map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&value).expect("serializable"))
}

#[wasm_bindgen]
pub fn mv_polygon(preset: &str, lambda: &str, b_word: &str) -> Result<String, JsValue> {
    mv_polygon_json(preset, lambda, b_word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn crystal_graph(preset: &str, lambda: &str) -> Result<String, JsValue> {
    crystal_graph_json(preset, lambda).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn trace(preset: &str, lambda: &str, b_word: &str, word: &str) -> Result<String, JsValue> {
    trace_json(preset, lambda, b_word, word).map_err(|e| JsValue::from_str(&e))
}
