//! Browser bindings: Satake diagram SVG, a-hyperbolic rank, and the
//! parabolic proper-action test. Every export takes and returns strings.

use lieprop_core::proper::{white_subset_criterion, Witness};
use lieprop_core::realforms::{b_plus_basis, catalog, lookup, RealForm};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Canonical names of all catalog forms, as a JSON array.
pub fn forms() -> String {
    let names: Vec<&str> = catalog().iter().map(RealForm::name).collect();
    serde_json::to_string(&names).expect("strings serialize")
}

/// Node positions: chain on one row, the last node hanging below its
/// neighbour for D and E types.
fn positions(f: &RealForm) -> Vec<(usize, usize)> {
    let c = f.lie_type().cartan();
    let n = c.rank();
    if n >= 3 && c.entry(n - 1, n - 2) == 0 {
        let attach = (0..n - 1).find(|&j| c.entry(n - 1, j) != 0).unwrap_or(0);
        let mut p: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, 0)).collect();
        p.push((attach, 1));
        p
    } else {
        (0..n).map(|i| (i, 0)).collect()
    }
}

pub fn diagram_svg(name: &str) -> Result<String, String> {
    let f = lookup(name).map_err(|e| e.to_string())?;
    let s = &f.satake;
    let c = f.lie_type().cartan();
    let pos = positions(&f);
    let xy = |i: usize| (30 + 50 * pos[i].0, 40 + 50 * pos[i].1);
    let width = 60 + 50 * pos.iter().map(|p| p.0).max().unwrap_or(0);
    let height = if pos.iter().any(|p| p.1 > 0) { 130 } else { 80 };
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for i in 0..s.rank() {
        for j in i + 1..s.rank() {
            let m = c.entry(i, j) * c.entry(j, i);
            if m == 0 {
                continue;
            }
            let ((x1, y1), (x2, y2)) = (xy(i), xy(j));
            // one line per bond, offset vertically
            for k in 0..m {
                let dy = 4 * k - 2 * (m - 1);
                svg.push_str(&format!(
                    "<line x1=\"{x1}\" y1=\"{}\" x2=\"{x2}\" y2=\"{}\" stroke=\"#333\"/>",
                    y1 as i64 + dy,
                    y2 as i64 + dy
                ));
            }
        }
    }
    for (i, j) in s.arrow_pairs() {
        let ((x1, y1), (x2, _)) = (xy(i), xy(j));
        let mid = (x1 + x2) / 2;
        svg.push_str(&format!(
            "<path d=\"M{x1} {} Q{mid} {} {x2} {}\" fill=\"none\" stroke=\"#c33\" stroke-dasharray=\"4 3\"/>",
            y1 - 12,
            y1 as i64 - 40,
            y1 - 12
        ));
    }
    for i in 0..s.rank() {
        let (x, y) = xy(i);
        let fill = if s.is_white(i) { "#fff" } else { "#111" };
        svg.push_str(&format!(
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"8\" fill=\"{fill}\" stroke=\"#111\" stroke-width=\"1.5\"/>\
             <text x=\"{x}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
            y + 24,
            i + 1
        ));
    }
    svg.push_str("</svg>");
    Ok(svg)
}

pub fn ahyp(name: &str) -> Result<String, String> {
    let f = lookup(name).map_err(|e| e.to_string())?;
    let cone = b_plus_basis(&f.satake);
    let gens: Vec<String> = cone.generators.iter().map(ToString::to_string).collect();
    Ok(json!({
        "form": f.name(),
        "real_rank": f.real_rank(),
        "restricted_type": f.restricted.restricted_type.to_string(),
        "a_hyperbolic_rank": cone.dimension,
        "generators": gens,
    })
    .to_string())
}

/// `roots` lists restricted simple roots as `l2,l3` (or bare `2,3`).
pub fn proper_white(name: &str, roots: &str) -> Result<String, String> {
    let f = lookup(name).map_err(|e| e.to_string())?;
    let mut idx = Vec::new();
    for tok in roots.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let k: usize = tok
            .trim_start_matches(['l', 'L'])
            .parse()
            .map_err(|_| format!("bad restricted root {tok:?}"))?;
        if k == 0 || k > f.real_rank() {
            return Err(format!("{tok}: expected l1..l{}", f.real_rank()));
        }
        idx.push(k - 1);
    }
    let v = white_subset_criterion(&f, &idx).map_err(|e| e.to_string())?;
    let witness = match &v.witness {
        Some(Witness::OrthogonalRoot { root, label }) => format!("{label} = {root}"),
        _ => String::new(),
    };
    Ok(json!({
        "form": f.name(),
        "admits": v.admits,
        "criterion": v.criterion,
        "witness": witness,
        "note": v.note,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn list_forms() -> String {
    forms()
}

#[wasm_bindgen]
pub fn render_satake_svg(name: &str) -> Result<String, JsValue> {
    js(diagram_svg(name))
}

#[wasm_bindgen]
pub fn ahyp_json(name: &str) -> Result<String, JsValue> {
    js(ahyp(name))
}

#[wasm_bindgen]
pub fn proper_white_json(name: &str, roots: &str) -> Result<String, JsValue> {
    js(proper_white(name, roots))
}
