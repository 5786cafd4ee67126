//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string; errors become thrown JS strings.

use serde::Serialize;
use vtt_core::counting::{count_table, phi_table};
use vtt_core::enumeration::{equivalence_classes, EnumerationOptions, SetMask};
use vtt_core::graphs::triangle_profile;
use wasm_bindgen::prelude::*;

/// Enumeration in the browser is capped lower than on the command line.
pub const DEMO_BUDGET_BITS: u32 = 12;

#[derive(Serialize)]
struct CountRow {
    p: u64,
    count: String,
    /// `(m, k, c)` rows of the recursion table.
    phi: Vec<(u64, String, u64)>,
}

pub fn counts_json(p_min: u32, p_max: u32) -> Result<String, String> {
    let rows = count_table(p_min as u64, p_max as u64).map_err(|e| e.to_string())?;
    let out: Vec<CountRow> = rows
        .into_iter()
        .map(|(p, c)| {
            let t = phi_table(p).expect("prime from table");
            CountRow {
                p,
                count: c.to_string(),
                phi: t
                    .entries
                    .iter()
                    .map(|e| (e.m, e.k.to_string(), e.c))
                    .collect(),
            }
        })
        .collect();
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ClassRow {
    bits: u64,
    residues: Vec<u64>,
    size: u64,
}

pub fn classes_json(p: u32) -> Result<String, String> {
    let opts = EnumerationOptions {
        budget_bits: DEMO_BUDGET_BITS,
        with_members: false,
        // the global pool runs on the calling thread when wasm has no threads
        workers: 0,
    };
    let report = equivalence_classes(p as u64, &opts).map_err(|e| e.to_string())?;
    let rows: Vec<ClassRow> = report
        .classes
        .iter()
        .map(|c| ClassRow {
            bits: c.representative.bits(),
            residues: c.representative.residues(),
            size: c.size,
        })
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Drawing {
    p: u64,
    residues: Vec<u64>,
    /// Vertex positions on the unit circle, vertex 0 at the top.
    points: Vec<(f64, f64)>,
    /// `(u, v, 3-cycles through u -> v)`.
    arcs: Vec<(usize, usize, usize)>,
    max_triangles: usize,
}

pub fn tournament_json(p: u32, bits: u32) -> Result<String, String> {
    let s = SetMask::new(p as u64, bits as u64).map_err(|e| e.to_string())?;
    if p > 61 {
        return Err(format!("p = {p} is too large to draw"));
    }
    let g = s.tournament();
    let profile = triangle_profile(&g).map_err(|e| e.to_string())?;
    let n = g.order();
    let points = (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            (t.sin(), -t.cos())
        })
        .collect();
    let d = Drawing {
        p: p as u64,
        residues: s.residues(),
        points,
        arcs: profile.arcs,
        max_triangles: profile.max,
    };
    serde_json::to_string(&d).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn counts(p_min: u32, p_max: u32) -> Result<String, JsValue> {
    counts_json(p_min, p_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classes(p: u32) -> Result<String, JsValue> {
    classes_json(p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tournament(p: u32, bits: u32) -> Result<String, JsValue> {
    tournament_json(p, bits).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_include_phi_rows() {
        let v: serde_json::Value = serde_json::from_str(&counts_json(11, 13).unwrap()).unwrap();
        assert_eq!(v[0]["p"], 11);
        assert_eq!(v[0]["count"], "4");
        assert_eq!(v[0]["phi"], serde_json::json!([[1, "3", 10], [5, "1", 2]]));
        assert_eq!(v[1]["count"], "6");
        assert!(counts_json(5, 3).is_err());
    }

    #[test]
    fn classes_for_eleven() {
        let v: serde_json::Value = serde_json::from_str(&classes_json(11).unwrap()).unwrap();
        let sizes: Vec<u64> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["size"].as_u64().unwrap())
            .collect();
        assert_eq!(sizes.len(), 4);
        assert_eq!(sizes.iter().sum::<u64>(), 32);
        assert!(classes_json(29).is_err());
        assert!(classes_json(15).is_err());
    }

    #[test]
    fn drawing() {
        let v: serde_json::Value =
            serde_json::from_str(&tournament_json(7, 0b011).unwrap()).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 7);
        assert_eq!(v["arcs"].as_array().unwrap().len(), 21);
        assert_eq!(v["residues"], serde_json::json!([1, 2, 4]));
        assert!(tournament_json(7, 8).is_err());
    }
}
