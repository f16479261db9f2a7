//! Browser bindings. Points come in as a flat `[x0, y0, x1, y1, ...]`
//! integer array, results go out as JSON strings.

use linecover::adversary::{build_gk, embed_segments, segment_trace_blocks};
use linecover::cover::{exact_cover_points_by_lines, greedy_cover_points_by_lines, greedy_cover_segments_by_points, ExactOptions};
use linecover::geom::Point;
use linecover::instance::PointSetInstance;
use linecover::tour::{brute_minlink_spanning_tour, MINLINK_CAP};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const DEMO_NODE_CAP: u64 = 2_000_000;

fn points(xy: &[i32]) -> Result<Vec<Point>, String> {
    if xy.len() % 2 != 0 {
        return Err("odd coordinate count".into());
    }
    let pts: Vec<Point> = xy.chunks(2).map(|c| Point::from_ints(c[0] as i64, c[1] as i64)).collect();
    PointSetInstance::new(pts.clone()).validate().map_err(|e| e.to_string())?;
    Ok(pts)
}

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Greedy and exact line covers of the clicked points.
#[wasm_bindgen]
pub fn cover_points(xy: &[i32]) -> String {
    wrap(points(xy).map(|p| {
        let greedy = greedy_cover_points_by_lines(&p);
        let exact = match exact_cover_points_by_lines(&p, &ExactOptions::for_points()) {
            Ok(s) => json!(s),
            Err(e) => json!({ "error": e.to_string() }),
        };
        json!({ "greedy": greedy, "exact": exact })
    }))
}

/// Fewest-link closed polygonal tour through every point.
#[wasm_bindgen]
pub fn min_link_tour(xy: &[i32]) -> String {
    wrap(points(xy).and_then(|p| {
        let r = brute_minlink_spanning_tour(&p, MINLINK_CAP.min(9), DEMO_NODE_CAP).map_err(|e| e.to_string())?;
        Ok(json!(r))
    }))
}

/// The greedy worst case for stabbing segments: the drawing, the points greedy
/// picks (with the block each lands in) and the size of the planted cover.
#[wasm_bindgen]
pub fn greedy_adversary(k: usize) -> String {
    wrap((|| {
        if !(2..=24).contains(&k) {
            return Err("k must be in 2..=24".to_string());
        }
        let g = build_gk(k).map_err(|e| e.to_string())?;
        let seg = embed_segments(&g);
        let greedy = greedy_cover_segments_by_points(&seg.segments);
        let blocks = segment_trace_blocks(&g, &greedy.chosen);
        Ok(json!({ "k": k, "segments": seg.segments, "greedy": greedy.chosen, "blocks": blocks, "witness": k }))
    })())
}
