//! DOT and JSON renderings of a map.
//!
//! DOT edges are written one per edge id, so parallel edges survive. Each
//! carries `key`, `label`, and optionally `class` (its labelling class,
//! 0 to 2) and `cycle` (index of its cycle in the group, `-1` if off).

use std::fmt::Write;

use crate::cycle::Ccg;
use crate::document::MapDocument;
use crate::error::Result;
use crate::labelling::EdgeLabelling;
use crate::map::CubicMap;

pub fn to_dot(map: &CubicMap, ccg: Option<&Ccg>, labelling: Option<&EdgeLabelling>) -> Result<String> {
    if let Some(ccg) = ccg {
        ccg.validate(map)?;
    }
    let mut out = String::from("graph cubic_map {\n");
    for v in map.vertex_ids() {
        writeln!(out, "  {v};").unwrap();
    }
    for &e in map.edge_ids() {
        let (a, b) = map.endpoints(e)?;
        write!(out, "  {a} -- {b} [key={0}, label=\"{e}\"", e.0).unwrap();
        if let Some(class) = labelling.and_then(|l| l.class_of(e)) {
            write!(out, ", class={class}").unwrap();
        }
        if let Some(ccg) = ccg {
            let cycle = ccg.cycles().iter().position(|c| c.edges().contains(&e));
            write!(out, ", cycle={}", cycle.map_or(-1, |i| i as i64)).unwrap();
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    Ok(out)
}

/// The canonical map document, with `seed` as its cycle lists if given.
pub fn to_json(map: &CubicMap, seed: Option<&Ccg>) -> String {
    MapDocument::from_map(map, seed).to_json()
}
