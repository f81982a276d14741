//! JSON map document: the two incidence matrices plus the seed cycle lists.
//!
//! ```json
//! {"vertex_edge": [[1,1,1],[1,1,1]], "face_edge": [[1,1,0],[0,1,1]], "cycles": [[1,2]]}
//! ```
//!
//! Row `i` / column `j` refer to the `i`-th vertex id / `j`-th edge id in
//! sorted order. Ids default to `1..=n`; maps whose ids are not contiguous
//! (every grown map) carry explicit `vertex_ids`, `edge_ids`, `face_ids` and
//! `next_ids`.

use serde::{Deserialize, Serialize};

use crate::cycle::Ccg;
use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId, VertexId};
use crate::map::{CubicMap, NextIds};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub vertex_edge: Vec<Vec<u8>>,
    pub face_edge: Vec<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<EdgeId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_ids: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_ids: Option<Vec<EdgeId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_ids: Option<Vec<FaceId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub next_ids: Option<NextIds>,
}

fn to_bits(name: &str, rows: &[Vec<u8>]) -> Result<Vec<Vec<bool>>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(Error::MalformedMatrix(format!(
                        "{name} row {i} holds {other}; entries must be 0 or 1"
                    ))),
                })
                .collect()
        })
        .collect()
}

fn from_bits(rows: &[Vec<bool>]) -> Vec<Vec<u8>> {
    rows.iter().map(|r| r.iter().map(|b| *b as u8).collect()).collect()
}

fn contiguous<T: Copy + PartialEq>(ids: &[T], make: impl Fn(u32) -> T) -> bool {
    ids.iter().enumerate().all(|(i, id)| *id == make(i as u32 + 1))
}

fn ids_or_default<T>(ids: &Option<Vec<T>>, n: usize, make: impl Fn(u32) -> T) -> Vec<T>
where
    T: Clone,
{
    ids.clone().unwrap_or_else(|| (1..=n as u32).map(make).collect())
}

impl MapDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("map documents always serialize")
    }

    /// Document for `map`, with `seed` as the cycle lists if given. Ids and
    /// counters are written only when they differ from the defaults.
    pub fn from_map(map: &CubicMap, seed: Option<&Ccg>) -> Self {
        let vertex_ids = (!contiguous(map.vertex_ids(), VertexId)).then(|| map.vertex_ids().to_vec());
        let edge_ids = (!contiguous(map.edge_ids(), EdgeId)).then(|| map.edge_ids().to_vec());
        let face_ids = (!contiguous(map.face_ids(), FaceId)).then(|| map.face_ids().to_vec());
        let next = map.next_ids();
        let default_next = NextIds {
            vertex: map.vertex_ids().last().map_or(1, |v| v.0 + 1),
            edge: map.edge_ids().last().map_or(1, |e| e.0 + 1),
            face: map.face_ids().last().map_or(1, |f| f.0 + 1),
        };
        MapDocument {
            vertex_edge: from_bits(map.vertex_edge()),
            face_edge: from_bits(map.face_edge()),
            cycles: seed.map(|c| c.cycles().iter().map(|cy| cy.edges().to_vec()).collect()),
            vertex_ids,
            edge_ids,
            face_ids,
            next_ids: (next != default_next).then_some(next),
        }
    }

    pub fn to_map(&self) -> Result<CubicMap> {
        let vertex_edge = to_bits("vertex_edge", &self.vertex_edge)?;
        let face_edge = to_bits("face_edge", &self.face_edge)?;
        let n_edges = vertex_edge.first().map_or(0, |r| r.len());
        CubicMap::with_ids(
            ids_or_default(&self.vertex_ids, vertex_edge.len(), VertexId),
            ids_or_default(&self.edge_ids, n_edges, EdgeId),
            ids_or_default(&self.face_ids, face_edge.len(), FaceId),
            vertex_edge,
            face_edge,
            self.next_ids,
        )
    }

    /// The seed cycle group, ordered and validated against `map`.
    pub fn seed_ccg(&self, map: &CubicMap) -> Result<Option<Ccg>> {
        self.cycles
            .as_ref()
            .map(|lists| Ccg::from_unordered(map, lists))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn default_layout_has_only_three_keys() {
        let doc = MapDocument::from_map(&fixtures::cube(), Some(&fixtures::cube_seed()));
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        let keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["cycles", "face_edge", "vertex_edge"]);
    }

    #[test]
    fn rejects_non_binary_entries() {
        let err = MapDocument::from_json(r#"{"vertex_edge": [[2,1,1],[1,1,1]], "face_edge": []}"#)
            .unwrap()
            .to_map()
            .unwrap_err();
        assert!(matches!(err, Error::MalformedMatrix(_)));
    }

    #[test]
    fn round_trips_grown_map() {
        let map = fixtures::cube();
        let (grown, _) = crate::growth::insert_edge(&map, FaceId(5), EdgeId(3), EdgeId(4)).unwrap();
        let doc = MapDocument::from_map(&grown, None);
        assert!(doc.edge_ids.is_some());
        let back = MapDocument::from_json(&doc.to_json()).unwrap().to_map().unwrap();
        assert_eq!(back, grown);
    }
}
