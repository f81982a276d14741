//! Arbitrary planar maps as rotation systems, and blowing them up into
//! cubic maps.
//!
//! A rotation system lists, for every vertex, its incident edges in cyclic
//! order. Faces are traced dart by dart: arriving at `w` along `e`, leave
//! along the edge after `e` in the rotation of `w`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::four_colour::{four_colour_from_labelling, FaceColouring, FaceRef};
use crate::ids::{EdgeId, FaceId, VertexId};
use crate::labelling::{labelling_from_ccg, EdgeLabelling};
use crate::map::CubicMap;
use crate::oracle::{oracle_even_two_factors, OracleCap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationMap {
    pub rotations: BTreeMap<VertexId, Vec<EdgeId>>,
    pub endpoints: BTreeMap<EdgeId, [VertexId; 2]>,
}

/// An edge traversed away from `tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: VertexId,
}

/// Faces of a rotation map. The longest face (first traced on ties) is
/// taken as the outer face; the rest are numbered from 1 in tracing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedFaces {
    pub faces: Vec<(FaceRef, Vec<Dart>)>,
}

impl TracedFaces {
    /// The faces on the two sides of every edge.
    pub fn sides(&self) -> BTreeMap<EdgeId, Vec<FaceRef>> {
        let mut sides: BTreeMap<EdgeId, Vec<FaceRef>> = BTreeMap::new();
        for (face, darts) in &self.faces {
            for d in darts {
                sides.entry(d.edge).or_default().push(*face);
            }
        }
        sides
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidRotation(msg.into())
}

impl RotationMap {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rotation maps always serialize")
    }

    fn position(&self, vertex: VertexId, edge: EdgeId) -> usize {
        self.rotations[&vertex]
            .iter()
            .position(|e| *e == edge)
            .expect("validated rotation")
    }

    fn other_end(&self, edge: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.endpoints[&edge];
        if a == v {
            b
        } else {
            a
        }
    }

    fn check_incidence(&self) -> Result<()> {
        let mut count: BTreeMap<EdgeId, usize> = BTreeMap::new();
        for (v, rot) in &self.rotations {
            if rot.len() < 3 {
                return Err(invalid(format!("vertex {v} has degree {}", rot.len())));
            }
            for e in rot {
                *count.entry(*e).or_default() += 1;
                let ends = self
                    .endpoints
                    .get(e)
                    .ok_or_else(|| invalid(format!("edge {e} has no endpoints")))?;
                if !ends.contains(v) {
                    return Err(invalid(format!("edge {e} listed at {v} but not incident to it")));
                }
            }
            if rot.iter().collect::<BTreeSet<_>>().len() != rot.len() {
                return Err(invalid(format!("vertex {v} lists an edge twice")));
            }
        }
        for (e, [a, b]) in &self.endpoints {
            if a == b {
                return Err(invalid(format!("edge {e} is a loop")));
            }
            let n = count.get(e).copied().unwrap_or(0);
            if n != 2 {
                return Err(invalid(format!("edge {e} appears {n} times")));
            }
        }
        Ok(())
    }

    fn trace(&self) -> Vec<Vec<Dart>> {
        let mut used = BTreeSet::new();
        let mut faces = Vec::new();
        for (v, rot) in &self.rotations {
            for e in rot {
                let start = Dart { edge: *e, tail: *v };
                if used.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                while used.insert(d) {
                    face.push(d);
                    let head = self.other_end(d.edge, d.tail);
                    let rot = &self.rotations[&head];
                    let next = rot[(self.position(head, d.edge) + 1) % rot.len()];
                    d = Dart { edge: next, tail: head };
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks incidence, planarity (Euler characteristic 2, connected) and
    /// bridgelessness, then returns the traced faces.
    pub fn faces(&self) -> Result<TracedFaces> {
        self.check_incidence()?;
        if !self.is_connected() {
            return Err(invalid("map is disconnected"));
        }
        let traced = self.trace();
        let (v, e, f) = (self.rotations.len(), self.endpoints.len(), traced.len());
        if v + f != e + 2 {
            return Err(invalid(format!("rotation is not planar: {v} - {e} + {f} != 2")));
        }
        let outer = traced
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
            .map(|(i, _)| i)
            .expect("at least one face");
        let mut next = 1;
        let faces: Vec<(FaceRef, Vec<Dart>)> = traced
            .into_iter()
            .enumerate()
            .map(|(i, darts)| {
                let r = if i == outer {
                    FaceRef::Outer
                } else {
                    next += 1;
                    FaceRef::Internal(FaceId(next - 1))
                };
                (r, darts)
            })
            .collect();
        let out = TracedFaces { faces };
        if let Some((e, _)) = out.sides().into_iter().find(|(_, s)| s[0] == s[1]) {
            return Err(invalid(format!("edge {e} is a bridge")));
        }
        Ok(out)
    }

    fn is_connected(&self) -> bool {
        let Some(first) = self.rotations.keys().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([*first]);
        let mut stack = vec![*first];
        while let Some(v) = stack.pop() {
            for e in &self.rotations[&v] {
                let w = self.other_end(*e, v);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.rotations.len()
    }

    pub fn validate(&self) -> Result<()> {
        self.faces().map(|_| ())
    }
}

/// Where each face of the original map went in the cubic map, plus the
/// small face each blown-up vertex became.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceMapping {
    pub faces: BTreeMap<FaceRef, FaceRef>,
    pub vertex_faces: BTreeMap<VertexId, FaceRef>,
}

impl FaceMapping {
    /// Every face of `map` to itself, no vertex faces.
    pub fn identity(map: &CubicMap) -> Self {
        let mut faces: BTreeMap<FaceRef, FaceRef> = map
            .face_ids()
            .iter()
            .map(|f| (FaceRef::Internal(*f), FaceRef::Internal(*f)))
            .collect();
        faces.insert(FaceRef::Outer, FaceRef::Outer);
        FaceMapping { faces, vertex_faces: BTreeMap::new() }
    }
}

#[derive(Debug, Clone)]
pub struct BlowUp {
    pub map: CubicMap,
    pub mapping: FaceMapping,
    pub original_faces: TracedFaces,
}

/// Replaces every degree-`d` vertex by a `d`-cycle of cubic vertices in
/// rotation order. Original edges keep their ids and attach to the ring
/// vertex at their rotation position; ring edges and vertex faces get
/// fresh ids.
pub fn blow_up(rmap: &RotationMap) -> Result<BlowUp> {
    let traced = rmap.faces()?;
    let mut corner: BTreeMap<(VertexId, usize), VertexId> = BTreeMap::new();
    for (v, rot) in &rmap.rotations {
        for i in 0..rot.len() {
            let id = VertexId(corner.len() as u32 + 1);
            corner.insert((*v, i), id);
        }
    }
    let mut endpoints: BTreeMap<EdgeId, [VertexId; 2]> = BTreeMap::new();
    for (e, [a, b]) in &rmap.endpoints {
        endpoints.insert(
            *e,
            [corner[&(*a, rmap.position(*a, *e))], corner[&(*b, rmap.position(*b, *e))]],
        );
    }
    let mut next_edge = rmap.endpoints.keys().last().map_or(1, |e| e.0 + 1);
    let mut ring: BTreeMap<(VertexId, usize), EdgeId> = BTreeMap::new();
    for (v, rot) in &rmap.rotations {
        let d = rot.len();
        for i in 0..d {
            let id = EdgeId(next_edge);
            next_edge += 1;
            ring.insert((*v, i), id);
            endpoints.insert(id, [corner[&(*v, i)], corner[&(*v, (i + 1) % d)]]);
        }
    }

    let mut face_sets: BTreeMap<FaceRef, BTreeSet<EdgeId>> = BTreeMap::new();
    let mut mapping = FaceMapping { faces: BTreeMap::new(), vertex_faces: BTreeMap::new() };
    for (face, darts) in &traced.faces {
        let mut set = BTreeSet::new();
        for d in darts {
            let head = rmap.other_end(d.edge, d.tail);
            set.insert(d.edge);
            set.insert(ring[&(head, rmap.position(head, d.edge))]);
        }
        face_sets.insert(*face, set);
        mapping.faces.insert(*face, *face);
    }
    for (n, (v, rot)) in (traced.faces.len() as u32..).zip(&rmap.rotations) {
        let id = FaceRef::Internal(FaceId(n));
        face_sets.insert(id, (0..rot.len()).map(|i| ring[&(*v, i)]).collect());
        mapping.vertex_faces.insert(*v, id);
    }

    let vertex_ids: Vec<VertexId> = (1..=corner.len() as u32).map(VertexId).collect();
    let edge_ids: Vec<EdgeId> = endpoints.keys().copied().collect();
    let col: BTreeMap<EdgeId, usize> = edge_ids.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let mut vertex_edge = vec![vec![false; edge_ids.len()]; vertex_ids.len()];
    for (e, ends) in &endpoints {
        for v in ends {
            vertex_edge[v.0 as usize - 1][col[e]] = true;
        }
    }
    let mut face_ids = Vec::new();
    let mut face_edge = Vec::new();
    for (face, set) in &face_sets {
        if let FaceRef::Internal(id) = face {
            face_ids.push(*id);
            let mut bits = vec![false; edge_ids.len()];
            for e in set {
                bits[col[e]] = true;
            }
            face_edge.push(bits);
        }
    }
    let map = CubicMap::with_ids(vertex_ids, edge_ids, face_ids, vertex_edge, face_edge, None)?;
    Ok(BlowUp { map, mapping, original_faces: traced })
}

/// Reads the original faces' colours off the blown-up colouring; vertex
/// faces are dropped.
pub fn pull_back_colouring(fc: &FaceColouring, mapping: &FaceMapping) -> FaceColouring {
    FaceColouring(
        mapping
            .faces
            .iter()
            .filter_map(|(orig, cubic)| fc.0.get(cubic).map(|c| (*orig, *c)))
            .collect(),
    )
}

/// True iff every face of the rotation map is coloured and the two faces
/// of every edge differ.
pub fn validate_rotation_colouring(rmap: &RotationMap, fc: &FaceColouring) -> Result<bool> {
    let traced = rmap.faces()?;
    Ok(traced.sides().values().all(|s| match (fc.0.get(&s[0]), fc.0.get(&s[1])) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    }))
}

/// Output of [`colour_rotation_map`].
#[derive(Debug, Clone)]
pub struct PlanarColouring {
    pub blow_up: BlowUp,
    pub labelling: EdgeLabelling,
    /// Colouring of the blown-up cubic map, vertex faces included.
    pub cubic: FaceColouring,
    /// Colouring of the original map's faces.
    pub original: FaceColouring,
}

/// Blow up, label from the first cycle group the oracle finds, colour the
/// cubic map and pull the colours back to the original faces.
pub fn colour_rotation_map(rmap: &RotationMap, cap: OracleCap) -> Result<PlanarColouring> {
    let blow_up = blow_up(rmap)?;
    let seed = oracle_even_two_factors(&blow_up.map, cap)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidLabelling("blown-up map has no even 2-factor".into()))?;
    let labelling = labelling_from_ccg(&blow_up.map, &seed)?;
    let cubic = four_colour_from_labelling(&blow_up.map, &labelling)?;
    let original = pull_back_colouring(&cubic, &blow_up.mapping);
    Ok(PlanarColouring { blow_up, labelling, cubic, original })
}
