//! Growing a map one edge at a time while carrying a cycle group along.
//!
//! A new edge joins two points on the boundary of one internal face, either
//! on two different edges (H-insertion) or twice on the same edge. If both
//! target edges lie on one cycle of the carried group, subdividing them
//! lengthens that cycle by two and the new edge becomes an off-edge, so the
//! group stays a valid cycle group of the grown map.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ccg_engine::{fixed_point_with_limit, DEFAULT_CLOSURE_LIMIT};
use crate::cycle::{ccg_from_on_set, face_walk, order_face_edges, Ccg};
use crate::document::MapDocument;
use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId, VertexId};
use crate::labelling::{closure_labellings, EdgeLabelling};
use crate::map::{CubicMap, NextIds};

/// Failed random draws tolerated before checking that some insertion is
/// possible at all.
const DRAWS_BEFORE_SCAN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionEvent {
    pub face: FaceId,
    pub targets: [EdgeId; 2],
    pub new_vertices: [VertexId; 2],
    pub new_edge: EdgeId,
    /// Retired edge to its replacement segments in boundary order.
    pub split_edges: BTreeMap<EdgeId, Vec<EdgeId>>,
    pub new_face: FaceId,
}

impl InsertionEvent {
    pub fn is_same_edge(&self) -> bool {
        self.targets[0] == self.targets[1]
    }
}

/// Draws a face uniformly, then two of its edges uniformly with
/// replacement, in that order.
pub fn choose_insertion<R: Rng + ?Sized>(map: &CubicMap, rng: &mut R) -> Result<(FaceId, EdgeId, EdgeId)> {
    let faces = map.face_ids();
    if faces.is_empty() {
        return Err(Error::NoInternalFace);
    }
    let face = faces[rng.gen_range(0..faces.len())];
    let edges = order_face_edges(map, face)?;
    let e1 = edges[rng.gen_range(0..edges.len())];
    let e2 = edges[rng.gen_range(0..edges.len())];
    Ok((face, e1, e2))
}

struct Builder {
    endpoints: BTreeMap<EdgeId, [VertexId; 2]>,
    faces: BTreeMap<FaceId, BTreeSet<EdgeId>>,
    next: NextIds,
}

impl Builder {
    fn vertex(&mut self) -> VertexId {
        self.next.vertex += 1;
        VertexId(self.next.vertex - 1)
    }

    fn edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        let id = EdgeId(self.next.edge);
        self.next.edge += 1;
        self.endpoints.insert(id, [a, b]);
        id
    }

    fn face(&mut self) -> FaceId {
        self.next.face += 1;
        FaceId(self.next.face - 1)
    }

    /// Replaces `old` by `segments` on every face except `skip`.
    fn replace_on_faces(&mut self, old: EdgeId, segments: &[EdgeId], skip: FaceId) {
        for (id, edges) in self.faces.iter_mut() {
            if *id != skip && edges.remove(&old) {
                edges.extend(segments);
            }
        }
    }

    fn finish(self, vertex_ids: Vec<VertexId>) -> Result<CubicMap> {
        let edge_ids: Vec<EdgeId> = self.endpoints.keys().copied().collect();
        let face_ids: Vec<FaceId> = self.faces.keys().copied().collect();
        let col: BTreeMap<EdgeId, usize> = edge_ids.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let row: BTreeMap<VertexId, usize> = vertex_ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut vertex_edge = vec![vec![false; edge_ids.len()]; vertex_ids.len()];
        for (e, ends) in &self.endpoints {
            for v in ends {
                vertex_edge[row[v]][col[e]] = true;
            }
        }
        let face_edge = self
            .faces
            .values()
            .map(|edges| {
                let mut bits = vec![false; edge_ids.len()];
                for e in edges {
                    bits[col[e]] = true;
                }
                bits
            })
            .collect();
        CubicMap::with_ids(vertex_ids, edge_ids, face_ids, vertex_edge, face_edge, Some(self.next))
    }
}

/// Inserts a new edge into `face` between `e1` and `e2` (possibly equal).
///
/// Split edges are retired; every segment, both new vertices, the new edge
/// and the new face get fresh ids. With distinct targets the new face is
/// the side running forward along the canonical boundary order from the
/// earlier target to the later one.
pub fn insert_edge(map: &CubicMap, face: FaceId, e1: EdgeId, e2: EdgeId) -> Result<(CubicMap, InsertionEvent)> {
    let topo = map.topology()?;
    let walk = face_walk(map, face)?;
    let position = |e: EdgeId| -> Result<usize> {
        let idx = map.edge_index(e)?;
        walk.edges
            .iter()
            .position(|x| *x == idx)
            .ok_or(Error::EdgeNotOnFace { edge: e, face })
    };
    let (p1, p2) = (position(e1)?, position(e2)?);
    let len = walk.edges.len();
    let vid = |i: usize| map.vertex_ids()[walk.vertices[i % len]];
    let eid = |i: usize| map.edge_ids()[walk.edges[i % len]];

    let mut b = Builder {
        endpoints: map
            .edge_ids()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let [x, y] = topo.endpoints[i];
                (*e, [map.vertex_ids()[x], map.vertex_ids()[y]])
            })
            .collect(),
        faces: map
            .face_ids()
            .iter()
            .map(|f| Ok((*f, map.face_edge_set(*f)?.into_iter().collect())))
            .collect::<Result<_>>()?,
        next: map.next_ids(),
    };
    let v1 = b.vertex();
    let v2 = b.vertex();
    let mut split_edges = BTreeMap::new();
    let new_edge;
    let new_face;

    if p1 == p2 {
        let old = e1;
        b.endpoints.remove(&old);
        let s1 = b.edge(vid(p1), v1);
        let s2 = b.edge(v1, v2);
        let s3 = b.edge(v2, vid(p1 + 1));
        new_edge = b.edge(v1, v2);
        b.replace_on_faces(old, &[s1, s2, s3], face);
        let host = b.faces.get_mut(&face).expect("face exists");
        host.remove(&old);
        host.extend([s1, new_edge, s3]);
        new_face = b.face();
        b.faces.insert(new_face, BTreeSet::from([s2, new_edge]));
        split_edges.insert(old, vec![s1, s2, s3]);
    } else {
        let mut segments = BTreeMap::new();
        for (p, v) in [(p1, v1), (p2, v2)] {
            let old = eid(p);
            b.endpoints.remove(&old);
            let before = b.edge(vid(p), v);
            let after = b.edge(v, vid(p + 1));
            segments.insert(p, (before, after));
            b.replace_on_faces(old, &[before, after], face);
            split_edges.insert(old, vec![before, after]);
        }
        new_edge = b.edge(v1, v2);
        let (i, j) = (p1.min(p2), p1.max(p2));
        let (si_before, si_after) = segments[&i];
        let (sj_before, sj_after) = segments[&j];
        let mut inner: BTreeSet<EdgeId> = (i + 1..j).map(eid).collect();
        inner.extend([si_after, sj_before, new_edge]);
        let mut outer: BTreeSet<EdgeId> = (j + 1..i + len).map(eid).collect();
        outer.extend([sj_after, si_before, new_edge]);
        b.faces.insert(face, outer);
        new_face = b.face();
        b.faces.insert(new_face, inner);
    }

    let mut vertex_ids = map.vertex_ids().to_vec();
    vertex_ids.extend([v1, v2]);
    let grown = b.finish(vertex_ids)?;
    let event = InsertionEvent {
        face,
        targets: [e1, e2],
        new_vertices: [v1, v2],
        new_edge,
        split_edges,
        new_face,
    };
    Ok((grown, event))
}

/// First group (in the given order) with one cycle through both edges.
pub fn compatible_ccg(ccgs: &[Ccg], e1: EdgeId, e2: EdgeId) -> Option<&Ccg> {
    ccgs.iter()
        .find(|c| c.cycle_containing(e1).is_some_and(|cy| cy.contains(e2)))
}

/// Carries `ccg` over an insertion: the host cycle runs through every
/// replacement segment, and the new edge stays off.
pub fn rewrite_ccg(new_map: &CubicMap, ccg: &Ccg, event: &InsertionEvent) -> Result<Ccg> {
    let [t1, t2] = event.targets;
    let host = ccg
        .cycle_containing(t1)
        .filter(|c| c.contains(t2))
        .ok_or_else(|| Error::IncompatibleCcg(format!("no cycle through both {t1} and {t2}")))?;
    let mut on = FixedBitSet::with_capacity(new_map.edge_count());
    for e in ccg.edges() {
        if !event.split_edges.contains_key(&e) {
            on.insert(new_map.edge_index(e)?);
        }
    }
    for segments in event.split_edges.values() {
        for e in segments {
            on.insert(new_map.edge_index(*e)?);
        }
    }
    let rewritten = ccg_from_on_set(new_map, &on)?;
    let first_segment = event.split_edges[&t1][0];
    let grown = rewritten.cycle_containing(first_segment).expect("segment is on a cycle");
    if grown.len() != host.len() + 2 {
        return Err(Error::IncompatibleCcg("host cycle did not grow by two".into()));
    }
    Ok(rewritten)
}

/// One configuration in a growth run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthStep {
    pub step: usize,
    pub map: CubicMap,
    /// The group the closure was computed from.
    pub seed: Ccg,
    pub ccgs: Vec<Ccg>,
    pub labellings: Vec<EdgeLabelling>,
    /// `hamiltonian[i]` tells whether `ccgs[i]` is a Hamiltonian cycle.
    pub hamiltonian: Vec<bool>,
    /// The insertion that produced this map; `None` for the starting map.
    pub event: Option<InsertionEvent>,
}

/// JSON-lines record of a [`GrowthStep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: usize,
    pub map: MapDocument,
    pub ccgs: Vec<Ccg>,
    pub labellings: Vec<EdgeLabelling>,
    pub hamiltonian: Vec<bool>,
    pub event: Option<InsertionEvent>,
}

impl GrowthStep {
    fn enumerate(step: usize, map: CubicMap, seed: Ccg, event: Option<InsertionEvent>, limit: usize) -> Result<Self> {
        let ccgs = fixed_point_with_limit(&map, &seed, limit)?;
        let labellings = closure_labellings(&map, &ccgs)?;
        let hamiltonian = ccgs.iter().map(|c| c.is_hamiltonian(&map)).collect();
        Ok(GrowthStep { step, map, seed, ccgs, labellings, hamiltonian, event })
    }

    pub fn hamiltonian_count(&self) -> usize {
        self.hamiltonian.iter().filter(|h| **h).count()
    }

    pub fn record(&self) -> StepRecord {
        StepRecord {
            step: self.step,
            map: MapDocument::from_map(&self.map, Some(&self.seed)),
            ccgs: self.ccgs.clone(),
            labellings: self.labellings.clone(),
            hamiltonian: self.hamiltonian.clone(),
            event: self.event.clone(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.record()).expect("records always serialize")
    }
}

/// Step-by-step growth driver, reproducible from its seed.
pub struct Grower {
    rng: ChaCha8Rng,
    current: GrowthStep,
    closure_limit: usize,
}

impl Grower {
    pub fn new(map: CubicMap, seed: Ccg, rng_seed: u64) -> Result<Self> {
        Self::with_closure_limit(map, seed, rng_seed, DEFAULT_CLOSURE_LIMIT)
    }

    pub fn with_closure_limit(map: CubicMap, seed: Ccg, rng_seed: u64, closure_limit: usize) -> Result<Self> {
        let current = GrowthStep::enumerate(0, map, seed, None, closure_limit)?;
        Ok(Grower { rng: ChaCha8Rng::seed_from_u64(rng_seed), current, closure_limit })
    }

    pub fn current(&self) -> &GrowthStep {
        &self.current
    }

    pub fn into_current(self) -> GrowthStep {
        self.current
    }

    /// Draws insertions until one has a compatible group, applies it and
    /// enumerates the grown map. Fails with
    /// [`Error::NoCompatibleInsertion`] only if no face and edge pair of
    /// the current map admits one; the current step is left untouched.
    pub fn advance(&mut self) -> Result<&GrowthStep> {
        let cur = &self.current;
        let mut failures = 0;
        let (face, e1, e2, host) = loop {
            let (face, e1, e2) = choose_insertion(&cur.map, &mut self.rng)?;
            if let Some(host) = compatible_ccg(&cur.ccgs, e1, e2) {
                break (face, e1, e2, host.clone());
            }
            failures += 1;
            if failures == DRAWS_BEFORE_SCAN && find_any_insertion(&cur.map, &cur.ccgs)?.is_none() {
                return Err(Error::NoCompatibleInsertion(cur.ccgs.len()));
            }
        };
        let (map, event) = insert_edge(&cur.map, face, e1, e2)?;
        let seed = rewrite_ccg(&map, &host, &event)?;
        self.current = GrowthStep::enumerate(cur.step + 1, map, seed, Some(event), self.closure_limit)?;
        Ok(&self.current)
    }
}

/// Exhaustive scan for some face and edge pair with a compatible group.
pub fn find_any_insertion(map: &CubicMap, ccgs: &[Ccg]) -> Result<Option<(FaceId, EdgeId, EdgeId)>> {
    for &face in map.face_ids() {
        let edges = order_face_edges(map, face)?;
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i..] {
                if compatible_ccg(ccgs, a, b).is_some() {
                    return Ok(Some((face, a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// Every step of a run, starting with the unmodified input map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTrace {
    pub steps: Vec<GrowthStep>,
}

impl GrowthTrace {
    pub fn to_json_lines(&self) -> String {
        self.steps.iter().map(|s| s.to_json_line() + "\n").collect()
    }
}

/// Runs `iterations` insertions from `map` and `seed`.
pub fn grow(map: &CubicMap, seed: &Ccg, iterations: usize, rng_seed: u64) -> Result<GrowthTrace> {
    let mut grower = Grower::new(map.clone(), seed.clone(), rng_seed)?;
    let mut steps = vec![grower.current().clone()];
    for _ in 0..iterations {
        steps.push(grower.advance()?.clone());
    }
    Ok(GrowthTrace { steps })
}
