//! Cycles, complete cycle groups, and the orderings built on them.
//!
//! Canonical cycle form: rotate so the smallest edge id comes first, then
//! orient so the second entry is the smaller of the first edge's two
//! neighbours on the cycle. Every cycle this crate hands out is canonical, so
//! equal edge sets compare equal.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId};
use crate::map::{CubicMap, Topology};

/// A simple closed walk, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<EdgeId>);

impl Cycle {
    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.0.contains(&edge)
    }

    /// Canonicalizes an edge sequence that is already in walk order
    /// (any rotation, either direction).
    pub fn from_walk(sequence: Vec<EdgeId>) -> Cycle {
        Cycle(canonicalize_sequence(sequence))
    }
}

fn canonicalize_sequence(mut seq: Vec<EdgeId>) -> Vec<EdgeId> {
    let Some(min_pos) = seq.iter().enumerate().min_by_key(|(_, e)| **e).map(|(i, _)| i) else {
        return seq;
    };
    seq.rotate_left(min_pos);
    let n = seq.len();
    if n > 2 && seq[n - 1] < seq[1] {
        seq[1..].reverse();
    }
    seq
}

/// A complete cycle group: vertex-disjoint even cycles covering every
/// vertex. Cycles are kept sorted by `(length, first edge id)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ccg(Vec<Cycle>);

impl Ccg {
    /// Canonical form of a list of walk-ordered cycles. No map checks.
    pub fn canonical<I>(cycles: I) -> Ccg
    where
        I: IntoIterator<Item = Vec<EdgeId>>,
    {
        Self::from_cycles(cycles.into_iter().map(Cycle::from_walk).collect())
    }

    pub(crate) fn from_cycles(mut cycles: Vec<Cycle>) -> Ccg {
        cycles.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
        Ccg(cycles)
    }

    /// Orders each unordered edge list on the map and validates the result.
    pub fn from_unordered(map: &CubicMap, lists: &[Vec<EdgeId>]) -> Result<Ccg> {
        let cycles = lists
            .iter()
            .map(|l| order_cycle_edges(map, l))
            .collect::<Result<Vec<_>>>()?;
        let ccg = Ccg::from_cycles(cycles);
        ccg.validate(map)?;
        Ok(ccg)
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.0
    }

    /// All edges on some cycle.
    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.0.iter().flat_map(|c| c.0.iter().copied()).collect()
    }

    pub fn cycle_containing(&self, edge: EdgeId) -> Option<&Cycle> {
        self.0.iter().find(|c| c.contains(edge))
    }

    pub fn is_hamiltonian(&self, map: &CubicMap) -> bool {
        self.0.len() == 1 && self.0[0].len() == map.vertex_count()
    }

    /// Checks the cycle-group invariants against `map`: every cycle is a
    /// real even cycle, cycles are vertex-disjoint and cover all vertices.
    pub fn validate(&self, map: &CubicMap) -> Result<()> {
        let topo = map.topology()?;
        let mut seen_vertex = vec![false; topo.vertex_count()];
        for cycle in &self.0 {
            let idx = edge_indices(map, cycle.edges())?;
            let walk = walk_set(topo, &idx).map_err(Error::InvalidCcg)?;
            if walk.edges.len() % 2 != 0 {
                return Err(Error::InvalidCcg(format!("odd cycle of length {}", walk.edges.len())));
            }
            if to_ids(map, &walk.edges) != cycle.0 {
                return Err(Error::InvalidCcg("cycle is not in canonical order".into()));
            }
            for v in walk.vertices {
                if std::mem::replace(&mut seen_vertex[v], true) {
                    return Err(Error::InvalidCcg(format!(
                        "vertex {} lies on two cycles",
                        map.vertex_ids()[v]
                    )));
                }
            }
        }
        if let Some(v) = seen_vertex.iter().position(|s| !s) {
            return Err(Error::InvalidCcg(format!(
                "vertex {} is not covered",
                map.vertex_ids()[v]
            )));
        }
        let mut sorted = self.0.clone();
        sorted.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
        if sorted != self.0 {
            return Err(Error::InvalidCcg("cycles are not in canonical order".into()));
        }
        Ok(())
    }
}

/// Closed walk in index space: `edges[i]` joins `vertices[i]` and
/// `vertices[i + 1]` (cyclically).
#[derive(Debug, Clone)]
pub(crate) struct Walk {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

pub(crate) fn edge_indices(map: &CubicMap, edges: &[EdgeId]) -> Result<Vec<usize>> {
    edges.iter().map(|e| map.edge_index(*e)).collect()
}

pub(crate) fn to_ids(map: &CubicMap, idx: &[usize]) -> Vec<EdgeId> {
    idx.iter().map(|i| map.edge_ids()[*i]).collect()
}

/// Walks the component of `start` inside `member`. Assumes every vertex
/// touched has exactly two member edges; the walk is canonical when `start`
/// is the minimum of its component.
fn walk_from(topo: &Topology, member: &FixedBitSet, start: usize) -> Walk {
    let other_member = |v: usize, not: usize| -> usize {
        topo.incident[v]
            .iter()
            .copied()
            .find(|e| *e != not && member.contains(*e))
            .expect("induced degree 2")
    };
    let [a, b] = topo.endpoints[start];
    let (na, nb) = (other_member(a, start), other_member(b, start));
    let (back, front) = if nb < na { (a, b) } else { (b, a) };
    let mut edges = vec![start];
    let mut vertices = vec![back, front];
    let (mut cur, mut v) = (start, front);
    loop {
        let next = other_member(v, cur);
        if next == start {
            break;
        }
        edges.push(next);
        v = topo.other_end(next, v);
        vertices.push(v);
        cur = next;
    }
    vertices.pop();
    Walk { edges, vertices }
}

fn induced_degrees(topo: &Topology, member: &FixedBitSet) -> Vec<usize> {
    let mut degree = vec![0usize; topo.vertex_count()];
    for e in member.ones() {
        for v in topo.endpoints[e] {
            degree[v] += 1;
        }
    }
    degree
}

/// Orders an edge set that must form exactly one cycle.
fn walk_set(topo: &Topology, idx: &[usize]) -> std::result::Result<Walk, String> {
    let mut member = FixedBitSet::with_capacity(topo.edge_count());
    for &e in idx {
        if member.put(e) {
            return Err("edge listed twice".into());
        }
    }
    let Some(start) = member.minimum() else {
        return Err("empty edge set".into());
    };
    let degree = induced_degrees(topo, &member);
    if let Some(d) = degree.iter().find(|d| **d != 0 && **d != 2) {
        return Err(format!("a vertex has induced degree {d}"));
    }
    let walk = walk_from(topo, &member, start);
    if walk.edges.len() != idx.len() {
        return Err("edge set is disconnected".into());
    }
    Ok(walk)
}

/// Orders an unordered edge set into a canonical cycle.
pub fn order_cycle_edges(map: &CubicMap, edge_set: &[EdgeId]) -> Result<Cycle> {
    let topo = map.topology()?;
    let idx = edge_indices(map, edge_set)?;
    let walk = walk_set(topo, &idx).map_err(Error::NotACycle)?;
    Ok(Cycle(to_ids(map, &walk.edges)))
}

pub(crate) fn face_walk(map: &CubicMap, face: FaceId) -> Result<Walk> {
    let topo = map.topology()?;
    let row = &map.face_edge()[map.face_index(face)?];
    let idx: Vec<usize> = (0..row.len()).filter(|e| row[*e]).collect();
    walk_set(topo, &idx).map_err(|_| Error::MalformedFace(face))
}

/// Edges of an internal face in boundary order, canonical start and
/// direction.
pub fn order_face_edges(map: &CubicMap, face: FaceId) -> Result<Vec<EdgeId>> {
    let walk = face_walk(map, face)?;
    Ok(to_ids(map, &walk.edges))
}

/// Edges on no cycle of the group, ascending.
pub fn off_edges(map: &CubicMap, ccg: &Ccg) -> Result<Vec<EdgeId>> {
    let on = on_set(map, ccg)?;
    Ok((0..map.edge_count())
        .filter(|e| !on.contains(*e))
        .map(|e| map.edge_ids()[e])
        .collect())
}

pub(crate) fn on_set(map: &CubicMap, ccg: &Ccg) -> Result<FixedBitSet> {
    let mut on = FixedBitSet::with_capacity(map.edge_count());
    for cycle in ccg.cycles() {
        for e in cycle.edges() {
            on.insert(map.edge_index(*e)?);
        }
    }
    Ok(on)
}

/// Splits a 2-regular edge set into its cycles, each canonical, sorted by
/// `(length, first edge)`, in index space.
pub(crate) fn decompose_indices(topo: &Topology, on: &FixedBitSet) -> std::result::Result<Vec<Walk>, (usize, usize)> {
    let degree = induced_degrees(topo, on);
    if let Some((v, d)) = degree.iter().enumerate().find(|(_, d)| **d != 2) {
        return Err((v, *d));
    }
    let mut visited = FixedBitSet::with_capacity(topo.edge_count());
    let mut walks = Vec::new();
    for e in on.ones() {
        if visited.contains(e) {
            continue;
        }
        let walk = walk_from(topo, on, e);
        for &w in &walk.edges {
            visited.insert(w);
        }
        walks.push(walk);
    }
    walks.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
    Ok(walks)
}

pub(crate) fn decompose_on_set(map: &CubicMap, on: &FixedBitSet) -> Result<Vec<Cycle>> {
    let topo = map.topology()?;
    let walks = decompose_indices(topo, on).map_err(|(v, degree)| Error::NotTwoRegular {
        vertex: map.vertex_ids()[v],
        degree,
    })?;
    Ok(walks.iter().map(|w| Cycle(to_ids(map, &w.edges))).collect())
}

/// The unique partition of a 2-regular edge set into vertex-disjoint
/// cycles. Cycles may be odd; a [`Ccg`] additionally requires evenness.
pub fn decompose_two_factor(map: &CubicMap, on_edges: &[EdgeId]) -> Result<Vec<Cycle>> {
    let mut on = FixedBitSet::with_capacity(map.edge_count());
    for e in on_edges {
        on.insert(map.edge_index(*e)?);
    }
    decompose_on_set(map, &on)
}

/// Builds a cycle group from a 2-factor bitset, failing on odd components.
pub(crate) fn ccg_from_on_set(map: &CubicMap, on: &FixedBitSet) -> Result<Ccg> {
    let cycles = decompose_on_set(map, on)?;
    if let Some(odd) = cycles.iter().find(|c| !c.is_even()) {
        return Err(Error::InvalidCcg(format!("odd cycle of length {}", odd.len())));
    }
    Ok(Ccg::from_cycles(cycles))
}
