//! Incidence-matrix model of a cubic planar map.
//!
//! A map is stored exactly as two 0/1 matrices: `vertex_edge` (one row per
//! vertex, one column per edge) and `face_edge` (one row per internal face,
//! same columns). The outer face has no row, so external edges are the
//! columns of `face_edge` holding a single 1. Row and column order follows
//! the sorted id registries.
//!
//! A `CubicMap` may hold an invalid matrix pair; [`validate_cubic`] reports
//! what is wrong. Operations that walk the map build a [`Topology`] index the
//! first time they need it, and fail with [`Error::InvalidMap`] if the
//! matrices do not describe a cubic map.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId, VertexId};

/// Counters for fresh ids. Ids are never reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NextIds {
    pub vertex: u32,
    pub edge: u32,
    pub face: u32,
}

pub struct CubicMap {
    vertex_ids: Vec<VertexId>,
    edge_ids: Vec<EdgeId>,
    face_ids: Vec<FaceId>,
    vertex_edge: Vec<Vec<bool>>,
    face_edge: Vec<Vec<bool>>,
    next_ids: NextIds,
    topology: OnceLock<std::result::Result<Topology, ValidationReport>>,
}

impl Clone for CubicMap {
    fn clone(&self) -> Self {
        CubicMap {
            vertex_ids: self.vertex_ids.clone(),
            edge_ids: self.edge_ids.clone(),
            face_ids: self.face_ids.clone(),
            vertex_edge: self.vertex_edge.clone(),
            face_edge: self.face_edge.clone(),
            next_ids: self.next_ids,
            topology: self.topology.clone(),
        }
    }
}

impl PartialEq for CubicMap {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_ids == other.vertex_ids
            && self.edge_ids == other.edge_ids
            && self.face_ids == other.face_ids
            && self.vertex_edge == other.vertex_edge
            && self.face_edge == other.face_edge
            && self.next_ids == other.next_ids
    }
}

impl Eq for CubicMap {}

impl fmt::Debug for CubicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicMap")
            .field("vertices", &self.vertex_ids.len())
            .field("edges", &self.edge_ids.len())
            .field("internal_faces", &self.face_ids.len())
            .field("next_ids", &self.next_ids)
            .finish()
    }
}

fn check_ids<T: Ord + Copy + fmt::Display>(what: &str, ids: &[T]) -> Result<()> {
    if ids.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedMatrix(format!(
            "{what} ids must be strictly increasing"
        )));
    }
    Ok(())
}

fn check_shape(name: &str, rows: &[Vec<bool>], expected_rows: usize, cols: usize) -> Result<()> {
    if rows.len() != expected_rows {
        return Err(Error::MalformedMatrix(format!(
            "{name} has {} rows, expected {expected_rows}",
            rows.len()
        )));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::MalformedMatrix(format!(
            "{name} row {i} has {} columns, expected {cols}",
            row.len()
        )));
    }
    Ok(())
}

impl CubicMap {
    /// Builds a map with ids `1..=n` for vertices, edges and faces.
    pub fn from_matrices(vertex_edge: Vec<Vec<bool>>, face_edge: Vec<Vec<bool>>) -> Result<Self> {
        let n_vertices = vertex_edge.len() as u32;
        let n_edges = vertex_edge.first().map_or(0, |r| r.len()) as u32;
        let n_faces = face_edge.len() as u32;
        Self::with_ids(
            (1..=n_vertices).map(VertexId).collect(),
            (1..=n_edges).map(EdgeId).collect(),
            (1..=n_faces).map(FaceId).collect(),
            vertex_edge,
            face_edge,
            None,
        )
    }

    /// Builds a map from explicit id registries. `next_ids` defaults to one
    /// past the largest id of each kind.
    pub fn with_ids(
        vertex_ids: Vec<VertexId>,
        edge_ids: Vec<EdgeId>,
        face_ids: Vec<FaceId>,
        vertex_edge: Vec<Vec<bool>>,
        face_edge: Vec<Vec<bool>>,
        next_ids: Option<NextIds>,
    ) -> Result<Self> {
        if vertex_ids.is_empty() || edge_ids.is_empty() {
            return Err(Error::MalformedMatrix("vertex_edge matrix is empty".into()));
        }
        check_ids("vertex", &vertex_ids)?;
        check_ids("edge", &edge_ids)?;
        check_ids("face", &face_ids)?;
        check_shape("vertex_edge", &vertex_edge, vertex_ids.len(), edge_ids.len())?;
        check_shape("face_edge", &face_edge, face_ids.len(), edge_ids.len())?;
        let default_next = NextIds {
            vertex: vertex_ids.last().map_or(1, |v| v.0 + 1),
            edge: edge_ids.last().map_or(1, |e| e.0 + 1),
            face: face_ids.last().map_or(1, |f| f.0 + 1),
        };
        let next_ids = next_ids.unwrap_or(default_next);
        if next_ids.vertex < default_next.vertex
            || next_ids.edge < default_next.edge
            || next_ids.face < default_next.face
        {
            return Err(Error::MalformedMatrix(
                "next_ids must exceed every id in use".into(),
            ));
        }
        Ok(CubicMap {
            vertex_ids,
            edge_ids,
            face_ids,
            vertex_edge,
            face_edge,
            next_ids,
            topology: OnceLock::new(),
        })
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertex_ids
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn face_ids(&self) -> &[FaceId] {
        &self.face_ids
    }

    pub fn vertex_edge(&self) -> &[Vec<bool>] {
        &self.vertex_edge
    }

    pub fn face_edge(&self) -> &[Vec<bool>] {
        &self.face_edge
    }

    pub fn next_ids(&self) -> NextIds {
        self.next_ids
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    /// Number of internal faces (rows of `face_edge`).
    pub fn internal_face_count(&self) -> usize {
        self.face_ids.len()
    }

    pub fn edge_index(&self, edge: EdgeId) -> Result<usize> {
        self.edge_ids
            .binary_search(&edge)
            .map_err(|_| Error::UnknownEdge(edge))
    }

    pub fn face_index(&self, face: FaceId) -> Result<usize> {
        self.face_ids
            .binary_search(&face)
            .map_err(|_| Error::UnknownFace(face))
    }

    /// Edges with a 1 in the face's row, in id order.
    pub fn face_edge_set(&self, face: FaceId) -> Result<Vec<EdgeId>> {
        let row = &self.face_edge[self.face_index(face)?];
        Ok(row
            .iter()
            .zip(&self.edge_ids)
            .filter(|(on, _)| **on)
            .map(|(_, e)| *e)
            .collect())
    }

    /// Index structure for a valid map.
    pub(crate) fn topology(&self) -> Result<&Topology> {
        self.topology
            .get_or_init(|| Topology::build(self))
            .as_ref()
            .map_err(|report| Error::InvalidMap(report.clone()))
    }

    /// Endpoints of an edge, lower id first.
    pub fn endpoints(&self, edge: EdgeId) -> Result<(VertexId, VertexId)> {
        let topo = self.topology()?;
        let [a, b] = topo.endpoints[self.edge_index(edge)?];
        Ok((self.vertex_ids[a], self.vertex_ids[b]))
    }
}

/// One violated invariant of a [`CubicMap`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    VertexDegree { row: usize, vertex: VertexId, ones: usize },
    EdgeEndpoints { column: usize, edge: EdgeId, ones: usize },
    EdgeFaces { column: usize, edge: EdgeId, ones: usize },
    FaceSize { row: usize, face: FaceId, ones: usize },
    Euler { vertices: usize, edges: usize, internal_faces: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::VertexDegree { row, vertex, ones } => {
                write!(f, "vertex_edge row {row} has {ones} ones, expected 3 ({vertex})")
            }
            Issue::EdgeEndpoints { column, edge, ones } => {
                write!(f, "vertex_edge column {column} has {ones} ones, expected 2 ({edge})")
            }
            Issue::EdgeFaces { column, edge, ones } => {
                write!(f, "face_edge column {column} has {ones} ones, expected 1 or 2 ({edge})")
            }
            Issue::FaceSize { row, face, ones } => {
                write!(f, "face_edge row {row} has {ones} ones, expected at least 2 ({face})")
            }
            Issue::Euler { vertices, edges, internal_faces } => write!(
                f,
                "Euler characteristic {vertices} - {edges} + ({internal_faces} + 1) != 2"
            ),
        }
    }
}

/// Every violated invariant found by [`validate_cubic`]; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

fn ones(row: &[bool]) -> usize {
    row.iter().filter(|b| **b).count()
}

/// Lists every violated structural invariant of the map.
pub fn validate_cubic(map: &CubicMap) -> ValidationReport {
    let mut issues = Vec::new();
    for (row, bits) in map.vertex_edge.iter().enumerate() {
        let n = ones(bits);
        if n != 3 {
            issues.push(Issue::VertexDegree { row, vertex: map.vertex_ids[row], ones: n });
        }
    }
    for column in 0..map.edge_count() {
        let n = map.vertex_edge.iter().filter(|r| r[column]).count();
        if n != 2 {
            issues.push(Issue::EdgeEndpoints { column, edge: map.edge_ids[column], ones: n });
        }
        let n = map.face_edge.iter().filter(|r| r[column]).count();
        if !(1..=2).contains(&n) {
            issues.push(Issue::EdgeFaces { column, edge: map.edge_ids[column], ones: n });
        }
    }
    for (row, bits) in map.face_edge.iter().enumerate() {
        let n = ones(bits);
        if n < 2 {
            issues.push(Issue::FaceSize { row, face: map.face_ids[row], ones: n });
        }
    }
    if !euler_holds(map) {
        issues.push(Issue::Euler {
            vertices: map.vertex_count(),
            edges: map.edge_count(),
            internal_faces: map.internal_face_count(),
        });
    }
    ValidationReport { issues }
}

fn euler_holds(map: &CubicMap) -> bool {
    map.vertex_count() + map.internal_face_count() + 1 == map.edge_count() + 2
}

/// `V - E + (F_internal + 1) == 2`, counting the outer face.
pub fn euler_check(map: &CubicMap) -> bool {
    euler_holds(map)
}

/// Adjacency index of a valid map, all in matrix row/column indices.
#[derive(Debug, Clone)]
pub(crate) struct Topology {
    /// Edge index to its two vertex indices, ascending.
    pub endpoints: Vec<[usize; 2]>,
    /// Vertex index to its three incident edge indices, ascending.
    pub incident: Vec<[usize; 3]>,
    /// Edge index to its face indices; `None` is the outer face.
    pub faces: Vec<[Option<usize>; 2]>,
}

impl Topology {
    fn build(map: &CubicMap) -> std::result::Result<Topology, ValidationReport> {
        let report = validate_cubic(map);
        if !report.is_valid() {
            return Err(report);
        }
        let mut endpoints = vec![[usize::MAX; 2]; map.edge_count()];
        let mut incident = vec![[usize::MAX; 3]; map.vertex_count()];
        for (v, row) in map.vertex_edge.iter().enumerate() {
            let mut k = 0;
            for (e, on) in row.iter().enumerate() {
                if *on {
                    incident[v][k] = e;
                    k += 1;
                    let slot = &mut endpoints[e];
                    if slot[0] == usize::MAX {
                        slot[0] = v;
                    } else {
                        slot[1] = v;
                    }
                }
            }
        }
        let mut faces = vec![[None, None]; map.edge_count()];
        for (f, row) in map.face_edge.iter().enumerate() {
            for (e, on) in row.iter().enumerate() {
                if *on {
                    let slot = &mut faces[e];
                    if slot[0].is_none() {
                        slot[0] = Some(f);
                    } else {
                        slot[1] = Some(f);
                    }
                }
            }
        }
        // external edges: (face, None) -> (None, face) so outer sorts first
        for slot in &mut faces {
            if slot[1].is_none() {
                *slot = [None, slot[0]];
            }
        }
        Ok(Topology { endpoints, incident, faces })
    }

    pub fn vertex_count(&self) -> usize {
        self.incident.len()
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    /// The endpoint of `edge` that is not `vertex`.
    pub fn other_end(&self, edge: usize, vertex: usize) -> usize {
        let [a, b] = self.endpoints[edge];
        if a == vertex {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn theta_and_cube_are_valid() {
        assert!(validate_cubic(&fixtures::theta()).is_valid());
        assert!(validate_cubic(&fixtures::cube()).is_valid());
        assert!(validate_cubic(&fixtures::tetrahedron()).is_valid());
    }

    #[test]
    fn single_bit_corruption_is_reported() {
        let cube = fixtures::cube();
        let mut ve = cube.vertex_edge().to_vec();
        ve[3][9] = false; // vertex 4 loses edge 10
        let broken = CubicMap::from_matrices(ve, cube.face_edge().to_vec()).unwrap();
        let report = validate_cubic(&broken);
        assert!(!report.is_valid());
        let text = report.to_string();
        assert!(text.contains("row 3 has 2 ones"), "{text}");
        assert!(text.contains("column 9 has 1 ones"), "{text}");
        assert!(matches!(broken.topology(), Err(Error::InvalidMap(_))));
    }

    #[test]
    fn every_row_and_column_sum_is_cubic() {
        for map in [fixtures::theta(), fixtures::cube(), fixtures::tetrahedron()] {
            for row in map.vertex_edge() {
                assert_eq!(ones(row), 3);
            }
            for c in 0..map.edge_count() {
                assert_eq!(map.vertex_edge().iter().filter(|r| r[c]).count(), 2);
            }
        }
    }

    #[test]
    fn euler_counts() {
        assert!(euler_check(&fixtures::theta()));
        let cube = fixtures::cube();
        assert_eq!(
            (cube.vertex_count(), cube.edge_count(), cube.internal_face_count()),
            (8, 12, 5)
        );
        assert!(euler_check(&cube));

        let mut fe = cube.face_edge().to_vec();
        fe.pop();
        let ids = cube.face_ids()[..4].to_vec();
        let trimmed = CubicMap::with_ids(
            cube.vertex_ids().to_vec(),
            cube.edge_ids().to_vec(),
            ids,
            cube.vertex_edge().to_vec(),
            fe,
            None,
        )
        .unwrap();
        assert!(!euler_check(&trimmed));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            CubicMap::from_matrices(vec![], vec![]),
            Err(Error::MalformedMatrix(_))
        ));
        let ragged = vec![vec![true, true, true], vec![true, true]];
        assert!(matches!(
            CubicMap::from_matrices(ragged, vec![]),
            Err(Error::MalformedMatrix(_))
        ));
    }

    #[test]
    fn topology_orders_outer_first() {
        let theta = fixtures::theta();
        let topo = theta.topology().unwrap();
        assert_eq!(topo.faces[0], [None, Some(0)]);
        assert_eq!(topo.faces[1], [Some(0), Some(1)]);
        assert_eq!(topo.faces[2], [None, Some(1)]);
        assert_eq!(theta.endpoints(EdgeId(2)).unwrap(), (VertexId(1), VertexId(2)));
    }
}
