use thiserror::Error;

use crate::ids::{EdgeId, FaceId, VertexId};
use crate::map::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("map is not a valid cubic map:\n{0}")]
    InvalidMap(ValidationReport),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("edge set is not a single cycle: {0}")]
    NotACycle(String),
    #[error("face {0} does not form one closed boundary")]
    MalformedFace(FaceId),
    #[error("edge set is not 2-regular: vertex {vertex} has induced degree {degree}")]
    NotTwoRegular { vertex: VertexId, degree: usize },
    #[error("invalid complete cycle group: {0}")]
    InvalidCcg(String),
    #[error("closure exceeded the limit of {0} cycle groups")]
    IterationLimit(usize),
    #[error("no Hamiltonian cycle among the cycle groups")]
    NoHamiltonian,
    #[error("edge {edge} does not lie on face {face}")]
    EdgeNotOnFace { edge: EdgeId, face: FaceId },
    #[error("map has no internal face to insert into")]
    NoInternalFace,
    #[error("cycle group is incompatible with the insertion: {0}")]
    IncompatibleCcg(String),
    #[error("no face and edge pair admits a compatible cycle group ({0} cycle groups searched)")]
    NoCompatibleInsertion(usize),
    #[error("map has {edges} edges, oracle cap is {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("invalid edge labelling: {0}")]
    InvalidLabelling(String),
    #[error("labelling gives inconsistent face colours across edge {0}")]
    InconsistentLabelling(EdgeId),
    #[error("invalid rotation map: {0}")]
    InvalidRotation(String),
}
