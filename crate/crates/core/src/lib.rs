//! Cubic planar maps grown one edge at a time, with their even cycle
//! groups, proper 3-edge labellings, Hamiltonian cycles and face
//! four-colourings kept up to date after every insertion.
//!
//! A map is stored as two 0/1 matrices (vertex-edge and face-edge, the
//! outer face left implicit). From a seed group of disjoint even cycles
//! covering every vertex, [`ccg_engine::fixed_point`] recovers every such
//! group; [`oracle`] supplies independent brute-force counts to check it.

pub mod ccg_engine;
pub mod cli;
pub mod cycle;
pub mod document;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod four_colour;
pub mod growth;
pub mod ids;
pub mod labelling;
pub mod map;
pub mod oracle;
pub mod rotation;

pub use ccg_engine::{fixed_point, successor_ccgs};
pub use cycle::{Ccg, Cycle};
pub use document::MapDocument;
pub use error::{Error, Result};
pub use four_colour::{four_colour_from_labelling, FaceColouring, FaceRef, SignPair};
pub use growth::{grow, Grower, GrowthStep, GrowthTrace, InsertionEvent};
pub use ids::{EdgeId, FaceId, VertexId};
pub use labelling::{labelling_from_ccg, EdgeLabelling};
pub use map::CubicMap;
pub use oracle::{check_conjecture_1, check_conjecture_2, ConjectureReport, OracleCap};
pub use rotation::{blow_up, colour_rotation_map, RotationMap};
