//! Opaque identifiers for vertices, edges and faces.

use std::fmt;

use serde::{Deserialize, Serialize};

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl From<u32> for $name {
            fn from(raw: u32) -> Self {
                $name(raw)
            }
        }
    };
}

id_type!(
    /// Vertex id; row key of the vertex-edge matrix.
    VertexId,
    "v"
);
id_type!(
    /// Edge id; column key of both incidence matrices.
    EdgeId,
    "e"
);
id_type!(
    /// Internal face id; row key of the face-edge matrix.
    FaceId,
    "f"
);

/// Convenience for building edge id lists from literals.
pub fn edges<I: IntoIterator<Item = u32>>(raw: I) -> Vec<EdgeId> {
    raw.into_iter().map(EdgeId).collect()
}
