//! Face four-colouring from a proper edge labelling.
//!
//! Colours are sign pairs. Crossing an edge of the first class flips the
//! first sign, the second class flips the second sign, the third flips
//! both. Around any cubic vertex the three flips compose to the identity,
//! so propagating from one face gives every face a single consistent
//! colour, and adjacent faces always differ.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId};
use crate::labelling::{validate_labelling, EdgeLabelling};
use crate::map::CubicMap;

/// A face of a cubic map: an internal row of `face_edge`, or the outer face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceRef {
    Outer,
    Internal(FaceId),
}

impl fmt::Display for FaceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceRef::Outer => f.write_str("outer"),
            FaceRef::Internal(id) => write!(f, "{}", id.0),
        }
    }
}

impl FromStr for FaceRef {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "outer" {
            return Ok(FaceRef::Outer);
        }
        s.parse::<u32>()
            .map(|n| FaceRef::Internal(FaceId(n)))
            .map_err(|_| format!("bad face reference {s:?}"))
    }
}

impl Serialize for FaceRef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FaceRef {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Two-index colour; `true` is `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPair(pub bool, pub bool);

impl SignPair {
    pub const PLUS_PLUS: SignPair = SignPair(true, true);

    /// Flip for crossing an edge of class `class` (0, 1 or 2).
    pub fn flipped(self, class: usize) -> SignPair {
        match class {
            0 => SignPair(!self.0, self.1),
            1 => SignPair(self.0, !self.1),
            _ => SignPair(!self.0, !self.1),
        }
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |b: bool| if b { '+' } else { '-' };
        write!(f, "{}{}", sign(self.0), sign(self.1))
    }
}

impl FromStr for SignPair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut signs = s.chars().map(|c| match c {
            '+' => Ok(true),
            '-' => Ok(false),
            _ => Err(format!("bad sign pair {s:?}")),
        });
        match (signs.next(), signs.next(), signs.next()) {
            (Some(a), Some(b), None) => Ok(SignPair(a?, b?)),
            _ => Err(format!("bad sign pair {s:?}")),
        }
    }
}

impl Serialize for SignPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Colour of every face, outer face included.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceColouring(pub BTreeMap<FaceRef, SignPair>);

impl FaceColouring {
    pub fn distinct_colours(&self) -> usize {
        let mut c: Vec<_> = self.0.values().collect();
        c.sort();
        c.dedup();
        c.len()
    }
}

/// The two faces each edge separates; external edges pair the outer face
/// with their internal face.
pub fn dual_adjacency(map: &CubicMap) -> Result<BTreeMap<EdgeId, [FaceRef; 2]>> {
    let topo = map.topology()?;
    let face = |f: Option<usize>| f.map_or(FaceRef::Outer, |i| FaceRef::Internal(map.face_ids()[i]));
    Ok(topo
        .faces
        .iter()
        .enumerate()
        .map(|(e, [a, b])| (map.edge_ids()[e], [face(*a), face(*b)]))
        .collect())
}

/// Colours faces by propagation from the outer face, set to `++`, along a
/// breadth-first tree of the dual; every edge is then rechecked.
pub fn four_colour_from_labelling(map: &CubicMap, lab: &EdgeLabelling) -> Result<FaceColouring> {
    if !validate_labelling(map, lab) {
        return Err(Error::InvalidLabelling("labelling is not proper".into()));
    }
    let sides = dual_adjacency(map)?;
    let mut adjacent: BTreeMap<FaceRef, Vec<(EdgeId, FaceRef)>> = BTreeMap::new();
    for (e, [a, b]) in &sides {
        adjacent.entry(*a).or_default().push((*e, *b));
        adjacent.entry(*b).or_default().push((*e, *a));
    }
    let class = |e: EdgeId| lab.class_of(e).expect("proper labelling covers every edge");
    let mut colour = BTreeMap::from([(FaceRef::Outer, SignPair::PLUS_PLUS)]);
    let mut queue = VecDeque::from([FaceRef::Outer]);
    while let Some(f) = queue.pop_front() {
        let here = colour[&f];
        for (e, g) in adjacent.get(&f).into_iter().flatten() {
            if !colour.contains_key(g) {
                colour.insert(*g, here.flipped(class(*e)));
                queue.push_back(*g);
            }
        }
    }
    if colour.len() != map.internal_face_count() + 1 {
        return Err(Error::InvalidLabelling("dual of the map is disconnected".into()));
    }
    for (e, [a, b]) in &sides {
        if colour[a].flipped(class(*e)) != colour[b] {
            return Err(Error::InconsistentLabelling(*e));
        }
    }
    Ok(FaceColouring(colour))
}

/// True iff every face (outer included) is coloured and the two faces of
/// every edge differ.
pub fn validate_four_colouring(map: &CubicMap, fc: &FaceColouring) -> bool {
    let Ok(sides) = dual_adjacency(map) else {
        return false;
    };
    let total = fc.0.contains_key(&FaceRef::Outer)
        && map.face_ids().iter().all(|f| fc.0.contains_key(&FaceRef::Internal(*f)));
    total && sides.values().all(|[a, b]| fc.0[a] != fc.0[b])
}
