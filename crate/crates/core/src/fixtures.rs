//! Bundled maps: the trivial theta map, the cube with its two-square seed,
//! the tetrahedron, and a few rotation maps for the blow-up pipeline.

use crate::cycle::Ccg;
use crate::document::MapDocument;
use crate::map::CubicMap;
use crate::rotation::RotationMap;

pub const THETA_JSON: &str = include_str!("../fixtures/theta.json");
pub const CUBE_JSON: &str = include_str!("../fixtures/cube.json");
pub const TETRAHEDRON_JSON: &str = include_str!("../fixtures/tetrahedron.json");
/// K3,3 with made-up face rows. Not planar; its closure misses half of its
/// even 2-factors, so conjecture checks must refute it.
pub const K33_PLANTED_GAP_JSON: &str = include_str!("../fixtures/k33_planted_gap.json");

/// The cube after four insertions (seed 7). Planar and cubic, but the
/// closure of its seed reaches 5 of its 8 even 2-factors.
pub const CUBE_GROWN_GAP_JSON: &str = include_str!("../fixtures/cube_grown_gap.json");

pub const SQUARE_PYRAMID_JSON: &str = include_str!("../fixtures/rot_square_pyramid.json");
pub const PENTAGONAL_PYRAMID_JSON: &str = include_str!("../fixtures/rot_pentagonal_pyramid.json");
pub const OCTAHEDRON_JSON: &str = include_str!("../fixtures/rot_octahedron.json");
pub const ROT_TETRAHEDRON_JSON: &str = include_str!("../fixtures/rot_tetrahedron.json");
pub const ROT_THETA_JSON: &str = include_str!("../fixtures/rot_theta.json");

fn load(text: &str) -> (CubicMap, Ccg) {
    let doc = MapDocument::from_json(text).expect("bundled fixture parses");
    let map = doc.to_map().expect("bundled fixture is well formed");
    let seed = doc
        .seed_ccg(&map)
        .expect("bundled seed is valid")
        .expect("bundled fixture has a seed");
    (map, seed)
}

pub fn theta() -> CubicMap {
    load(THETA_JSON).0
}

pub fn theta_seed() -> Ccg {
    load(THETA_JSON).1
}

pub fn cube() -> CubicMap {
    load(CUBE_JSON).0
}

/// `[[1, 9, 10, 11], [3, 4, 5, 6]]`.
pub fn cube_seed() -> Ccg {
    load(CUBE_JSON).1
}

pub fn tetrahedron() -> CubicMap {
    load(TETRAHEDRON_JSON).0
}

pub fn tetrahedron_seed() -> Ccg {
    load(TETRAHEDRON_JSON).1
}

pub fn k33_planted_gap() -> (CubicMap, Ccg) {
    load(K33_PLANTED_GAP_JSON)
}

pub fn cube_grown_gap() -> (CubicMap, Ccg) {
    load(CUBE_GROWN_GAP_JSON)
}

fn rotation(text: &str) -> RotationMap {
    RotationMap::from_json(text).expect("bundled rotation map parses")
}

/// Every bundled rotation map with its name.
pub fn rotation_maps() -> Vec<(&'static str, RotationMap)> {
    vec![
        ("square_pyramid", rotation(SQUARE_PYRAMID_JSON)),
        ("pentagonal_pyramid", rotation(PENTAGONAL_PYRAMID_JSON)),
        ("octahedron", rotation(OCTAHEDRON_JSON)),
        ("tetrahedron", rotation(ROT_TETRAHEDRON_JSON)),
        ("theta", rotation(ROT_THETA_JSON)),
    ]
}
