//! Blows up non-cubic rotation maps into cubic ones, then colours the
//! original faces through the cubic map.

use ccgmap::rotation::validate_rotation_colouring;
use ccgmap::{colour_rotation_map, fixtures, OracleCap};

fn main() -> ccgmap::Result<()> {
    for (name, rmap) in fixtures::rotation_maps() {
        let pc = colour_rotation_map(&rmap, OracleCap::default())?;
        println!(
            "{name}: {} vertices -> {} cubic vertices, {} edges",
            rmap.rotations.len(),
            pc.blow_up.map.vertex_count(),
            pc.blow_up.map.edge_count()
        );
        println!(
            "  faces {} proper={}",
            serde_json::to_string(&pc.original).unwrap(),
            validate_rotation_colouring(&rmap, &pc.original)?
        );
    }
    Ok(())
}
