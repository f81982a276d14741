//! Four-colours the tetrahedron's faces from each of its labellings.

use ccgmap::four_colour::validate_four_colouring;
use ccgmap::labelling::closure_labellings;
use ccgmap::{fixed_point, fixtures, four_colour_from_labelling};

fn main() -> ccgmap::Result<()> {
    let tet = fixtures::tetrahedron();
    let closure = fixed_point(&tet, &fixtures::tetrahedron_seed())?;
    for lab in closure_labellings(&tet, &closure)? {
        let fc = four_colour_from_labelling(&tet, &lab)?;
        println!("{:?}", lab.classes());
        println!(
            "  {} proper={} colours={}",
            serde_json::to_string(&fc).unwrap(),
            validate_four_colouring(&tet, &fc),
            fc.distinct_colours()
        );
    }
    Ok(())
}
