//! Prints the cube as DOT, with labelling classes and cycle membership.
//!
//! `cargo run --example export_dot | dot -Tsvg > cube.svg`

use ccgmap::export::to_dot;
use ccgmap::{fixtures, labelling_from_ccg};

fn main() -> ccgmap::Result<()> {
    let cube = fixtures::cube();
    let seed = fixtures::cube_seed();
    let lab = labelling_from_ccg(&cube, &seed)?;
    print!("{}", to_dot(&cube, Some(&seed), Some(&lab))?);
    Ok(())
}
