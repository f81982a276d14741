//! Closes the cube's two-square seed under successors and lists the result.

use ccgmap::labelling::{closure_labellings, hamiltonian_ccgs};
use ccgmap::{fixed_point, fixtures, successor_ccgs};

fn main() -> ccgmap::Result<()> {
    let cube = fixtures::cube();
    let seed = fixtures::cube_seed();

    println!("seed: {seed:?}");
    for s in successor_ccgs(&cube, &seed)? {
        println!("  successor {s:?} hamiltonian={}", s.is_hamiltonian(&cube));
    }

    let closure = fixed_point(&cube, &seed)?;
    let hams = hamiltonian_ccgs(&cube, &closure)?;
    let labs = closure_labellings(&cube, &closure)?;
    println!("{} groups, {} Hamiltonian, {} labellings", closure.len(), hams.len(), labs.len());
    for h in hams {
        println!("  {:?}", h.cycles()[0].edges());
    }
    Ok(())
}
