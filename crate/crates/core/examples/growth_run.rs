//! Grows the theta map by random edge insertion and prints each step.
//!
//! `cargo run --example growth_run -- 12 7` runs 12 insertions with seed 7.

use ccgmap::{fixtures, Grower};

fn main() -> ccgmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let iterations: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(10);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);

    let mut grower = Grower::new(fixtures::theta(), fixtures::theta_seed(), seed)?;
    for _ in 0..iterations {
        let step = grower.advance()?;
        let event = step.event.as_ref().expect("grown steps carry an event");
        println!(
            "step {:>2}: face {} edges {} {} -> {} edges, {} groups, {} Hamiltonian",
            step.step,
            event.face,
            event.targets[0],
            event.targets[1],
            step.map.edge_count(),
            step.ccgs.len(),
            step.hamiltonian_count(),
        );
    }
    Ok(())
}
