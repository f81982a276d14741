//! Runs both conjecture checkers on the bundled maps. The grown cube and
//! the planted K3,3 are expected to refute completeness.

use ccgmap::{check_conjecture_1, check_conjecture_2, fixtures, OracleCap};

fn main() -> ccgmap::Result<()> {
    let cap = OracleCap::default();
    let (k33, k33_seed) = fixtures::k33_planted_gap();
    let (gap, gap_seed) = fixtures::cube_grown_gap();
    let maps = [
        ("theta", fixtures::theta(), fixtures::theta_seed()),
        ("cube", fixtures::cube(), fixtures::cube_seed()),
        ("tetrahedron", fixtures::tetrahedron(), fixtures::tetrahedron_seed()),
        ("cube_grown_gap", gap, gap_seed),
        ("k33_planted_gap", k33, k33_seed),
    ];
    for (name, map, seed) in maps {
        println!("{name}");
        println!("  {}", check_conjecture_1(&map, &seed, cap)?);
        println!("  {}", check_conjecture_2(&map, cap)?);
    }
    Ok(())
}
