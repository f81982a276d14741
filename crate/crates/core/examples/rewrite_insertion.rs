//! One insertion on the cube between edges 3 and 4, and the rewritten group.

use ccgmap::growth::{compatible_ccg, insert_edge, rewrite_ccg};
use ccgmap::{fixed_point, fixtures, EdgeId, FaceId};

fn main() -> ccgmap::Result<()> {
    let cube = fixtures::cube();
    let closure = fixed_point(&cube, &fixtures::cube_seed())?;
    let (e1, e2) = (EdgeId(3), EdgeId(4));
    let host = compatible_ccg(&closure, e1, e2).expect("the seed qualifies");
    let (grown, event) = insert_edge(&cube, FaceId(5), e1, e2)?;
    let seed = rewrite_ccg(&grown, host, &event)?;
    println!("event: {}", serde_json::to_string(&event).unwrap());
    println!("host {host:?} -> {seed:?}");
    println!("{} vertices, {} edges, {} groups", grown.vertex_count(), grown.edge_count(), fixed_point(&grown, &seed)?.len());
    Ok(())
}
