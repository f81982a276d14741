//! Enumerating complete cycle groups from a single seed.
//!
//! Each cycle of a group is split into alternating `a`/`b` halves. For every
//! one of the `2^n` ways of keeping one half per cycle, the kept halves plus
//! the group's off-edges form a new 2-factor whose components are again even
//! cycles. Repeating this from every new group until nothing new appears
//! gives the closure of the seed.

use std::collections::{BTreeSet, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::cycle::{ccg_from_on_set, decompose_indices, on_set, Ccg, Cycle, Walk};
use crate::error::{Error, Result};
use crate::ids::EdgeId;
use crate::map::{CubicMap, Topology};

/// Default cap on the number of cycle groups a closure may reach.
pub const DEFAULT_CLOSURE_LIMIT: usize = 1_000_000;

/// The alternating halves of one even cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternationSplit {
    pub a_edges: BTreeSet<EdgeId>,
    pub b_edges: BTreeSet<EdgeId>,
}

/// `a` takes the even positions of the canonical sequence, `b` the odd ones.
pub fn alternate_split(cycle: &Cycle) -> AlternationSplit {
    let mut split = AlternationSplit { a_edges: BTreeSet::new(), b_edges: BTreeSet::new() };
    for (i, e) in cycle.edges().iter().enumerate() {
        if i % 2 == 0 {
            split.a_edges.insert(*e);
        } else {
            split.b_edges.insert(*e);
        }
    }
    split
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Half {
    A,
    B,
}

/// One choice of half per cycle, in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComboVector(pub Vec<Half>);

/// All `2^n` half choices in lexicographic order with `A < B`.
pub fn enumerate_combos(n: usize) -> Vec<ComboVector> {
    assert!(n < usize::BITS as usize, "too many cycles to enumerate");
    (0..1usize << n)
        .map(|k| {
            ComboVector(
                (0..n)
                    .map(|i| if (k >> (n - 1 - i)) & 1 == 0 { Half::A } else { Half::B })
                    .collect(),
            )
        })
        .collect()
}

/// Successor 2-factors of the group described by `walks`, in combo order.
/// Index-space core shared by [`successor_ccgs`] and [`fixed_point`].
fn successor_sets(topo: &Topology, walks: &[Walk], on: &FixedBitSet) -> Vec<FixedBitSet> {
    let mut base = FixedBitSet::with_capacity(topo.edge_count());
    base.insert_range(..);
    base.difference_with(on);
    let n = walks.len();
    (0..1usize << n)
        .map(|k| {
            let mut next = base.clone();
            for (i, walk) in walks.iter().enumerate() {
                let parity = (k >> (n - 1 - i)) & 1;
                for e in walk.edges.iter().skip(parity).step_by(2) {
                    next.insert(*e);
                }
            }
            next
        })
        .collect()
}

fn walks_of(map: &CubicMap, topo: &Topology, on: &FixedBitSet) -> Result<Vec<Walk>> {
    decompose_indices(topo, on).map_err(|(v, degree)| Error::NotTwoRegular {
        vertex: map.vertex_ids()[v],
        degree,
    })
}

/// The distinct groups reached in one round of half selection, sorted.
pub fn successor_ccgs(map: &CubicMap, ccg: &Ccg) -> Result<Vec<Ccg>> {
    ccg.validate(map)?;
    let topo = map.topology()?;
    let on = on_set(map, ccg)?;
    let walks = walks_of(map, topo, &on)?;
    let mut out: Vec<Ccg> = successor_sets(topo, &walks, &on)
        .iter()
        .map(|s| ccg_from_on_set(map, s))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Closure of `seed` under [`successor_ccgs`], sorted canonically.
pub fn fixed_point(map: &CubicMap, seed: &Ccg) -> Result<Vec<Ccg>> {
    fixed_point_with_limit(map, seed, DEFAULT_CLOSURE_LIMIT)
}

/// [`fixed_point`] with an explicit cap on the closure size.
pub fn fixed_point_with_limit(map: &CubicMap, seed: &Ccg, limit: usize) -> Result<Vec<Ccg>> {
    seed.validate(map)?;
    let topo = map.topology()?;
    let start = on_set(map, seed)?;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut closure = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(on) = queue.pop_front() {
        let walks = walks_of(map, topo, &on)?;
        for next in successor_sets(topo, &walks, &on) {
            if !seen.contains(&next) {
                if seen.len() >= limit {
                    return Err(Error::IterationLimit(limit));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        closure.push(Ccg::from_cycles(
            walks
                .iter()
                .map(|w| Cycle::from_walk(crate::cycle::to_ids(map, &w.edges)))
                .collect(),
        ));
    }
    closure.sort();
    Ok(closure)
}

/// Canonical form of walk-ordered cycle lists: each cycle rotated and
/// oriented, then cycles sorted by `(length, first edge)`.
pub fn canonical_ccg(cycles: &[Vec<EdgeId>]) -> Ccg {
    Ccg::canonical(cycles.iter().cloned())
}
