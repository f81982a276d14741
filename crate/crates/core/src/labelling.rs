//! Proper 3-edge labellings induced by cycle groups.

use serde::{Deserialize, Serialize};

use crate::ccg_engine::alternate_split;
use crate::cycle::{off_edges, Ccg};
use crate::error::{Error, Result};
use crate::ids::EdgeId;
use crate::map::CubicMap;

/// Three edge classes with their roles forgotten. Each class is sorted and
/// the classes are sorted lexicographically, so two labellings that differ
/// only by a permutation of `a`, `b`, `c` are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeLabelling {
    class_1: Vec<EdgeId>,
    class_2: Vec<EdgeId>,
    class_3: Vec<EdgeId>,
}

impl EdgeLabelling {
    pub fn new(classes: [Vec<EdgeId>; 3]) -> Self {
        let mut classes = classes.map(|mut c| {
            c.sort();
            c
        });
        classes.sort();
        let [class_1, class_2, class_3] = classes;
        EdgeLabelling { class_1, class_2, class_3 }
    }

    pub fn classes(&self) -> [&[EdgeId]; 3] {
        [&self.class_1, &self.class_2, &self.class_3]
    }

    /// Index (0, 1 or 2) of the class holding `edge`.
    pub fn class_of(&self, edge: EdgeId) -> Option<usize> {
        self.classes().iter().position(|c| c.binary_search(&edge).is_ok())
    }
}

/// `a` and `b` halves of every cycle, plus the off-edges as the third class.
pub fn labelling_from_ccg(map: &CubicMap, ccg: &Ccg) -> Result<EdgeLabelling> {
    ccg.validate(map)?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for cycle in ccg.cycles() {
        let split = alternate_split(cycle);
        a.extend(split.a_edges);
        b.extend(split.b_edges);
    }
    Ok(EdgeLabelling::new([a, b, off_edges(map, ccg)?]))
}

/// Every labelling the group supports. Each cycle's halves may swap roles
/// independently; with the first cycle fixed that gives `2^(k-1)`
/// labellings for `k` cycles, distinct up to role permutation. Sorted.
pub fn labellings_from_ccg(map: &CubicMap, ccg: &Ccg) -> Result<Vec<EdgeLabelling>> {
    ccg.validate(map)?;
    let off = off_edges(map, ccg)?;
    let splits: Vec<_> = ccg.cycles().iter().map(alternate_split).collect();
    let free = splits.len().saturating_sub(1);
    let mut out = Vec::with_capacity(1 << free);
    for mask in 0..1usize << free {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (k, split) in splits.iter().enumerate() {
            let swap = k > 0 && mask >> (k - 1) & 1 == 1;
            let (x, y) = if swap { (&split.b_edges, &split.a_edges) } else { (&split.a_edges, &split.b_edges) };
            a.extend(x);
            b.extend(y);
        }
        out.push(EdgeLabelling::new([a, b, off.clone()]));
    }
    out.sort();
    Ok(out)
}

/// Distinct labellings supported by any of `ccgs`.
pub fn closure_labellings(map: &CubicMap, ccgs: &[Ccg]) -> Result<Vec<EdgeLabelling>> {
    let mut all = Vec::new();
    for c in ccgs {
        all.extend(labellings_from_ccg(map, c)?);
    }
    Ok(dedup_labellings(all))
}

/// True iff the classes partition the edges and every vertex sees all three.
pub fn validate_labelling(map: &CubicMap, lab: &EdgeLabelling) -> bool {
    let Ok(topo) = map.topology() else {
        return false;
    };
    let mut class = vec![usize::MAX; map.edge_count()];
    for (k, edges) in lab.classes().iter().enumerate() {
        for e in *edges {
            let Ok(i) = map.edge_index(*e) else {
                return false;
            };
            if class[i] != usize::MAX {
                return false;
            }
            class[i] = k;
        }
    }
    if class.contains(&usize::MAX) {
        return false;
    }
    topo.incident.iter().all(|[x, y, z]| {
        let (x, y, z) = (class[*x], class[*y], class[*z]);
        x != y && y != z && x != z
    })
}

/// Distinct labellings up to permutation of the class roles, sorted.
pub fn dedup_labellings<I>(labs: I) -> Vec<EdgeLabelling>
where
    I: IntoIterator<Item = EdgeLabelling>,
{
    let mut out: Vec<EdgeLabelling> = labs.into_iter().collect();
    out.sort();
    out.dedup();
    out
}

/// Groups made of a single cycle through every vertex.
///
/// Returns [`Error::NoHamiltonian`] when there are none, so callers can
/// tell "nothing found" apart from "nothing usable".
pub fn hamiltonian_ccgs(map: &CubicMap, ccgs: &[Ccg]) -> Result<Vec<Ccg>> {
    let hams: Vec<Ccg> = ccgs.iter().filter(|c| c.is_hamiltonian(map)).cloned().collect();
    if hams.is_empty() {
        Err(Error::NoHamiltonian)
    } else {
        Ok(hams)
    }
}
