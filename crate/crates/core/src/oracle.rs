//! Brute-force ground truth and the two conjecture checkers.
//!
//! The oracles never touch the half-selection machinery: even 2-factors come
//! from complementing perfect matchings, colourings from direct
//! backtracking over edges.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ccg_engine::fixed_point;
use crate::cycle::{decompose_on_set, Ccg};
use crate::document::MapDocument;
use crate::error::{Error, Result};
use crate::ids::{EdgeId, FaceId};
use crate::labelling::{dedup_labellings, EdgeLabelling};
use crate::map::{CubicMap, Topology};

pub const DEFAULT_ORACLE_CAP: usize = 45;
pub const ORACLE_CAP_ENV: &str = "CCG_ORACLE_CAP";

/// Largest edge count the oracles accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCap(pub usize);

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap(DEFAULT_ORACLE_CAP)
    }
}

impl OracleCap {
    /// `CCG_ORACLE_CAP` if set to an integer, otherwise the default.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(OracleCap)
            .unwrap_or_default()
    }

    pub fn check(self, map: &CubicMap) -> Result<()> {
        if map.edge_count() > self.0 {
            Err(Error::CapExceeded { edges: map.edge_count(), cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Every perfect matching, each as an ascending edge list; sorted.
///
/// Branches on the unmatched vertex with the fewest usable edges (lowest id
/// on ties), which prunes dead ends as early as possible.
pub fn enumerate_perfect_matchings(map: &CubicMap, cap: OracleCap) -> Result<Vec<Vec<EdgeId>>> {
    cap.check(map)?;
    let topo = map.topology()?;
    let mut out = Vec::new();
    let mut matched = vec![false; topo.vertex_count()];
    let mut chosen = Vec::new();
    match_rec(topo, &mut matched, &mut chosen, &mut out);
    let mut result: Vec<Vec<EdgeId>> = out
        .into_iter()
        .map(|mut m: Vec<usize>| {
            m.sort();
            m.into_iter().map(|e| map.edge_ids()[e]).collect()
        })
        .collect();
    result.sort();
    Ok(result)
}

fn match_rec(topo: &Topology, matched: &mut [bool], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut best: Option<(usize, usize)> = None;
    for v in 0..matched.len() {
        if matched[v] {
            continue;
        }
        let free = topo.incident[v]
            .iter()
            .filter(|e| !matched[topo.other_end(**e, v)])
            .count();
        if free == 0 {
            return;
        }
        if best.is_none_or(|(_, n)| free < n) {
            best = Some((v, free));
        }
    }
    let Some((v, _)) = best else {
        out.push(chosen.clone());
        return;
    };
    matched[v] = true;
    for &e in &topo.incident[v] {
        let w = topo.other_end(e, v);
        if matched[w] {
            continue;
        }
        matched[w] = true;
        chosen.push(e);
        match_rec(topo, matched, chosen, out);
        chosen.pop();
        matched[w] = false;
    }
    matched[v] = false;
}

/// Every cycle group of the map: complements of perfect matchings whose
/// cycles are all even. Sorted canonically.
pub fn oracle_even_two_factors(map: &CubicMap, cap: OracleCap) -> Result<Vec<Ccg>> {
    let matchings = enumerate_perfect_matchings(map, cap)?;
    let mut out = Vec::new();
    for m in matchings {
        let mut on = FixedBitSet::with_capacity(map.edge_count());
        on.insert_range(..);
        for e in m {
            on.set(map.edge_index(e)?, false);
        }
        let cycles = decompose_on_set(map, &on)?;
        if cycles.iter().all(|c| c.is_even()) {
            out.push(Ccg::canonical(cycles.into_iter().map(|c| c.edges().to_vec())));
        }
    }
    out.sort();
    Ok(out)
}

/// Edge visiting order for colouring: breadth-first from the lowest edge,
/// so every edge after the first touches an earlier one.
fn bfs_edge_order(topo: &Topology) -> Vec<usize> {
    let n = topo.edge_count();
    let mut order = Vec::with_capacity(n);
    let mut queued = vec![false; n];
    for root in 0..n {
        if queued[root] {
            continue;
        }
        queued[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            let mut next: Vec<usize> = topo.endpoints[e]
                .iter()
                .flat_map(|v| topo.incident[*v])
                .filter(|f| !queued[*f])
                .collect();
            next.sort();
            next.dedup();
            for f in next {
                queued[f] = true;
                queue.push_back(f);
            }
        }
    }
    order
}

/// Every proper 3-edge colouring up to permutation of the colours.
pub fn oracle_three_edge_colourings(map: &CubicMap, cap: OracleCap) -> Result<Vec<EdgeLabelling>> {
    cap.check(map)?;
    let topo = map.topology()?;
    let order = bfs_edge_order(topo);
    let mut colour = vec![u8::MAX; topo.edge_count()];
    let mut found = Vec::new();
    colour_rec(topo, &order, 0, &mut colour, &mut found);
    let labs = found.into_iter().map(|c| {
        let mut classes: [Vec<EdgeId>; 3] = Default::default();
        for (e, k) in c.iter().enumerate() {
            classes[*k as usize].push(map.edge_ids()[e]);
        }
        EdgeLabelling::new(classes)
    });
    Ok(dedup_labellings(labs))
}

fn colour_rec(topo: &Topology, order: &[usize], pos: usize, colour: &mut [u8], found: &mut Vec<Vec<u8>>) {
    let Some(&e) = order.get(pos) else {
        found.push(colour.to_vec());
        return;
    };
    // Fix the first colour and, for the first edge touching it, the second:
    // this picks one representative per permutation class.
    let choices: &[u8] = match pos {
        0 => &[0],
        1 => &[1],
        _ => &[0, 1, 2],
    };
    for &c in choices {
        let clash = topo.endpoints[e]
            .iter()
            .flat_map(|v| topo.incident[*v])
            .any(|f| f != e && colour[f] == c);
        if clash {
            continue;
        }
        colour[e] = c;
        colour_rec(topo, order, pos + 1, colour, found);
        colour[e] = u8::MAX;
    }
}

/// Short stable hash of the map's matrices and ids.
pub fn map_fingerprint(map: &CubicMap) -> String {
    let digest = Sha256::digest(MapDocument::from_map(map, None).to_json().as_bytes());
    hex::encode(&digest[..8])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Conjecture {
    /// The closure of any seed is the set of all cycle groups.
    Completeness = 1,
    /// Any two edges of a face share a cycle in some cycle group.
    SharedCycle = 2,
}

impl From<Conjecture> for u8 {
    fn from(c: Conjecture) -> u8 {
        c as u8
    }
}

impl TryFrom<u8> for Conjecture {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Conjecture::Completeness),
            2 => Ok(Conjecture::SharedCycle),
            other => Err(format!("no conjecture {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A cycle group the closure never reached.
    MissingCcg { ccg: Ccg },
    /// A closure member the oracle does not know; a bug if it ever appears.
    UnexpectedCcg { ccg: Ccg },
    /// Two edges of `face` that share no cycle in any group.
    UnsharedPair { face: FaceId, edges: [EdgeId; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub fingerprint: String,
    pub verdict: Verdict,
    #[serde(default)]
    pub witness: Option<Witness>,
}

impl ConjectureReport {
    fn new(conjecture: Conjecture, map: &CubicMap, witness: Option<Witness>) -> Self {
        ConjectureReport {
            conjecture,
            fingerprint: map_fingerprint(map),
            verdict: if witness.is_some() { Verdict::Refuted } else { Verdict::Holds },
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = u8::from(self.conjecture);
        match &self.witness {
            None => write!(f, "conjecture {n}: holds ({})", self.fingerprint),
            Some(w) => write!(
                f,
                "conjecture {n}: refuted ({}) witness {}",
                self.fingerprint,
                serde_json::to_string(w).unwrap_or_default()
            ),
        }
    }
}

/// Compares the seed's closure with the oracle's full set.
pub fn check_conjecture_1(map: &CubicMap, seed: &Ccg, cap: OracleCap) -> Result<ConjectureReport> {
    let oracle = oracle_even_two_factors(map, cap)?;
    let closure = fixed_point(map, seed)?;
    Ok(check_conjecture_1_against(map, &closure, &oracle))
}

/// [`check_conjecture_1`] on precomputed, sorted sets.
pub fn check_conjecture_1_against(map: &CubicMap, closure: &[Ccg], oracle: &[Ccg]) -> ConjectureReport {
    let witness = oracle
        .iter()
        .find(|c| closure.binary_search(c).is_err())
        .map(|c| Witness::MissingCcg { ccg: c.clone() })
        .or_else(|| {
            closure
                .iter()
                .find(|c| oracle.binary_search(c).is_err())
                .map(|c| Witness::UnexpectedCcg { ccg: c.clone() })
        });
    ConjectureReport::new(Conjecture::Completeness, map, witness)
}

/// Scans every internal face and every pair of its edges, equal pairs
/// included, against the oracle's cycle groups.
pub fn check_conjecture_2(map: &CubicMap, cap: OracleCap) -> Result<ConjectureReport> {
    let oracle = oracle_even_two_factors(map, cap)?;
    check_conjecture_2_against(map, &oracle)
}

/// [`check_conjecture_2`] against a caller-supplied list of groups.
pub fn check_conjecture_2_against(map: &CubicMap, ccgs: &[Ccg]) -> Result<ConjectureReport> {
    // cycle index of every edge, per group; usize::MAX marks an off-edge
    let cycle_of: Vec<Vec<usize>> = ccgs
        .iter()
        .map(|ccg| {
            let mut idx = vec![usize::MAX; map.edge_count()];
            for (k, cycle) in ccg.cycles().iter().enumerate() {
                for e in cycle.edges() {
                    idx[map.edge_index(*e)?] = k;
                }
            }
            Ok(idx)
        })
        .collect::<Result<_>>()?;
    for &face in map.face_ids() {
        let edges = map.face_edge_set(face)?;
        let idx: Vec<usize> = edges.iter().map(|e| map.edge_index(*e)).collect::<Result<_>>()?;
        for i in 0..idx.len() {
            for j in i..idx.len() {
                let shared = cycle_of
                    .iter()
                    .any(|c| c[idx[i]] != usize::MAX && c[idx[i]] == c[idx[j]]);
                if !shared {
                    let witness = Witness::UnsharedPair { face, edges: [edges[i], edges[j]] };
                    return Ok(ConjectureReport::new(Conjecture::SharedCycle, map, Some(witness)));
                }
            }
        }
    }
    Ok(ConjectureReport::new(Conjecture::SharedCycle, map, None))
}
