//! Pairwise analysis of flag codes.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::objects::{distance_vector_of_pair, subspace_distance, FlagCode, Subspace};
use crate::distvec::DistanceVector;
use crate::dvalues::{patterns_of_size, ZeroPattern};
use crate::exec::{map_ordered, Execution};
use crate::{Error, Result};

/// One unordered pair of distinct code flags (0-based indices, `i < j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub distance: usize,
    pub vector: DistanceVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// Minimum flag distance; 0 for a single flag.
    pub min_distance: usize,
    /// Distance vectors of the pairs achieving the minimum.
    pub vectors_at_min: BTreeSet<DistanceVector>,
    /// Every pair, ordered by `(i, j)`.
    pub pairs: Vec<PairRecord>,
}

/// Minimum distance, its distance vectors and the full pair list of a code.
pub fn code_census(code: &FlagCode) -> Census {
    code_census_with(code, Execution::default())
}

pub fn code_census_with(code: &FlagCode, exec: Execution) -> Census {
    let flags = code.flags();
    let rows: Vec<usize> = (0..flags.len()).collect();
    let pairs: Vec<PairRecord> = map_ordered(exec, &rows, |&i| {
        (i + 1..flags.len())
            .map(|j| {
                let vector = distance_vector_of_pair(&flags[i], &flags[j])
                    .expect("code flags share type and field");
                PairRecord {
                    i,
                    j,
                    distance: vector.sum(),
                    vector,
                }
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    let min_distance = pairs.iter().map(|p| p.distance).min().unwrap_or(0);
    let vectors_at_min = pairs
        .iter()
        .filter(|p| p.distance == min_distance)
        .map(|p| p.vector.clone())
        .collect();
    Census {
        min_distance,
        vectors_at_min,
        pairs,
    }
}

/// `d_S(C_i)` for every position: the minimum distance of the set of
/// distinct `i`-th subspaces, 0 when that set has a single element.
pub fn projected_distances(code: &FlagCode) -> Vec<usize> {
    (0..code.type_vector().len())
        .map(|pos| {
            let distinct: Vec<&Subspace> = code
                .flags()
                .iter()
                .map(|f| &f.subspaces()[pos])
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            let mut best: Option<usize> = None;
            for a in 0..distinct.len() {
                for b in a + 1..distinct.len() {
                    let d = subspace_distance(distinct[a], distinct[b]).expect("same ambient");
                    best = Some(best.map_or(d, |x| x.min(d)));
                }
            }
            best.unwrap_or(0)
        })
        .collect()
}

/// Outcome of a disjointness check. On failure `witness` holds two code
/// indices (0-based) that agree on every position of the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointReport {
    pub disjoint: bool,
    pub witness: Option<(usize, usize)>,
}

/// Whether no two distinct flags agree on all positions of `z`.
pub fn is_disjoint(code: &FlagCode, z: &ZeroPattern) -> Result<DisjointReport> {
    z.check_for(code.type_vector())?;
    if z.is_empty() {
        return Err(Error::validation("disjointness needs a nonempty pattern"));
    }
    let mut seen: HashMap<Vec<&Subspace>, usize> = HashMap::new();
    for (k, f) in code.flags().iter().enumerate() {
        let key: Vec<&Subspace> = z.positions().iter().map(|&i| &f.subspaces()[i - 1]).collect();
        if let Some(&prev) = seen.get(&key) {
            return Ok(DisjointReport {
                disjoint: false,
                witness: Some((prev, k)),
            });
        }
        seen.insert(key, k);
    }
    Ok(DisjointReport {
        disjoint: true,
        witness: None,
    })
}

/// Result of the `M`-disjointness check: the first failing pattern and its
/// witness pair, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDisjointReport {
    pub disjoint: bool,
    pub failure: Option<(ZeroPattern, usize, usize)>,
}

/// Whether the code is `(i_1, ..., i_M)`-disjoint for every size-`m` pattern.
pub fn is_m_disjoint(code: &FlagCode, m: usize) -> Result<MDisjointReport> {
    let r = code.type_vector().len();
    if m == 0 || m > r {
        return Err(Error::domain(format!("M = {m} outside 1..={r}")));
    }
    for z in patterns_of_size(r, m) {
        let rep = is_disjoint(code, &z)?;
        if let Some((a, b)) = rep.witness {
            return Ok(MDisjointReport {
                disjoint: false,
                failure: Some((z, a, b)),
            });
        }
    }
    Ok(MDisjointReport {
        disjoint: true,
        failure: None,
    })
}
