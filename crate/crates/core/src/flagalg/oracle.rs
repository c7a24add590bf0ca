//! Brute-force distance-vector sets, used to check the characterization.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{enumerate_flag_variety_with_limit, DEFAULT_SIZE_LIMIT};
use super::field::{check_prime, PrimeFieldMatrix};
use super::objects::{distance_vector_of_pair, Flag};
use crate::distvec::{enumerate_distance_vectors, max_flag_distance, DistanceVector, TypeVector};
use crate::exec::{map_ordered, map_reduce, Execution};
use crate::qcalc::{evaluate, flag_variety_size};
use crate::{Error, Result};

/// How flag pairs are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Every ordered pair of the variety.
    Exhaustive,
    /// One fixed flag against every flag of the variety. Exact, because the
    /// general linear group acts transitively on flags of a given type and
    /// preserves distance vectors.
    Anchored,
    /// `pairs` uniformly random pairs from a seeded generator.
    Sampled { pairs: u64, seed: u64 },
}

/// Distance vectors observed per flag distance.
pub type ObservedSets = BTreeMap<usize, BTreeSet<DistanceVector>>;

fn merge(mut a: ObservedSets, b: ObservedSets) -> ObservedSets {
    for (d, set) in b {
        a.entry(d).or_default().extend(set);
    }
    a
}

fn record(into: &mut ObservedSets, v: DistanceVector) {
    into.entry(v.sum()).or_default().insert(v);
}

/// Chooses exhaustive search when the pair count stays below the default
/// size limit and the anchored scan otherwise.
pub fn default_mode(t: &TypeVector, p: u64) -> Result<OracleMode> {
    let size = evaluate(&flag_variety_size(t), p)?;
    let pairs = &size.0 * &size.0;
    Ok(if pairs <= DEFAULT_SIZE_LIMIT.into() {
        OracleMode::Exhaustive
    } else {
        OracleMode::Anchored
    })
}

/// A uniformly random flag: a random full-rank nested basis.
pub fn random_flag<R: Rng>(rng: &mut R, p: u32, t: &TypeVector) -> Flag {
    let rows = *t.dims().last().expect("nonempty");
    let n = t.ambient();
    loop {
        let entries: Vec<i64> = (0..rows * n).map(|_| rng.gen_range(0..p) as i64).collect();
        let m = PrimeFieldMatrix::from_entries(p as u64, rows, n, &entries).expect("prime checked");
        if let Ok(f) = Flag::from_nested_basis(&m, t) {
            return f;
        }
    }
}

/// Every distance vector realized by pairs of flags of type `t` over `F_p`,
/// grouped by flag distance.
pub fn brute_force_distance_vector_sets(
    t: &TypeVector,
    p: u64,
    mode: OracleMode,
    exec: Execution,
) -> Result<ObservedSets> {
    let prime = check_prime(p)?;
    match mode {
        OracleMode::Exhaustive => {
            let size = evaluate(&flag_variety_size(t), p)?;
            let pairs = &size.0 * &size.0;
            if pairs > DEFAULT_SIZE_LIMIT.into() {
                return Err(Error::Resource {
                    what: format!("ordered pairs of F_{p}({t},{})", t.ambient()),
                    predicted: pairs.to_string(),
                    limit: DEFAULT_SIZE_LIMIT,
                });
            }
            let flags: Vec<Flag> = enumerate_flag_variety_with_limit(p, t, DEFAULT_SIZE_LIMIT)?.collect();
            let parts = map_ordered(exec, &flags, |f| {
                let mut out = ObservedSets::new();
                for g in &flags {
                    record(&mut out, distance_vector_of_pair(f, g).expect("same variety"));
                }
                out
            });
            Ok(parts.into_iter().fold(ObservedSets::new(), merge))
        }
        OracleMode::Anchored => {
            let flags: Vec<Flag> = enumerate_flag_variety_with_limit(p, t, DEFAULT_SIZE_LIMIT)?.collect();
            let anchor = &flags[0];
            let parts = map_ordered(exec, &flags, |g| {
                distance_vector_of_pair(anchor, g).expect("same variety")
            });
            let mut out = ObservedSets::new();
            for v in parts {
                record(&mut out, v);
            }
            Ok(out)
        }
        OracleMode::Sampled { pairs, seed } => {
            const CHUNK: u64 = 4096;
            let chunks = pairs.div_ceil(CHUNK) as usize;
            Ok(map_reduce(
                exec,
                chunks,
                ObservedSets::new(),
                |c| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                    let count = CHUNK.min(pairs - c as u64 * CHUNK);
                    let mut out = ObservedSets::new();
                    for _ in 0..count {
                        let f = random_flag(&mut rng, prime, t);
                        let g = random_flag(&mut rng, prime, t);
                        record(&mut out, distance_vector_of_pair(&f, &g).expect("same type"));
                    }
                    out
                },
                merge,
            ))
        }
    }
}

/// The distance vectors at flag distance `d` found by brute force, using
/// [`default_mode`].
pub fn brute_force_distance_vector_set(d: usize, t: &TypeVector, p: u64) -> Result<BTreeSet<DistanceVector>> {
    let mode = default_mode(t, p)?;
    let mut sets = brute_force_distance_vector_sets(t, p, mode, Execution::default())?;
    Ok(sets.remove(&d).unwrap_or_default())
}

/// Comparison of theory and brute force at one flag distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub d: usize,
    pub predicted: usize,
    pub observed: usize,
    /// Predicted vectors that were not observed.
    pub missing: Vec<DistanceVector>,
    /// Observed vectors the characterization does not predict.
    pub unexpected: Vec<DistanceVector>,
}

impl OracleRow {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Compares `enumerate_distance_vectors` with brute force for every even
/// `d` in `[0, D^(t,n)]`.
pub fn oracle_check(t: &TypeVector, p: u64, mode: OracleMode, exec: Execution) -> Result<Vec<OracleRow>> {
    let observed = brute_force_distance_vector_sets(t, p, mode, exec)?;
    let empty = BTreeSet::new();
    (0..=max_flag_distance(t))
        .step_by(2)
        .map(|d| {
            let predicted: BTreeSet<DistanceVector> = enumerate_distance_vectors(d, t)?.into_iter().collect();
            let seen = observed.get(&d).unwrap_or(&empty);
            Ok(OracleRow {
                d,
                predicted: predicted.len(),
                observed: seen.len(),
                missing: predicted.difference(seen).cloned().collect(),
                unexpected: seen.difference(&predicted).cloned().collect(),
            })
        })
        .collect()
}
