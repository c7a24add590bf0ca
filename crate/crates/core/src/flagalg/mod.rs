//! Ground truth over prime fields: subspaces and flags in RREF, distances,
//! code analysis, exhaustive enumeration and the constructive realization of
//! distance vectors.
//!
//! Only prime fields `F_p` with `p < 2^16` are supported.

mod census;
mod enumerate;
mod field;
mod io;
mod objects;
mod oracle;
mod realize;

pub use census::{
    code_census, code_census_with, is_disjoint, is_m_disjoint, projected_distances, Census,
    DisjointReport, MDisjointReport, PairRecord,
};
pub use enumerate::{
    enumerate_flag_variety, enumerate_flag_variety_with_limit, enumerate_grassmannian,
    enumerate_grassmannian_with_limit, FlagVarietyIter, GrassmannianIter, DEFAULT_SIZE_LIMIT,
};
pub use field::{check_prime, PrimeFieldMatrix};
pub use io::{parse_flag_code, write_flag_code};
pub use objects::{distance_vector_of_pair, flag_distance, subspace_distance, Flag, FlagCode, Subspace};
pub use oracle::{
    brute_force_distance_vector_set, brute_force_distance_vector_sets, default_mode, oracle_check,
    random_flag, ObservedSets, OracleMode, OracleRow,
};
pub use realize::realize_distance_vector;
