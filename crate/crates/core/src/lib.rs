//! Distance-vector calculus for flag codes over finite fields.
//!
//! A flag of type `t = (t_1, ..., t_r)` on `F_q^n` is a chain of nested
//! subspaces with those dimensions. Two flags are compared through the vector
//! of subspace distances between their components; this crate characterizes
//! and enumerates those vectors, computes the largest flag distances possible
//! when flags are forced to share prescribed subspaces, turns those values
//! into disjointness certificates and upper bounds on the size of flag codes,
//! and ships a brute-force prime-field oracle that checks every closed formula
//! on small instances.
//!
//! Modules:
//!
//! - [`qcalc`]: exact integer polynomials in `q`, Gaussian binomials and flag
//!   variety sizes.
//! - [`distvec`]: type vectors, the distance-vector predicate, enumeration,
//!   projection and per-component ranges.
//! - [`dvalues`]: maximum distances with prescribed zero components.
//! - [`bounds`]: disjointness certificates and code-size bounds.
//! - [`flagalg`]: subspaces and flags over prime fields, code analysis and the
//!   brute-force oracle.

pub mod bounds;
pub mod distvec;
pub mod dvalues;
mod error;
mod exec;
pub mod flagalg;
pub mod qcalc;

pub use error::{Error, Result};
pub use exec::Execution;
