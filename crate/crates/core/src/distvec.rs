//! Distance vectors of flag pairs.
//!
//! For flags `F, F'` of type `t` on `F_q^n` the distance vector collects the
//! subspace distances `d_S(F_i, F'_i)`. A vector `v` of length `r` occurs for
//! some pair if and only if
//!
//! - every `v_i` is even,
//! - `0 <= v_i <= min(2 t_i, 2 (n - t_i))`, and
//! - `|v_{i+1} - v_i| <= 2 (t_{i+1} - t_i)`,
//!
//! and its component sum is the flag distance of the pair. Everything here is
//! independent of `q`.

use std::fmt;
use std::str::FromStr;

use crate::exec::{map_ordered, Execution};
use crate::{Error, Result};

/// Strictly increasing dimensions `1 <= t_1 < ... < t_r < n` of a flag type,
/// together with the ambient dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    dims: Vec<usize>,
    ambient: usize,
}

impl TypeVector {
    pub fn new(dims: Vec<usize>, ambient: usize) -> Result<Self> {
        if ambient < 2 {
            return Err(Error::validation(format!(
                "ambient dimension must be at least 2, got {ambient}"
            )));
        }
        if dims.is_empty() {
            return Err(Error::validation("type vector must have at least one entry"));
        }
        if dims[0] == 0 {
            return Err(Error::validation("type vector entries must be positive"));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::validation(format!(
                "type vector {dims:?} is not strictly increasing"
            )));
        }
        if *dims.last().unwrap() >= ambient {
            return Err(Error::validation(format!(
                "type vector {dims:?} must stay below the ambient dimension {ambient}"
            )));
        }
        Ok(Self { dims, ambient })
    }

    /// The full type `(1, 2, ..., n-1)`.
    pub fn full(ambient: usize) -> Result<Self> {
        if ambient < 2 {
            return Err(Error::validation(format!(
                "full type needs ambient dimension at least 2, got {ambient}"
            )));
        }
        Self::new((1..ambient).collect(), ambient)
    }

    /// Parses a comma separated list such as `1,3,5,6`.
    pub fn parse(list: &str, ambient: usize) -> Result<Self> {
        Self::new(parse_index_list(list)?, ambient)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of subspaces `r` in a flag of this type.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dims.len() + 1 == self.ambient
    }

    /// Dimension `t_i` for a 1-based position `i`.
    pub fn dim(&self, i: usize) -> usize {
        self.dims[i - 1]
    }

    /// Largest subspace distance at 0-based position `j`.
    pub fn cap(&self, j: usize) -> usize {
        component_cap(self.dims[j], self.ambient)
    }

    /// Every subtype `(t_{j_1}, ..., t_{j_s})`, ordered by bitmask of the
    /// selected positions.
    pub fn subtypes(&self) -> Vec<TypeVector> {
        let r = self.len();
        (1u64..(1u64 << r))
            .map(|mask| {
                let dims = (0..r)
                    .filter(|j| mask & (1 << j) != 0)
                    .map(|j| self.dims[j])
                    .collect();
                TypeVector {
                    dims,
                    ambient: self.ambient,
                }
            })
            .collect()
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.dims)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses `a,b,c` (optionally wrapped in parentheses) into integers.
pub fn parse_index_list(list: &str) -> Result<Vec<usize>> {
    let trimmed = list.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|s| {
            usize::from_str(s.trim())
                .map_err(|_| Error::validation(format!("{s:?} is not a non-negative integer")))
        })
        .collect()
}

/// `min(2k, 2(n-k))`, the largest distance between `k`-dimensional subspaces
/// of an `n`-dimensional space.
pub fn component_cap(k: usize, n: usize) -> usize {
    2 * k.min(n - k)
}

/// A vector of subspace distances for a given flag type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceVector {
    comps: Vec<usize>,
    ty: TypeVector,
}

impl DistanceVector {
    /// Wraps `comps` after checking the distance-vector conditions.
    pub fn new(comps: Vec<usize>, ty: &TypeVector) -> Result<Self> {
        let signed: Vec<i64> = comps.iter().map(|&c| c as i64).collect();
        if !is_distance_vector(&signed, ty)? {
            return Err(Error::Precondition(format!(
                "{} is not a distance vector for type {ty} on n = {}",
                TupleDisplay(&comps),
                ty.ambient()
            )));
        }
        Ok(Self::trusted(comps, ty))
    }

    pub(crate) fn trusted(comps: Vec<usize>, ty: &TypeVector) -> Self {
        debug_assert_eq!(comps.len(), ty.len());
        Self {
            comps,
            ty: ty.clone(),
        }
    }

    pub fn zero(ty: &TypeVector) -> Self {
        Self::trusted(vec![0; ty.len()], ty)
    }

    pub fn comps(&self) -> &[usize] {
        &self.comps
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }

    /// The flag distance carried by this vector.
    pub fn sum(&self) -> usize {
        self.comps.iter().sum()
    }
}

impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.comps)
    }
}

/// Formats a slice as `(a,b,c)`.
pub struct TupleDisplay<'a>(pub &'a [usize]);

impl fmt::Display for TupleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0)
    }
}

/// `D^n` for the full type, with the convention `D^1 = 0`.
pub fn full_max_distance(n: usize) -> usize {
    n * n / 2
}

/// Largest flag distance for the dimensions `dims` inside an `n`-dimensional
/// space. Empty chains and `n <= 1` give 0.
pub fn max_flag_distance_for(dims: &[usize], n: usize) -> usize {
    dims.iter().map(|&t| component_cap(t, n)).sum()
}

/// `D^(t,n) = 2 (sum_{t_i <= n/2} t_i + sum_{t_i > n/2} (n - t_i))`.
pub fn max_flag_distance(t: &TypeVector) -> usize {
    max_flag_distance_for(t.dims(), t.ambient())
}

/// The distance-vector conditions for `v` against type `t`. The flag distance
/// realized by a valid `v` is its component sum.
pub fn is_distance_vector(v: &[i64], t: &TypeVector) -> Result<bool> {
    if v.len() != t.len() {
        return Err(Error::validation(format!(
            "vector of length {} does not match type {t} of length {}",
            v.len(),
            t.len()
        )));
    }
    let dims = t.dims();
    let in_box = v
        .iter()
        .enumerate()
        .all(|(j, &x)| x >= 0 && x % 2 == 0 && x as usize <= t.cap(j));
    let corridor = (1..v.len()).all(|j| (v[j] - v[j - 1]).abs() <= 2 * (dims[j] - dims[j - 1]) as i64);
    Ok(in_box && corridor)
}

fn check_admissible(d: usize, t: &TypeVector) -> Result<()> {
    let max = max_flag_distance(t);
    if !d.is_multiple_of(2) || d > max {
        return Err(Error::domain(format!(
            "flag distance {d} is not an even value in [0, {max}] for type {t} on n = {}",
            t.ambient()
        )));
    }
    Ok(())
}

/// Smallest and largest sums achievable by positions `from+1..r` once position
/// `from` holds `v` (0-based).
fn tail_bounds(t: &TypeVector, from: usize, v: usize) -> (usize, usize) {
    let dims = t.dims();
    let mut lo = 0;
    let mut hi = 0;
    for j in from + 1..dims.len() {
        let slack = 2 * (dims[j] - dims[from]);
        lo += v.saturating_sub(slack);
        hi += t.cap(j).min(v + slack);
    }
    (lo, hi)
}

fn next_candidates(t: &TypeVector, pos: usize, prev: Option<usize>) -> std::ops::RangeInclusive<usize> {
    let cap = t.cap(pos);
    match prev {
        None => 0..=cap,
        Some(p) => {
            let slack = 2 * (t.dims()[pos] - t.dims()[pos - 1]);
            p.saturating_sub(slack)..=cap.min(p + slack)
        }
    }
}

fn extend(t: &TypeVector, d: usize, prefix: &mut Vec<usize>, sum: usize, out: &mut Vec<Vec<usize>>) {
    let pos = prefix.len();
    if pos == t.len() {
        out.push(prefix.clone());
        return;
    }
    for v in next_candidates(t, pos, prefix.last().copied()).step_by(2) {
        let s = sum + v;
        if s > d {
            break;
        }
        let (lo, hi) = tail_bounds(t, pos, v);
        if s + lo <= d && d <= s + hi {
            prefix.push(v);
            extend(t, d, prefix, s, out);
            prefix.pop();
        }
    }
}

/// All distance vectors of type `t` with component sum `d`, in lexicographic
/// order.
pub fn enumerate_distance_vectors(d: usize, t: &TypeVector) -> Result<Vec<DistanceVector>> {
    enumerate_distance_vectors_with(d, t, Execution::default())
}

/// Same as [`enumerate_distance_vectors`], fanning the first component out to
/// workers when `exec` is parallel.
pub fn enumerate_distance_vectors_with(
    d: usize,
    t: &TypeVector,
    exec: Execution,
) -> Result<Vec<DistanceVector>> {
    check_admissible(d, t)?;
    let firsts: Vec<usize> = next_candidates(t, 0, None)
        .step_by(2)
        .filter(|&v| {
            let (lo, hi) = tail_bounds(t, 0, v);
            v + lo <= d && d <= v + hi
        })
        .collect();
    let chunks = map_ordered(exec, &firsts, |&v| {
        let mut out = Vec::new();
        let mut prefix = vec![v];
        extend(t, d, &mut prefix, v, &mut out);
        out
    });
    Ok(chunks
        .into_iter()
        .flatten()
        .map(|comps| DistanceVector::trusted(comps, t))
        .collect())
}

/// Restricts a full-type distance vector to the positions `t_1, ..., t_r`.
pub fn project_type(v: &DistanceVector, t: &TypeVector) -> Result<DistanceVector> {
    let src = v.type_vector();
    if !src.is_full() || src.ambient() != t.ambient() {
        return Err(Error::validation(format!(
            "projection needs a full-type vector on n = {}, got type {src} on n = {}",
            t.ambient(),
            src.ambient()
        )));
    }
    let comps = t.dims().iter().map(|&k| v.comps()[k - 1]).collect();
    Ok(DistanceVector::trusted(comps, t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// The unique distance vector of smallest (`Min`) or largest (`Max`) flag
/// distance among those whose `i`-th component (1-based) equals `v`, together
/// with that distance.
pub fn extremal_vector_with_component(
    i: usize,
    v: usize,
    t: &TypeVector,
    which: Extremum,
) -> Result<(DistanceVector, usize)> {
    if i == 0 || i > t.len() {
        return Err(Error::validation(format!(
            "position {i} outside 1..={} for type {t}",
            t.len()
        )));
    }
    let cap = t.cap(i - 1);
    if !v.is_multiple_of(2) || v > cap {
        return Err(Error::domain(format!(
            "component value {v} is not an even value in [0, {cap}] at position {i}"
        )));
    }
    let ti = t.dim(i);
    let comps: Vec<usize> = t
        .dims()
        .iter()
        .enumerate()
        .map(|(j, &tj)| {
            let slack = 2 * ti.abs_diff(tj);
            match which {
                Extremum::Min => v.saturating_sub(slack),
                Extremum::Max => t.cap(j).min(v + slack),
            }
        })
        .collect();
    let sum = comps.iter().sum();
    Ok((DistanceVector::trusted(comps, t), sum))
}

/// Smallest (`lo`) and largest (`hi`) value of the `index`-th component over
/// all distance vectors with a given flag distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentRange {
    pub index: usize,
    pub lo: usize,
    pub hi: usize,
}

/// Component range at 1-based position `i` for flag distance `d`.
pub fn component_range(d: usize, t: &TypeVector, i: usize) -> Result<ComponentRange> {
    if i == 0 || i > t.len() {
        return Err(Error::validation(format!(
            "position {i} outside 1..={} for type {t}",
            t.len()
        )));
    }
    Ok(component_ranges(d, t)?[i - 1])
}

/// Component ranges at every position, from a single enumeration pass.
pub fn component_ranges(d: usize, t: &TypeVector) -> Result<Vec<ComponentRange>> {
    let vectors = enumerate_distance_vectors(d, t)?;
    let mut ranges: Vec<ComponentRange> = (0..t.len())
        .map(|j| ComponentRange {
            index: j + 1,
            lo: usize::MAX,
            hi: 0,
        })
        .collect();
    for v in &vectors {
        for (range, &c) in ranges.iter_mut().zip(v.comps()) {
            range.lo = range.lo.min(c);
            range.hi = range.hi.max(c);
        }
    }
    Ok(ranges)
}
