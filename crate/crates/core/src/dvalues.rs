//! Largest flag distances between flags that share prescribed subspaces.
//!
//! For a zero pattern `(i_1, ..., i_M)` the value `D(i_1, ..., i_M)` is the
//! largest flag distance between two flags of type `t` that agree at the
//! positions `i_1, ..., i_M`. Its vector has `j`-th component
//! `min{2 t_j, 2 (n - t_j), 2 |t_j - t_{i_1}|, ..., 2 |t_j - t_{i_M}|}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::distvec::{
    component_cap, full_max_distance, max_flag_distance_for,
    parse_index_list, write_tuple, DistanceVector, TypeVector,
};
use crate::exec::{map_ordered, Execution};
use crate::{Error, Result};

/// Strictly increasing 1-based positions `(i_1, ..., i_M)`, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZeroPattern {
    positions: Vec<usize>,
}

impl ZeroPattern {
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.first() == Some(&0) {
            return Err(Error::validation("pattern positions are 1-based"));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::validation(format!(
                "pattern {positions:?} is not strictly increasing"
            )));
        }
        Ok(Self { positions })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The pattern `(1, ..., m)`.
    pub fn prefix(m: usize) -> Self {
        Self {
            positions: (1..=m).collect(),
        }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Checks that every position lies in `1..=r` for type `t`.
    pub fn check_for(&self, t: &TypeVector) -> Result<()> {
        match self.positions.last() {
            Some(&last) if last > t.len() => Err(Error::validation(format!(
                "pattern {self} exceeds the length {} of type {t}",
                t.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Dimensions `(t_{i_1}, ..., t_{i_M})` selected by this pattern.
    pub fn dims_in(&self, t: &TypeVector) -> Vec<usize> {
        self.positions.iter().map(|&i| t.dim(i)).collect()
    }
}

impl fmt::Display for ZeroPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.positions)
    }
}

impl FromStr for ZeroPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_index_list(s)?)
    }
}

/// All size-`m` patterns over `r` positions in lexicographic order.
pub fn patterns_of_size(r: usize, m: usize) -> impl Iterator<Item = ZeroPattern> {
    (1..=r)
        .combinations(m)
        .map(|positions| ZeroPattern { positions })
}

/// The vector `D(i_1, ..., i_M)` and its value. The empty pattern gives the
/// global maximum vector, the full pattern the zero vector.
pub fn max_distance_with_zeros(t: &TypeVector, z: &ZeroPattern) -> Result<(DistanceVector, usize)> {
    z.check_for(t)?;
    let zero_dims = z.dims_in(t);
    let comps: Vec<usize> = t
        .dims()
        .iter()
        .map(|&tj| {
            zero_dims
                .iter()
                .map(|&tz| 2 * tj.abs_diff(tz))
                .fold(component_cap(tj, t.ambient()), usize::min)
        })
        .collect();
    let value = comps.iter().sum();
    Ok((DistanceVector::trusted(comps, t), value))
}

/// One piece of a split: the dimensions strictly between two consecutive
/// zeros, shifted down, inside an ambient space of the gap's size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPart {
    pub dims: Vec<usize>,
    pub ambient: usize,
}

impl SplitPart {
    /// `D^(dims, ambient)`, zero when the part is empty.
    pub fn max_distance(&self) -> usize {
        max_flag_distance_for(&self.dims, self.ambient)
    }

    /// The part as a type vector, or `None` when it has no dimensions.
    pub fn subtype(&self) -> Option<TypeVector> {
        if self.dims.is_empty() {
            None
        } else {
            TypeVector::new(self.dims.clone(), self.ambient).ok()
        }
    }
}

impl fmt::Display for SplitPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_tuple(f, &self.dims)?;
        write!(f, ",{})", self.ambient)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub parts: Vec<SplitPart>,
}

impl SplitDecomposition {
    pub fn total(&self) -> usize {
        self.parts.iter().map(SplitPart::max_distance).sum()
    }
}

/// Splits `t` at the zero positions into `M + 1` subtypes with ambients
/// `t_{i_1}, t_{i_2} - t_{i_1}, ..., n - t_{i_M}`.
pub fn split_decomposition(t: &TypeVector, z: &ZeroPattern) -> Result<SplitDecomposition> {
    if z.is_empty() {
        return Err(Error::domain("a split needs at least one zero position"));
    }
    z.check_for(t)?;
    let dims = t.dims();
    let mut cuts = vec![(0usize, 0usize)];
    cuts.extend(z.positions().iter().map(|&i| (i, dims[i - 1])));
    cuts.push((t.len() + 1, t.ambient()));
    let parts = cuts
        .windows(2)
        .map(|w| {
            let (lo_pos, lo_dim) = w[0];
            let (hi_pos, hi_dim) = w[1];
            SplitPart {
                dims: dims[lo_pos..hi_pos - 1].iter().map(|&d| d - lo_dim).collect(),
                ambient: hi_dim - lo_dim,
            }
        })
        .collect();
    Ok(SplitDecomposition { parts })
}

/// Gaps `i_1, i_2 - i_1, ..., n - i_M` of a full-type pattern, in pattern
/// order.
pub fn difference_sequence(n: usize, z: &ZeroPattern) -> Result<Vec<usize>> {
    if z.positions().last().is_some_and(|&i| i >= n) {
        return Err(Error::validation(format!(
            "pattern {z} does not fit the full type on n = {n}"
        )));
    }
    let mut prev = 0;
    let mut out: Vec<usize> = z
        .positions()
        .iter()
        .map(|&i| {
            let gap = i - prev;
            prev = i;
            gap
        })
        .collect();
    out.push(n - prev);
    Ok(out)
}

/// The sorted multiset of gaps. Equal multisets give equal D values; the
/// converse fails.
pub fn canonical_difference_multiset(n: usize, z: &ZeroPattern) -> Result<Vec<usize>> {
    let mut diffs = difference_sequence(n, z)?;
    diffs.sort_unstable();
    Ok(diffs)
}

/// Full-type patterns of size `m` whose gap sequence is already sorted. Every
/// multiset of gaps occurs exactly once.
pub fn canonical_patterns(n: usize, m: usize) -> Vec<ZeroPattern> {
    if n < 2 {
        return Vec::new();
    }
    patterns_of_size(n - 1, m)
        .filter(|z| {
            difference_sequence(n, z)
                .map(|d| d.windows(2).all(|w| w[0] <= w[1]))
                .unwrap_or(false)
        })
        .collect()
}

/// Closed form of `D(i)^n` for the full type.
pub fn explicit_di_full(n: usize, i: usize) -> Result<usize> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::domain(format!("index {i} outside 1..={}", n.saturating_sub(1))));
    }
    let s = i * i + (n - i) * (n - i);
    Ok(match (n.is_multiple_of(2), i.is_multiple_of(2)) {
        (true, true) => s / 2,
        (true, false) => (s - 2) / 2,
        (false, _) => (s - 1) / 2,
    })
}

/// Result of maximizing `D(z)` over all patterns of a fixed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMax {
    /// Lexicographically smallest achieving pattern.
    pub pattern: ZeroPattern,
    pub value: usize,
    /// Number of achieving patterns; `None` when the closed form was used.
    pub count: Option<usize>,
}

/// Maximum of `D(z)` over patterns of size `m`.
pub fn max_over_patterns(t: &TypeVector, m: usize) -> Result<PatternMax> {
    max_over_patterns_with(t, m, Execution::default())
}

pub fn max_over_patterns_with(t: &TypeVector, m: usize, exec: Execution) -> Result<PatternMax> {
    if m == 0 || m > t.len() {
        return Err(Error::domain(format!(
            "pattern size {m} outside 1..={} for type {t}",
            t.len()
        )));
    }
    if t.is_full() {
        return Ok(PatternMax {
            pattern: ZeroPattern::prefix(m),
            value: full_max_distance(t.ambient() - m),
            count: None,
        });
    }
    let patterns: Vec<ZeroPattern> = patterns_of_size(t.len(), m).collect();
    let values = map_ordered(exec, &patterns, |z| {
        max_distance_with_zeros(t, z).map(|(_, v)| v).unwrap_or(0)
    });
    let best = values.iter().copied().max().unwrap_or(0);
    let first = values.iter().position(|&v| v == best).unwrap_or(0);
    Ok(PatternMax {
        pattern: patterns[first].clone(),
        value: best,
        count: Some(values.iter().filter(|&&v| v == best).count()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(n: usize) -> TypeVector {
        TypeVector::full(n).unwrap()
    }

    fn ty(dims: &[usize], n: usize) -> TypeVector {
        TypeVector::new(dims.to_vec(), n).unwrap()
    }

    fn z(p: &[usize]) -> ZeroPattern {
        ZeroPattern::new(p.to_vec()).unwrap()
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("2,3".parse::<ZeroPattern>().unwrap(), z(&[2, 3]));
        assert_eq!("(1,2,4)".parse::<ZeroPattern>().unwrap(), z(&[1, 2, 4]));
        assert!("3,2".parse::<ZeroPattern>().is_err());
        assert!("0,2".parse::<ZeroPattern>().is_err());
        assert_eq!(z(&[1, 3]).to_string(), "(1,3)");
    }

    #[test]
    fn max_distance_examples() {
        let (v, val) = max_distance_with_zeros(&full(7), &z(&[3])).unwrap();
        assert_eq!((v.comps(), val), (&[2, 2, 0, 2, 4, 2][..], 12));
        assert_eq!(max_distance_with_zeros(&full(7), &z(&[1, 3, 4])).unwrap().1, 6);
        let t = ty(&[1, 3, 5, 6, 8, 10, 11], 12);
        let (v, val) = max_distance_with_zeros(&t, &z(&[3, 5])).unwrap();
        assert_eq!((v.comps(), val), (&[2, 4, 0, 2, 0, 4, 2][..], 14));
        let (v, val) = max_distance_with_zeros(&t, &ZeroPattern::prefix(7)).unwrap();
        assert_eq!((v.comps(), val), (&[0; 7][..], 0));
        let (_, val) = max_distance_with_zeros(&full(7), &ZeroPattern::empty()).unwrap();
        assert_eq!(val, 24);
        assert!(max_distance_with_zeros(&full(4), &z(&[4])).is_err());
    }

    #[test]
    fn split_examples() {
        let t = ty(&[1, 3, 5, 6, 8, 10, 11], 12);
        let s = split_decomposition(&t, &z(&[3, 5])).unwrap();
        assert_eq!(
            s.parts,
            vec![
                SplitPart { dims: vec![1, 3], ambient: 5 },
                SplitPart { dims: vec![1], ambient: 3 },
                SplitPart { dims: vec![2, 3], ambient: 4 },
            ]
        );
        assert_eq!(s.total(), 14);
        let s = split_decomposition(&full(7), &z(&[3])).unwrap();
        assert_eq!(s.parts[0], SplitPart { dims: vec![1, 2], ambient: 3 });
        assert_eq!(s.parts[1], SplitPart { dims: vec![1, 2, 3], ambient: 4 });
        assert_eq!(s.total(), full_max_distance(3) + full_max_distance(4));
        let s = split_decomposition(&full(7), &z(&[1, 2])).unwrap();
        assert_eq!(s.parts[0].max_distance(), 0);
        assert_eq!(s.parts[1].max_distance(), 0);
        assert!(s.parts[0].subtype().is_none());
        assert!(matches!(
            split_decomposition(&full(7), &ZeroPattern::empty()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(canonical_difference_multiset(7, &z(&[1, 3, 6])).unwrap(), vec![1, 1, 2, 3]);
        assert_eq!(canonical_difference_multiset(8, &z(&[3])).unwrap(), vec![3, 5]);
        assert_eq!(canonical_difference_multiset(8, &z(&[4])).unwrap(), vec![4, 4]);
        assert_eq!(canonical_difference_multiset(7, &ZeroPattern::empty()).unwrap(), vec![7]);
        let f8 = full(8);
        assert_eq!(max_distance_with_zeros(&f8, &z(&[3])).unwrap().1, 16);
        assert_eq!(max_distance_with_zeros(&f8, &z(&[4])).unwrap().1, 16);
    }

    #[test]
    fn canonical_pattern_counts() {
        let counts: Vec<usize> = (1..=6).map(|m| canonical_patterns(7, m).len()).collect();
        assert_eq!(counts, vec![3, 4, 3, 2, 1, 1]);
        assert_eq!(canonical_patterns(7, 2)[3], z(&[2, 4]));
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(explicit_di_full(7, 1).unwrap(), 18);
        assert_eq!(explicit_di_full(7, 2).unwrap(), 14);
        assert_eq!(explicit_di_full(8, 4).unwrap(), 16);
        assert!(explicit_di_full(7, 7).is_err());
        assert!(explicit_di_full(7, 0).is_err());
    }

    #[test]
    fn pattern_max_examples() {
        let m = max_over_patterns(&full(7), 2).unwrap();
        assert_eq!((m.pattern, m.value), (z(&[1, 2]), 12));
        assert_eq!(max_over_patterns(&full(9), 8).unwrap().value, 0);
        let m = max_over_patterns(&ty(&[1, 3, 5, 6], 7), 1).unwrap();
        assert_eq!((m.pattern, m.value, m.count), (z(&[1]), 10, Some(2)));
        assert!(max_over_patterns(&full(7), 0).is_err());
        assert!(max_over_patterns(&full(7), 7).is_err());
    }
}
