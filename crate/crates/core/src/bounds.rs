//! Disjointness certificates and upper bounds on the size of flag codes.
//!
//! A flag code of type `t` with minimum distance `d > D(i_1, ..., i_M)` is
//! `(i_1, ..., i_M)`-disjoint, so it injects into the flag variety of type
//! `(t_{i_1}, ..., t_{i_M})`. When a single position qualifies the projected
//! code is a constant dimension code with distance at least `bar-d_i`, which
//! gives the refined bound `A_q(n, bar-d_i, t_i)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::distvec::{component_ranges, max_flag_distance, TypeVector};
use crate::dvalues::{max_distance_with_zeros, max_over_patterns, ZeroPattern};
use crate::exec::{map_ordered, Execution};
use crate::qcalc::{compare_bounds, gaussian_binomial, variety_size_for_dims, BoundOrder, QPolynomial};
use crate::{Error, Result};

/// Which result a certificate comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `|F_q((t_{i_1}, ..., t_{i_M}), n)|` for a disjointness pattern.
    Variety,
    /// The variety bound with a single position, `|G_q(t_i, n)|`.
    Grassmannian,
    /// `A_q(n, bar-d_i, t_i)` for a position with `d > D(i)`.
    Refined,
    /// The full-type form scanning every `j` in `[i, n - i]`.
    RefinedFull,
}

impl Theorem {
    pub fn is_refined(self) -> bool {
        matches!(self, Theorem::Refined | Theorem::RefinedFull)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Variety => "variety",
            Theorem::Grassmannian => "grassmannian",
            Theorem::Refined => "refined",
            Theorem::RefinedFull => "refined-full",
        })
    }
}

/// How candidate bounds are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Comparison {
    /// Dominance for all `q >= 2`, falling back to the value at `q = 2` when
    /// the candidates cross.
    #[default]
    Symbolic,
    /// Exact evaluation at a given field size.
    At(u64),
}

impl Comparison {
    /// Ordering of `a` against `b`, plus whether the two cross over in `q`.
    pub fn order(self, a: &QPolynomial, b: &QPolynomial) -> (Ordering, bool) {
        match self {
            Comparison::Symbolic => match compare_bounds(a, b) {
                BoundOrder::Equal => (Ordering::Equal, false),
                BoundOrder::Less => (Ordering::Less, false),
                BoundOrder::Greater => (Ordering::Greater, false),
                BoundOrder::Crossing(o) => (o, true),
            },
            Comparison::At(q) => {
                let q = BigInt::from(q);
                (a.eval(&q).cmp(&b.eval(&q)), false)
            }
        }
    }
}

/// Where a constant dimension code bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntrySource {
    Override,
    Builtin,
    Grassmannian,
    Fallback,
}

/// An upper bound on `A_q(n, d, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBoundEntry {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub bound: QPolynomial,
    pub source: String,
    pub origin: EntrySource,
}

impl fmt::Display for SubspaceBoundEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_q({},{},{}) <= {} [{}]", self.n, self.d, self.k, self.bound, self.source)
    }
}

fn check_subspace_params(n: usize, d: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::domain(format!("dimension {k} outside 1..{n}")));
    }
    let cap = 2 * k.min(n - k);
    if !d.is_multiple_of(2) || d < 2 || d > cap {
        return Err(Error::domain(format!(
            "subspace distance {d} is not an even value in [2, {cap}] for k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Upper bounds on `A_q(n, d, k)` from user overrides, shipped exact values,
/// the trivial `d = 2` case and a generic Singleton-type fallback.
///
/// Keys are stored with `k <= n - k`; lookups are symmetric in `k <-> n - k`.
#[derive(Debug, Clone)]
pub struct SubspaceBoundProvider {
    builtin: BTreeMap<(usize, usize, usize), SubspaceBoundEntry>,
    overrides: BTreeMap<(usize, usize, usize), SubspaceBoundEntry>,
}

impl Default for SubspaceBoundProvider {
    fn default() -> Self {
        Self::new()
    }
}

impl SubspaceBoundProvider {
    /// The shipped table.
    pub fn new() -> Self {
        let mut builtin = BTreeMap::new();
        let shipped: [(usize, usize, usize, &[i64], &str); 3] = [
            (
                7,
                6,
                3,
                &[1, 0, 0, 0, 1],
                "exact value, tables of subspace codes, Th. 3.43",
            ),
            (
                6,
                4,
                2,
                &[1, 0, 1, 0, 1],
                "exact value, size of a 2-spread of F_q^6",
            ),
            (
                7,
                4,
                2,
                &[0, 1, 0, 1, 0, 1],
                "partial spread bound floor((q^7-1)/(q^2-1)), standard bound, external",
            ),
        ];
        for (n, d, k, coeffs, source) in shipped {
            builtin.insert(
                (n, d, k),
                SubspaceBoundEntry {
                    n,
                    d,
                    k,
                    bound: QPolynomial::from_i64s(coeffs),
                    source: source.to_string(),
                    origin: EntrySource::Builtin,
                },
            );
        }
        Self {
            builtin,
            overrides: BTreeMap::new(),
        }
    }

    /// A provider with no shipped entries; only `d = 2` and the fallback.
    pub fn without_builtins() -> Self {
        Self {
            builtin: BTreeMap::new(),
            overrides: BTreeMap::new(),
        }
    }

    /// Reads override lines `n,d,k,<polynomial>,<citation>`. Returns the
    /// warnings produced while merging.
    pub fn load_overrides(&mut self, text: &str) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.splitn(5, ',').map(str::trim).collect();
            if fields.len() != 5 {
                return Err(Error::parse(
                    line_no,
                    "expected n,d,k,<polynomial>,<citation>",
                ));
            }
            let int = |s: &str, what: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("{what} {s:?} is not an integer")))
            };
            let (n, d, k) = (int(fields[0], "n")?, int(fields[1], "d")?, int(fields[2], "k")?);
            check_subspace_params(n, d, k).map_err(|e| Error::parse(line_no, e.to_string()))?;
            let bound: QPolynomial = fields[3]
                .parse()
                .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
            if !positive_from_two(&bound) {
                return Err(Error::parse(
                    line_no,
                    format!("bound {bound} is not positive for every q >= 2"),
                ));
            }
            if fields[4].is_empty() {
                return Err(Error::parse(line_no, "missing citation"));
            }
            let key = (n, d, k.min(n - k));
            let entry = SubspaceBoundEntry {
                n,
                d,
                k,
                bound,
                source: fields[4].to_string(),
                origin: EntrySource::Override,
            };
            match self.overrides.get(&key) {
                Some(old) => {
                    let two = BigInt::from(2);
                    let keep_new = entry.bound.eval(&two) < old.bound.eval(&two);
                    warnings.push(format!(
                        "line {line_no}: duplicate override for A_q({n},{d},{}); keeping {}",
                        key.2,
                        if keep_new { &entry.bound } else { &old.bound }
                    ));
                    if keep_new {
                        self.overrides.insert(key, entry);
                    }
                }
                None => {
                    self.overrides.insert(key, entry);
                }
            }
        }
        Ok(warnings)
    }

    pub fn overrides(&self) -> impl Iterator<Item = &SubspaceBoundEntry> {
        self.overrides.values()
    }

    /// All known bounds for `(n, d, k)`, in priority order.
    pub fn candidates(&self, n: usize, d: usize, k: usize) -> Result<Vec<SubspaceBoundEntry>> {
        check_subspace_params(n, d, k)?;
        let key = (n, d, k.min(n - k));
        let relabel = |e: &SubspaceBoundEntry| SubspaceBoundEntry {
            k,
            ..e.clone()
        };
        let mut out = Vec::new();
        out.extend(self.overrides.get(&key).map(relabel));
        out.extend(self.builtin.get(&key).map(relabel));
        if d == 2 {
            out.push(SubspaceBoundEntry {
                n,
                d,
                k,
                bound: gaussian_binomial(n, k),
                source: "d = 2 admits every subspace, |G_q(k,n)|".to_string(),
                origin: EntrySource::Grassmannian,
            });
        }
        let delta = d / 2;
        out.push(SubspaceBoundEntry {
            n,
            d,
            k,
            bound: gaussian_binomial(n - delta + 1, k.max(n - k)),
            source: "Singleton-type bound [n-d/2+1, max(k,n-k)]_q, standard bound, external"
                .to_string(),
            origin: EntrySource::Fallback,
        });
        Ok(out)
    }

    /// Smallest known bound on `A_q(n, d, k)` in symbolic order.
    pub fn lookup(&self, n: usize, d: usize, k: usize) -> Result<SubspaceBoundEntry> {
        self.lookup_with(n, d, k, Comparison::Symbolic)
    }

    pub fn lookup_with(
        &self,
        n: usize,
        d: usize,
        k: usize,
        cmp: Comparison,
    ) -> Result<SubspaceBoundEntry> {
        let mut best: Option<SubspaceBoundEntry> = None;
        for cand in self.candidates(n, d, k)? {
            best = match best {
                Some(b) if cmp.order(&cand.bound, &b.bound).0 != Ordering::Less => Some(b),
                _ => Some(cand),
            };
        }
        Ok(best.expect("the fallback is always present"))
    }
}

/// Certifies `p(q) > 0` for every `q >= 2` through the coefficients of
/// `p(x + 2)`.
fn positive_from_two(p: &QPolynomial) -> bool {
    let shifted = p.taylor_shift(2);
    shifted.has_nonnegative_coefficients() && shifted.coeff(0).is_positive()
}

/// A candidate that could not be ranked against the selected bound for every
/// `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternative {
    pub theorem: Theorem,
    pub pattern: ZeroPattern,
    pub bound: QPolynomial,
}

/// An upper bound on `A_q^f(n, d, t)` together with its justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub bound: QPolynomial,
    pub theorem: Theorem,
    /// Disjointness pattern, or the single position `(i)` for refined bounds.
    /// Empty only for the trivial variety bound.
    pub pattern: ZeroPattern,
    /// Dimensions selected by `pattern`.
    pub dims: Vec<usize>,
    /// The value `D(pattern)` that `d` exceeds.
    pub justification: usize,
    /// `bar-d_i` for refined bounds.
    pub bar_d: Option<usize>,
    pub provenance: Vec<SubspaceBoundEntry>,
    pub alternatives: Vec<Alternative>,
}

impl BoundCertificate {
    /// True when a refined bound rests on the generic fallback.
    pub fn uses_fallback(&self) -> bool {
        self.provenance.iter().any(|e| e.origin == EntrySource::Fallback)
    }

    /// The bound evaluated at a field size.
    pub fn evaluated(&self, q: u64) -> Result<crate::qcalc::BigCount> {
        crate::qcalc::evaluate(&self.bound, q)
    }
}

/// `d > D(z)`: every code with minimum distance `d` is `z`-disjoint.
pub fn disjointness_implied(d: usize, t: &TypeVector, z: &ZeroPattern) -> Result<bool> {
    Ok(d > max_distance_with_zeros(t, z)?.1)
}

/// `d > max_z D(z)` over size-`m` patterns: every such code is `m`-disjoint.
pub fn m_disjointness_implied(d: usize, t: &TypeVector, m: usize) -> Result<bool> {
    Ok(d > max_over_patterns(t, m)?.value)
}

/// Lower bound on the flag distance of an `M`-disjoint code from the subspace
/// distances of its projected codes: at least `r - M + 1` of them are nonzero,
/// so the sum of the smallest `r - M + 1` nonzero entries is a floor. With too
/// few nonzero entries the universal floor `2 (r - M + 1)` is returned.
pub fn min_distance_lower_bound_for_disjoint(projected: &[usize], m: usize) -> Result<usize> {
    let r = projected.len();
    if m == 0 || m > r {
        return Err(Error::domain(format!("M = {m} outside 1..={r}")));
    }
    if let Some(&odd) = projected.iter().find(|&&x| x % 2 != 0) {
        return Err(Error::validation(format!("subspace distance {odd} is odd")));
    }
    let need = r - m + 1;
    let mut nonzero: Vec<usize> = projected.iter().copied().filter(|&x| x > 0).collect();
    if nonzero.len() < need {
        return Ok(2 * need);
    }
    nonzero.sort_unstable();
    Ok(nonzero[..need].iter().sum())
}

fn check_bound_distance(d: usize, t: &TypeVector) -> Result<()> {
    let max = max_flag_distance(t);
    if !d.is_multiple_of(2) || d < 2 || d > max {
        return Err(Error::domain(format!(
            "flag distance {d} is not an even value in [2, {max}] for type {t} on n = {}",
            t.ambient()
        )));
    }
    Ok(())
}

/// `D` value of the pattern `z` extended by every position after its last.
fn d_with_tail_filled(t: &TypeVector, positions: &[usize]) -> usize {
    let start = positions.last().copied().unwrap_or(0);
    let mut all = positions.to_vec();
    all.extend(start + 1..=t.len());
    zeros_value(t, &all)
}

fn zeros_value(t: &TypeVector, positions: &[usize]) -> usize {
    let n = t.ambient();
    t.dims()
        .iter()
        .map(|&tj| {
            positions
                .iter()
                .map(|&i| 2 * tj.abs_diff(t.dim(i)))
                .fold(2 * tj.min(n - tj), usize::min)
        })
        .sum()
}

/// Inclusion-minimal patterns with `d > D(z)`, in lexicographic order.
///
/// Adding a position to a pattern never raises `D(z)` and strictly enlarges
/// the variety, so only inclusion-minimal qualifying patterns can be optimal.
fn minimal_qualifying_patterns(d: usize, t: &TypeVector, exec: Execution) -> Vec<(Vec<usize>, usize)> {
    fn walk(d: usize, t: &TypeVector, prefix: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        let value = zeros_value(t, prefix);
        if d > value {
            out.push((prefix.clone(), value));
            return;
        }
        let start = prefix.last().copied().unwrap_or(0) + 1;
        for next in start..=t.len() {
            prefix.push(next);
            if d > d_with_tail_filled(t, prefix) {
                walk(d, t, prefix, out);
            }
            prefix.pop();
        }
    }
    let firsts: Vec<usize> = (1..=t.len()).collect();
    map_ordered(exec, &firsts, |&first| {
        let mut out = Vec::new();
        let mut prefix = vec![first];
        if d > d_with_tail_filled(t, &prefix) {
            walk(d, t, &mut prefix, &mut out);
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Gap multiset of the chain `0 < dims < n`; the variety size only depends on
/// it.
fn gap_key(dims: &[usize], n: usize) -> Vec<usize> {
    let mut prev = 0;
    let mut gaps: Vec<usize> = dims
        .iter()
        .map(|&x| {
            let g = x - prev;
            prev = x;
            g
        })
        .collect();
    gaps.push(n - prev);
    gaps.sort_unstable();
    gaps
}

/// Picks the smallest bound among `(theorem, pattern, bound)` candidates;
/// ties go to the earliest candidate. Candidates crossing the winner are
/// returned as alternatives.
fn select<T: Clone>(cands: &[(T, QPolynomial)], cmp: Comparison) -> Option<(usize, Vec<usize>)> {
    let mut best: Option<usize> = None;
    for (idx, (_, bound)) in cands.iter().enumerate() {
        best = match best {
            Some(b) if cmp.order(bound, &cands[b].1).0 != Ordering::Less => Some(b),
            _ => Some(idx),
        };
    }
    let best = best?;
    let crossing = cands
        .iter()
        .enumerate()
        .filter(|(idx, (_, bound))| *idx != best && cmp.order(bound, &cands[best].1).1)
        .map(|(idx, _)| idx)
        .collect();
    Some((best, crossing))
}

/// Best bound from disjointness patterns: the smallest flag variety
/// `|F_q((t_{i_1}, ..., t_{i_M}), n)|` over patterns with `d > D(z)`. Ties go
/// to the lexicographically smallest pattern.
pub fn variety_bound(d: usize, t: &TypeVector) -> Result<BoundCertificate> {
    variety_bound_with(d, t, Comparison::Symbolic, Execution::default())
}

pub fn variety_bound_with(
    d: usize,
    t: &TypeVector,
    cmp: Comparison,
    exec: Execution,
) -> Result<BoundCertificate> {
    check_bound_distance(d, t)?;
    let n = t.ambient();
    let mut patterns = minimal_qualifying_patterns(d, t, exec);
    patterns.sort();
    if patterns.is_empty() {
        let dims = t.dims().to_vec();
        return Ok(BoundCertificate {
            bound: variety_size_for_dims(&dims, n),
            theorem: Theorem::Variety,
            pattern: ZeroPattern::empty(),
            dims,
            justification: max_flag_distance(t),
            bar_d: None,
            provenance: Vec::new(),
            alternatives: Vec::new(),
        });
    }

    let mut by_key: HashMap<Vec<usize>, QPolynomial> = HashMap::new();
    let mut keys: Vec<Vec<usize>> = patterns
        .iter()
        .map(|(p, _)| gap_key(&p.iter().map(|&i| t.dim(i)).collect::<Vec<_>>(), n))
        .collect();
    keys.sort();
    keys.dedup();
    let polys = map_ordered(exec, &keys, |key| {
        let mut dims = Vec::with_capacity(key.len() - 1);
        let mut acc = 0;
        for g in &key[..key.len() - 1] {
            acc += g;
            dims.push(acc);
        }
        variety_size_for_dims(&dims, n)
    });
    by_key.extend(keys.into_iter().zip(polys));

    let cands: Vec<((Vec<usize>, usize), QPolynomial)> = patterns
        .into_iter()
        .map(|(p, value)| {
            let dims: Vec<usize> = p.iter().map(|&i| t.dim(i)).collect();
            let poly = by_key[&gap_key(&dims, n)].clone();
            ((p, value), poly)
        })
        .collect();
    let (best, crossing) = select(&cands, cmp).expect("nonempty");
    let ((positions, value), bound) = cands[best].clone();
    let theorem = if positions.len() == 1 {
        Theorem::Grassmannian
    } else {
        Theorem::Variety
    };
    let alternatives = dedup_alternatives(
        crossing
            .into_iter()
            .map(|idx| {
                let ((p, _), bound) = &cands[idx];
                Alternative {
                    theorem: if p.len() == 1 {
                        Theorem::Grassmannian
                    } else {
                        Theorem::Variety
                    },
                    pattern: ZeroPattern::new(p.clone()).expect("sorted positions"),
                    bound: bound.clone(),
                }
            })
            .collect(),
    );
    let pattern = ZeroPattern::new(positions).expect("sorted positions");
    Ok(BoundCertificate {
        bound,
        theorem,
        dims: pattern.dims_in(t),
        pattern,
        justification: value,
        bar_d: None,
        provenance: Vec::new(),
        alternatives,
    })
}

fn dedup_alternatives(mut alts: Vec<Alternative>) -> Vec<Alternative> {
    let mut seen: Vec<QPolynomial> = Vec::new();
    alts.retain(|a| {
        if seen.contains(&a.bound) {
            false
        } else {
            seen.push(a.bound.clone());
            true
        }
    });
    alts
}

/// Best refined bound `A_q(n, bar-d_i, t_i)` over positions with `d > D(i)`.
/// Ties go to the smallest position.
pub fn refined_bound(
    d: usize,
    t: &TypeVector,
    provider: &SubspaceBoundProvider,
) -> Result<BoundCertificate> {
    refined_bound_with(d, t, provider, Comparison::Symbolic)
}

pub fn refined_bound_with(
    d: usize,
    t: &TypeVector,
    provider: &SubspaceBoundProvider,
    cmp: Comparison,
) -> Result<BoundCertificate> {
    check_bound_distance(d, t)?;
    let n = t.ambient();
    let qualifying: Vec<(usize, usize)> = (1..=t.len())
        .filter_map(|i| {
            let value = zeros_value(t, &[i]);
            (d > value).then_some((i, value))
        })
        .collect();
    if qualifying.is_empty() {
        return Err(Error::Precondition(format!(
            "no position i has d = {d} > D(i) for type {t}; use the variety bound"
        )));
    }
    let ranges = component_ranges(d, t)?;
    let theorem = if t.is_full() {
        Theorem::RefinedFull
    } else {
        Theorem::Refined
    };
    let mut cands = Vec::with_capacity(qualifying.len());
    for &(i, value) in &qualifying {
        let bar_d = ranges[i - 1].lo;
        debug_assert!(bar_d >= 2);
        let entry = provider.lookup_with(n, bar_d, t.dim(i), cmp)?;
        let bound = entry.bound.clone();
        cands.push(((i, value, bar_d, entry), bound));
    }
    let (best, crossing) = select(&cands, cmp).expect("nonempty");
    let ((i, value, bar_d, entry), bound) = cands[best].clone();
    let alternatives = dedup_alternatives(
        crossing
            .into_iter()
            .map(|idx| Alternative {
                theorem,
                pattern: ZeroPattern::new(vec![cands[idx].0 .0]).expect("single position"),
                bound: cands[idx].1.clone(),
            })
            .collect(),
    );
    Ok(BoundCertificate {
        bound,
        theorem,
        pattern: ZeroPattern::new(vec![i]).expect("single position"),
        dims: vec![t.dim(i)],
        justification: value,
        bar_d: Some(bar_d),
        provenance: vec![entry],
        alternatives,
    })
}

/// The refined bound when it applies and is no worse than the variety bound.
pub fn refined_if_useful(
    d: usize,
    t: &TypeVector,
    provider: &SubspaceBoundProvider,
    cmp: Comparison,
    variety: &BoundCertificate,
) -> Result<Option<BoundCertificate>> {
    match refined_bound_with(d, t, provider, cmp) {
        Ok(refined) => {
            let (ord, _) = cmp.order(&refined.bound, &variety.bound);
            Ok((ord != Ordering::Greater).then_some(refined))
        }
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The best certificate among the variety and refined bounds. The variety
/// bound wins ties.
pub fn best_bound(
    d: usize,
    t: &TypeVector,
    provider: &SubspaceBoundProvider,
    cmp: Comparison,
) -> Result<BoundCertificate> {
    let variety = variety_bound_with(d, t, cmp, Execution::default())?;
    let refined = refined_if_useful(d, t, provider, cmp, &variety)?;
    Ok(match refined {
        Some(r) if cmp.order(&r.bound, &variety.bound).0 == Ordering::Less => {
            let mut r = r;
            if cmp.order(&r.bound, &variety.bound).1 {
                r.alternatives.push(Alternative {
                    theorem: variety.theorem,
                    pattern: variety.pattern.clone(),
                    bound: variety.bound.clone(),
                });
            }
            r
        }
        _ => variety,
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

    fn p(s: &str) -> QPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn disjointness_examples() {
        let f7 = full(7);
        assert!(disjointness_implied(16, &f7, &z(&[2])).unwrap());
        assert!(!disjointness_implied(12, &f7, &z(&[3])).unwrap());
        assert!(!disjointness_implied(0, &f7, &z(&[1, 2, 3, 4, 5, 6])).unwrap());
        assert!(m_disjointness_implied(16, &f7, 2).unwrap());
        assert!(m_disjointness_implied(4, &f7, 5).unwrap());
        assert!(m_disjointness_implied(2, &ty(&[1, 3, 5, 6], 7), 4).unwrap());
        assert!(!m_disjointness_implied(12, &f7, 2).unwrap());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(min_distance_lower_bound_for_disjoint(&[2; 6], 1).unwrap(), 12);
        assert_eq!(min_distance_lower_bound_for_disjoint(&[2, 4, 4, 2], 2).unwrap(), 8);
        assert_eq!(min_distance_lower_bound_for_disjoint(&[2, 6, 4, 2], 4).unwrap(), 2);
        assert_eq!(min_distance_lower_bound_for_disjoint(&[0, 0, 4, 0], 2).unwrap(), 6);
        assert!(min_distance_lower_bound_for_disjoint(&[2, 2], 3).is_err());
        assert!(min_distance_lower_bound_for_disjoint(&[2, 2], 0).is_err());
        assert!(min_distance_lower_bound_for_disjoint(&[3, 2], 1).is_err());
    }

    #[test]
    fn variety_examples() {
        let c = variety_bound(8, &full(7)).unwrap();
        assert_eq!((c.pattern.clone(), c.justification), (z(&[1, 2, 4]), 6));
        assert_eq!(c.bound, variety_size_for_dims(&[1, 2, 4], 7));
        let t = ty(&[1, 3, 5, 6], 7);
        let c = variety_bound(10, &t).unwrap();
        assert_eq!(c.bound, gaussian_binomial(7, 5));
        assert_eq!(c.theorem, Theorem::Grassmannian);
        assert_eq!(c.pattern, z(&[3]));
        let c = variety_bound(2, &t).unwrap();
        assert_eq!(c.pattern, z(&[1, 2, 3, 4]));
        assert_eq!(c.bound, crate::qcalc::flag_variety_size(&t));
        assert!(variety_bound(0, &t).is_err());
        assert!(variety_bound(16, &t).is_err());
    }

    #[test]
    fn refined_examples() {
        let prov = SubspaceBoundProvider::new();
        let t = ty(&[1, 3, 5, 6], 7);
        let c = refined_bound(14, &t, &prov).unwrap();
        assert_eq!((c.bound.to_string(), c.pattern.clone(), c.bar_d), ("q^4+1".into(), z(&[2]), Some(6)));
        let c = refined_bound(16, &full(6), &prov).unwrap();
        assert_eq!(c.bound, p("q^4+q^2+1"));
        assert_eq!(c.theorem, Theorem::RefinedFull);
        let c = refined_bound(20, &full(7), &prov).unwrap();
        assert_eq!(c.bound, gaussian_binomial(7, 1));
        assert_eq!(c.pattern, z(&[1]));
        assert!(matches!(
            refined_bound(4, &full(7), &prov),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn provider_lookup_examples() {
        let prov = SubspaceBoundProvider::new();
        assert_eq!(prov.lookup(7, 2, 2).unwrap().bound, gaussian_binomial(7, 2));
        assert_eq!(prov.lookup(7, 6, 3).unwrap().bound, p("q^4+1"));
        assert_eq!(prov.lookup(7, 6, 4).unwrap().bound, p("q^4+1"));
        assert_eq!(prov.lookup(6, 4, 2).unwrap().bound, p("q^4+q^2+1"));
        let e = prov.lookup(7, 4, 3).unwrap();
        assert_eq!(e.origin, EntrySource::Fallback);
        assert!(prov.lookup(7, 3, 2).is_err());
        assert!(prov.lookup(7, 8, 3).is_err());
    }

    #[test]
    fn override_parsing() {
        let mut prov = SubspaceBoundProvider::without_builtins();
        let warnings = prov
            .load_overrides(
                "# comment\n\n7,6,3,q^4+1, exact\n7,6,4, q^4+q+1, weaker duplicate\n",
            )
            .unwrap();
        assert_eq!(warnings.len(), 1);
        assert_eq!(prov.lookup(7, 6, 3).unwrap().bound, p("q^4+1"));
        let err = prov.load_overrides("7,6,3,q^4+1,x\n7,5,3,q,bad\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = prov.load_overrides("7,6,3,q^^4,x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = prov.load_overrides("7,6,3,-q,x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = prov.load_overrides("7,6,3,q\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn best_bound_examples() {
        let prov = SubspaceBoundProvider::new();
        let c = best_bound(24, &full(7), &prov, Comparison::Symbolic).unwrap();
        assert_eq!(c.bound, p("q^4+1"));
        assert_eq!(c.pattern, z(&[3]));
        let c = best_bound(22, &full(7), &prov, Comparison::Symbolic).unwrap();
        assert_eq!(c.bound, p("q^5+q^3+q"));
        assert_eq!((c.pattern.clone(), c.bar_d), (z(&[2]), Some(4)));
        let c = best_bound(16, &full(7), &prov, Comparison::Symbolic).unwrap();
        assert_eq!(c.theorem, Theorem::Grassmannian);
        let c = best_bound(14, &ty(&[1, 3, 5, 6], 7), &prov, Comparison::At(2)).unwrap();
        assert_eq!(c.evaluated(2).unwrap().to_string(), "17");
    }
}
