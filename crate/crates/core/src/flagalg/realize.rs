//! Constructing a pair of flags with a prescribed distance vector.

use super::field::{check_prime, unit_vector, Echelon, PrimeFieldMatrix};
use super::objects::{distance_vector_of_pair, Flag};
use crate::distvec::DistanceVector;
use crate::{Error, Result};

/// Nested basis of one flag under construction, with its span.
struct Chain {
    rows: Vec<Vec<u32>>,
    span: Echelon,
}

impl Chain {
    fn new(p: u32) -> Self {
        Self {
            rows: Vec::new(),
            span: Echelon::new(p),
        }
    }

    fn push(&mut self, v: &[u32]) {
        let fresh = self.span.insert(v);
        debug_assert!(fresh);
        self.rows.push(v.to_vec());
    }

    /// Rows of `other` (in order) that leave the current span, up to `count`.
    fn extension_from(&self, other: &Chain, count: usize) -> Vec<Vec<u32>> {
        let mut probe = self.span.clone();
        let mut out = Vec::with_capacity(count);
        for row in &other.rows {
            if out.len() == count {
                break;
            }
            if probe.insert(row) {
                out.push(row.clone());
            }
        }
        out
    }
}

/// Earliest standard basis vectors outside `span`, up to `count`.
fn fresh_units(span: &Echelon, n: usize, count: usize) -> Vec<Vec<u32>> {
    let mut probe = span.clone();
    let mut out = Vec::with_capacity(count);
    for j in 0..n {
        if out.len() == count {
            break;
        }
        let e = unit_vector(n, j);
        if probe.insert(&e) {
            out.push(e);
        }
    }
    out
}

/// Two flags `F, F'` with `d(F, F') = v`, built inductively.
///
/// Write `v = 2w`. The first subspaces share `t_1 - w_1` unit vectors. At each
/// step `U` is `F_i + F'_i` plus fresh unit vectors, `dim U = t_{i+1} + w_{i+1}`,
/// and with `l = w_{i+1} - w_i`:
///
/// - `l >= 0`: `F` gains `a_1..a_l`, `F'` gains `b_1..b_l`, both gain the
///   shared `c_1..c_m`, `m = (t_{i+1} - t_i) - l`;
/// - `l < 0`: `F` grows to `V` by `-l` vectors of `F'_i` and `F'` to `V'` by
///   `-l` vectors of `F_i`, then both gain the same complement `W` of
///   `F_i + F'_i` in `U`.
pub fn realize_distance_vector(v: &DistanceVector, p: u64) -> Result<(Flag, Flag)> {
    let p = check_prime(p)?;
    let ty = v.type_vector();
    let comps: Vec<i64> = v.comps().iter().map(|&c| c as i64).collect();
    if !crate::distvec::is_distance_vector(&comps, ty)? {
        return Err(Error::Precondition(format!("{v} is not a distance vector for type {ty}")));
    }
    let n = ty.ambient();
    let dims = ty.dims();
    let w: Vec<usize> = v.comps().iter().map(|&c| c / 2).collect();

    let mut f = Chain::new(p);
    let mut g = Chain::new(p);
    let mut sum = Echelon::new(p);

    let (t1, w1) = (dims[0], w[0]);
    for j in 0..t1 - w1 {
        let e = unit_vector(n, j);
        f.push(&e);
        g.push(&e);
        sum.insert(&e);
    }
    for j in t1 - w1..t1 {
        let e = unit_vector(n, j);
        f.push(&e);
        sum.insert(&e);
    }
    for j in t1..t1 + w1 {
        let e = unit_vector(n, j);
        g.push(&e);
        sum.insert(&e);
    }

    for i in 0..dims.len() - 1 {
        let step = dims[i + 1] - dims[i];
        let l = w[i + 1] as i64 - w[i] as i64;
        if l >= 0 {
            let l = l as usize;
            let m = step - l;
            let fresh = fresh_units(&sum, n, 2 * l + m);
            let (a, rest) = fresh.split_at(l);
            let (b, c) = rest.split_at(l);
            for x in a.iter().chain(c) {
                f.push(x);
            }
            for x in b.iter().chain(c) {
                g.push(x);
            }
            for x in &fresh {
                sum.insert(x);
            }
        } else {
            let k = (-l) as usize;
            let to_f = f.extension_from(&g, k);
            let to_g = g.extension_from(&f, k);
            let wspace = fresh_units(&sum, n, step - k);
            for x in to_f.iter().chain(&wspace) {
                f.push(x);
            }
            for x in to_g.iter().chain(&wspace) {
                g.push(x);
            }
            for x in &wspace {
                sum.insert(x);
            }
        }
    }

    let fm = PrimeFieldMatrix::from_rows(p, n, &f.rows);
    let gm = PrimeFieldMatrix::from_rows(p, n, &g.rows);
    let ff = Flag::from_nested_basis(&fm, ty)?;
    let gg = Flag::from_nested_basis(&gm, ty)?;
    debug_assert_eq!(&distance_vector_of_pair(&ff, &gg)?, v);
    Ok((ff, gg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distvec::TypeVector;

    fn round_trip(comps: &[usize], dims: &[usize], n: usize, p: u64) {
        let ty = TypeVector::new(dims.to_vec(), n).unwrap();
        let v = DistanceVector::new(comps.to_vec(), &ty).unwrap();
        let (f, g) = realize_distance_vector(&v, p).unwrap();
        assert_eq!(distance_vector_of_pair(&f, &g).unwrap(), v);
    }

    #[test]
    fn examples() {
        round_trip(&[0, 0, 0], &[1, 2, 3], 4, 2);
        round_trip(&[2, 0, 2], &[1, 2, 3], 4, 2);
        round_trip(&[2, 6, 2, 2], &[1, 3, 5, 6], 7, 2);
        round_trip(&[2, 4, 6, 6, 4, 2], &[1, 2, 3, 4, 5, 6], 7, 3);
    }

    #[test]
    fn zero_vector_gives_equal_flags() {
        let ty = TypeVector::full(4).unwrap();
        let (f, g) = realize_distance_vector(&DistanceVector::zero(&ty), 2).unwrap();
        assert_eq!(f, g);
    }
}
