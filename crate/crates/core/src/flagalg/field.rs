//! Linear algebra over a prime field `F_p`, `p < 2^16`.

use std::fmt;

use crate::{Error, Result};

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks that `p` is a prime below `2^16`.
pub fn check_prime(p: u64) -> Result<u32> {
    if p >= 1 << 16 || !is_prime(p as u32) {
        return Err(Error::validation(format!(
            "field size {p} is not a prime below 65536 (only prime fields are supported)"
        )));
    }
    Ok(p as u32)
}

#[inline]
fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let mut result = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(result, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    result
}

/// `row <- row - c * other` over `F_p`.
#[inline]
fn axpy(row: &mut [u32], c: u32, other: &[u32], p: u32) {
    if c == 0 {
        return;
    }
    let neg = p - c;
    for (x, &y) in row.iter_mut().zip(other) {
        *x = ((*x as u64 + neg as u64 * y as u64) % p as u64) as u32;
    }
}

/// Dense matrix over `F_p`, row-major, entries reduced into `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PrimeFieldMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from signed entries, reducing them mod `p`.
    pub fn from_entries(p: u64, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let p = check_prime(p)?;
        if entries.len() != rows * cols {
            return Err(Error::validation(format!(
                "{} entries do not fill a {rows} x {cols} matrix",
                entries.len()
            )));
        }
        let data = entries
            .iter()
            .map(|&x| x.rem_euclid(p as i64) as u32)
            .collect();
        Ok(Self { p, rows, cols, data })
    }

    pub(crate) fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&x| x % p));
        }
        Self {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> Self {
        Self {
            p: self.p,
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ((out.data[idx] as u64 + a as u64 * other.get(k, j) as u64)
                        % p as u64) as u32;
                }
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows removed, plus pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.p;
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            let Some(found) = (lead..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(lead, found);
            let scale = inv(rows[lead][c], p);
            for x in rows[lead].iter_mut() {
                *x = mul(*x, scale, p);
            }
            let pivot_row = rows[lead].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != lead {
                    let f = row[c];
                    axpy(row, f, &pivot_row, p);
                }
            }
            pivots.push(c);
            lead += 1;
            if lead == rows.len() {
                break;
            }
        }
        rows.truncate(lead);
        (Self::from_rows(p, self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[", self.p)?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained echelon basis of a span.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    p: u32,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(p: u32) -> Self {
        Self { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            let c = v[*pc];
            axpy(&mut v, c, row, self.p);
        }
        v
    }

    #[cfg(test)]
    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns false when it was already inside.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(r[pc], self.p);
        for x in r.iter_mut() {
            *x = mul(*x, s, self.p);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            axpy(row, c, &r, self.p);
        }
        self.rows.push((pc, r));
        true
    }
}

pub(crate) fn unit_vector(n: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}
