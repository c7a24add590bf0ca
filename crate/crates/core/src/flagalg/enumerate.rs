//! Exhaustive enumeration of Grassmannians and flag varieties over `F_p`.

use num_bigint::BigUint;

use super::field::{check_prime, PrimeFieldMatrix};
use super::objects::{Flag, Subspace};
use crate::distvec::TypeVector;
use crate::qcalc::{evaluate, flag_variety_size, gaussian_binomial, QPolynomial};
use crate::{Error, Result};

/// Default refusal threshold for enumerations.
pub const DEFAULT_SIZE_LIMIT: u64 = 10_000_000;

fn guard(what: String, size: &QPolynomial, p: u32, limit: u64) -> Result<()> {
    let count = evaluate(size, p as u64)?;
    if count.0 > BigUint::from(limit) {
        return Err(Error::Resource {
            what,
            predicted: count.to_string(),
            limit,
        });
    }
    Ok(())
}

/// RREF matrices of all `k`-dimensional subspaces of `F_p^n`, by pivot
/// pattern and then by free entries in odometer order.
#[derive(Debug, Clone)]
struct RrefCursor {
    p: u32,
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    started: bool,
    done: bool,
}

impl RrefCursor {
    fn new(p: u32, n: usize, k: usize) -> Self {
        let mut c = Self {
            p,
            n,
            k,
            pivots: (0..k).collect(),
            free: Vec::new(),
            digits: Vec::new(),
            started: false,
            done: k > n,
        };
        c.reset_free();
        c
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &pc) in self.pivots.iter().enumerate() {
            for c in pc + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                self.reset_free();
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.p {
                return true;
            }
            *d = 0;
        }
        self.next_pivots()
    }

    fn matrix(&self) -> PrimeFieldMatrix {
        let mut rows = vec![vec![0u32; self.n]; self.k];
        for (r, &pc) in self.pivots.iter().enumerate() {
            rows[r][pc] = 1;
        }
        for (&(r, c), &x) in self.free.iter().zip(&self.digits) {
            rows[r][c] = x;
        }
        PrimeFieldMatrix::from_rows(self.p, self.n, &rows)
    }

    fn next_matrix(&mut self) -> Option<PrimeFieldMatrix> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(self.matrix())
    }
}

/// Streaming enumeration of `G_p(k, n)`.
#[derive(Debug, Clone)]
pub struct GrassmannianIter {
    cursor: RrefCursor,
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        self.cursor
            .next_matrix()
            .map(|m| Subspace::span(&m))
    }
}

/// Every `k`-dimensional subspace of `F_p^n` exactly once.
pub fn enumerate_grassmannian(p: u64, n: usize, k: usize) -> Result<GrassmannianIter> {
    enumerate_grassmannian_with_limit(p, n, k, DEFAULT_SIZE_LIMIT)
}

pub fn enumerate_grassmannian_with_limit(
    p: u64,
    n: usize,
    k: usize,
    limit: u64,
) -> Result<GrassmannianIter> {
    let p = check_prime(p)?;
    if k > n {
        return Err(Error::domain(format!("dimension {k} exceeds ambient {n}")));
    }
    guard(format!("G_{p}({k},{n})"), &gaussian_binomial(n, k), p, limit)?;
    Ok(GrassmannianIter {
        cursor: RrefCursor::new(p, n, k),
    })
}

/// Streaming enumeration of a flag variety.
///
/// The top subspace runs over `G_p(t_r, n)`; each lower subspace runs over the
/// subspaces of the one above it, written in coordinates of that subspace's
/// basis. Every flag is produced exactly once.
#[derive(Debug, Clone)]
pub struct FlagVarietyIter {
    ty: TypeVector,
    /// Cursors from the top level down.
    cursors: Vec<RrefCursor>,
    /// Ambient bases of the current subspaces, top level first.
    bases: Vec<PrimeFieldMatrix>,
    started: bool,
    done: bool,
}

impl FlagVarietyIter {
    fn cursor_for(&self, level: usize) -> RrefCursor {
        let dims = self.ty.dims();
        let r = dims.len();
        let p = self.p();
        if level == 0 {
            RrefCursor::new(p, self.ty.ambient(), dims[r - 1])
        } else {
            RrefCursor::new(p, dims[r - level], dims[r - 1 - level])
        }
    }

    fn p(&self) -> u32 {
        self.cursors.first().map(|c| c.p).unwrap_or(2)
    }

    fn place(&mut self, level: usize, coeffs: PrimeFieldMatrix) {
        let basis = if level == 0 {
            coeffs
        } else {
            coeffs.mul(&self.bases[level - 1])
        };
        self.bases.truncate(level);
        self.bases.push(basis);
    }

    /// Resets every level strictly below `level` to its first element.
    fn refill_below(&mut self, level: usize) {
        for lvl in level + 1..self.ty.len() {
            let mut c = self.cursor_for(lvl);
            let m = c.next_matrix().expect("proper subspaces exist");
            self.cursors.truncate(lvl);
            self.cursors.push(c);
            self.place(lvl, m);
        }
    }

    fn current(&self) -> Flag {
        let r = self.ty.len();
        let subspaces = (0..r).map(|j| Subspace::span(&self.bases[r - 1 - j])).collect();
        Flag::from_subspaces(subspaces, &self.ty).expect("enumerated chains are flags")
    }
}

impl Iterator for FlagVarietyIter {
    type Item = Flag;

    fn next(&mut self) -> Option<Flag> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let m = self.cursors[0].next_matrix()?;
            self.place(0, m);
            self.refill_below(0);
            return Some(self.current());
        }
        let mut level = self.ty.len() - 1;
        loop {
            if let Some(m) = self.cursors[level].next_matrix() {
                self.place(level, m);
                self.refill_below(level);
                return Some(self.current());
            }
            if level == 0 {
                self.done = true;
                return None;
            }
            level -= 1;
        }
    }
}

/// Every flag of type `t` over `F_p` exactly once.
pub fn enumerate_flag_variety(p: u64, t: &TypeVector) -> Result<FlagVarietyIter> {
    enumerate_flag_variety_with_limit(p, t, DEFAULT_SIZE_LIMIT)
}

pub fn enumerate_flag_variety_with_limit(p: u64, t: &TypeVector, limit: u64) -> Result<FlagVarietyIter> {
    let p = check_prime(p)?;
    guard(format!("F_{p}({t},{})", t.ambient()), &flag_variety_size(t), p, limit)?;
    let r = t.len();
    Ok(FlagVarietyIter {
        ty: t.clone(),
        cursors: vec![RrefCursor::new(p, t.ambient(), t.dims()[r - 1])],
        bases: Vec::new(),
        started: false,
        done: false,
    })
}
