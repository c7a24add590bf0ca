//! Exact arithmetic on integer polynomials in the indeterminate `q`.
//!
//! Cardinalities of Grassmannians and flag varieties, and every bound emitted
//! by [`crate::bounds`], are polynomials in `q` with integer coefficients.
//! They are kept in dense form (index = exponent) with arbitrary precision
//! coefficients and printed highest power first, e.g. `q^4+q^2+1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::distvec::TypeVector;
use crate::{Error, Result};

/// Dense integer polynomial in `q`. Trailing zero coefficients are trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * q^exp`.
    pub fn monomial(c: i64, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from small coefficients, constant term first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `q^n - 1`.
    pub fn q_power_minus_one(n: usize) -> Self {
        Self::monomial(1, n) - Self::one()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^exp`.
    pub fn shift(&self, exp: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Evaluates at an arbitrary integer by Horner's rule.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// The polynomial `p(x + a)`, by repeated synthetic division.
    pub fn taylor_shift(&self, a: i64) -> Self {
        let a = BigInt::from(a);
        let mut c = self.coeffs.clone();
        let len = c.len();
        for i in 0..len {
            for j in (i..len.saturating_sub(1)).rev() {
                let t = &c[j + 1] * &a;
                c[j] += t;
            }
        }
        Self::from_coeffs(c)
    }

    /// True when `p(q) >= 0` is certified for every integer `q >= 2`, via
    /// non-negativity of the coefficients of `p(x + 2)`.
    pub fn certified_nonnegative_from_two(&self) -> bool {
        self.has_nonnegative_coefficients() || self.taylor_shift(2).has_nonnegative_coefficients()
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i) + rhs.coeff(i))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i) - rhs.coeff(i))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: &QPolynomial) -> QPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            match (exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{exp}")?,
                (_, false) => write!(f, "{mag}*q^{exp}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QPolynomial {
    type Err = Error;

    /// Parses `term (('+'|'-') term)*` where a term is `INT`, `q`, `q^INT`,
    /// `INT*q^INT` or `INT*q`. Whitespace is ignored and a leading sign is
    /// accepted.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::validation("empty polynomial"));
        }
        let bytes = text.as_bytes();
        let mut acc = QPolynomial::zero();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let negative = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                _ if first => false,
                other => {
                    return Err(Error::validation(format!(
                        "expected '+' or '-' at offset {pos} of {text:?}, found {:?}",
                        other as char
                    )))
                }
            };
            first = false;
            let end = bytes[pos..]
                .iter()
                .position(|&b| b == b'+' || b == b'-')
                .map_or(bytes.len(), |off| pos + off);
            let term = parse_term(&text[pos..end])?;
            acc = if negative { acc - term } else { acc + term };
            pos = end;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str) -> Result<QPolynomial> {
    let bad = || Error::validation(format!("malformed polynomial term {term:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let parse_exp = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<usize>().map_err(|_| bad())
    };
    let (coeff, power) = match term.split_once('*') {
        Some((c, p)) => (parse_int(c)?, Some(p)),
        None if term.starts_with('q') => (BigInt::one(), Some(term)),
        None => (parse_int(term)?, None),
    };
    let exp = match power {
        None => 0,
        Some("q") => 1,
        Some(p) => match p.strip_prefix("q^") {
            Some(e) => parse_exp(e)?,
            None => return Err(bad()),
        },
    };
    let mut coeffs = vec![BigInt::zero(); exp + 1];
    coeffs[exp] = coeff;
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// Non-negative integer obtained by evaluating a polynomial at some `q >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

/// Exact evaluation of `p` at a field size `q >= 2`.
pub fn evaluate(p: &QPolynomial, q: u64) -> Result<BigCount> {
    if q < 2 {
        return Err(Error::domain(format!("field size q = {q} must be at least 2")));
    }
    let v = p.eval(&BigInt::from(q));
    match v.sign() {
        Sign::Minus => Err(Error::domain(format!(
            "{p} evaluates to the negative value {v} at q = {q}"
        ))),
        _ => Ok(BigCount(v.magnitude().clone())),
    }
}

fn pascal_rows() -> &'static Mutex<Vec<Vec<QPolynomial>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<QPolynomial>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![QPolynomial::one()]]))
}

/// The Gaussian binomial `[n choose k]_q`, the number of `k`-dimensional
/// subspaces of `F_q^n`. Zero when `k > n`.
///
/// Built from the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`, so every
/// coefficient is non-negative by construction. Rows are memoized process-wide.
pub fn gaussian_binomial(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let mut rows = pascal_rows().lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is always present");
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(QPolynomial::one());
        for j in 1..m {
            row.push(&prev[j - 1] + &prev[j].shift(j));
        }
        row.push(QPolynomial::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Size of the flag variety of the given dimensions in `F_q^n`:
/// `[n, d_1] [n - d_1, d_2 - d_1] ... [n - d_{r-1}, d_r - d_{r-1}]`.
///
/// `dims` must be strictly increasing and below `n`; an empty chain gives 1.
pub fn variety_size_for_dims(dims: &[usize], n: usize) -> QPolynomial {
    let mut acc = QPolynomial::one();
    let mut prev = 0;
    for &d in dims {
        debug_assert!(d > prev || (prev == 0 && d > 0));
        acc = acc * gaussian_binomial(n - prev, d - prev);
        prev = d;
    }
    acc
}

/// `|F_q(t, n)|` as a polynomial in `q`.
pub fn flag_variety_size(t: &TypeVector) -> QPolynomial {
    variety_size_for_dims(t.dims(), t.ambient())
}

/// Outcome of comparing two candidate upper bounds as functions of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundOrder {
    /// The polynomials are identical.
    Equal,
    /// First is `<=` second for every `q >= 2`.
    Less,
    /// First is `>=` second for every `q >= 2`.
    Greater,
    /// Neither dominance could be certified; the ordering at `q = 2` is
    /// attached.
    Crossing(Ordering),
}

/// Compares two polynomials over all `q >= 2`.
///
/// First tries plain coefficient-wise dominance of the difference, then the
/// same test after substituting `q = x + 2`. When both fail the candidates are
/// reported as crossing, together with their order at `q = 2`.
pub fn compare_bounds(a: &QPolynomial, b: &QPolynomial) -> BoundOrder {
    if a == b {
        return BoundOrder::Equal;
    }
    let diff = b - a;
    if diff.certified_nonnegative_from_two() {
        return BoundOrder::Less;
    }
    if (-&diff).certified_nonnegative_from_two() {
        return BoundOrder::Greater;
    }
    let two = BigInt::from(2);
    BoundOrder::Crossing(a.eval(&two).cmp(&b.eval(&two)))
}
