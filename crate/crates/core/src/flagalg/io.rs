//! Text format for flag codes.
//!
//! ```text
//! # comment
//! q=2
//! n=4
//! type=1,2,3
//! flag
//! 1 0 0 0
//! 0 1 0 0
//! 0 0 0 1
//! flag
//! ...
//! ```
//!
//! Each `flag` block is a `t_r x n` nested-basis matrix: the `i`-th subspace
//! is spanned by the first `t_i` rows.

use std::fmt::Write as _;

use super::field::PrimeFieldMatrix;
use super::objects::{Flag, FlagCode};
use crate::distvec::TypeVector;
use crate::{Error, Result};

/// Parses a flag code file. Errors carry 1-based line numbers.
pub fn parse_flag_code(text: &str) -> Result<FlagCode> {
    let mut q: Option<u64> = None;
    let mut n: Option<usize> = None;
    let mut ty: Option<TypeVector> = None;
    let mut flags: Vec<Flag> = Vec::new();
    let mut block: Option<(usize, Vec<i64>)> = None;

    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let finish = |block: &mut Option<(usize, Vec<i64>)>,
                  flags: &mut Vec<Flag>,
                  q: u64,
                  ty: &TypeVector|
     -> Result<()> {
        if let Some((start, entries)) = block.take() {
            let rows = *ty.dims().last().expect("nonempty");
            let n = ty.ambient();
            if entries.len() != rows * n {
                return Err(Error::parse(
                    start,
                    format!("flag block needs {rows} rows of {n} entries"),
                ));
            }
            let m = PrimeFieldMatrix::from_entries(q, rows, n, &entries)
                .map_err(|e| Error::parse(start, e.to_string()))?;
            let f = Flag::from_nested_basis(&m, ty).map_err(|e| Error::parse(start, e.to_string()))?;
            flags.push(f);
        }
        Ok(())
    };

    for (line_no, line) in lines {
        if let Some(v) = line.strip_prefix("q=") {
            q = Some(v.trim().parse().map_err(|_| Error::parse(line_no, "q must be an integer"))?);
            super::field::check_prime(q.unwrap()).map_err(|e| Error::parse(line_no, e.to_string()))?;
        } else if let Some(v) = line.strip_prefix("n=") {
            n = Some(v.trim().parse().map_err(|_| Error::parse(line_no, "n must be an integer"))?);
        } else if let Some(v) = line.strip_prefix("type=") {
            let amb = n.ok_or_else(|| Error::parse(line_no, "type= must follow n="))?;
            ty = Some(TypeVector::parse(v, amb).map_err(|e| Error::parse(line_no, e.to_string()))?);
        } else if line == "flag" {
            let (qq, t) = match (q, &ty) {
                (Some(qq), Some(t)) => (qq, t),
                _ => return Err(Error::parse(line_no, "flag block before q= and type=")),
            };
            finish(&mut block, &mut flags, qq, t)?;
            block = Some((line_no, Vec::new()));
        } else {
            let (_, entries) = block
                .as_mut()
                .ok_or_else(|| Error::parse(line_no, format!("unexpected line {line:?}")))?;
            let t = ty.as_ref().expect("block implies type");
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|x| x.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line_no, "matrix rows hold integers"))?;
            if row.len() != t.ambient() {
                return Err(Error::parse(
                    line_no,
                    format!("row has {} entries, expected {}", row.len(), t.ambient()),
                ));
            }
            entries.extend(row);
        }
    }
    let (qq, t) = match (q, &ty) {
        (Some(qq), Some(t)) => (qq, t.clone()),
        _ => return Err(Error::parse(text.lines().count().max(1), "missing q=, n= or type=")),
    };
    finish(&mut block, &mut flags, qq, &t)?;
    if flags.is_empty() {
        return Err(Error::parse(text.lines().count().max(1), "no flag blocks"));
    }
    FlagCode::new(flags)
}

/// Writes a flag code in the format read by [`parse_flag_code`].
pub fn write_flag_code(code: &FlagCode) -> String {
    let t = code.type_vector();
    let mut out = String::new();
    let dims: Vec<String> = t.dims().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "q={}", code.modulus());
    let _ = writeln!(out, "n={}", t.ambient());
    let _ = writeln!(out, "type={}", dims.join(","));
    for f in code.flags() {
        out.push_str("flag\n");
        out.push_str(&f.nested_basis().to_string());
    }
    out
}
