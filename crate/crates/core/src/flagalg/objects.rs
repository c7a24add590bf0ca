//! Subspaces, flags and flag codes over a prime field.

use std::collections::HashSet;
use std::fmt;

use super::field::{check_prime, Echelon, PrimeFieldMatrix};
use crate::distvec::{DistanceVector, TypeVector};
use crate::{Error, Result};

/// A subspace of `F_p^n`, stored as its unique RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: PrimeFieldMatrix,
}

impl Subspace {
    /// Row span of `m`.
    pub fn span(m: &PrimeFieldMatrix) -> Self {
        Self { basis: m.rref().0 }
    }

    #[cfg(test)]
    pub(crate) fn span_rows(p: u32, n: usize, rows: &[Vec<u32>]) -> Self {
        Self::span(&PrimeFieldMatrix::from_rows(p, n, rows))
    }

    pub fn zero(p: u64, n: usize) -> Result<Self> {
        Ok(Self {
            basis: PrimeFieldMatrix::zeros(check_prime(p)?, 0, n),
        })
    }

    pub fn basis(&self) -> &PrimeFieldMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn modulus(&self) -> u32 {
        self.basis.modulus()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() || self.ambient() != other.ambient() {
            return Err(Error::validation(format!(
                "subspaces of F_{}^{} and F_{}^{} cannot be compared",
                self.modulus(),
                self.ambient(),
                other.modulus(),
                other.ambient()
            )));
        }
        Ok(())
    }

    /// `dim(U + V)`.
    pub fn sum_dim(&self, other: &Self) -> Result<usize> {
        self.check_compatible(other)?;
        let mut e = Echelon::new(self.modulus());
        for r in 0..self.dim() {
            e.insert(self.basis.row(r));
        }
        for r in 0..other.dim() {
            e.insert(other.basis.row(r));
        }
        Ok(e.dim())
    }

    /// `dim(U ∩ V)`.
    pub fn intersection_dim(&self, other: &Self) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        Ok(self.sum_dim(other)? == self.dim())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for r in 0..self.dim() {
            if r > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = self.basis.row(r).iter().map(u32::to_string).collect();
            write!(f, "({})", row.join(" "))?;
        }
        write!(f, ">")
    }
}

/// `d_S(U, V) = 2 (k - dim(U ∩ V))` for subspaces of equal dimension `k`.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.check_compatible(v)?;
    if u.dim() != v.dim() {
        return Err(Error::validation(format!(
            "subspace distance needs equal dimensions, got {} and {}",
            u.dim(),
            v.dim()
        )));
    }
    Ok(2 * (u.sum_dim(v)? - u.dim()))
}

/// A flag `F_1 ⊊ ... ⊊ F_r` of a given type over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    subspaces: Vec<Subspace>,
    ty: TypeVector,
}

impl Flag {
    /// A flag from a `t_r x n` nested-basis matrix: `F_i` is the span of the
    /// first `t_i` rows. Rejected when any prefix is rank deficient.
    pub fn from_nested_basis(m: &PrimeFieldMatrix, ty: &TypeVector) -> Result<Self> {
        let top = *ty.dims().last().expect("types are nonempty");
        if m.rows() != top || m.cols() != ty.ambient() {
            return Err(Error::validation(format!(
                "nested basis must be {top} x {}, got {} x {}",
                ty.ambient(),
                m.rows(),
                m.cols()
            )));
        }
        let mut e = Echelon::new(m.modulus());
        for r in 0..m.rows() {
            if !e.insert(m.row(r)) {
                return Err(Error::validation(format!(
                    "row {} of the nested basis is dependent on the rows above it",
                    r + 1
                )));
            }
        }
        let subspaces = ty
            .dims()
            .iter()
            .map(|&k| Subspace::span(&m.top_rows(k)))
            .collect();
        Ok(Self {
            subspaces,
            ty: ty.clone(),
        })
    }

    /// A flag from explicit subspaces, checking dimensions and nesting.
    pub fn from_subspaces(subspaces: Vec<Subspace>, ty: &TypeVector) -> Result<Self> {
        if subspaces.len() != ty.len() {
            return Err(Error::validation(format!(
                "{} subspaces for a type of length {}",
                subspaces.len(),
                ty.len()
            )));
        }
        for (j, (s, &k)) in subspaces.iter().zip(ty.dims()).enumerate() {
            if s.dim() != k || s.ambient() != ty.ambient() {
                return Err(Error::validation(format!(
                    "subspace {} has dimension {} in F^{}, expected {k} in F^{}",
                    j + 1,
                    s.dim(),
                    s.ambient(),
                    ty.ambient()
                )));
            }
            if j > 0 && !s.contains(&subspaces[j - 1])? {
                return Err(Error::validation(format!(
                    "subspace {} does not contain subspace {j}",
                    j + 1
                )));
            }
        }
        Ok(Self {
            subspaces,
            ty: ty.clone(),
        })
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }

    pub fn modulus(&self) -> u32 {
        self.subspaces[0].modulus()
    }

    /// A `t_r x n` matrix whose first `t_i` rows span `F_i`.
    pub fn nested_basis(&self) -> PrimeFieldMatrix {
        let p = self.modulus();
        let mut e = Echelon::new(p);
        let mut rows = Vec::new();
        for s in &self.subspaces {
            for r in 0..s.dim() {
                if e.insert(s.basis().row(r)) {
                    rows.push(s.basis().row(r).to_vec());
                }
            }
        }
        PrimeFieldMatrix::from_rows(p, self.ty.ambient(), &rows)
    }
}

/// Distance vector of two flags of the same type.
pub fn distance_vector_of_pair(f: &Flag, g: &Flag) -> Result<DistanceVector> {
    if f.ty != g.ty || f.modulus() != g.modulus() {
        return Err(Error::validation(format!(
            "flags of type {} over F_{} and type {} over F_{} cannot be compared",
            f.ty,
            f.modulus(),
            g.ty,
            g.modulus()
        )));
    }
    let comps = f
        .subspaces
        .iter()
        .zip(&g.subspaces)
        .map(|(a, b)| subspace_distance(a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceVector::trusted(comps, &f.ty))
}

/// Flag distance of two flags of the same type.
pub fn flag_distance(f: &Flag, g: &Flag) -> Result<usize> {
    Ok(distance_vector_of_pair(f, g)?.sum())
}

/// A nonempty set of distinct flags of one type over one prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagCode {
    p: u32,
    ty: TypeVector,
    flags: Vec<Flag>,
}

impl FlagCode {
    pub fn new(flags: Vec<Flag>) -> Result<Self> {
        let first = flags
            .first()
            .ok_or_else(|| Error::validation("a flag code needs at least one flag"))?;
        let (p, ty) = (first.modulus(), first.ty.clone());
        let mut seen = HashSet::new();
        for (k, f) in flags.iter().enumerate() {
            if f.modulus() != p || f.ty != ty {
                return Err(Error::validation(format!(
                    "flag {} does not match the code's field or type",
                    k + 1
                )));
            }
            if !seen.insert(f) {
                return Err(Error::validation(format!("flag {} is a duplicate", k + 1)));
            }
        }
        Ok(Self { p, ty, flags })
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn units(n: usize, idx: &[usize]) -> Subspace {
        let rows: Vec<Vec<u32>> = idx
            .iter()
            .map(|&j| super::super::field::unit_vector(n, j - 1))
            .collect();
        Subspace::span_rows(2, n, &rows)
    }

    #[test]
    fn subspace_distance_examples() {
        let a = units(4, &[1]);
        assert_eq!(subspace_distance(&a, &a).unwrap(), 0);
        assert_eq!(subspace_distance(&a, &units(4, &[2])).unwrap(), 2);
        assert_eq!(subspace_distance(&units(4, &[1, 2]), &units(4, &[1, 3])).unwrap(), 2);
        assert!(subspace_distance(&a, &units(5, &[1])).is_err());
        assert!(subspace_distance(&a, &units(4, &[1, 2])).is_err());
    }

    #[test]
    fn nested_basis_round_trip() {
        let ty = TypeVector::new(vec![1, 3], 4).unwrap();
        let m = PrimeFieldMatrix::from_entries(3, 3, 4, &[1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 0, 1]).unwrap();
        let f = Flag::from_nested_basis(&m, &ty).unwrap();
        assert_eq!(f.subspaces()[1].dim(), 3);
        let g = Flag::from_nested_basis(&f.nested_basis(), &ty).unwrap();
        assert_eq!(f, g);
        let bad = PrimeFieldMatrix::from_entries(3, 3, 4, &[1, 1, 0, 0, 2, 2, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(Flag::from_nested_basis(&bad, &ty).is_err());
    }

    #[test]
    fn code_rejects_duplicates() {
        let ty = TypeVector::full(3).unwrap();
        let m = PrimeFieldMatrix::from_entries(2, 2, 3, &[1, 0, 0, 0, 1, 0]).unwrap();
        let f = Flag::from_nested_basis(&m, &ty).unwrap();
        assert!(FlagCode::new(vec![f.clone(), f.clone()]).is_err());
        assert!(FlagCode::new(vec![]).is_err());
        assert_eq!(FlagCode::new(vec![f]).unwrap().len(), 1);
    }
}
