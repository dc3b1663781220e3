//! Exponent vectors: points of the lattice of non-negative integer vectors,
//! each standing for a coefficient-free monomial.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};

/// Largest exponent any entry may hold. Arithmetic beyond it is an error.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ExponentVector(Vec<u32>);

fn checked(v: u64) -> Result<u32> {
    if v <= MAX_EXPONENT as u64 {
        Ok(v as u32)
    } else {
        Err(Error::Overflow)
    }
}

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if entries.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::Overflow);
        }
        Ok(ExponentVector(entries))
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![0; dim])
    }

    /// The pure power `x_var^exponent`.
    pub fn pure_power(dim: usize, var: usize, exponent: u32) -> Result<Self> {
        if var >= dim {
            return Err(Error::InvalidArgument(format!(
                "variable index {var} out of range for dimension {dim}"
            )));
        }
        let mut v = vec![0; dim];
        v[var] = exponent;
        Self::new(v)
    }

    pub(crate) fn from_raw(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&e| e <= MAX_EXPONENT));
        ExponentVector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_len(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    /// Vectors of different dimension never divide each other.
    pub fn divides(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| checked(a as u64 + b as u64))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `other - self` style subtraction: `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    pub fn scale(&self, k: u64) -> Result<Self> {
        self.0
            .iter()
            .map(|&e| {
                (e as u64)
                    .checked_mul(k)
                    .ok_or(Error::Overflow)
                    .and_then(checked)
            })
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Caps every entry at 1.
    pub fn squarefree(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Returns a copy with entry `i` replaced.
    pub fn with_entry(&self, i: usize, value: u32) -> Result<Self> {
        let mut v = self.0.clone();
        v[i] = checked(value as u64)?;
        Ok(ExponentVector(v))
    }
}

impl TryFrom<Vec<u32>> for ExponentVector {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ExponentVector> for Vec<u32> {
    fn from(v: ExponentVector) -> Self {
        v.0
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_monomial(
            self,
            crate::text::VarStyle::default_for(self.dim()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_empty_and_oversized() {
        assert_eq!(ExponentVector::new(vec![]), Err(Error::ZeroDimension));
        assert_eq!(
            ExponentVector::new(vec![MAX_EXPONENT + 1]),
            Err(Error::Overflow)
        );
        assert!(ExponentVector::new(vec![MAX_EXPONENT]).is_ok());
    }

    #[test]
    fn overflow_is_reported() {
        let big = ev(&[MAX_EXPONENT, 0]);
        assert_eq!(big.checked_add(&ev(&[1, 0])), Err(Error::Overflow));
        assert_eq!(big.scale(2), Err(Error::Overflow));
        assert_eq!(ev(&[1, 2]).scale(3).unwrap(), ev(&[3, 6]));
    }

    #[test]
    fn lattice_operations() {
        let a = ev(&[2, 0, 5]);
        let b = ev(&[1, 3, 5]);
        assert_eq!(a.lcm(&b).unwrap(), ev(&[2, 3, 5]));
        assert!(ev(&[1, 0, 5]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.checked_sub(&ev(&[1, 0, 2])), Some(ev(&[1, 0, 3])));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.support().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.squarefree(), ev(&[1, 0, 1]));
        assert_eq!(a.total_degree(), 7);
        assert!(matches!(
            a.lcm(&ev(&[1])),
            Err(Error::DimensionMismatch { left: 3, right: 1 })
        ));
    }
}
