//! Monomial ideals as upward-closed subsets of the exponent lattice, stored
//! through their minimal generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::exponent::ExponentVector;

/// A monomial ideal of `k[x_1..x_d]`.
///
/// Generators always form an antichain under divisibility and are kept in
/// lexicographic order, so two values are equal exactly when the ideals are.
/// The zero ideal has no generators; the unit ideal is generated by the zero
/// vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "IdealWire", into = "IdealWire")]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    d: usize,
    gens: Vec<ExponentVector>,
}

impl TryFrom<IdealWire> for MonomialIdeal {
    type Error = Error;

    fn try_from(w: IdealWire) -> Result<Self> {
        MonomialIdeal::new(w.d, w.gens)
    }
}

impl From<MonomialIdeal> for IdealWire {
    fn from(i: MonomialIdeal) -> Self {
        IdealWire {
            d: i.dim,
            gens: i.gens,
        }
    }
}

/// Reduces a list of same-dimension vectors to its divisibility-minimal
/// elements in lexicographic order.
pub(crate) fn antichain(gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    let mut keyed: Vec<(u64, ExponentVector)> =
        gens.into_iter().map(|g| (g.total_degree(), g)).collect();
    // a divisor never has larger total degree, so it is seen first
    keyed.sort_unstable();
    keyed.dedup_by(|a, b| a.1 == b.1);
    let mut kept: Vec<ExponentVector> = Vec::new();
    for (_, g) in keyed {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to minimal generators.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        for g in &gens {
            check_dims(dim, g.dim())?;
        }
        Ok(Self::from_raw(dim, gens))
    }

    pub(crate) fn from_raw(dim: usize, gens: Vec<ExponentVector>) -> Self {
        MonomialIdeal {
            dim,
            gens: antichain(gens),
        }
    }

    /// Wraps generators already known to be a sorted antichain.
    pub(crate) fn from_antichain(dim: usize, mut gens: Vec<ExponentVector>) -> Self {
        gens.sort_unstable();
        debug_assert!(gens.windows(2).all(|w| w[0] != w[1]));
        MonomialIdeal { dim, gens }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, [])
    }

    pub fn unit(dim: usize) -> Result<Self> {
        Ok(Self::from_raw(dim, vec![ExponentVector::zero(dim)?]))
    }

    pub fn principal(gen: ExponentVector) -> Self {
        MonomialIdeal {
            dim: gen.dim(),
            gens: vec![gen],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Rejects the zero and unit ideals.
    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit"))
        } else {
            Ok(())
        }
    }

    pub(crate) fn has(&self, gamma: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(gamma))
    }

    /// Whether `x^gamma` lies in the ideal.
    pub fn contains_monomial(&self, gamma: &ExponentVector) -> Result<bool> {
        check_dims(self.dim, gamma.dim())?;
        Ok(self.has(gamma))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dims(self.dim, other.dim)?;
        Ok(other.gens.iter().all(|g| self.has(g)))
    }

    /// Intersection, generated by pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v)?);
            }
        }
        Ok(Self::from_raw(self.dim, lcms))
    }

    /// Product of two ideals.
    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                sums.push(u.checked_add(v)?);
            }
        }
        Ok(Self::from_raw(self.dim, sums))
    }

    /// The ordinary power `I^n`, `n >= 1`.
    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Radical, generated by the squarefree parts of the generators.
    pub fn radical(&self) -> Self {
        Self::from_raw(self.dim, self.gens.iter().map(|g| g.squarefree()).collect())
    }

    /// The unique generator of a principal ideal.
    pub fn principal_generator(&self) -> Option<&ExponentVector> {
        match self.gens.as_slice() {
            [g] => Some(g),
            _ => None,
        }
    }

    /// Componentwise maximum over all generators.
    pub fn max_exponents(&self) -> ExponentVector {
        let mut m = vec![0; self.dim];
        for g in &self.gens {
            for (slot, &e) in m.iter_mut().zip(g.entries()) {
                *slot = (*slot).max(e);
            }
        }
        ExponentVector::from_raw(m)
    }

    /// Componentwise minimum over all generators (zero vector for the zero ideal).
    pub fn min_exponents(&self) -> ExponentVector {
        let Some(first) = self.gens.first() else {
            return ExponentVector::from_raw(vec![0; self.dim]);
        };
        let mut m = first.entries().to_vec();
        for g in &self.gens[1..] {
            for (slot, &e) in m.iter_mut().zip(g.entries()) {
                *slot = (*slot).min(e);
            }
        }
        ExponentVector::from_raw(m)
    }
}

/// Canonicalizes an arbitrary generating set of dimension `dim`.
pub fn minimalize(
    dim: usize,
    gens: impl IntoIterator<Item = ExponentVector>,
) -> Result<MonomialIdeal> {
    MonomialIdeal::new(dim, gens)
}

/// Folds [`MonomialIdeal::intersect`] over a nonempty sequence.
pub fn intersect_all<'a>(
    ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
) -> Result<MonomialIdeal> {
    let mut iter = ideals.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?
        .clone();
    iter.try_fold(first, |acc, next| acc.intersect(next))
}

/// An ideal generated by pure powers `(x_i^{α_i} : i ∈ S)`.
///
/// Ordered by dimension and then by the sorted `(variable, exponent)` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PurePowerIdeal {
    dim: usize,
    powers: BTreeMap<usize, u32>,
}

impl PurePowerIdeal {
    pub fn new(dim: usize, powers: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut map = BTreeMap::new();
        for (var, exp) in powers {
            if var >= dim {
                return Err(Error::InvalidArgument(format!(
                    "variable index {var} out of range for dimension {dim}"
                )));
            }
            if exp == 0 {
                return Err(Error::InvalidArgument(
                    "pure-power exponents must be at least 1".into(),
                ));
            }
            if exp > crate::exponent::MAX_EXPONENT {
                return Err(Error::Overflow);
            }
            if map.insert(var, exp).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "variable {var} given twice"
                )));
            }
        }
        Ok(PurePowerIdeal { dim, powers: map })
    }

    /// `(x_i^{α_i} : i ∈ supp α)`.
    pub fn from_alpha(alpha: &ExponentVector) -> Self {
        PurePowerIdeal {
            dim: alpha.dim(),
            powers: alpha.support().map(|i| (i, alpha.get(i))).collect(),
        }
    }

    /// Recognizes a monomial ideal all of whose generators are pure powers.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        if ideal.is_unit() {
            return None;
        }
        let mut powers = BTreeMap::new();
        for g in ideal.generators() {
            if g.support_len() != 1 {
                return None;
            }
            let i = g.support().next()?;
            powers.insert(i, g.get(i));
        }
        Some(PurePowerIdeal {
            dim: ideal.dim(),
            powers,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn is_zero(&self) -> bool {
        self.powers.is_empty()
    }

    /// The exponent vector α with `α_i = 0` off the support.
    pub fn alpha(&self) -> ExponentVector {
        let mut v = vec![0; self.dim];
        for (&i, &e) in &self.powers {
            v[i] = e;
        }
        ExponentVector::from_raw(v)
    }

    pub fn support(&self) -> Vec<usize> {
        self.powers.keys().copied().collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&i, &e)| {
                let mut v = vec![0; self.dim];
                v[i] = e;
                ExponentVector::from_raw(v)
            })
            .collect();
        MonomialIdeal::from_antichain(self.dim, gens)
    }

    /// Whether `other ⊆ self`, decided on the pure-power data directly.
    pub fn contains(&self, other: &PurePowerIdeal) -> bool {
        self.dim == other.dim
            && other
                .powers
                .iter()
                .all(|(i, &e)| self.powers.get(i).is_some_and(|&mine| mine <= e))
    }
}

impl From<&PurePowerIdeal> for MonomialIdeal {
    fn from(q: &PurePowerIdeal) -> Self {
        q.to_ideal()
    }
}
