//! Brute-force ground truth for differential powers.
//!
//! Polynomials carry exact integer coefficients and are differentiated by
//! the operators `∂^β = ∂_1^{β_1}···∂_d^{β_d}`. An element `f` lies in
//! `I^⟨n⟩` iff every `∂^β f` with `|β| <= n-1` lies in `I`; for a monomial
//! ideal that means every surviving term of `∂^β f` is in `I`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{check_dims, Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;

/// A polynomial with exact integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(gamma: ExponentVector) -> Self {
        Self::term(gamma, BigInt::one())
    }

    pub fn term(gamma: ExponentVector, coeff: BigInt) -> Self {
        let mut p = Self::zero(gamma.dim());
        p.add_term(gamma, coeff);
        p
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (gamma, c) in terms {
            check_dims(dim, gamma.dim())?;
            p.add_term(gamma, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, gamma: ExponentVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(gamma) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, gamma: &ExponentVector) -> BigInt {
        self.terms.get(gamma).cloned().unwrap_or_default()
    }

    /// Componentwise maximum exponent over all terms.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.dim];
        for gamma in self.terms.keys() {
            for (slot, &e) in m.iter_mut().zip(gamma.entries()) {
                *slot = (*slot).max(e);
            }
        }
        m
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.dim);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c * k);
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimensions differ");
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimensions differ");
        let mut out = Polynomial::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let g = a.checked_add(b).expect("exponent overflow in product");
                out.add_term(g, ca * cb);
            }
        }
        out
    }
}

/// The operator `∂^β`; its order is `|β|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorIndex(pub ExponentVector);

impl OperatorIndex {
    pub fn order(&self) -> u64 {
        self.0.total_degree()
    }

    /// Every `β <= bound` (componentwise) with `|β| <= max_order`, in
    /// lexicographic order.
    pub fn enumerate(bound: &[u32], max_order: u64) -> Vec<OperatorIndex> {
        let dim = bound.len();
        let caps: Vec<u32> = bound
            .iter()
            .map(|&b| (b as u64).min(max_order) as u32)
            .collect();
        let mut out = Vec::new();
        let mut beta = vec![0u32; dim];
        loop {
            if beta.iter().map(|&b| b as u64).sum::<u64>() <= max_order {
                out.push(OperatorIndex(ExponentVector::from_raw(beta.clone())));
            }
            // odometer, last coordinate fastest
            let mut k = dim;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if beta[k] < caps[k] {
                    beta[k] += 1;
                    break;
                }
                beta[k] = 0;
            }
        }
    }
}

/// `e (e-1) ··· (e-k+1)`.
fn falling_factorial(e: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(e - j);
    }
    acc
}

/// `∂^β f`, with exact falling-factorial coefficients.
pub fn differentiate(f: &Polynomial, beta: &OperatorIndex) -> Result<Polynomial> {
    check_dims(f.dim(), beta.0.dim())?;
    let mut out = Polynomial::zero(f.dim());
    for (gamma, c) in &f.terms {
        let Some(rest) = gamma.checked_sub(&beta.0) else {
            continue;
        };
        let mut coeff = c.clone();
        for i in 0..f.dim() {
            coeff *= falling_factorial(gamma.get(i), beta.0.get(i));
        }
        out.add_term(rest, coeff);
    }
    Ok(out)
}

/// A failing `(operator, term)` pair: `∂^operator f` has a term outside the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub operator: OperatorIndex,
    pub term: ExponentVector,
    pub coefficient: BigInt,
}

/// First operator of order `< n` that sends a term of `f` outside `ideal`.
pub fn membership_witness(
    f: &Polynomial,
    ideal: &MonomialIdeal,
    n: u32,
) -> Result<Option<MembershipWitness>> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    check_dims(f.dim(), ideal.dim())?;
    // operators beyond f's exponents annihilate it
    for beta in OperatorIndex::enumerate(&f.max_exponents(), n as u64 - 1) {
        let image = differentiate(f, &beta)?;
        let outside = image
            .terms()
            .find(|(t, _)| !ideal.has(t))
            .map(|(t, c)| (t.clone(), c.clone()));
        if let Some((term, coefficient)) = outside {
            return Ok(Some(MembershipWitness {
                operator: beta,
                term,
                coefficient,
            }));
        }
    }
    Ok(None)
}

/// Whether `f ∈ I^⟨n⟩`, decided by applying every operator of order `< n`.
pub fn bruteforce_membership(f: &Polynomial, ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    membership_witness(f, ideal, n).map(|w| w.is_none())
}

/// `I^⟨n⟩` recovered by testing every monomial `x^γ` with `γ <= bound`.
///
/// Fails if the member set is not upward closed inside the box, or if a
/// minimal member touches the box boundary.
pub fn bruteforce_diffpower(
    ideal: &MonomialIdeal,
    n: u32,
    bound: &ExponentVector,
) -> Result<MonomialIdeal> {
    ideal.ensure_proper()?;
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    check_dims(ideal.dim(), bound.dim())?;
    if bound.entries().contains(&0) {
        return Err(Error::InvalidArgument(
            "box entries must be at least 1".into(),
        ));
    }
    let dim = ideal.dim();
    let sides: Vec<usize> = bound.entries().iter().map(|&b| b as usize + 1).collect();
    let cells: usize = sides.iter().product();

    let point = |mut idx: usize| -> ExponentVector {
        let mut v = vec![0u32; dim];
        for k in (0..dim).rev() {
            v[k] = (idx % sides[k]) as u32;
            idx /= sides[k];
        }
        ExponentVector::from_raw(v)
    };
    let index = |v: &[u32]| -> usize {
        v.iter()
            .zip(&sides)
            .fold(0, |acc, (&e, &s)| acc * s + e as usize)
    };

    let member: Vec<bool> = (0..cells)
        .into_par_iter()
        .map(|idx| bruteforce_membership(&Polynomial::monomial(point(idx)), ideal, n))
        .collect::<Result<Vec<bool>>>()?;

    let mut minimal = Vec::new();
    for idx in 0..cells {
        if !member[idx] {
            continue;
        }
        let gamma = point(idx);
        let mut v = gamma.entries().to_vec();
        let mut is_minimal = true;
        for k in 0..dim {
            if v[k] < bound.get(k) {
                v[k] += 1;
                if !member[index(&v)] {
                    return Err(Error::VerificationFailed(format!(
                        "member set not upward closed at {gamma:?} in direction {k}"
                    )));
                }
                v[k] -= 1;
            }
            if v[k] > 0 {
                v[k] -= 1;
                if member[index(&v)] {
                    is_minimal = false;
                }
                v[k] += 1;
            }
        }
        if is_minimal {
            if (0..dim).any(|k| gamma.get(k) == bound.get(k)) {
                return Err(Error::BoxBoundary { gamma });
            }
            minimal.push(gamma);
        }
    }
    Ok(MonomialIdeal::from_antichain(dim, minimal))
}

/// `box_i = max_g g_i + n + 1`, large enough for every generator of `I^⟨n⟩`.
pub fn default_box(ideal: &MonomialIdeal, n: u32) -> Result<ExponentVector> {
    let extra = n as u64 + 1;
    ideal
        .max_exponents()
        .entries()
        .iter()
        .map(|&e| e as u64 + extra)
        .map(|e| u32::try_from(e).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<u32>>>()
        .and_then(ExponentVector::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn ideal(d: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(d, gens.iter().map(|g| ev(g))).unwrap()
    }

    fn op(v: &[u32]) -> OperatorIndex {
        OperatorIndex(ev(v))
    }

    #[test]
    fn differentiate_examples() {
        let f = Polynomial::monomial(ev(&[3, 2]));
        assert_eq!(
            differentiate(&f, &op(&[1, 2])).unwrap(),
            Polynomial::term(ev(&[2, 0]), BigInt::from(6))
        );
        let g = Polynomial::monomial(ev(&[2, 3]));
        assert_eq!(differentiate(&g, &op(&[0, 0])).unwrap(), g);
        let h = Polynomial::monomial(ev(&[7, 6]));
        assert_eq!(
            differentiate(&h, &op(&[7, 0])).unwrap(),
            Polynomial::term(ev(&[0, 6]), BigInt::from(5040))
        );
        assert!(differentiate(&h, &op(&[8, 0])).unwrap().is_zero());
        assert!(matches!(
            differentiate(&h, &op(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn operator_enumeration() {
        let all = OperatorIndex::enumerate(&[2, 5], 2);
        // (0,0),(0,1),(0,2),(1,0),(1,1),(2,0)
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|b| b.order() <= 2));
        assert_eq!(OperatorIndex::enumerate(&[0, 0], 4).len(), 1);
    }

    #[test]
    fn membership_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let f = Polynomial::monomial(ev(&[2, 3]));
        assert!(bruteforce_membership(&f, &i, 2).unwrap());
        let w = membership_witness(&f, &i, 3)
            .unwrap()
            .expect("not a member");
        // first-order images 2xy^3 and 3x^2y^2 stay in I
        assert_eq!(w.operator.order(), 2);
        let g = &Polynomial::monomial(ev(&[3, 0])) + &f;
        assert!(bruteforce_membership(&g, &i, 2).unwrap());
        assert_eq!(bruteforce_membership(&g, &i, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = Polynomial::monomial(ev(&[1, 0]));
        let b = Polynomial::term(ev(&[1, 0]), BigInt::from(-1));
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn bruteforce_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            bruteforce_diffpower(&i, 2, &ev(&[8, 8])).unwrap(),
            ideal(2, &[&[3, 0], &[0, 4], &[2, 3]])
        );
        let j = ideal(3, &[&[1, 1, 0], &[0, 0, 2]]);
        assert_eq!(
            bruteforce_diffpower(&j, 3, &ev(&[8, 8, 8])).unwrap(),
            ideal(3, &[&[3, 3, 0], &[2, 2, 2], &[1, 1, 3], &[0, 0, 4]])
        );
        assert_eq!(
            bruteforce_diffpower(&ideal(2, &[&[1, 0]]), 4, &ev(&[8, 4])).unwrap(),
            ideal(2, &[&[4, 0]])
        );
    }

    #[test]
    fn bruteforce_reports_boundary_contact() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        match bruteforce_diffpower(&i, 2, &ev(&[3, 8])) {
            Err(Error::BoxBoundary { gamma }) => assert_eq!(gamma, ev(&[3, 0])),
            other => panic!("expected boundary error, got {other:?}"),
        }
        assert!(bruteforce_diffpower(&i, 2, &ev(&[0, 8])).is_err());
    }

    #[test]
    fn default_box_examples() {
        assert_eq!(
            default_box(&ideal(2, &[&[2, 0], &[0, 3]]), 3).unwrap(),
            ev(&[6, 7])
        );
        assert_eq!(
            default_box(&ideal(3, &[&[1, 1, 0], &[0, 0, 2]]), 2).unwrap(),
            ev(&[4, 4, 5])
        );
        assert_eq!(
            default_box(&ideal(3, &[&[5, 4, 1], &[2, 1, 10], &[1, 7, 3]]), 12).unwrap(),
            ev(&[18, 20, 23])
        );
    }
}
