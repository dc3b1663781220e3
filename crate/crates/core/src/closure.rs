//! Differential closure of monomial ideals.
//!
//! Over a characteristic-zero polynomial ring the closure coincides with the
//! radical. The radical-containment direction is also certified directly:
//! if `r^k ∈ I` then `c = r^k` satisfies `c·r^n ∈ I^⟨n⟩` for every `n`.

use crate::diffpower::diffpower;
use crate::error::{check_dims, Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::oracle::{bruteforce_membership, membership_witness, MembershipWitness, Polynomial};

/// Largest `n` at which [`witness_probe`] also consults the brute-force oracle.
pub const ORACLE_CHECK_LIMIT: u32 = 4;

pub fn differential_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.ensure_proper()?;
    Ok(ideal.radical())
}

/// One verified level of a [`ClosureWitness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeCheck {
    pub n: u32,
    /// `c·r^n ∈ I^⟨n⟩` via the closed-form differential power.
    pub fast: bool,
    /// The same membership via the oracle, for `n <= ORACLE_CHECK_LIMIT`.
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureWitness {
    pub r: ExponentVector,
    /// Least `k` with `r^k ∈ I`.
    pub k: u32,
    /// `c = r^k`.
    pub c: ExponentVector,
    pub n_checked: u32,
    pub checks: Vec<ProbeCheck>,
}

/// Certifies `r ∈ closure(I)` with multiplier `c = r^k` for `n = 1..=n_max`.
pub fn witness_probe(
    ideal: &MonomialIdeal,
    r: &ExponentVector,
    n_max: u32,
) -> Result<ClosureWitness> {
    ideal.ensure_proper()?;
    check_dims(ideal.dim(), r.dim())?;
    if n_max == 0 {
        return Err(Error::ZeroPower);
    }
    if !ideal.radical().contains_monomial(r)? {
        return Err(Error::NotInRadical { element: r.clone() });
    }
    let k_limit = ideal.max_exponents().max_entry().max(1);
    let k = (1..=k_limit)
        .find(|&k| r.scale(k as u64).is_ok_and(|p| ideal.has(&p)))
        .ok_or_else(|| {
            Error::VerificationFailed(format!("no power of {r:?} found in the ideal"))
        })?;
    let c = r.scale(k as u64)?;

    let mut checks = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let element = r.scale(k as u64 + n as u64)?;
        let fast = diffpower(ideal, n)?.contains_monomial(&element)?;
        let oracle = if n <= ORACLE_CHECK_LIMIT {
            Some(bruteforce_membership(
                &Polynomial::monomial(element.clone()),
                ideal,
                n,
            )?)
        } else {
            None
        };
        if !fast || oracle == Some(false) {
            return Err(Error::VerificationFailed(format!(
                "c·r^{n} = {element:?} is not in differential power {n} (fast: {fast}, oracle: {oracle:?})"
            )));
        }
        checks.push(ProbeCheck { n, fast, oracle });
    }
    Ok(ClosureWitness {
        r: r.clone(),
        k,
        c,
        n_checked: n_max,
        checks,
    })
}

/// First `n <= n_max` at which `c·r^n` falls outside `I^⟨n⟩`, by the oracle.
pub fn falsification_probe(
    ideal: &MonomialIdeal,
    r: &ExponentVector,
    c: &ExponentVector,
    n_max: u32,
) -> Result<Option<(u32, MembershipWitness)>> {
    check_dims(ideal.dim(), r.dim())?;
    check_dims(ideal.dim(), c.dim())?;
    for n in 1..=n_max {
        let element = c.checked_add(&r.scale(n as u64)?)?;
        if let Some(w) = membership_witness(&Polynomial::monomial(element), ideal, n)? {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}

/// Outcome of checking the closure-operation axioms on a pair of ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureAxioms {
    /// `I ⊆ cl(I)`.
    pub extensive: bool,
    /// `I ⊆ J ⇒ cl(I) ⊆ cl(J)`.
    pub monotone: bool,
    /// `r · cl(I) ⊆ cl(I)` on generators.
    pub absorbs_multiples: bool,
    /// `cl(I ∩ J) = cl(I) ∩ cl(J)`.
    pub respects_intersection: bool,
    /// `cl(cl(I)) = cl(I)`.
    pub idempotent: bool,
}

impl ClosureAxioms {
    pub fn all(&self) -> bool {
        self.extensive
            && self.monotone
            && self.absorbs_multiples
            && self.respects_intersection
            && self.idempotent
    }
}

pub fn closure_axiom_suite(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    r: &ExponentVector,
) -> Result<ClosureAxioms> {
    check_dims(i.dim(), j.dim())?;
    check_dims(i.dim(), r.dim())?;
    let cl_i = differential_closure(i)?;
    let cl_j = differential_closure(j)?;
    let meet = i.intersect(j)?;
    let monotone = !i.contains(j)? || cl_i.contains(&cl_j)?;
    let monotone = monotone && (!j.contains(i)? || cl_j.contains(&cl_i)?);
    let absorbs_multiples = cl_i
        .generators()
        .iter()
        .map(|g| g.checked_add(r).map(|m| cl_i.has(&m)))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    Ok(ClosureAxioms {
        extensive: cl_i.contains(i)?,
        monotone,
        absorbs_multiples,
        respects_intersection: differential_closure(&meet)? == cl_i.intersect(&cl_j)?,
        idempotent: differential_closure(&cl_i)? == cl_i,
    })
}
