//! Differential powers of monomial ideals.
//!
//! Pure-power ideals have an explicit generating set; a principal ideal
//! `(x^γ)` has `I^⟨n⟩ = (∏_{i∈supp γ} x_i^{γ_i+n-1})`; everything else is
//! decomposed into pure-power components, since differential powers commute
//! with intersections.

use crate::combinat::{subsets_by_size, weak_compositions};
use crate::decompose::{decompose, Decomposition};
use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, MAX_EXPONENT};
use crate::ideal::{MonomialIdeal, PurePowerIdeal};

/// `I^⟨n⟩` for `I = (x_i^{α_i} : i ∈ S)`.
///
/// Generators are the `γ` supported on a nonempty `T ⊆ S` with `|T| <= n`,
/// `γ_i >= α_i` on `T`, and `Σ_T γ_i = Σ_T (α_i - 1) + n`. Exponents are
/// never placed on variables outside `S`.
pub fn diffpower_pure(q: &PurePowerIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let alpha = q.alpha();
    let support = q.support();
    let mut gens = Vec::new();
    for subset in subsets_by_size(&support, n as usize) {
        let extra = n - subset.len() as u32;
        for delta in weak_compositions(extra, subset.len()) {
            let mut gamma = vec![0u32; q.dim()];
            for (&i, &d) in subset.iter().zip(&delta) {
                let e = alpha.get(i) as u64 + d as u64;
                if e > MAX_EXPONENT as u64 {
                    return Err(Error::Overflow);
                }
                gamma[i] = e as u32;
            }
            gens.push(ExponentVector::from_raw(gamma));
        }
    }
    // the generating set is already an antichain
    Ok(MonomialIdeal::from_antichain(q.dim(), gens))
}

/// `(x^γ)^⟨n⟩ = (x^{γ'})` with `γ'_i = γ_i + n - 1` on `supp γ`.
pub fn diffpower_principal(gamma: &ExponentVector, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if gamma.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut out = vec![0u32; gamma.dim()];
    for i in gamma.support() {
        let e = gamma.get(i) as u64 + n as u64 - 1;
        if e > MAX_EXPONENT as u64 {
            return Err(Error::Overflow);
        }
        out[i] = e as u32;
    }
    Ok(MonomialIdeal::principal(ExponentVector::from_raw(out)))
}

/// Intermediate data behind a [`diffpower`] computation.
#[derive(Clone, Debug)]
pub struct DiffPowerTrace {
    pub n: u32,
    /// `None` when the principal formula was used.
    pub decomposition: Option<Decomposition>,
    pub component_powers: Vec<(PurePowerIdeal, MonomialIdeal)>,
    pub result: MonomialIdeal,
}

/// `I^⟨n⟩` for any proper nonzero monomial ideal.
pub fn diffpower(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    diffpower_traced(ideal, n).map(|t| t.result)
}

pub fn diffpower_traced(ideal: &MonomialIdeal, n: u32) -> Result<DiffPowerTrace> {
    ideal.ensure_proper()?;
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if let Some(g) = ideal.principal_generator() {
        return Ok(DiffPowerTrace {
            n,
            decomposition: None,
            component_powers: Vec::new(),
            result: diffpower_principal(g, n)?,
        });
    }
    let dec = decompose(ideal)?;
    let mut component_powers = Vec::with_capacity(dec.components().len());
    for q in dec.components() {
        component_powers.push((q.clone(), diffpower_pure(q, n)?));
    }
    // fold smallest first to keep intermediate lcm sets small
    let mut order: Vec<&MonomialIdeal> = component_powers.iter().map(|(_, p)| p).collect();
    order.sort_by_key(|p| p.generators().len());
    let mut result = order[0].clone();
    for p in &order[1..] {
        result = result.intersect(p)?;
    }
    Ok(DiffPowerTrace {
        n,
        decomposition: Some(dec),
        component_powers,
        result,
    })
}
