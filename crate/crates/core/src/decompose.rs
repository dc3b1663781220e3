//! Irredundant decomposition of a monomial ideal into pure-power components.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::{antichain, intersect_all, MonomialIdeal, PurePowerIdeal};

/// `source = ⋂ components`, each component generated by pure powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    components: Vec<PurePowerIdeal>,
    source: MonomialIdeal,
}

impl Decomposition {
    /// Wraps arbitrary components; the source is their intersection.
    /// Components are sorted but neither deduplicated nor filtered.
    pub fn from_components(mut components: Vec<PurePowerIdeal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a decomposition needs at least one component".into(),
            ));
        }
        components.sort();
        let ideals: Vec<MonomialIdeal> = components.iter().map(PurePowerIdeal::to_ideal).collect();
        let source = intersect_all(&ideals)?;
        Ok(Decomposition { components, source })
    }

    pub fn components(&self) -> &[PurePowerIdeal] {
        &self.components
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    /// Intersection of all components, recomputed.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let ideals: Vec<MonomialIdeal> = self
            .components
            .iter()
            .map(PurePowerIdeal::to_ideal)
            .collect();
        intersect_all(&ideals)
    }

    /// No component contains the intersection of the others.
    pub fn is_irredundant(&self) -> bool {
        is_irredundant(&self.components)
    }
}

pub fn is_irredundant(components: &[PurePowerIdeal]) -> bool {
    if components.len() <= 1 {
        return true;
    }
    let ideals: Vec<MonomialIdeal> = components.iter().map(PurePowerIdeal::to_ideal).collect();
    (0..ideals.len()).all(|j| {
        let others = intersect_all(
            ideals
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != j)
                .map(|(_, i)| i),
        )
        .expect("components share a dimension");
        !ideals[j]
            .contains(&others)
            .expect("components share a dimension")
    })
}

/// Splits `ideal` into its unique irredundant pure-power decomposition.
pub fn decompose(ideal: &MonomialIdeal) -> Result<Decomposition> {
    ideal.ensure_proper()?;
    let dim = ideal.dim();

    let mut leaves: BTreeSet<PurePowerIdeal> = BTreeSet::new();
    let mut seen: HashSet<Vec<ExponentVector>> = HashSet::new();
    let mut stack = vec![ideal.generators().to_vec()];
    while let Some(gens) = stack.pop() {
        if !seen.insert(gens.clone()) {
            continue;
        }
        let Some(pos) = gens.iter().position(|g| g.support_len() >= 2) else {
            let leaf = PurePowerIdeal::from_ideal(&MonomialIdeal::from_antichain(dim, gens))
                .expect("all generators are pure powers");
            leaves.insert(leaf);
            continue;
        };
        let g = &gens[pos];
        let var = g
            .support()
            .next()
            .expect("support has at least two entries");
        let rest = gens
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != pos)
            .map(|(_, h)| h.clone());

        let mut left: Vec<ExponentVector> = rest.clone().collect();
        left.push(ExponentVector::pure_power(dim, var, g.get(var))?);
        let mut right: Vec<ExponentVector> = rest.collect();
        right.push(g.with_entry(var, 0)?);

        stack.push(antichain(right));
        stack.push(antichain(left));
    }

    // a leaf containing another leaf is redundant
    let leaves: Vec<PurePowerIdeal> = leaves.into_iter().collect();
    let mut components: Vec<PurePowerIdeal> = leaves
        .iter()
        .filter(|q| !leaves.iter().any(|p| p != *q && q.contains(p)))
        .cloned()
        .collect();

    // greedy pass in canonical order
    let mut j = 0;
    while components.len() > 1 && j < components.len() {
        let others: Vec<MonomialIdeal> = components
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(_, q)| q.to_ideal())
            .collect();
        if components[j]
            .to_ideal()
            .contains(&intersect_all(&others)?)?
        {
            components.remove(j);
        } else {
            j += 1;
        }
    }

    let dec = Decomposition {
        components,
        source: ideal.clone(),
    };
    if dec.intersection()? != *ideal {
        return Err(Error::VerificationFailed(format!(
            "decomposition of {ideal} does not intersect back to it"
        )));
    }
    Ok(dec)
}
