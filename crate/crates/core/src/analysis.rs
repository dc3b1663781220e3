//! Principality indices and containment constants.

use std::fmt;

use crate::combinat::weak_compositions;
use crate::diffpower::{diffpower, diffpower_principal, diffpower_pure};
use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, MAX_EXPONENT};
use crate::ideal::{MonomialIdeal, PurePowerIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalityReport {
    pub ideal: MonomialIdeal,
    /// The closed-form `N` with `I^⟨N⟩` principal.
    pub n_bound: u32,
    /// The generator of `I^⟨N⟩`.
    pub generator_at_bound: ExponentVector,
    pub n_min: Option<u32>,
    pub principal_gen_at_n_min: Option<ExponentVector>,
    pub search_cap: u32,
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn to_exponent(v: u64) -> Result<u32> {
    if v <= MAX_EXPONENT as u64 {
        Ok(v as u32)
    } else {
        Err(Error::Overflow)
    }
}

/// Exact principality index of a two-variable ideal with radical `(xy)`.
///
/// With generators `x^{a_1} y^{b_1}, ..., x^{a_m} y^{b_m}` sorted so that
/// `a` increases (and `b` decreases), let `T = max_j (a_{j+1} + b_j)`. Then
/// `I^⟨n⟩` is principal exactly when `n >= N = T - b_m - a_1`, and
/// `I^⟨N⟩ = (x^{T-b_m-1} y^{T-a_1-1})`.
pub fn principality_2d(ideal: &MonomialIdeal) -> Result<PrincipalityReport> {
    if ideal.dim() != 2 {
        return Err(precondition(format!(
            "two-variable principality needs d = 2, got d = {}",
            ideal.dim()
        )));
    }
    ideal.ensure_proper()?;
    // lexicographic storage order is already increasing in the x exponent
    let gens = ideal.generators();
    if gens.len() < 2 {
        return Err(precondition("ideal is already principal"));
    }
    let first_x = gens[0].get(0) as u64;
    let last_y = gens[gens.len() - 1].get(1) as u64;
    if first_x == 0 || last_y == 0 {
        return Err(precondition(format!(
            "radical of {ideal} is not (x y): some generator is not divisible by both variables"
        )));
    }
    let top = gens
        .windows(2)
        .map(|w| w[1].get(0) as u64 + w[0].get(1) as u64)
        .max()
        .expect("at least two generators");
    let n = to_exponent(top - last_y - first_x)?;
    let generator = ExponentVector::new(vec![
        to_exponent(top - last_y - 1)?,
        to_exponent(top - first_x - 1)?,
    ])?;
    Ok(PrincipalityReport {
        ideal: ideal.clone(),
        n_bound: n,
        generator_at_bound: generator.clone(),
        n_min: Some(n),
        principal_gen_at_n_min: Some(generator),
        search_cap: n,
    })
}

/// Three-variable principality bound, refined by [`nmin_search`] up to it.
///
/// `N = max(N_xy, N_yz, N_xz)` with `N_uv = u_max + v_max - u_min - v_min`
/// over generator exponents, and `I^⟨N⟩ = (x^{N-1+x_min} y^{N-1+y_min} z^{N-1+z_min})`.
pub fn principality_3d(ideal: &MonomialIdeal) -> Result<PrincipalityReport> {
    if ideal.dim() != 3 {
        return Err(precondition(format!(
            "three-variable principality needs d = 3, got d = {}",
            ideal.dim()
        )));
    }
    ideal.ensure_proper()?;
    if ideal.principal_generator().is_some() {
        return Err(precondition("ideal is already principal"));
    }
    let lo = ideal.min_exponents();
    let hi = ideal.max_exponents();
    if lo.entries().contains(&0) {
        return Err(precondition(format!(
            "radical of {ideal} is not (x y z): some variable does not divide every generator"
        )));
    }
    let spread = |i: usize| hi.get(i) as u64 - lo.get(i) as u64;
    let n = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(u, v)| spread(u) + spread(v))
        .max()
        .expect("three pairs");
    let n = to_exponent(n)?;
    let generator = ExponentVector::new(
        (0..3)
            .map(|i| to_exponent(n as u64 - 1 + lo.get(i) as u64))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let at_bound = diffpower(ideal, n)?;
    if at_bound.principal_generator() != Some(&generator) {
        return Err(Error::VerificationFailed(format!(
            "differential power {n} of {ideal} is {at_bound}, expected ({generator})"
        )));
    }
    let found = search(ideal, n, SearchMode::Binary, Some(generator.clone()))?;
    let (n_min, gen_min) = found.expect("principal at the bound");
    Ok(PrincipalityReport {
        ideal: ideal.clone(),
        n_bound: n,
        generator_at_bound: generator,
        n_min: Some(n_min),
        principal_gen_at_n_min: Some(gen_min),
        search_cap: n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Relies on principality persisting once reached.
    Binary,
    /// Probes every `n` in order.
    Linear,
}

/// Least `n <= cap` with `I^⟨n⟩` principal, with its generator.
pub fn nmin_search(ideal: &MonomialIdeal, cap: u32) -> Result<Option<(u32, ExponentVector)>> {
    nmin_search_with(ideal, cap, SearchMode::Binary)
}

pub fn nmin_search_with(
    ideal: &MonomialIdeal,
    cap: u32,
    mode: SearchMode,
) -> Result<Option<(u32, ExponentVector)>> {
    if cap < 1 {
        return Err(Error::InvalidArgument(
            "search cap must be at least 1".into(),
        ));
    }
    ideal.ensure_proper()?;
    search(ideal, cap, mode, None)
}

fn probe(ideal: &MonomialIdeal, n: u32) -> Result<Option<ExponentVector>> {
    Ok(diffpower(ideal, n)?.principal_generator().cloned())
}

fn search(
    ideal: &MonomialIdeal,
    cap: u32,
    mode: SearchMode,
    known_at_cap: Option<ExponentVector>,
) -> Result<Option<(u32, ExponentVector)>> {
    if let Some(g) = ideal.principal_generator() {
        return Ok(Some((1, g.clone())));
    }
    match mode {
        SearchMode::Linear => {
            for n in 2..=cap {
                if let Some(g) = probe(ideal, n)? {
                    return Ok(Some((n, g)));
                }
            }
            Ok(None)
        }
        SearchMode::Binary => {
            let at_cap = match known_at_cap {
                Some(g) => g,
                None => match probe(ideal, cap)? {
                    Some(g) => g,
                    None => return Ok(None),
                },
            };
            // invariant: not principal at lo, principal at hi
            let (mut lo, mut hi, mut gen) = (1u32, cap, at_cap);
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                match probe(ideal, mid)? {
                    Some(g) => {
                        hi = mid;
                        gen = g;
                    }
                    None => lo = mid,
                }
            }
            Ok(Some((hi, gen)))
        }
    }
}

/// A containment constant. Integers are used wherever possible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CValue {
    Integer(u64),
    Rational { num: u64, den: u64 },
}

impl CValue {
    fn rational(num: u64, den: u64) -> Self {
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        if den == 1 {
            CValue::Integer(num)
        } else {
            CValue::Rational { num, den }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for CValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CValue::Integer(c) => write!(f, "{c}"),
            CValue::Rational { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainmentDirection {
    /// `I^n ⊆ I^⟨level⟩`.
    OrdinaryInDiff,
    /// `I^⟨level⟩ ⊆ I^n`.
    DiffInOrdinary,
}

impl ContainmentDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            ContainmentDirection::OrdinaryInDiff => "ordinary_in_diff",
            ContainmentDirection::DiffInOrdinary => "diff_in_ordinary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    pub ideal: MonomialIdeal,
    pub n: u32,
    pub c_value: CValue,
    pub direction: ContainmentDirection,
    /// Differential-power indices whose containment was checked.
    pub checked_levels: Vec<u32>,
    /// All checked containments hold.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerContainment {
    pub c: u64,
    /// A minimizing `ω` (first in colex order).
    pub minimizer: ExponentVector,
    pub report: ContainmentReport,
}

/// Smallest `c = min Σ_{i∈supp ω} (α_i - 1)(ω_i - 1)` over `|ω| = n`,
/// `supp ω ⊆ supp α`, together with a check of `Q^n ⊆ Q^⟨n+c⟩`.
pub fn lower_containment_c(q: &PurePowerIdeal, n: u32) -> Result<LowerContainment> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if q.is_zero() {
        return Err(Error::DegenerateIdeal("zero"));
    }
    let support = q.support();
    let alpha = q.alpha();
    let mut best: Option<(u64, Vec<u32>)> = None;
    for omega in weak_compositions(n, support.len()) {
        let cost: u64 = support
            .iter()
            .zip(&omega)
            .filter(|(_, &w)| w > 0)
            .map(|(&i, &w)| (alpha.get(i) as u64 - 1) * (w as u64 - 1))
            .sum();
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, omega));
        }
    }
    let (c, omega) = best.expect("at least one composition");
    let mut minimizer = vec![0u32; q.dim()];
    for (&i, &w) in support.iter().zip(&omega) {
        minimizer[i] = w;
    }
    let level = to_exponent(n as u64 + c)?;
    let verified = diffpower_pure(q, level)?.contains(&q.to_ideal().power(n)?)?;
    Ok(LowerContainment {
        c,
        minimizer: ExponentVector::new(minimizer)?,
        report: ContainmentReport {
            ideal: q.to_ideal(),
            n,
            c_value: CValue::Integer(c),
            direction: ContainmentDirection::OrdinaryInDiff,
            checked_levels: vec![level],
            verified,
        },
    })
}

/// Checks `Q^⟨cn⟩ ⊆ Q^n` with `c = max(max_i α_i, |supp α| + 1)`.
pub fn upper_containment_check(q: &PurePowerIdeal, n: u32) -> Result<ContainmentReport> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if q.is_zero() {
        return Err(Error::DegenerateIdeal("zero"));
    }
    let c = (q.alpha().max_entry() as u64).max(q.support().len() as u64 + 1);
    let level = to_exponent(c * n as u64)?;
    let verified = q
        .to_ideal()
        .power(n)?
        .contains(&diffpower_pure(q, level)?)?;
    Ok(ContainmentReport {
        ideal: q.to_ideal(),
        n,
        c_value: CValue::Integer(c),
        direction: ContainmentDirection::DiffInOrdinary,
        checked_levels: vec![level],
        verified,
    })
}

/// Checks `(x^γ)^⟨α_max n⟩ ⊆ (x^γ)^n`, and the sharper
/// `(x^γ)^⟨(n-1)α_max + 1⟩ ⊆ (x^γ)^n` behind `c = ((n-1)α_max + 1)/n`.
pub fn principal_containment_check(gamma: &ExponentVector, n: u32) -> Result<ContainmentReport> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if gamma.is_zero() {
        return Err(Error::ZeroVector);
    }
    let a_max = gamma.max_entry() as u64;
    let ideal = MonomialIdeal::principal(gamma.clone());
    let ordinary = ideal.power(n)?;
    let coarse = to_exponent(a_max * n as u64)?;
    let sharp = to_exponent((n as u64 - 1) * a_max + 1)?;
    let mut verified = true;
    for level in [coarse, sharp] {
        verified &= ordinary.contains(&diffpower_principal(gamma, level)?)?;
    }
    Ok(ContainmentReport {
        ideal,
        n,
        c_value: CValue::rational(sharp as u64, n as u64),
        direction: ContainmentDirection::DiffInOrdinary,
        checked_levels: vec![coarse, sharp],
        verified,
    })
}

/// A concrete failure of `I^⟨p(n)⟩ ⊆ I^n` for a given polynomial `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoUniformWitness {
    /// `c = p(2)`; the ideal is `(x^c)` in one variable.
    pub c: u32,
    pub ideal: MonomialIdeal,
    pub n: u32,
    pub p_n: u32,
    /// `x^{c-1+p(n)}`.
    pub witness: ExponentVector,
    pub in_diffpower: bool,
    pub in_ordinary_power: bool,
}

fn eval_poly(coeffs: &[u64], n: u64) -> Result<u64> {
    coeffs.iter().rev().try_fold(0u64, |acc, &k| {
        acc.checked_mul(n)
            .and_then(|v| v.checked_add(k))
            .ok_or(Error::Overflow)
    })
}

/// Finds `n` with `x^{c-1+p(n)} ∈ I^⟨p(n)⟩ \ I^n` for `I = (x^{p(2)})`.
/// `p_coeffs` lists coefficients from the constant term up.
pub fn no_uniform_polynomial_demo(p_coeffs: &[u64]) -> Result<NoUniformWitness> {
    if p_coeffs.iter().all(|&k| k == 0) {
        return Err(precondition("p(n) must be at least 1 for n >= 1"));
    }
    let c = to_exponent(eval_poly(p_coeffs, 2)?)?;
    let ideal = MonomialIdeal::principal(ExponentVector::new(vec![c])?);
    let limit = 10 * c as u64;
    for n in 1..=limit {
        let p_n = eval_poly(p_coeffs, n)?;
        if c as u64 - 1 + p_n >= c as u64 * n {
            continue;
        }
        let p_n = to_exponent(p_n)?;
        let n = to_exponent(n)?;
        let witness = ExponentVector::new(vec![to_exponent(c as u64 - 1 + p_n as u64)?])?;
        let in_diffpower = diffpower(&ideal, p_n)?.contains_monomial(&witness)?;
        let in_ordinary_power = ideal.power(n)?.contains_monomial(&witness)?;
        if !in_diffpower || in_ordinary_power {
            return Err(Error::VerificationFailed(format!(
                "x^{} should lie in differential power {p_n} but not in power {n} of {ideal}",
                witness.get(0)
            )));
        }
        return Ok(NoUniformWitness {
            c,
            ideal,
            n,
            p_n,
            witness,
            in_diffpower,
            in_ordinary_power,
        });
    }
    Err(Error::NoFailingN { limit })
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

    fn pp(d: usize, powers: &[(usize, u32)]) -> PurePowerIdeal {
        PurePowerIdeal::new(d, powers.iter().copied()).unwrap()
    }

    #[test]
    fn two_variable_example() {
        let r = principality_2d(&ideal(2, &[&[2, 5], &[4, 3], &[5, 1]])).unwrap();
        assert_eq!(r.n_bound, 6);
        assert_eq!(r.generator_at_bound, ev(&[7, 6]));
        assert_eq!(r.n_min, Some(6));
    }

    #[test]
    fn two_variable_two_generators() {
        // sorted pairs (1,2),(3,1): T = 3 + 2, N = 5 - 1 - 1
        let r = principality_2d(&ideal(2, &[&[1, 2], &[3, 1]])).unwrap();
        assert_eq!(r.n_bound, 3);
        assert_eq!(r.generator_at_bound, ev(&[3, 3]));
    }

    #[test]
    fn two_variable_preconditions() {
        assert!(matches!(
            principality_2d(&ideal(2, &[&[2, 1], &[3, 0]])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            principality_2d(&ideal(2, &[&[2, 1]])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            principality_2d(&ideal(3, &[&[2, 1, 1], &[1, 2, 1]])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn three_variable_small_row() {
        let r = principality_3d(&ideal(3, &[&[4, 1, 1], &[1, 4, 1], &[1, 1, 4]])).unwrap();
        assert_eq!(r.n_bound, 6);
        assert_eq!(r.generator_at_bound, ev(&[6, 6, 6]));
        assert_eq!(r.n_min, Some(5));
        assert_eq!(r.principal_gen_at_n_min, Some(ev(&[5, 5, 5])));
    }

    #[test]
    fn three_variable_preconditions() {
        assert!(matches!(
            principality_3d(&ideal(3, &[&[1, 1, 0], &[0, 0, 2]])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn search_examples() {
        let i = ideal(2, &[&[2, 5], &[4, 3], &[5, 1]]);
        assert_eq!(nmin_search(&i, 10).unwrap(), Some((6, ev(&[7, 6]))));
        assert_eq!(
            nmin_search_with(&i, 10, SearchMode::Linear).unwrap(),
            Some((6, ev(&[7, 6])))
        );
        assert_eq!(nmin_search(&i, 5).unwrap(), None);
        assert_eq!(
            nmin_search(&ideal(2, &[&[1, 0], &[0, 1]]), 10).unwrap(),
            None
        );
        assert!(matches!(nmin_search(&i, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn lower_constant_examples() {
        let q = pp(2, &[(0, 2), (1, 3)]);
        let two = lower_containment_c(&q, 2).unwrap();
        assert_eq!((two.c, two.minimizer.clone()), (0, ev(&[1, 1])));
        assert!(two.report.verified);
        let three = lower_containment_c(&q, 3).unwrap();
        assert_eq!((three.c, three.minimizer.clone()), (1, ev(&[2, 1])));
        assert!(three.report.verified);
        let single = lower_containment_c(&pp(1, &[(0, 3)]), 2).unwrap();
        assert_eq!(single.c, 2);
        assert!(single.report.verified);
    }

    #[test]
    fn upper_check_examples() {
        let r = upper_containment_check(&pp(2, &[(0, 2), (1, 3)]), 1).unwrap();
        assert_eq!(r.c_value, CValue::Integer(3));
        assert!(r.verified);
        let r = upper_containment_check(&pp(3, &[(0, 1), (1, 1), (2, 1)]), 2).unwrap();
        assert_eq!(r.c_value, CValue::Integer(4));
        assert_eq!(r.checked_levels, vec![8]);
        assert!(r.verified);
        let r = upper_containment_check(&pp(1, &[(0, 5)]), 3).unwrap();
        assert_eq!(r.c_value, CValue::Integer(5));
        assert!(r.verified);
    }

    #[test]
    fn principal_check_examples() {
        let r = principal_containment_check(&ev(&[2, 3]), 2).unwrap();
        assert_eq!(r.checked_levels, vec![6, 4]);
        assert_eq!(r.c_value, CValue::Integer(2));
        assert!(r.verified);
        let r = principal_containment_check(&ev(&[1]), 7).unwrap();
        assert_eq!(r.c_value, CValue::Integer(1));
        assert!(r.verified);
        let r = principal_containment_check(&ev(&[1, 1, 1]), 3).unwrap();
        assert!(r.verified);
        let r = principal_containment_check(&ev(&[2, 1]), 2).unwrap();
        assert_eq!(r.c_value, CValue::Rational { num: 3, den: 2 });
        assert_eq!(
            principal_containment_check(&ev(&[0, 0]), 1),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn no_uniform_examples() {
        let w = no_uniform_polynomial_demo(&[0, 2]).unwrap();
        assert_eq!((w.c, w.n, w.p_n, w.witness.get(0)), (4, 2, 4, 7));
        let w = no_uniform_polynomial_demo(&[0, 1]).unwrap();
        assert_eq!((w.c, w.n, w.witness.get(0)), (2, 2, 3));
        let w = no_uniform_polynomial_demo(&[3, 1]).unwrap();
        assert_eq!((w.c, w.n, w.witness.get(0)), (5, 2, 9));
        assert!(w.in_diffpower && !w.in_ordinary_power);
        assert!(matches!(
            no_uniform_polynomial_demo(&[0, 0]),
            Err(Error::Precondition(_))
        ));
    }
}
