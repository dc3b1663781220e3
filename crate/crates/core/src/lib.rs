//! Differential powers of monomial ideals.
//!
//! A monomial ideal is stored as its antichain of minimal exponent vectors.
//! The `n`-th differential power `I^⟨n⟩` collects the polynomials that every
//! differential operator of order at most `n - 1` maps into `I`.
//!
//! ```
//! use diffpow_core::{diffpower, parse_ideal};
//!
//! let i = parse_ideal("(x^2 y^5, x^4 y^3, x^5 y)").unwrap().ideal;
//! assert_eq!(diffpower(&i, 6).unwrap().to_string(), "(x^7 y^6)");
//! ```

pub mod analysis;
pub mod closure;
pub mod combinat;
pub mod decompose;
pub mod diffpower;
pub mod error;
pub mod exponent;
pub mod ideal;
pub mod oracle;
pub mod staircase;
pub mod text;

pub use analysis::{
    lower_containment_c, nmin_search, nmin_search_with, no_uniform_polynomial_demo,
    principal_containment_check, principality_2d, principality_3d, upper_containment_check, CValue,
    ContainmentDirection, ContainmentReport, LowerContainment, NoUniformWitness,
    PrincipalityReport, SearchMode,
};
pub use closure::{
    closure_axiom_suite, differential_closure, falsification_probe, witness_probe, ClosureAxioms,
    ClosureWitness, ProbeCheck,
};
pub use decompose::{decompose, is_irredundant, Decomposition};
pub use diffpower::{
    diffpower, diffpower_principal, diffpower_pure, diffpower_traced, DiffPowerTrace,
};
pub use error::{Error, Result};
pub use exponent::ExponentVector;
pub use ideal::{intersect_all, minimalize, MonomialIdeal, PurePowerIdeal};
pub use oracle::{
    bruteforce_diffpower, bruteforce_membership, default_box, differentiate, membership_witness,
    MembershipWitness, OperatorIndex, Polynomial,
};
pub use staircase::{render_staircase, RenderFormat, StaircaseRender};
pub use text::{parse_ideal, parse_ideal_with, parse_monomial, IdealExpression, VarStyle};
