//! Constructive non-simplicity.
//!
//! A derivation is simple when no ideal other than `0` and the whole ring is
//! `D`-stable. Everything here either builds an explicit proper `D`-stable
//! ideal (a [`NonSimplicityWitness`]) or decides simplicity in the one family
//! where a criterion is available: two-variable Shamsuddin derivations.

mod enumerate;
mod shamsuddin;
mod stability;
mod witness;

pub use enumerate::{
    bounded_commuting_maps, bounded_isotropy_enumeration, bounded_isotropy_enumeration_with_cap, EnumerationLimits,
    DEFAULT_MAX_CANDIDATES,
};
pub use shamsuddin::{shamsuddin_simple_n2, solution_generator, ShamsuddinDecision};
pub use stability::multi_generator_stability;
pub use witness::{necessary_condition_witness, pairwise_witness, plane_witness};

use std::fmt;

use crate::derivation::{stability_cofactor, Derivation};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Which construction produced a witness. The string forms are part of the
/// CLI output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rationale {
    /// `Σ λ_i p_i = 0`; witness `(Σ λ_i x_i)`.
    LinearDependence,
    /// `p_i ∈ Q[x_i]` nonconstant; witness `(p_i)`.
    UnivariateCoefficient,
    /// `p_i` vanishes on `x_i = 0`; witness `(x_i)`.
    VanishingAtZero,
    /// Invariant translation in the plane, `s ∈ Q*`.
    Thm27Antiderivative,
    /// Invariant translation in the plane, `s` nonconstant.
    Thm27NonconstantS,
    /// Invariant translation in the plane, `s = 0`.
    Thm27ZeroS,
    /// Pairwise form with `p = 0`.
    Thm31P0,
    /// Pairwise form with `p` nonconstant.
    Thm31PNonconstant,
    /// Pairwise form, `c1 ≠ 0`, some `q_i` nonconstant in barred coordinates.
    Thm31C1NonzeroNonconstQ,
    /// Pairwise form, `c1 ≠ 0`, every `q_i` constant.
    Thm31C1NonzeroConstQ,
    /// Pairwise form, `c1 = 0`, some `q_i ∈ Q[x1]`.
    Thm31C1ZeroUnivariateQ,
}

impl Rationale {
    pub fn as_str(self) -> &'static str {
        match self {
            Rationale::LinearDependence => "LinearDependence",
            Rationale::UnivariateCoefficient => "UnivariateCoefficient",
            Rationale::VanishingAtZero => "VanishingAtZero",
            Rationale::Thm27Antiderivative => "Thm27Antiderivative",
            Rationale::Thm27NonconstantS => "Thm27NonconstantS",
            Rationale::Thm27ZeroS => "Thm27ZeroS",
            Rationale::Thm31P0 => "Thm31P0",
            Rationale::Thm31PNonconstant => "Thm31PNonconstant",
            Rationale::Thm31C1NonzeroNonconstQ => "Thm31C1Nonzero_NonconstQ",
            Rationale::Thm31C1NonzeroConstQ => "Thm31C1Nonzero_ConstQ",
            Rationale::Thm31C1ZeroUnivariateQ => "Thm31C1Zero_UnivariateQ",
        }
    }
}

impl fmt::Display for Rationale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Generators of a proper nonzero `D`-stable ideal with stability evidence.
///
/// All constructions in this crate are principal, so the evidence is the
/// cofactor `Λ` with `D(g) = Λ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSimplicityWitness {
    rationale: Rationale,
    generators: Vec<MultiPoly>,
    cofactors: Vec<MultiPoly>,
    stable: bool,
}

impl NonSimplicityWitness {
    /// Normalizes `g` (primitive integer content, positive leading
    /// coefficient) and certifies that `(g)` is proper, nonzero and stable.
    pub fn principal(d: &Derivation, rationale: Rationale, g: &MultiPoly) -> Result<Self> {
        let g = g.normalized();
        if g.is_constant() {
            return Err(Error::RedFlag(format!(
                "{rationale} produced the constant generator {g}"
            )));
        }
        let Some(cofactor) = stability_cofactor(d, &g)? else {
            return Err(Error::RedFlag(format!("{rationale} generator {g} is not D-stable")));
        };
        Ok(NonSimplicityWitness {
            rationale,
            generators: vec![g],
            cofactors: vec![cofactor],
            stable: true,
        })
    }

    pub fn rationale(&self) -> Rationale {
        self.rationale
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn generator(&self) -> &MultiPoly {
        &self.generators[0]
    }

    /// `Λ` with `D(g) = Λ g`.
    pub fn cofactor(&self) -> &MultiPoly {
        &self.cofactors[0]
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// Re-runs the stability check against `d`.
    pub fn verify(&self, d: &Derivation) -> Result<bool> {
        for g in &self.generators {
            if g.is_constant() || stability_cofactor(d, g)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for NonSimplicityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{{rationale: {}, generators: [{}], stable: {}}}",
            self.rationale,
            gens.join(", "),
            self.stable
        )
    }
}
