//! Membership in the isotropy group `Aut(Q[x])_D` and the translations that
//! fix the coefficients of a derivation.
//!
//! An automorphism `ρ: x ↦ f` commutes with `D = Σ p_i ∂i` exactly when
//! `D(f_j) = p_j(f)` for every `j`. A translation `x ↦ x + c` fixes all `p_j`
//! exactly when the directional derivative `Σ c_i ∂p_j/∂x_i` vanishes, so the
//! invariant translations form the kernel of a rational linear system.

mod triangular;

pub use triangular::{decompose_triangular, line_derivation, IsotropyElementB};

use std::fmt;

use num_traits::Zero;

use crate::automorphism::{constant_part, is_translation, subtract_constant, PolyMap};
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, MultiPoly, Rat};

/// A component where `ρD ≠ Dρ`: `D(f_j) = lhs` but `p_j(f) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationDefect {
    pub component: usize,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

/// First component `j` where `D(f_j) ≠ p_j(f)`, if any.
pub fn commutation_defect(rho: &PolyMap, d: &Derivation) -> Result<Option<CommutationDefect>> {
    if rho.n() != d.n() {
        return Err(Error::AmbientMismatch {
            left: d.n(),
            right: rho.n(),
        });
    }
    for (j, fj) in rho.components().iter().enumerate() {
        let lhs = d.apply(fj)?;
        let rhs = d.coeff(j).substitute(rho.components())?;
        if lhs != rhs {
            return Ok(Some(CommutationDefect { component: j, lhs, rhs }));
        }
    }
    Ok(None)
}

/// `ρD = Dρ`. Says nothing about invertibility of `ρ`.
pub fn commutes(rho: &PolyMap, d: &Derivation) -> Result<bool> {
    Ok(commutation_defect(rho, d)?.is_none())
}

/// True when `p_j(x + c) = p_j(x)` for every coefficient of `d`.
pub fn fixes_coefficients(d: &Derivation, c: &[Rat]) -> Result<bool> {
    for p in d.coeffs() {
        if p.translate(c)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of `{c ∈ Q^n : p_j(x + c) = p_j(x) for all j}`.
pub fn invariant_translations(d: &Derivation) -> Vec<Vec<Rat>> {
    let n = d.n();
    let mut rows = Vec::new();
    for p in d.coeffs() {
        let partials: Vec<MultiPoly> = (0..n).map(|i| p.partial(i).expect("in range")).collect();
        let mut monos: Vec<&Monomial> = partials.iter().flat_map(|q| q.terms().map(|(m, _)| m)).collect();
        monos.sort();
        monos.dedup();
        for m in monos {
            rows.push(partials.iter().map(|q| q.coeff(m)).collect());
        }
    }
    let basis = linalg::kernel(&rows, n);
    for c in &basis {
        assert!(
            fixes_coefficients(d, c).expect("length matches"),
            "kernel vector {c:?} does not fix the coefficients"
        );
    }
    basis
}

/// Smallest index with `c_k ≠ 0`.
pub fn default_direction(c: &[Rat]) -> Option<usize> {
    c.iter().position(|v| !v.is_zero())
}

fn barred_inputs(n: usize, c: &[Rat], k: usize) -> Result<()> {
    if c.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.len(),
        });
    }
    if k >= n || c[k].is_zero() {
        return Err(Error::Precondition(format!(
            "direction index {} must select a nonzero entry of c",
            k + 1
        )));
    }
    Ok(())
}

/// The barred coordinates as polynomials in `x`: `x̄_j = c_k x_j - c_j x_k`
/// for `j ≠ k` and `x̄_k = x_k`.
pub fn barred_coordinates(c: &[Rat], k: usize) -> Result<Vec<MultiPoly>> {
    let n = c.len();
    barred_inputs(n, c, k)?;
    Ok((0..n)
        .map(|j| {
            if j == k {
                MultiPoly::var(n, k)
            } else {
                &MultiPoly::var(n, j).scale(&c[k]) - &MultiPoly::var(n, k).scale(&c[j])
            }
        })
        .collect())
}

/// Rewrites a `c`-invariant polynomial in the barred coordinates. Variable
/// `j` of the result stands for `x̄_j`; the result never involves `x̄_k`.
pub fn reduce_by_invariant_direction(p: &MultiPoly, c: &[Rat], k: usize) -> Result<MultiPoly> {
    let n = p.n();
    barred_inputs(n, c, k)?;
    if p.translate(c)? != *p {
        return Err(Error::Precondition(
            "polynomial is not invariant under the translation".into(),
        ));
    }
    // x_j = (x̄_j + c_j x̄_k) / c_k for j ≠ k, x_k = x̄_k.
    let inv_ck = Rat::from_integer(1.into()) / &c[k];
    let images: Vec<MultiPoly> = (0..n)
        .map(|j| {
            if j == k {
                MultiPoly::var(n, k)
            } else {
                (&MultiPoly::var(n, j) + &MultiPoly::var(n, k).scale(&c[j])).scale(&inv_ck)
            }
        })
        .collect();
    let reduced = p.substitute(&images)?;
    if reduced.degree_in(k) != 0 {
        return Err(Error::RedFlag(
            "invariant polynomial still depends on the invariant direction".into(),
        ));
    }
    Ok(reduced)
}

/// Substitutes the barred definitions back into a barred-coordinate polynomial.
pub fn unbar(pbar: &MultiPoly, c: &[Rat], k: usize) -> Result<MultiPoly> {
    pbar.substitute(&barred_coordinates(c, k)?)
}

/// Outcome of testing whether the constant-free part `f - f(0)` of a
/// commuting map still commutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftClass {
    /// `f - f(0)` commutes and `f` is the translation `x + f(0)`.
    Translation,
    /// `f - f(0)` commutes but `f` is not a translation. For a simple `D`
    /// and invertible `f` this cannot happen, so it is flagged.
    NontranslationFlag,
    /// `f - f(0)` does not commute.
    ShiftBreaks,
}

impl ShiftClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ShiftClass::Translation => "translation",
            ShiftClass::NontranslationFlag => "nontranslation-flag",
            ShiftClass::ShiftBreaks => "shift-breaks",
        }
    }
}

impl fmt::Display for ShiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a map `f` commuting with `D` by whether `f - f(0)` commutes.
///
/// Membership of `f - f(0)` is decided twice: directly, and through the
/// equivalent criterion `p_j(x - f(0)) = p_j(x)` for all `j`. The two agree
/// for every invertible `f`; a disagreement proves `f` is not an
/// automorphism and is reported as a precondition failure.
pub fn classify_shift(f: &PolyMap, d: &Derivation) -> Result<ShiftClass> {
    if !commutes(f, d)? {
        return Err(Error::Precondition("map does not commute with D".into()));
    }
    let direct = commutes(&subtract_constant(f), d)?;
    let neg_c: Vec<Rat> = constant_part(f).into_iter().map(|v| -v).collect();
    let via_translation = fixes_coefficients(d, &neg_c)?;
    if direct != via_translation {
        return Err(Error::Precondition(
            "shift tests disagree, so the map is not invertible".into(),
        ));
    }
    Ok(if !direct {
        ShiftClass::ShiftBreaks
    } else if is_translation(f).is_some() {
        ShiftClass::Translation
    } else {
        ShiftClass::NontranslationFlag
    })
}
