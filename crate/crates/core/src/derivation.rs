//! Derivations `D = p1 ∂1 + ... + pn ∂n` of `Q[x1, ..., xn]`.

use std::fmt;

use num_traits::One;

use crate::automorphism::{is_inverse_pair, PolyMap};
use crate::error::{Error, Result};
use crate::poly::{parse, MultiPoly};

/// A derivation, stored as its values `p_i = D(x_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    coeffs: Vec<MultiPoly>,
}

impl Derivation {
    /// Fails unless every coefficient lives in the ring with `coeffs.len()` variables.
    pub fn new(coeffs: Vec<MultiPoly>) -> Result<Self> {
        let n = coeffs.len();
        for c in &coeffs {
            if c.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: c.n() });
            }
        }
        Ok(Derivation { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Derivation {
            coeffs: vec![MultiPoly::zero(n); n],
        }
    }

    /// Parses a coefficient list such as `["1 - x1*x2", "x1^3", "x2"]`.
    pub fn parse<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        let n = coeffs.len();
        let polys = coeffs
            .iter()
            .map(|s| parse(s.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(polys)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &MultiPoly {
        &self.coeffs[i]
    }

    /// `D(f) = Σ p_i ∂f/∂x_i`.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.n() != self.n() {
            return Err(Error::AmbientMismatch {
                left: self.n(),
                right: f.n(),
            });
        }
        let mut out = MultiPoly::zero(self.n());
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = f.partial(i)?;
            if !d.is_zero() {
                out = &out + &(p * &d);
            }
        }
        Ok(out)
    }

    /// Coefficient strings, in the serialized form used by the CLI.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("\"{c}\"")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `D = ∂1 + Σ_{i≥2} (a_i(x1) x_i + b_i(x1)) ∂i`.
///
/// `a[k]` and `b[k]` belong to variable `x_{k+2}` and live in the ambient ring
/// of `D`, involving only `x1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShamsuddinForm {
    pub n: usize,
    pub a: Vec<MultiPoly>,
    pub b: Vec<MultiPoly>,
}

impl ShamsuddinForm {
    pub fn to_derivation(&self) -> Derivation {
        let mut coeffs = vec![MultiPoly::one(self.n)];
        for (k, (a, b)) in self.a.iter().zip(&self.b).enumerate() {
            coeffs.push(&(a * &MultiPoly::var(self.n, k + 1)) + b);
        }
        Derivation { coeffs }
    }
}

/// `D = p(x1) ∂1 + Σ_{i≥2} q_i(x1, x_i) ∂i` with `n ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseForm {
    pub n: usize,
    pub p: MultiPoly,
    /// `q[k]` is the coefficient of `∂_{k+2}`.
    pub q: Vec<MultiPoly>,
}

impl PairwiseForm {
    pub fn to_derivation(&self) -> Derivation {
        let mut coeffs = vec![self.p.clone()];
        coeffs.extend(self.q.iter().cloned());
        Derivation { coeffs }
    }
}

/// Splits `D` into Shamsuddin data when `p1 = 1` and each `p_i` is affine in
/// `x_i` with coefficients in `Q[x1]`.
pub fn recognize_shamsuddin(d: &Derivation) -> Option<ShamsuddinForm> {
    let n = d.n();
    if n == 0 || !d.coeffs[0].as_constant().is_some_and(|c| c.is_one()) {
        return None;
    }
    let mut a = Vec::with_capacity(n - 1);
    let mut b = Vec::with_capacity(n - 1);
    for i in 1..n {
        let p = &d.coeffs[i];
        if !p.involves_only(&[0, i]) || p.degree_in(i) > 1 {
            return None;
        }
        let mut cs = p.coefficients_in(i).into_iter();
        b.push(cs.next().unwrap_or_else(|| MultiPoly::zero(n)));
        a.push(cs.next().unwrap_or_else(|| MultiPoly::zero(n)));
    }
    Some(ShamsuddinForm { n, a, b })
}

/// Splits `D` as `p(x1) ∂1 + Σ q_i(x1, x_i) ∂i`; requires `n ≥ 2`.
pub fn recognize_pairwise(d: &Derivation) -> Option<PairwiseForm> {
    let n = d.n();
    if n < 2 || !d.coeffs[0].involves_only(&[0]) {
        return None;
    }
    for i in 1..n {
        if !d.coeffs[i].involves_only(&[0, i]) {
            return None;
        }
    }
    Some(PairwiseForm {
        n,
        p: d.coeffs[0].clone(),
        q: d.coeffs[1..].to_vec(),
    })
}

/// The cofactor `Λ` with `D(g) = Λ g` when the principal ideal `(g)` is
/// `D`-stable, `None` otherwise.
pub fn stability_cofactor(d: &Derivation, g: &MultiPoly) -> Result<Option<MultiPoly>> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    d.apply(g)?.exact_divide(g)
}

/// `(g)` is `D`-stable iff `g | D(g)`.
pub fn principal_ideal_stable(d: &Derivation, g: &MultiPoly) -> Result<bool> {
    Ok(stability_cofactor(d, g)?.is_some())
}

/// `ρ⁻¹ ∘ D ∘ ρ`, whose `i`-th coefficient is `D(ρ(x_i))` with `x ↦ ρ⁻¹(x)` substituted.
pub fn conjugate(d: &Derivation, rho: &PolyMap, rho_inv: &PolyMap) -> Result<Derivation> {
    if rho.n() != d.n() || rho_inv.n() != d.n() {
        return Err(Error::AmbientMismatch {
            left: d.n(),
            right: rho.n().max(rho_inv.n()),
        });
    }
    if !is_inverse_pair(rho, rho_inv)? {
        return Err(Error::NotInverse);
    }
    let coeffs = rho
        .components()
        .iter()
        .map(|f| d.apply(f)?.substitute(rho_inv.components()))
        .collect::<Result<Vec<_>>>()?;
    Derivation::new(coeffs)
}
