//! The isotropy group of `D = ∂1 + b(x1) ∂2` on `Q[x1, x2]`.
//!
//! With `h = ∫ b` and `w = x2 - h(x1)`, every element is
//!
//! ```text
//! f = x1 + p(w)
//! g = Σ_k C_k f^{k+1} / (k+1) + c̃ w + c̄      (b = Σ_k C_k x1^k, c̃ ≠ 0)
//! ```
//!
//! In the coordinates `(x1, w)` the element acts as the triangular map
//! `(x1, w) ↦ (x1 + p(w), c̃ w + c̄)`, which is how inverses are built.

use num_traits::{One, Zero};

use super::commutes;
use crate::automorphism::PolyMap;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rat, VarStyle};

/// `∂1 + b(x1) ∂2`, with `b` given as a one-variable polynomial.
pub fn line_derivation(b: &MultiPoly) -> Result<Derivation> {
    check_univariate(b, "b")?;
    Derivation::new(vec![MultiPoly::one(2), b.embed(2, &[0])?])
}

fn check_univariate(p: &MultiPoly, name: &str) -> Result<()> {
    if p.n() != 1 {
        return Err(Error::Precondition(format!(
            "{name} must be a one-variable polynomial, got {} variables",
            p.n()
        )));
    }
    Ok(())
}

/// Parameters `(p, c̃, c̄)` of one element, together with the `b` that fixes `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsotropyElementB {
    /// `b(x1)`, one variable.
    pub b: MultiPoly,
    /// `p(w)`, one variable.
    pub p: MultiPoly,
    pub c_tilde: Rat,
    pub c_bar: Rat,
}

impl IsotropyElementB {
    pub fn new(b: MultiPoly, p: MultiPoly, c_tilde: Rat, c_bar: Rat) -> Result<Self> {
        check_univariate(&b, "b")?;
        check_univariate(&p, "p")?;
        if c_tilde.is_zero() {
            return Err(Error::Precondition("c_tilde must be nonzero".into()));
        }
        Ok(IsotropyElementB { b, p, c_tilde, c_bar })
    }

    pub fn identity(b: MultiPoly) -> Result<Self> {
        Self::new(b, MultiPoly::zero(1), Rat::one(), Rat::zero())
    }

    pub fn derivation(&self) -> Derivation {
        line_derivation(&self.b).expect("b is univariate")
    }

    /// `h = ∫ b` as a polynomial in `x1` of `Q[x1, x2]`.
    fn h2(&self) -> MultiPoly {
        self.b
            .antiderivative(0)
            .and_then(|h| h.embed(2, &[0]))
            .expect("b is univariate")
    }

    /// The map `(f, g)`.
    pub fn to_map(&self) -> PolyMap {
        let h = self.h2();
        let w = &MultiPoly::var(2, 1) - &h;
        let f = &MultiPoly::var(2, 0) + &self.p.substitute(std::slice::from_ref(&w)).expect("p is univariate");
        // Σ C_k f^{k+1}/(k+1) is h evaluated at f, since h has no constant term.
        let hf = h
            .project(&[0])
            .and_then(|h1| h1.substitute(std::slice::from_ref(&f)))
            .expect("h in x1");
        let g = &(&hf + &w.scale(&self.c_tilde)) + &MultiPoly::constant(2, self.c_bar.clone());
        PolyMap::new(vec![f, g]).expect("two components in two variables")
    }

    /// Parameters of the inverse element:
    /// `(x1, w) ↦ (x1 - p((w - c̄)/c̃), (w - c̄)/c̃)`.
    pub fn inverse(&self) -> IsotropyElementB {
        let inv_ct = Rat::one() / &self.c_tilde;
        let w_back = MultiPoly::from_terms(1, [(vec![1], inv_ct.clone()), (vec![0], -&self.c_bar * &inv_ct)]);
        let p = -&self.p.substitute(&[w_back]).expect("p is univariate");
        IsotropyElementB {
            b: self.b.clone(),
            p,
            c_tilde: inv_ct.clone(),
            c_bar: -&self.c_bar * inv_ct,
        }
    }

    /// The inverse map, built from the triangular structure.
    pub fn inverse_map(&self) -> PolyMap {
        self.inverse().to_map()
    }

    pub fn p_display(&self) -> String {
        self.p.display_with(VarStyle::Single('w'))
    }
}

/// Recovers `(p, c̃, c̄)` from a map commuting with `∂1 + b ∂2`.
///
/// Substitutes `x2 = w + h(x1)` into `f - x1` and `g - h(f)`; both must
/// depend on `w` alone, the latter affinely with a nonzero slope. Returns
/// `None` for maps that do not commute or do not have this shape (a
/// commuting map without it is not invertible).
pub fn decompose_triangular(rho: &PolyMap, b: &MultiPoly) -> Result<Option<IsotropyElementB>> {
    let d = line_derivation(b)?;
    if rho.n() != 2 {
        return Err(Error::AmbientMismatch {
            left: 2,
            right: rho.n(),
        });
    }
    if !commutes(rho, &d)? {
        return Ok(None);
    }
    let h1 = b.antiderivative(0)?;
    let h2 = h1.embed(2, &[0])?;
    // Variable 2 of the substituted polynomials is w.
    let to_w = [MultiPoly::var(2, 0), &MultiPoly::var(2, 1) + &h2];
    let f = &rho.components()[0];
    let g = &rho.components()[1];

    let p_w = (f - &MultiPoly::var(2, 0)).substitute(&to_w)?;
    let Ok(p) = p_w.project(&[1]) else {
        return Ok(None);
    };
    let rest = (g - &h1.substitute(std::slice::from_ref(f))?).substitute(&to_w)?;
    let Ok(q) = rest.project(&[1]) else {
        return Ok(None);
    };
    if q.degree_in(0) > 1 {
        return Ok(None);
    }
    let c_tilde = q.coeff(&crate::poly::Monomial::var(1, 0));
    if c_tilde.is_zero() {
        return Ok(None);
    }
    let e = IsotropyElementB::new(b.clone(), p, c_tilde, q.constant_term())?;
    if e.to_map() != *rho {
        return Err(Error::RedFlag("decomposition does not rebuild the map".into()));
    }
    Ok(Some(e))
}
