//! Polynomial maps `f = (f1, ..., fn)` and the automorphisms `g ↦ g(f)` they induce.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{parse, Monomial, MultiPoly, Rat};

/// A polynomial endomorphism `x_i ↦ f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyMap {
    components: Vec<MultiPoly>,
}

impl PolyMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let n = components.len();
        for c in &components {
            if c.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: c.n() });
            }
        }
        Ok(PolyMap { components })
    }

    pub fn parse<S: AsRef<str>>(components: &[S]) -> Result<Self> {
        let n = components.len();
        let polys = components
            .iter()
            .map(|s| parse(s.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(polys)
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (0..n).map(|i| MultiPoly::var(n, i)).collect(),
        }
    }

    /// `x ↦ x + c`.
    pub fn translation(c: &[Rat]) -> Self {
        let n = c.len();
        PolyMap {
            components: c
                .iter()
                .enumerate()
                .map(|(i, ci)| &MultiPoly::var(n, i) + &MultiPoly::constant(n, ci.clone()))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.n())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.components.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_strings();
        write!(f, "({})", parts.join(", "))
    }
}

/// Component `i` of the result is `f_i(g_1, ..., g_n)`.
pub fn compose(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    if f.n() != g.n() {
        return Err(Error::AmbientMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    let components = f
        .components
        .iter()
        .map(|fi| fi.substitute(&g.components))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMap { components })
}

/// True iff `h ∘ f` and `f ∘ h` are both the identity.
pub fn is_inverse_pair(f: &PolyMap, h: &PolyMap) -> Result<bool> {
    if f.n() != h.n() {
        return Err(Error::AmbientMismatch {
            left: f.n(),
            right: h.n(),
        });
    }
    Ok(compose(h, f)?.is_identity() && compose(f, h)?.is_identity())
}

/// A map together with its verified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversePair {
    forward: PolyMap,
    backward: PolyMap,
}

impl InversePair {
    pub fn new(forward: PolyMap, backward: PolyMap) -> Result<Self> {
        if !is_inverse_pair(&forward, &backward)? {
            return Err(Error::NotInverse);
        }
        Ok(InversePair { forward, backward })
    }

    pub fn forward(&self) -> &PolyMap {
        &self.forward
    }

    pub fn backward(&self) -> &PolyMap {
        &self.backward
    }

    pub fn inverse(&self) -> InversePair {
        InversePair {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }
}

/// `det (∂f_j/∂x_i)` by cofactor expansion.
pub fn jacobian_det(f: &PolyMap) -> MultiPoly {
    let n = f.n();
    let jac: Vec<Vec<MultiPoly>> = f
        .components
        .iter()
        .map(|fj| (0..n).map(|i| fj.partial(i).expect("index in range")).collect())
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    cofactor_det(&jac, 0, &cols, n)
}

fn cofactor_det(m: &[Vec<MultiPoly>], row: usize, cols: &[usize], n: usize) -> MultiPoly {
    if cols.is_empty() {
        return MultiPoly::one(n);
    }
    let mut acc = MultiPoly::zero(n);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = entry * &cofactor_det(m, row + 1, &rest, n);
        acc = if k % 2 == 0 { &acc + &minor } else { &acc - &minor };
    }
    acc
}

/// `f(0)`.
pub fn constant_part(f: &PolyMap) -> Vec<Rat> {
    f.components.iter().map(MultiPoly::constant_term).collect()
}

/// `f - f(0)`.
pub fn subtract_constant(f: &PolyMap) -> PolyMap {
    let n = f.n();
    PolyMap {
        components: f
            .components
            .iter()
            .map(|fi| fi - &MultiPoly::constant(n, fi.constant_term()))
            .collect(),
    }
}

/// `Some(c)` iff `f = x + c`.
pub fn is_translation(f: &PolyMap) -> Option<Vec<Rat>> {
    let c = constant_part(f);
    if subtract_constant(f).is_identity() {
        Some(c)
    } else {
        None
    }
}

/// Inverse of an affine map `x ↦ A x + b` with `A` invertible; `None` for
/// nonlinear or singular maps.
pub fn invert_affine(f: &PolyMap) -> Option<PolyMap> {
    let n = f.n();
    if f.components.iter().any(|c| c.total_degree().unwrap_or(0) > 1) {
        return None;
    }
    let a: Vec<Vec<Rat>> = f
        .components
        .iter()
        .map(|c| (0..n).map(|i| c.coeff(&Monomial::var(n, i))).collect())
        .collect();
    if linalg::rank(&a, n) < n {
        return None;
    }
    // Column j of A^{-1} solves A v = e_j.
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let col = linalg::solve(&a, &e, n)?;
        for (i, v) in col.into_iter().enumerate() {
            inv[i][j] = v;
        }
    }
    let b = constant_part(f);
    let shifted: Vec<MultiPoly> = (0..n)
        .map(|i| &MultiPoly::var(n, i) - &MultiPoly::constant(n, b[i].clone()))
        .collect();
    let components = inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(&shifted)
                .fold(MultiPoly::zero(n), |acc, (c, y)| &acc + &y.scale(c))
        })
        .collect();
    Some(PolyMap { components })
}
