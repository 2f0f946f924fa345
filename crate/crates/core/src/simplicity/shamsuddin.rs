use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, MultiPoly, Rat};

/// Simplicity of `D = ∂1 + (a(x1) x2 + b(x1)) ∂2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShamsuddinDecision {
    Simple,
    /// `y ∈ Q[x1]` solves `y' = a y + b`, so `(x2 - y)` is `D`-stable.
    NotSimple {
        y: MultiPoly,
    },
}

impl ShamsuddinDecision {
    pub fn is_simple(&self) -> bool {
        matches!(self, ShamsuddinDecision::Simple)
    }
}

impl fmt::Display for ShamsuddinDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShamsuddinDecision::Simple => f.write_str("simple"),
            ShamsuddinDecision::NotSimple { y } => write!(f, "not-simple {{y: {y}}}"),
        }
    }
}

fn to_x1(p: &MultiPoly, name: &str) -> Result<MultiPoly> {
    if p.n() == 0 {
        return Err(Error::Precondition(format!("{name} must live in a ring with x1")));
    }
    p.project(&[0]).map_err(|_| Error::UnexpectedVariable {
        allowed: format!("x1 (in {name})"),
    })
}

fn coeff(p: &MultiPoly, k: u32) -> Rat {
    p.coeff(&Monomial::from_exponents(vec![k]))
}

/// Decides simplicity of the two-variable Shamsuddin derivation with data
/// `a`, `b` (polynomials in `x1`; any ambient ring is accepted).
///
/// `D` is simple exactly when `y' = a y + b` has no polynomial solution.
/// For `a = 0` the antiderivative of `b` always solves it. For `a ≠ 0` a
/// nonzero solution has `deg y = deg b - deg a`, so the coefficients of `y`
/// are found from a finite linear system. The returned `y` lives in the
/// one-variable ring.
pub fn shamsuddin_simple_n2(a: &MultiPoly, b: &MultiPoly) -> Result<ShamsuddinDecision> {
    let a = to_x1(a, "a")?;
    let b = to_x1(b, "b")?;
    if a.is_zero() {
        return Ok(ShamsuddinDecision::NotSimple {
            y: b.antiderivative(0)?,
        });
    }
    if b.is_zero() {
        return Ok(ShamsuddinDecision::NotSimple { y: MultiPoly::zero(1) });
    }
    let deg_a = a.degree_in(0);
    let deg_b = b.degree_in(0);
    if deg_b < deg_a {
        return Ok(ShamsuddinDecision::Simple);
    }
    let deg_y = deg_b - deg_a;
    // Unknowns y_0..=y_deg_y; row t is the x1^t coefficient of y' - a y = b.
    let unknowns = deg_y as usize + 1;
    let mut rows = Vec::with_capacity(deg_b as usize + 1);
    let mut rhs = Vec::with_capacity(deg_b as usize + 1);
    for t in 0..=deg_b {
        let mut row = vec![Rat::zero(); unknowns];
        for (s, entry) in row.iter_mut().enumerate() {
            let s = s as u32;
            if s == t + 1 {
                *entry += Rat::from_integer(s.into());
            }
            if t >= s {
                *entry -= coeff(&a, t - s);
            }
        }
        rows.push(row);
        rhs.push(coeff(&b, t));
    }
    Ok(match linalg::solve(&rows, &rhs, unknowns) {
        Some(ys) => ShamsuddinDecision::NotSimple {
            y: MultiPoly::from_terms(1, ys.into_iter().enumerate().map(|(k, c)| (vec![k as u32], c))),
        },
        None => ShamsuddinDecision::Simple,
    })
}

/// `x2 - y(x1)` in `Q[x1, x2]`, the stable generator attached to a solution `y`.
pub fn solution_generator(y: &MultiPoly) -> Result<MultiPoly> {
    Ok(&MultiPoly::var(2, 1) - &y.embed(2, &[0])?)
}
