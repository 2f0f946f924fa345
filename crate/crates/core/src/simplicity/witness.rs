use num_traits::Zero;

use super::{NonSimplicityWitness, Rationale};
use crate::derivation::{Derivation, PairwiseForm};
use crate::error::{Error, Result};
use crate::isotropy::{default_direction, fixes_coefficients, reduce_by_invariant_direction, unbar};
use crate::linalg;
use crate::poly::{Monomial, MultiPoly, Rat};

/// Checks three necessary conditions for simplicity in order and returns a
/// witness for the first one that fails:
///
/// 1. the `p_i` are linearly independent over `Q`;
/// 2. no `p_i` is a nonconstant polynomial in `x_i` alone;
/// 3. no `p_i` vanishes on the hyperplane `x_i = 0`.
///
/// `None` means all three hold, which does not decide simplicity.
pub fn necessary_condition_witness(d: &Derivation) -> Result<Option<NonSimplicityWitness>> {
    let n = d.n();

    let mut monos: Vec<&Monomial> = d.coeffs().iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<Rat>> = monos
        .iter()
        .map(|m| d.coeffs().iter().map(|p| p.coeff(m)).collect())
        .collect();
    if let Some(lambda) = linalg::kernel(&rows, n).into_iter().next() {
        let g = lambda
            .iter()
            .enumerate()
            .fold(MultiPoly::zero(n), |acc, (i, l)| &acc + &MultiPoly::var(n, i).scale(l));
        return NonSimplicityWitness::principal(d, Rationale::LinearDependence, &g).map(Some);
    }

    for (i, p) in d.coeffs().iter().enumerate() {
        if p.involves_only(&[i]) && !p.is_constant() {
            return NonSimplicityWitness::principal(d, Rationale::UnivariateCoefficient, p).map(Some);
        }
    }

    for (i, p) in d.coeffs().iter().enumerate() {
        let images: Vec<MultiPoly> = (0..n)
            .map(|j| {
                if j == i {
                    MultiPoly::zero(n)
                } else {
                    MultiPoly::var(n, j)
                }
            })
            .collect();
        if p.substitute(&images)?.is_zero() {
            return NonSimplicityWitness::principal(d, Rationale::VanishingAtZero, &MultiPoly::var(n, i)).map(Some);
        }
    }
    Ok(None)
}

fn check_translation(n: usize, c: &[Rat]) -> Result<usize> {
    if c.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.len(),
        });
    }
    default_direction(c).ok_or_else(|| Error::Precondition("translation vector must be nonzero".into()))
}

/// Witness for a two-variable derivation whose coefficients are fixed by the
/// nonzero translation `c`.
///
/// With `k` the first nonzero entry of `c` and `j` the other index, put
/// `u = x_k` and `v = c_k x_j - c_j x_k`. Both coefficients become
/// polynomials `r_k(v)`, `r_j(v)` and `D = r_k(v) ∂u + s(v) ∂v` with
/// `s = c_k r_j - c_j r_k`. The witness is `u - s⁻¹ ∫ r_k` when `s` is a
/// nonzero constant, `s(v)` when `s` is nonconstant, and `v` when `s = 0`.
pub fn plane_witness(d: &Derivation, c: &[Rat]) -> Result<NonSimplicityWitness> {
    if d.n() != 2 {
        return Err(Error::Precondition("derivation must have two variables".into()));
    }
    let k = check_translation(2, c)?;
    let j = 1 - k;
    if !fixes_coefficients(d, c)? {
        return Err(Error::Precondition("translation does not fix the coefficients".into()));
    }
    // Barred ring: variable k is u, variable j is v.
    let r_k = reduce_by_invariant_direction(d.coeff(k), c, k)?;
    let r_j = reduce_by_invariant_direction(d.coeff(j), c, k)?;
    let s = &r_j.scale(&c[k]) - &r_k.scale(&c[j]);

    let (rationale, g_bar) = if s.is_zero() {
        (Rationale::Thm27ZeroS, MultiPoly::var(2, j))
    } else if let Some(s0) = s.as_constant() {
        let h = r_k.antiderivative(j)?;
        let g = &MultiPoly::var(2, k) - &h.scale(&(Rat::from_integer(1.into()) / s0));
        (Rationale::Thm27Antiderivative, g)
    } else {
        (Rationale::Thm27NonconstantS, s)
    };
    let g = unbar(&g_bar, c, k)?;
    NonSimplicityWitness::principal(d, rationale, &g)
}

/// Witness for `D = p(x1) ∂1 + Σ q_i(x1, x_i) ∂i` when the nonzero
/// translation `c` fixes `p` and every `q_i`.
///
/// Cases: `p = 0` gives `(x1)`; nonconstant `p` gives `(p)`. For `p = e ∈ Q*`
/// and `c1 ≠ 0`, each `q_i` is a polynomial in `x̄_i = c1 x_i - c_i x1`; the
/// first nonconstant one gives `(c1 q_i - e c_i)`, and if all are constant
/// the witness is `((c1 q_2 - e c_2) x1 - e x̄_2)`. For `c1 = 0` the first
/// `q_i` free of `x_i` gives `(e x_i - ∫ q_i dx1)`.
///
/// `None` is returned only when `c1 = 0` and every `q_i` involves `x_i`;
/// invariance then forces `c = 0`, which the precondition check rules out,
/// so with valid input the result is always a witness.
pub fn pairwise_witness(form: &PairwiseForm, c: &[Rat]) -> Result<Option<NonSimplicityWitness>> {
    let n = form.n;
    check_translation(n, c)?;
    let d = form.to_derivation();
    if !fixes_coefficients(&d, c)? {
        return Err(Error::Precondition("translation does not fix p and every q_i".into()));
    }
    let p = &form.p;
    if p.is_zero() {
        return NonSimplicityWitness::principal(&d, Rationale::Thm31P0, &MultiPoly::var(n, 0)).map(Some);
    }
    let Some(e) = p.as_constant() else {
        return NonSimplicityWitness::principal(&d, Rationale::Thm31PNonconstant, p).map(Some);
    };

    if !c[0].is_zero() {
        let reduced = form
            .q
            .iter()
            .map(|q| reduce_by_invariant_direction(q, c, 0))
            .collect::<Result<Vec<_>>>()?;
        let (rationale, g_bar) = match reduced.iter().position(|r| !r.is_constant()) {
            Some(k) => {
                let i0 = k + 1;
                let g = &reduced[k].scale(&c[0]) - &MultiPoly::constant(n, &e * &c[i0]);
                (Rationale::Thm31C1NonzeroNonconstQ, g)
            }
            None => {
                let q2 = reduced[0].constant_term();
                let slope = &c[0] * q2 - &e * &c[1];
                let g = &MultiPoly::var(n, 0).scale(&slope) - &MultiPoly::var(n, 1).scale(&e);
                (Rationale::Thm31C1NonzeroConstQ, g)
            }
        };
        let g = unbar(&g_bar, c, 0)?;
        return NonSimplicityWitness::principal(&d, rationale, &g).map(Some);
    }

    for (k, q) in form.q.iter().enumerate() {
        let i = k + 1;
        if q.degree_in(i) == 0 {
            let big_q = q.antiderivative(0)?;
            let g = &MultiPoly::var(n, i).scale(&e) - &big_q;
            return NonSimplicityWitness::principal(&d, Rationale::Thm31C1ZeroUnivariateQ, &g).map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::recognize_pairwise;
    use crate::poly::{int, parse};

    fn der(cs: &[&str]) -> Derivation {
        Derivation::parse(cs).unwrap()
    }

    fn poly(s: &str, n: usize) -> MultiPoly {
        parse(s, n).unwrap()
    }

    #[test]
    fn linear_dependence() {
        let d = der(&["x1 + x2", "2*x1 + 2*x2"]);
        let w = necessary_condition_witness(&d).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::LinearDependence);
        assert_eq!(w.generator(), &poly("2*x1 - x2", 2));
        assert!(d.apply(w.generator()).unwrap().is_zero());
    }

    #[test]
    fn univariate_coefficient() {
        let d = der(&["x1^2", "x1 + 1"]);
        let w = necessary_condition_witness(&d).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::UnivariateCoefficient);
        assert_eq!(w.generator(), &poly("x1^2", 2));
        let w = necessary_condition_witness(&der(&["x1^2"])).unwrap().unwrap();
        assert_eq!(w.generator(), &poly("x1^2", 1));
    }

    #[test]
    fn vanishing_at_zero() {
        let d = der(&["1", "x1*x2"]);
        let w = necessary_condition_witness(&d).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::VanishingAtZero);
        assert_eq!(w.generator(), &poly("x2", 2));
    }

    #[test]
    fn inconclusive_cases() {
        assert!(necessary_condition_witness(&der(&["1", "x1*x2 + 1"]))
            .unwrap()
            .is_none());
        assert!(necessary_condition_witness(&der(&["1 - x1*x2", "x1^3", "x2"]))
            .unwrap()
            .is_none());
        assert!(necessary_condition_witness(&der(&["1"])).unwrap().is_none());
    }

    #[test]
    fn plane_examples() {
        let d = der(&["x2 - x1", "x2 - x1 + 1"]);
        let w = plane_witness(&d, &[int(1), int(1)]).unwrap();
        assert_eq!(w.rationale(), Rationale::Thm27Antiderivative);
        let expected = poly("x1 - 1/2*x1^2 + x1*x2 - 1/2*x2^2", 2).normalized();
        assert_eq!(w.generator(), &expected);
        assert!(w.cofactor().is_zero());

        let d = der(&["x2 - x1", "x2 - x1"]);
        let w = plane_witness(&d, &[int(1), int(1)]).unwrap();
        assert_eq!(w.rationale(), Rationale::Thm27ZeroS);
        assert_eq!(w.generator(), &poly("x1 - x2", 2));

        let d = der(&["1", "1"]);
        let w = plane_witness(&d, &[int(1), int(0)]).unwrap();
        assert_eq!(w.rationale(), Rationale::Thm27Antiderivative);
        assert_eq!(w.generator(), &poly("x1 - x2", 2));
    }

    #[test]
    fn plane_nonconstant_s_and_second_direction() {
        // c = (0, 1): u = x2, v = x1, s = c2 r1 - c1 r2 = x1^2.
        let d = der(&["x1^2", "x1"]);
        let w = plane_witness(&d, &[int(0), int(1)]).unwrap();
        assert_eq!(w.rationale(), Rationale::Thm27NonconstantS);
        assert_eq!(w.generator(), &poly("x1^2", 2));

        // c = (0, 2): v = 2*x1, r2 = v/2, s = 2, h = v^2/4, witness x2 - x1^2/2.
        let d = der(&["1", "x1"]);
        let w = plane_witness(&d, &[int(0), int(2)]).unwrap();
        assert_eq!(w.rationale(), Rationale::Thm27Antiderivative);
        assert_eq!(w.generator(), &poly("x1^2 - 2*x2", 2));
    }

    #[test]
    fn plane_preconditions() {
        let d = der(&["x2 - x1", "1"]);
        assert!(matches!(
            plane_witness(&d, &[int(0), int(0)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            plane_witness(&d, &[int(1), int(0)]),
            Err(Error::Precondition(_))
        ));
        assert!(plane_witness(&der(&["1"]), &[int(1)]).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let f = recognize_pairwise(&der(&["1", "x1"])).unwrap();
        let w = pairwise_witness(&f, &[int(0), int(1)]).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::Thm31C1ZeroUnivariateQ);
        assert_eq!(w.generator(), &poly("x2 - 1/2*x1^2", 2).normalized());

        let f = recognize_pairwise(&der(&["x1^2", "x1^3 + 2"])).unwrap();
        let w = pairwise_witness(&f, &[int(0), int(1)]).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::Thm31PNonconstant);
        assert_eq!(w.generator(), &poly("x1^2", 2));

        let f = recognize_pairwise(&der(&["1", "5"])).unwrap();
        let w = pairwise_witness(&f, &[int(1), int(0)]).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::Thm31C1NonzeroConstQ);
        assert_eq!(w.generator(), &poly("5*x1 - x2", 2));

        let f = recognize_pairwise(&der(&["0", "x2^2"])).unwrap();
        let w = pairwise_witness(&f, &[int(1), int(0)]).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::Thm31P0);
        assert_eq!(w.generator(), &poly("x1", 2));
    }

    #[test]
    fn pairwise_barred_nonconstant() {
        // q2 = (x2 - x1)^2 and q3 = 3 are fixed by c = (1, 1, 0).
        let d = der(&["2", "x2^2 - 2*x1*x2 + x1^2", "3"]);
        let f = recognize_pairwise(&d).unwrap();
        let w = pairwise_witness(&f, &[int(1), int(1), int(0)]).unwrap().unwrap();
        assert_eq!(w.rationale(), Rationale::Thm31C1NonzeroNonconstQ);
        // c1 q2 - e c2 = (x2 - x1)^2 - 2.
        assert_eq!(w.generator(), &poly("x1^2 - 2*x1*x2 + x2^2 - 2", 3));
    }

    #[test]
    fn pairwise_preconditions() {
        let f = recognize_pairwise(&der(&["1", "x1*x2"])).unwrap();
        assert!(matches!(
            pairwise_witness(&f, &[int(0), int(1)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            pairwise_witness(&f, &[int(0), int(0)]),
            Err(Error::Precondition(_))
        ));
        assert!(pairwise_witness(&f, &[int(1)]).is_err());
    }
}
