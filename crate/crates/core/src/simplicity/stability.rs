use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{monomials_up_to, Monomial, MultiPoly, Rat};

/// Searches for cofactors `u_jk` of degree at most `cofactor_degree` with
/// `D(g_j) = Σ_k u_jk g_k` for every generator.
///
/// `true` certifies that the ideal is `D`-stable. `false` only means no
/// certificate exists within the degree bound.
pub fn multi_generator_stability(d: &Derivation, gens: &[MultiPoly], cofactor_degree: u32) -> Result<bool> {
    if gens.is_empty() {
        return Err(Error::Precondition("generator list is empty".into()));
    }
    if gens.iter().any(MultiPoly::is_zero) {
        return Err(Error::Precondition("generators must be nonzero".into()));
    }
    let n = d.n();
    let multipliers = monomials_up_to(n, cofactor_degree);
    // Column polynomials μ·g_k, shared by every target.
    let mut columns = Vec::with_capacity(gens.len() * multipliers.len());
    for g in gens {
        for mu in &multipliers {
            let unit = MultiPoly::from_terms(n, [(mu.exponents().to_vec(), Rat::from_integer(1.into()))]);
            columns.push(&unit * g);
        }
    }
    for g in gens {
        let target = d.apply(g)?;
        let mut monos: Vec<&Monomial> = columns
            .iter()
            .chain(std::iter::once(&target))
            .flat_map(|p| p.terms().map(|(m, _)| m))
            .collect();
        monos.sort();
        monos.dedup();
        let rows: Vec<Vec<Rat>> = monos
            .iter()
            .map(|m| columns.iter().map(|col| col.coeff(m)).collect())
            .collect();
        let rhs: Vec<Rat> = monos.iter().map(|m| target.coeff(m)).collect();
        if linalg::solve(&rows, &rhs, columns.len()).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
