//! Exhaustive search for commuting maps with small integer coefficients.
//!
//! Every component ranges over the same box: polynomials of total degree at
//! most `deg` with integer coefficients in `[-coeff, coeff]`. The commutation
//! equation for component `j`, `D(f_j) = p_j(f)`, only involves `f_j` and the
//! components `f_i` for variables `x_i` occurring in `p_j`, so components are
//! assigned in an order that lets equations prune early. Candidates are first
//! screened by evaluating the equations modulo a large prime at fixed sample
//! points (no false negatives), and every survivor is verified exactly.

use rayon::prelude::*;

use crate::automorphism::{is_inverse_pair, jacobian_det, PolyMap};
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::isotropy::commutes;
use crate::modp;
use crate::poly::{int, monomials_up_to, Monomial, MultiPoly};

/// Default cap on candidates per component, `(2 coeff + 1)^(#monomials)`.
pub const DEFAULT_MAX_CANDIDATES: u64 = 200_000;

const MAX_VARS: usize = 3;
const MAX_DEGREE: u32 = 3;
const MAX_COEFF: i64 = 3;
const SAMPLE_POINTS: usize = 3;

/// Feasibility limits for the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_candidates_per_component: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_candidates_per_component: DEFAULT_MAX_CANDIDATES,
        }
    }
}

/// All maps in the box that commute with `D` and have an inverse in the box.
pub fn bounded_isotropy_enumeration(d: &Derivation, deg_bound: u32, coeff_bound: i64) -> Result<Vec<PolyMap>> {
    bounded_isotropy_enumeration_with_cap(d, deg_bound, coeff_bound, EnumerationLimits::default())
}

pub fn bounded_isotropy_enumeration_with_cap(
    d: &Derivation,
    deg_bound: u32,
    coeff_bound: i64,
    limits: EnumerationLimits,
) -> Result<Vec<PolyMap>> {
    let commuting = bounded_commuting_maps(d, deg_bound, coeff_bound, limits)?;
    let n = d.n();
    // The inverse of a commuting automorphism commutes too, so it suffices to
    // look for inverses among the commuting maps. A polynomial automorphism
    // has a nonzero constant Jacobian determinant.
    let with_det: Vec<(&PolyMap, MultiPoly)> = commuting
        .iter()
        .map(|f| (f, jacobian_det(f)))
        .filter(|(_, det)| det.is_constant() && !det.is_zero())
        .collect();
    let mut out = Vec::new();
    for (f, det_f) in &with_det {
        let target = det_f.constant_term().recip();
        let mut found = false;
        for (g, det_g) in &with_det {
            if det_g.constant_term() == target && is_inverse_pair(f, g)? {
                found = true;
                break;
            }
        }
        if found {
            out.push((*f).clone());
        }
    }
    debug_assert!(out.iter().all(|f| f.n() == n));
    Ok(out)
}

/// All maps in the box with `ρD = Dρ`, sorted canonically.
pub fn bounded_commuting_maps(
    d: &Derivation,
    deg_bound: u32,
    coeff_bound: i64,
    limits: EnumerationLimits,
) -> Result<Vec<PolyMap>> {
    let n = d.n();
    if n == 0 || n > MAX_VARS {
        return Err(Error::Guard(format!("need 1 <= n <= {MAX_VARS}, got {n}")));
    }
    if deg_bound > MAX_DEGREE {
        return Err(Error::Guard(format!("degree bound {deg_bound} exceeds {MAX_DEGREE}")));
    }
    if !(0..=MAX_COEFF).contains(&coeff_bound) {
        return Err(Error::Guard(format!(
            "coefficient bound {coeff_bound} outside 0..={MAX_COEFF}"
        )));
    }
    let monos = monomials_up_to(n, deg_bound);
    let base = (2 * coeff_bound + 1) as u64;
    let count = base
        .checked_pow(monos.len() as u32)
        .filter(|&c| c <= limits.max_candidates_per_component)
        .ok_or_else(|| {
            Error::Guard(format!(
                "{base}^{} candidates per component exceeds the cap of {}",
                monos.len(),
                limits.max_candidates_per_component
            ))
        })?;

    let table = Table::build(d, &monos, coeff_bound, count as usize);
    let order = component_order(d);
    let checks = checkable_equations(d, &order);

    let survivors: Vec<Vec<usize>> = (0..table.count)
        .into_par_iter()
        .flat_map_iter(|cand| {
            let mut assign = vec![usize::MAX; n];
            let mut out = Vec::new();
            assign[order[0]] = cand;
            if checks[0].iter().all(|&j| table.equation_holds(j, &assign)) {
                table.dfs(1, &order, &checks, &mut assign, &mut out);
            }
            out.into_iter()
        })
        .collect();

    let mut maps = Vec::new();
    for assign in survivors {
        let f = PolyMap::new(assign.iter().map(|&c| table.decode(c)).collect())?;
        if commutes(&f, d)? {
            maps.push(f);
        }
    }
    maps.sort();
    Ok(maps)
}

/// The permutation of components whose prefixes make the most equations
/// checkable as early as possible.
fn component_order(d: &Derivation) -> Vec<usize> {
    let n = d.n();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for perm in permutations(n) {
        let score: Vec<usize> = checkable_equations(d, &perm).iter().map(Vec::len).collect();
        if best.as_ref().is_none_or(|(s, _)| score > *s) {
            best = Some((score, perm));
        }
    }
    best.expect("n >= 1").1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `checks[t]` lists the equations that first become checkable once the
/// components `order[..=t]` are assigned.
fn checkable_equations(d: &Derivation, order: &[usize]) -> Vec<Vec<usize>> {
    let needs: Vec<Vec<usize>> = (0..d.n())
        .map(|j| {
            let mut v = d.coeff(j).variables();
            v.push(j);
            v
        })
        .collect();
    let mut done = vec![false; d.n()];
    order
        .iter()
        .enumerate()
        .map(|(t, _)| {
            let assigned = &order[..=t];
            let mut now = Vec::new();
            for j in 0..d.n() {
                if !done[j] && needs[j].iter().all(|v| assigned.contains(v)) {
                    done[j] = true;
                    now.push(j);
                }
            }
            now
        })
        .collect()
}

/// Residues of every candidate at the sample points.
struct Table {
    count: usize,
    monos: Vec<Monomial>,
    base: u64,
    coeff_bound: i64,
    n: usize,
    /// `vals[cand * SAMPLE_POINTS + s]` is the candidate's value at point `s`.
    vals: Vec<u64>,
    /// Same layout, value of `D(candidate)`.
    dvals: Vec<u64>,
    /// Coefficients of `D` modulo the prime as `(exponents, residue)`.
    coeffs: Vec<Vec<(Vec<u32>, u64)>>,
    /// False when some coefficient has a denominator divisible by the prime;
    /// the screen is then skipped and everything goes to exact verification.
    screen: bool,
}

impl Table {
    fn build(d: &Derivation, monos: &[Monomial], coeff_bound: i64, count: usize) -> Table {
        let n = d.n();
        let raw = modp::sample_points(SAMPLE_POINTS * n, 0x5EED_D3B1_u64);
        let points: Vec<&[u64]> = raw.chunks(n).collect();

        let mut screen = true;
        let coeffs: Vec<Vec<(Vec<u32>, u64)>> = d
            .coeffs()
            .iter()
            .map(|p| {
                p.terms()
                    .map(|(m, c)| {
                        let r = modp::from_rat(c).unwrap_or_else(|| {
                            screen = false;
                            0
                        });
                        (m.exponents().to_vec(), r)
                    })
                    .collect()
            })
            .collect();

        let eval = |terms: &[(Vec<u32>, u64)], pt: &[u64]| -> u64 {
            terms.iter().fold(0, |acc, (e, c)| {
                let v = e
                    .iter()
                    .zip(pt)
                    .fold(*c, |t, (&k, &x)| modp::mul(t, modp::pow(x, k as u64)));
                modp::add(acc, v)
            })
        };
        // Per point: monomial values, and D(monomial) values.
        let mut mono_vals = vec![vec![0u64; monos.len()]; SAMPLE_POINTS];
        let mut mono_dvals = vec![vec![0u64; monos.len()]; SAMPLE_POINTS];
        for (s, pt) in points.iter().enumerate() {
            let p_at: Vec<u64> = coeffs.iter().map(|t| eval(t, pt)).collect();
            for (k, m) in monos.iter().enumerate() {
                let e = m.exponents();
                mono_vals[s][k] = eval(&[(e.to_vec(), 1)], pt);
                let mut dv = 0;
                for i in 0..n {
                    if e[i] == 0 {
                        continue;
                    }
                    let mut de = e.to_vec();
                    de[i] -= 1;
                    let partial = modp::mul(e[i] as u64, eval(&[(de, 1)], pt));
                    dv = modp::add(dv, modp::mul(p_at[i], partial));
                }
                mono_dvals[s][k] = dv;
            }
        }

        let base = (2 * coeff_bound + 1) as u64;
        let mut vals = vec![0u64; count * SAMPLE_POINTS];
        let mut dvals = vec![0u64; count * SAMPLE_POINTS];
        vals.par_chunks_mut(SAMPLE_POINTS)
            .zip(dvals.par_chunks_mut(SAMPLE_POINTS))
            .enumerate()
            .for_each(|(cand, (v, dv))| {
                let mut rest = cand as u64;
                for k in 0..monos.len() {
                    let c = modp::from_i64((rest % base) as i64 - coeff_bound);
                    rest /= base;
                    if c == 0 {
                        continue;
                    }
                    for s in 0..SAMPLE_POINTS {
                        v[s] = modp::add(v[s], modp::mul(c, mono_vals[s][k]));
                        dv[s] = modp::add(dv[s], modp::mul(c, mono_dvals[s][k]));
                    }
                }
            });

        Table {
            count,
            monos: monos.to_vec(),
            base,
            coeff_bound,
            n,
            vals,
            dvals,
            coeffs,
            screen,
        }
    }

    fn decode(&self, cand: usize) -> MultiPoly {
        let mut rest = cand as u64;
        let mut terms = Vec::with_capacity(self.monos.len());
        for m in &self.monos {
            let c = (rest % self.base) as i64 - self.coeff_bound;
            rest /= self.base;
            terms.push((m.exponents().to_vec(), int(c)));
        }
        MultiPoly::from_terms(self.n, terms)
    }

    /// `D(f_j) = p_j(f)` at every sample point, for the assigned components.
    fn equation_holds(&self, j: usize, assign: &[usize]) -> bool {
        if !self.screen {
            return true;
        }
        (0..SAMPLE_POINTS).all(|s| {
            let lhs = self.dvals[assign[j] * SAMPLE_POINTS + s];
            let rhs = self.coeffs[j].iter().fold(0, |acc, (e, c)| {
                let mut t = *c;
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        let y = self.vals[assign[i] * SAMPLE_POINTS + s];
                        t = modp::mul(t, modp::pow(y, k as u64));
                    }
                }
                modp::add(acc, t)
            });
            lhs == rhs
        })
    }

    fn dfs(
        &self,
        depth: usize,
        order: &[usize],
        checks: &[Vec<usize>],
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(assign.clone());
            return;
        }
        let comp = order[depth];
        for cand in 0..self.count {
            assign[comp] = cand;
            if checks[depth].iter().all(|&j| self.equation_holds(j, assign)) {
                self.dfs(depth + 1, order, checks, assign, out);
            }
        }
        assign[comp] = usize::MAX;
    }
}
