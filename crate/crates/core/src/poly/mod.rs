//! Sparse multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] carries its ambient variable count `n` and a map from
//! exponent vectors to nonzero coefficients. Terms are kept in graded
//! lexicographic order with `x1 > x2 > ... > xn`, so two polynomials are
//! equal exactly when their term maps are equal.
//!
//! Variable indices in the Rust API are zero-based (`var(n, 0)` is `x1`);
//! the text format is one-based.

mod parse;

pub use parse::{parse, parse_named, VarStyle};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient. Always stored reduced with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exponent vector `x1^e1 * ... * xn^en`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `n` variables of total degree at most `deg`, ascending.
pub fn monomials_up_to(n: usize, deg: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, deg, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// Polynomial in `K[x1, ..., xn]` with `K = Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rat::one())
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    /// The coordinate function `x_{i+1}`. Panics if `i >= n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut p = Self::zero(n);
        p.add_term(Monomial::var(n, i), Rat::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length must equal n");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value if `self` is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    /// `p(0, ..., 0)`.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::one(self.n))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in `x_{i+1}`; zero for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// True when every variable occurring in `self` is listed in `vars`.
    pub fn involves_only(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| m.0.iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i)))
    }

    /// Indices of the variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.degree_in(i) > 0).collect()
    }

    fn check_ambient(&self, other: &MultiPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i + 1,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ambient(other)?;
        let mut out = MultiPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `x_{i+1}`.
    pub fn partial(&self, i: usize) -> Result<MultiPoly> {
        self.check_var(i)?;
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c * Rat::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// `p(images[0], ..., images[n-1])`. All images must share one ambient `m`,
    /// which becomes the ambient of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: images.len(),
            });
        }
        let m = match images.first() {
            Some(first) => first.n,
            // A polynomial in zero variables is a constant.
            None => 0,
        };
        for img in images {
            if img.n != m {
                return Err(Error::AmbientMismatch { left: m, right: img.n });
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|img| vec![MultiPoly::one(m), img.clone()]).collect();
        let mut out = MultiPoly::zero(m);
        for (mono, c) in &self.terms {
            let mut term = MultiPoly::constant(m, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `p(x1 + c1, ..., xn + cn)`.
    pub fn translate(&self, c: &[Rat]) -> Result<MultiPoly> {
        if c.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: c.len(),
            });
        }
        let images: Vec<MultiPoly> = c
            .iter()
            .enumerate()
            .map(|(i, ci)| &MultiPoly::var(self.n, i) + &MultiPoly::constant(self.n, ci.clone()))
            .collect();
        self.substitute(&images)
    }

    /// Sum of the terms of total degree exactly `m`.
    pub fn homogeneous_part(&self, m: u32) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(mono, _)| mono.degree() == m)
                .map(|(mono, c)| (mono.clone(), c.clone()))
                .collect(),
        }
    }

    /// Antiderivative in `x_{i+1}` with zero constant of integration.
    /// `self` must involve no variable other than `x_{i+1}`.
    pub fn antiderivative(&self, i: usize) -> Result<MultiPoly> {
        self.check_var(i)?;
        if !self.involves_only(&[i]) {
            return Err(Error::UnexpectedVariable {
                allowed: format!("x{}", i + 1),
            });
        }
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut im = m.clone();
            im.0[i] += 1;
            out.add_term(im.clone(), c / Rat::from_integer(BigInt::from(im.0[i])));
        }
        Ok(out)
    }

    /// `Some(q)` with `self = q * divisor` when the division is exact, else `None`.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_ambient(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.n);
        while let Some((rm, rc)) = rem.leading_term() {
            // The leading monomial of q*b is LM(q)*LM(b), so a nonzero
            // remainder whose leading term is not divisible certifies b ∤ a.
            if !lm.divides(rm) {
                return Ok(None);
            }
            let qm = lm.quotient_of(rm);
            let qc = rc / &lc;
            let mut step = MultiPoly::zero(self.n);
            step.add_term(qm, qc);
            rem = rem.checked_sub(&(&step * divisor))?;
            quot = &quot + &step;
        }
        Ok(Some(quot))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Re-embeds into a ring with `n` variables, sending `x_{i+1}` to `x_{targets[i]+1}`.
    pub fn embed(&self, n: usize, targets: &[usize]) -> Result<MultiPoly> {
        if targets.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: targets.len(),
            });
        }
        if let Some(&bad) = targets.iter().find(|&&t| t >= n) {
            return Err(Error::VariableOutOfRange { index: bad + 1, n });
        }
        let mut out = MultiPoly::zero(n);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &t) in targets.iter().enumerate() {
                e[t] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`embed`](Self::embed): keeps only the listed variables, in
    /// order, as a ring with `vars.len()` variables. Fails if any other
    /// variable occurs.
    pub fn project(&self, vars: &[usize]) -> Result<MultiPoly> {
        if !self.involves_only(vars) {
            let names: Vec<String> = vars.iter().map(|v| format!("x{}", v + 1)).collect();
            return Err(Error::UnexpectedVariable {
                allowed: names.join(", "),
            });
        }
        let mut out = MultiPoly::zero(vars.len());
        for (m, c) in &self.terms {
            out.add_term(Monomial(vars.iter().map(|&v| m.0[v]).collect()), c.clone());
        }
        Ok(out)
    }

    /// Coefficients of `self` viewed as a polynomial in `x_{i+1}`:
    /// entry `k` multiplies `x_{i+1}^k` and does not involve `x_{i+1}`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![MultiPoly::zero(self.n); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut rest = m.clone();
            rest.0[i] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let v = (c * Rat::from_integer(den_lcm.clone())).to_integer();
            num_gcd = num_gcd.gcd(&v);
        }
        let mut factor = Rat::new(den_lcm, num_gcd);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Checks the stored representation: nonzero, reduced coefficients with
    /// positive denominators and exponent vectors of length `n`.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(m, c)| {
            m.0.len() == self.n && !c.is_zero() && c.denom().is_positive() && c.numer().gcd(c.denom()).is_one()
        })
    }

    /// Renders with a custom variable naming, e.g. `w` for one-variable helpers.
    pub fn display_with(&self, style: VarStyle) -> String {
        parse::render(self, style)
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.terms.iter().rev().cmp(other.terms.iter().rev()))
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render(self, VarStyle::Indexed))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[n={}]({})", self.n, self)
    }
}

// Operator forms panic on ambient mismatch; use the `checked_*` methods to
// get an error instead.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("ambient mismatch in add")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("ambient mismatch in sub")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("ambient mismatch in mul")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse(s, n).unwrap()
    }

    #[test]
    fn parse_intro_coefficient() {
        let q = p("1 - x1*x2", 2);
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.constant_term(), int(1));
        assert_eq!(q.coeff(&Monomial::from_exponents(vec![1, 1])), int(-1));
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(p("0", 3).is_zero());
        assert!(p("3/2*x1^2 - 3/2*x1^2", 1).is_zero());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x1+1", 1) + &p("-x1", 1), MultiPoly::one(1));
        assert_eq!(&p("x1+x2", 2) * &p("x1-x2", 2), p("x1^2 - x2^2", 2));
        assert!((&p("1-x1*x2", 2) * &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let err = p("x1", 1).checked_add(&p("x1", 2)).unwrap_err();
        assert_eq!(err, Error::AmbientMismatch { left: 1, right: 2 });
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("x1^3", 1).partial(0).unwrap(), p("3*x1^2", 1));
        assert_eq!(p("1 - x1*x2", 2).partial(1).unwrap(), p("-x1", 2));
        assert!(p("x2", 2).partial(0).unwrap().is_zero());
        assert!(matches!(
            p("x2", 2).partial(2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn substitute_examples() {
        let s = p("x1 + x2", 2).substitute(&[p("x2", 2), p("x1", 2)]).unwrap();
        assert_eq!(s, p("x1 + x2", 2));
        assert_eq!(
            p("x1^2", 1).substitute(&[p("x1 + 1", 1)]).unwrap(),
            p("x1^2 + 2*x1 + 1", 1)
        );
        let c = p("1 - x1*x2", 3)
            .substitute(&[p("x1", 3), p("x2", 3), p("x3 + 5", 3)])
            .unwrap();
        assert_eq!(c, p("1 - x1*x2", 3));
        assert!(matches!(
            p("x1", 2).substitute(&[p("x1", 2)]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn translate_examples() {
        let q = p("x2 - x1", 2);
        assert_eq!(q.translate(&[int(1), int(1)]).unwrap(), q);
        assert_eq!(q.translate(&[int(0), int(0)]).unwrap(), q);
        assert_eq!(p("x1^2", 1).translate(&[int(1)]).unwrap(), p("x1^2 + 2*x1 + 1", 1));
        assert!(q.translate(&[int(1)]).is_err());
    }

    #[test]
    fn homogeneous_part_examples() {
        assert_eq!(p("x1^2 + 2*x1 + 1", 1).homogeneous_part(1), p("2*x1", 1));
        assert_eq!(p("1 - x1*x2", 2).homogeneous_part(2), p("-x1*x2", 2));
        assert!(p("x1^3", 1).homogeneous_part(0).is_zero());
    }

    #[test]
    fn antiderivative_examples() {
        assert_eq!(p("x1", 1).antiderivative(0).unwrap(), p("1/2*x1^2", 1));
        assert_eq!(
            p("3 + 2*x1 - 4*x1^3", 2).antiderivative(0).unwrap(),
            p("3*x1 + x1^2 - x1^4", 2)
        );
        assert!(p("0", 1).antiderivative(0).unwrap().is_zero());
        assert!(matches!(
            p("x1*x2", 2).antiderivative(0),
            Err(Error::UnexpectedVariable { .. })
        ));
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(p("2*x1^3", 1).exact_divide(&p("x1^2", 1)).unwrap(), Some(p("2*x1", 1)));
        assert_eq!(
            p("x1^2 - x2^2", 2).exact_divide(&p("x1 - x2", 2)).unwrap(),
            Some(p("x1 + x2", 2))
        );
        assert_eq!(p("x1 + 1", 2).exact_divide(&p("x2", 2)).unwrap(), None);
        assert_eq!(p("x1", 1).exact_divide(&MultiPoly::zero(1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalization_clears_content_and_sign() {
        assert_eq!(p("x2 - 1/2*x1^2", 2).normalized(), p("x1^2 - 2*x2", 2));
        assert_eq!(p("-4*x1 + 2*x2", 2).normalized(), p("2*x1 - x2", 2));
        assert_eq!(p("3/4", 1).normalized(), p("1", 1));
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let q = p("x2 + x1^2 + x1*x2 + x1 + 1 + x2^2", 2);
        assert_eq!(q.to_string(), "x1^2 + x1*x2 + x2^2 + x1 + x2 + 1");
    }

    #[test]
    fn embed_and_coefficients_in() {
        let q = p("x1^2 + 3", 1).embed(3, &[2]).unwrap();
        assert_eq!(q, p("x3^2 + 3", 3));
        let cs = p("x1*x2^2 + x2 + x1", 2).coefficients_in(1);
        assert_eq!(cs, vec![p("x1", 2), p("1", 2), p("x1", 2)]);
    }
}
