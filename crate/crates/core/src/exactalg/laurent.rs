use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::{Coefficient, ExactDivision, PrimeFieldElement, Rational};
use crate::error::{Error, Result};

/// A Laurent polynomial in one variable over ℚ.
///
/// The variable is a display tag (`'q'`, `'δ'`, …). Constants are compatible
/// with every tag; combining two non-constant polynomials in different
/// variables is a programming error and panics.
#[derive(Clone)]
pub struct LaurentPoly {
    var: char,
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero(var: char) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: char, c: Rational) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn from_int(var: char, c: i64) -> Self {
        Self::constant(var, Rational::from_integer(BigInt::from(c)))
    }

    /// `c · var^exp`.
    pub fn monomial(var: char, exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(exp, c);
        }
        LaurentPoly { var, terms }
    }

    /// The variable itself.
    pub fn var(var: char) -> Self {
        Self::monomial(var, 1, Rational::one())
    }

    /// `var^exp`.
    pub fn power(var: char, exp: i64) -> Self {
        Self::monomial(var, exp, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(var: char, it: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn variable(&self) -> char {
        self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0))
    }

    /// `Some((c, k))` when the polynomial is a single term `c·var^k`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&exp);
        }
    }

    fn joint_var(&self, other: &Self) -> char {
        match (self.is_constant(), other.is_constant()) {
            (true, _) => other.var,
            (false, true) => self.var,
            (false, false) => {
                assert_eq!(self.var, other.var, "mixing Laurent polynomials in different variables");
                self.var
            }
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `var ↦ var^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substituting var^0 collapses the polynomial");
        Self::from_terms(self.var, self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(&e, x)| (e, x * c)))
    }

    /// Value at a nonzero rational point.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        if Zero::is_zero(at) && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let pw = if e >= 0 {
                num_traits::pow(at.clone(), e as usize)
            } else {
                num_traits::pow(at.recip(), (-e) as usize)
            };
            acc += c * pw;
        }
        Ok(acc)
    }

    /// Value at a point of a prime field. Fails when a coefficient has a
    /// denominator divisible by `p` or the point is zero and negative powers
    /// occur.
    pub fn eval_mod(&self, at: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        let mut acc = at.zero_like();
        for (&e, c) in &self.terms {
            let coeff = PrimeFieldElement::from_rational(c, at.modulus()).ok_or(Error::DivisionByZero)?;
            let pw = at.pow_i(e).ok_or(Error::DivisionByZero)?;
            acc = acc + coeff * pw;
        }
        Ok(acc)
    }

    /// Splits `self = var^k · P(var)` with `P(0) ≠ 0`.
    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut d = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            d[(e - lo) as usize] = c.clone();
        }
        (lo, d)
    }

    pub(crate) fn from_dense(var: char, shift: i64, d: &Dense) -> Self {
        Self::from_terms(var, d.iter().enumerate().map(|(k, c)| (k as i64 + shift, c.clone())))
    }

    /// Quotient in `ℚ[var^±]`. Errors if `other` is zero or does not divide.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let var = self.joint_var(other);
        if self.is_zero() {
            return Ok(Self::zero(var));
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = other.to_dense();
        let (q, r) = poly::div_rem(&a, &b);
        if !r.is_empty() {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_dense(var, sa - sb, &q))
    }

    /// Integer power; negative exponents only for monomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        self.pow_i(k).ok_or(Error::DivisionByZero)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Unit of `ℤ[var^±]`: `±var^k`.
    pub fn is_signed_monomial(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl Eq for LaurentPoly {}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                write!(f, "{}", self.var)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly { var: self.joint_var(rhs), terms: self.terms.clone() };
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly { var: self.joint_var(rhs), terms: self.terms.clone() };
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.joint_var(rhs));
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(LaurentPoly);

impl Coefficient for LaurentPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.var)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.var)
    }
    fn int_like(&self, k: i64) -> Self {
        LaurentPoly::from_int(self.var, k)
    }
    fn inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(LaurentPoly::monomial(self.var, -e, c.recip()))
    }
}

impl ExactDivision for LaurentPoly {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn q() -> LaurentPoly {
        LaurentPoly::var('q')
    }
    fn qp(k: i64) -> LaurentPoly {
        LaurentPoly::power('q', k)
    }

    #[test]
    fn expand_product() {
        let a = &q() - &qp(-1);
        let b = &q() + &qp(-1);
        assert_eq!(&a * &b, &qp(2) - &qp(-2));
    }

    #[test]
    fn evaluate_at_one() {
        let p = &(&qp(2) + &LaurentPoly::one('q')) + &qp(-2);
        assert_eq!(p.eval(&rat(1, 1)).unwrap(), rat(3, 1));
        assert_eq!(p.eval(&rat(2, 1)).unwrap(), rat(21, 4));
    }

    #[test]
    fn exact_division() {
        let num = &qp(3) - &qp(-3);
        let den = &q() - &qp(-1);
        let expected = &(&qp(2) + &LaurentPoly::one('q')) + &qp(-2);
        assert_eq!(num.checked_div(&den).unwrap(), expected);
        assert_eq!(q().checked_div(&(&q() + &LaurentPoly::one('q'))), Err(Error::InexactDivision));
        assert_eq!(q().checked_div(&LaurentPoly::zero('q')), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        let p = &(&qp(2).scale(&rat(-3, 1)) + &LaurentPoly::one('q')) - &qp(-1);
        assert_eq!(p.to_string(), "-3q^2 + 1 - q^-1");
        assert_eq!(LaurentPoly::zero('δ').to_string(), "0");
    }

    #[test]
    fn monomial_inverse() {
        let m = qp(3).scale(&rat(2, 1));
        assert_eq!(&m * &m.inverse().unwrap(), LaurentPoly::one('q'));
        assert!((&q() + &LaurentPoly::one('q')).inverse().is_none());
    }
}
