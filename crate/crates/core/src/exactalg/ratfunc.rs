use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::owned_ops;
use super::poly;
use super::{Coefficient, ExactDivision, LaurentPoly, PrimeFieldElement, Rational};
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials in one variable.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term, coprime integer coefficients and a positive leading
/// coefficient; numerator and denominator share no common factor. Equal
/// functions therefore have equal representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let var = p.variable();
        Self::normalized(p, LaurentPoly::one(var))
    }

    pub fn zero(var: char) -> Self {
        Self::from_poly(LaurentPoly::zero(var))
    }

    pub fn one(var: char) -> Self {
        Self::from_poly(LaurentPoly::one(var))
    }

    pub fn from_int(var: char, c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(var, c))
    }

    pub fn constant(var: char, c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(var, c))
    }

    pub fn var(var: char) -> Self {
        Self::from_poly(LaurentPoly::var(var))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn variable(&self) -> char {
        if self.num.is_constant() {
            self.den.variable()
        } else {
            self.num.variable()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this function equals, if it is one.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_constant().then(|| self.num.scale(&self.den.coeff(0).recip()))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let var = if den.is_constant() { num.variable() } else { den.variable() };
        if num.is_zero() {
            return RationalFunction { num: LaurentPoly::zero(var), den: LaurentPoly::one(var) };
        }
        let (sn, n) = num.to_dense();
        let (sd, d) = den.to_dense();
        let g = poly::gcd(&n, &d);
        let (n, d) = if g.len() > 1 { (poly::div_rem(&n, &g).0, poly::div_rem(&d, &g).0) } else { (n, d) };
        let c = poly::content(&d);
        let n: Vec<Rational> = n.iter().map(|x| x / &c).collect();
        let d: Vec<Rational> = d.iter().map(|x| x / &c).collect();
        RationalFunction { num: LaurentPoly::from_dense(var, sn - sd, &n), den: LaurentPoly::from_dense(var, 0, &d) }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.variable()).checked_div(self)
    }

    /// Value at a rational point; errors at a pole.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at)?;
        if Zero::is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at)? / d)
    }

    pub fn eval_mod(&self, at: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        let d = self.den.eval_mod(at)?;
        let inv = d.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.num.eval_mod(at)? * inv)
    }

    /// Substitutes the variable by a rational function in another (or the
    /// same) variable.
    pub fn compose(&self, at: &RationalFunction) -> Result<RationalFunction> {
        let eval = |p: &LaurentPoly| -> Result<RationalFunction> {
            let mut acc = RationalFunction::zero(at.variable());
            for (e, c) in p.terms() {
                let pw = at.pow_i(e).ok_or(Error::DivisionByZero)?;
                acc = acc + pw * RationalFunction::constant(at.variable(), c.clone());
            }
            Ok(acc)
        };
        eval(&self.num)?.checked_div(&eval(&self.den)?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        self.pow_i(k).ok_or(Error::DivisionByZero)
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0).is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.as_monomial().is_some() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

owned_ops!(RationalFunction);

impl Div for RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        self.checked_div(&rhs).expect("division by zero rational function")
    }
}

impl Coefficient for RationalFunction {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn zero_like(&self) -> Self {
        RationalFunction::zero(self.variable())
    }
    fn one_like(&self) -> Self {
        RationalFunction::one(self.variable())
    }
    fn int_like(&self, k: i64) -> Self {
        RationalFunction::from_int(self.variable(), k)
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl ExactDivision for RationalFunction {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use proptest::prelude::*;

    fn x() -> RationalFunction {
        RationalFunction::var('x')
    }
    fn c(k: i64) -> RationalFunction {
        RationalFunction::from_int('x', k)
    }

    #[test]
    fn cancellation() {
        // (x^2 - 1)/(x - 1) = x + 1
        let f = (x() * x() - c(1)) / (x() - c(1));
        assert_eq!(f, x() + c(1));
        assert!(f.as_laurent().is_some());
    }

    #[test]
    fn canonical_denominator() {
        let f = c(1) / (c(-2) * x() + c(4));
        assert_eq!(f.denominator(), &LaurentPoly::from_terms('x', [(0, rat(-2, 1)), (1, rat(1, 1))]));
        assert_eq!(f.numerator(), &LaurentPoly::from_int('x', -1).scale(&rat(1, 2)));
        // negative powers are moved into the numerator
        let g = c(1) / (x() * x());
        assert_eq!(g.numerator(), &LaurentPoly::power('x', -2));
        assert!(g.denominator().is_constant());
    }

    #[test]
    fn evaluation_after_cancellation() {
        let f = (x() * x() - c(1)) / (x() - c(1));
        assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(2, 1));
        let pole = c(1) / (x() - c(1));
        assert_eq!(pole.eval(&rat(1, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn composition() {
        // f(x) = x/(x+1) at x = 1/y gives 1/(1+y)
        let f = x() / (x() + c(1));
        let y = RationalFunction::var('y');
        let at = RationalFunction::from_int('y', 1) / y.clone();
        let g = f.compose(&at).unwrap();
        assert_eq!(g, RationalFunction::from_int('y', 1) / (y + RationalFunction::from_int('y', 1)));
    }

    fn small_ratfunc() -> impl Strategy<Value = RationalFunction> {
        (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-3i64..=3, 1..3), -2i64..=2).prop_filter_map(
            "nonzero denominator",
            |(n, d, shift)| {
                let num =
                    LaurentPoly::from_terms('x', n.iter().enumerate().map(|(k, &v)| (k as i64 + shift, rat(v, 1))));
                let den = LaurentPoly::from_terms('x', d.iter().enumerate().map(|(k, &v)| (k as i64, rat(v, 1))));
                RationalFunction::new(num, den).ok()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn normalization_is_idempotent(a in small_ratfunc()) {
            let again = RationalFunction::new(a.numerator().clone(), a.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert_eq!(again.numerator().to_string(), a.numerator().to_string());
        }
    }
}
