//! Exact coefficient arithmetic.
//!
//! Rationals are `num_rational::BigRational`. Everything else is local: Laurent
//! polynomials in one variable, rational functions with canonical
//! normalization, prime fields with a runtime modulus, q-integers and the
//! order bookkeeping for roots of unity.

mod laurent;
mod poly;
mod primefield;
mod qint;
mod ratfunc;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use laurent::LaurentPoly;
pub use primefield::{is_prime, PrimeFieldElement};
pub use qint::{e_of_q, qint, qint_at_minus_one, qint_at_one, QParam, RootSpec};
pub use ratfunc::RationalFunction;

pub type Rational = num_rational::BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A commutative ring usable as the coefficients of an algebra element.
///
/// Constants are produced from an existing element (`zero_like`, `one_like`)
/// because some rings, like prime fields with a runtime modulus, cannot build
/// them out of thin air.
pub trait Coefficient:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, k: i64) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn pow_u(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need an invertible base.
    fn pow_i(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            Some(self.pow_u(k as u64))
        } else {
            self.inverse().map(|inv| inv.pow_u(k.unsigned_abs()))
        }
    }
}

/// A ring in which exact quotients can be computed, as needed by
/// fraction-free elimination.
pub trait ExactDivision: Coefficient {
    /// `self / other` when the quotient lies in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn int_like(&self, k: i64) -> Self {
        Rational::from_integer(BigInt::from(k))
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl ExactDivision for Rational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
}

impl Coefficient for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, k: i64) -> Self {
        BigInt::from(k)
    }
    fn inverse(&self) -> Option<Self> {
        self.abs().is_one().then(|| self.clone())
    }
}

impl ExactDivision for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        Zero::is_zero(&r).then_some(q)
    }
}
