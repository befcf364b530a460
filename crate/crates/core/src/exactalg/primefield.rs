use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::laurent::owned_ops;
use super::{Coefficient, ExactDivision, Rational};

/// An element of `𝔽_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    p: u64,
    r: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeFieldElement {
    /// Residue of `value` modulo the prime `p`. Panics if `p` is not prime.
    pub fn new(value: i64, p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        let r = value.rem_euclid(p as i64) as u64;
        PrimeFieldElement { p, r }
    }

    pub fn from_bigint(value: &BigInt, p: u64) -> Self {
        let m = BigInt::from(p);
        let mut r = value % &m;
        if r.is_negative() {
            r += &m;
        }
        PrimeFieldElement { p, r: r.to_u64().unwrap() }
    }

    /// Image of a rational, unless `p` divides its denominator.
    pub fn from_rational(c: &Rational, p: u64) -> Option<Self> {
        let den = Self::from_bigint(c.denom(), p);
        let num = Self::from_bigint(c.numer(), p);
        den.inverse().map(|inv| num * inv)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn residue(&self) -> u64 {
        self.r
    }

    /// Residue as a signed representative in `(-p/2, p/2]`.
    pub fn signed_residue(&self) -> i64 {
        if self.r > self.p / 2 {
            self.r as i64 - self.p as i64
        } else {
            self.r as i64
        }
    }

    fn same(&self, other: &Self) -> u64 {
        assert_eq!(self.p, other.p, "mixing prime fields");
        self.p
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        if self.r == 0 {
            return None;
        }
        let mut k = 1;
        let mut x = *self;
        while x.r != 1 {
            x = x * *self;
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.r, self.p)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.r)
    }
}

impl Add<&PrimeFieldElement> for &PrimeFieldElement {
    type Output = PrimeFieldElement;
    fn add(self, rhs: &PrimeFieldElement) -> PrimeFieldElement {
        let p = self.same(rhs);
        PrimeFieldElement { p, r: ((self.r as u128 + rhs.r as u128) % p as u128) as u64 }
    }
}

impl Sub<&PrimeFieldElement> for &PrimeFieldElement {
    type Output = PrimeFieldElement;
    fn sub(self, rhs: &PrimeFieldElement) -> PrimeFieldElement {
        let p = self.same(rhs);
        PrimeFieldElement { p, r: ((self.r as u128 + p as u128 - rhs.r as u128) % p as u128) as u64 }
    }
}

impl Mul<&PrimeFieldElement> for &PrimeFieldElement {
    type Output = PrimeFieldElement;
    fn mul(self, rhs: &PrimeFieldElement) -> PrimeFieldElement {
        let p = self.same(rhs);
        PrimeFieldElement { p, r: ((self.r as u128 * rhs.r as u128) % p as u128) as u64 }
    }
}

impl Neg for &PrimeFieldElement {
    type Output = PrimeFieldElement;
    fn neg(self) -> PrimeFieldElement {
        PrimeFieldElement { p: self.p, r: (self.p - self.r) % self.p }
    }
}

owned_ops!(PrimeFieldElement);

impl Coefficient for PrimeFieldElement {
    fn is_zero(&self) -> bool {
        self.r == 0
    }
    fn zero_like(&self) -> Self {
        PrimeFieldElement { p: self.p, r: 0 }
    }
    fn one_like(&self) -> Self {
        PrimeFieldElement { p: self.p, r: 1 % self.p }
    }
    fn int_like(&self, k: i64) -> Self {
        PrimeFieldElement { p: self.p, r: k.rem_euclid(self.p as i64) as u64 }
    }
    fn inverse(&self) -> Option<Self> {
        (self.r != 0).then(|| self.pow_u(self.p - 2))
    }
}

impl ExactDivision for PrimeFieldElement {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| *self * inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn field_arithmetic() {
        let a = PrimeFieldElement::new(3, 7);
        let b = PrimeFieldElement::new(-2, 7);
        assert_eq!((a + b).residue(), 1);
        assert_eq!((a * b).residue(), 1);
        assert_eq!(a.inverse().unwrap(), b);
        assert_eq!(a.zero_like().inverse(), None);
        assert_eq!(PrimeFieldElement::from_rational(&rat(1, 2), 7).unwrap().residue(), 4);
        assert_eq!(PrimeFieldElement::from_rational(&rat(1, 7), 7), None);
        assert_eq!(PrimeFieldElement::new(2, 11).order(), Some(10));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
