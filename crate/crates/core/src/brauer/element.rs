use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exactalg::Coefficient;

/// A finite linear combination of Brauer diagrams on `n` strands. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<T> {
    n: usize,
    terms: BTreeMap<BrauerDiagram, T>,
}

impl<T: Coefficient> AlgebraElement<T> {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: BrauerDiagram, coeff: T) -> Self {
        let mut x = Self::zero(d.n());
        x.add_term(d, coeff);
        x
    }

    pub fn identity(n: usize, one: T) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n), one)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BrauerDiagram, T)>) -> Result<Self> {
        let mut x = Self::zero(n);
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::StrandCountMismatch(n, d.n()));
            }
            x.add_term(d, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, d: BrauerDiagram, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&d) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(d, sum);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Option<&T> {
        self.terms.get(d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut x = self.clone();
        for (d, c) in &other.terms {
            x.add_term(d.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut x = Self::zero(self.n);
        for (d, a) in &self.terms {
            x.add_term(d.clone(), a.clone() * c.clone());
        }
        x
    }

    /// The product, with `δ^loops` for every closed loop.
    pub fn multiply(&self, other: &Self, delta: &T) -> Result<Self> {
        self.check_same(other)?;
        let mut powers = vec![delta.one_like()];
        let mut x = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = a.compose(b)?;
                while powers.len() <= loops {
                    let next = powers.last().unwrap().clone() * delta.clone();
                    powers.push(next);
                }
                x.add_term(d, ca.clone() * cb.clone() * powers[loops].clone());
            }
        }
        Ok(x)
    }

    /// The anti-involution `*`, reflecting every diagram.
    pub fn involute(&self) -> Self {
        let mut x = Self::zero(self.n);
        for (d, c) in &self.terms {
            x.add_term(d.involute(), c.clone());
        }
        x
    }

    /// The embedding `ι: Br_n → Br_{n+1}`.
    pub fn embed(&self) -> Self {
        self.embed_to(self.n + 1)
    }

    pub fn embed_to(&self, m: usize) -> Self {
        let mut x = Self::zero(m);
        for (d, c) in &self.terms {
            x.add_term(d.embed_to(m), c.clone());
        }
        x
    }

    /// Partial closure of the rightmost strand, `Br_n → Br_{n−1}`.
    pub fn closure(&self, delta: &T) -> Result<Self> {
        if self.n == 0 {
            return Err(Error::IndexOutOfRange("closure needs at least one strand".into()));
        }
        let mut x = Self::zero(self.n - 1);
        for (d, c) in &self.terms {
            let (e, loops) = d.closure()?;
            let c = if loops == 1 { c.clone() * delta.clone() } else { c.clone() };
            x.add_term(e, c);
        }
        Ok(x)
    }

    /// The conditional expectation `E = δ⁻¹·closure`.
    pub fn cond_exp(&self, delta: &T) -> Result<Self> {
        let inv = delta.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.closure(delta)?.scale(&inv))
    }

    /// The Markov trace `Σ c_b δ^(c(b)−n)`.
    pub fn markov_trace(&self, delta: &T) -> Result<T> {
        let mut acc = delta.zero_like();
        for (d, c) in &self.terms {
            let w = delta.pow_i(d.trace_exponent()).ok_or(Error::DivisionByZero)?;
            acc = acc + c.clone() * w;
        }
        Ok(acc)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> AlgebraElement<U> {
        let mut x = AlgebraElement::zero(self.n);
        for (d, c) in &self.terms {
            x.add_term(d.clone(), f(c));
        }
        x
    }
}

impl<T: Coefficient> Add for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    /// Panics on a strand-count mismatch; see [`AlgebraElement::checked_add`].
    fn add(self, rhs: &AlgebraElement<T>) -> AlgebraElement<T> {
        self.checked_add(rhs).expect("adding elements of different Brauer algebras")
    }
}

impl<T: Coefficient> Neg for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn neg(self) -> AlgebraElement<T> {
        let mut x = AlgebraElement::zero(self.n);
        for (d, c) in &self.terms {
            x.add_term(d.clone(), -c.clone());
        }
        x
    }
}

impl<T: Coefficient> Sub for &AlgebraElement<T> {
    type Output = AlgebraElement<T>;
    fn sub(self, rhs: &AlgebraElement<T>) -> AlgebraElement<T> {
        self + &(-rhs)
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})·{d}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<T: fmt::Debug> fmt::Debug for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
