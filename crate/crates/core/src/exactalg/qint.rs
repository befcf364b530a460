//! q-integers and roots of unity described by their orders.
//!
//! A root of unity `q` is never approximated: it is recorded as the pair
//! `(e, f)` with `e` the order of `q²` and `f` the order of `q`. Every
//! question of the form "is `±q^m` equal to `1`" becomes a congruence.

use serde::{Deserialize, Serialize};

use super::{Coefficient, LaurentPoly, PrimeFieldElement};
use crate::bound::Bound;
use crate::error::{Error, Result};

/// `[d]_q = (q^d − q^{−d})/(q − q^{−1})` as a Laurent polynomial in `q`.
/// Negative `d` gives `[d]_q = −[−d]_q`.
pub fn qint(d: i64) -> LaurentPoly {
    let m = d.abs();
    let p = LaurentPoly::from_terms('q', (0..m).map(|k| (m - 1 - 2 * k, super::rat(1, 1))));
    if d < 0 {
        -p
    } else {
        p
    }
}

/// `[d]_q` at `q = 1`.
pub fn qint_at_one(d: i64) -> i64 {
    d
}

/// `[d]_q` at `q = −1`, the value of the Laurent polynomial `qint(d)`
/// there: `(−1)^{d−1} d`.
pub fn qint_at_minus_one(d: i64) -> i64 {
    if d.rem_euclid(2) == 0 {
        -d
    } else {
        d
    }
}

/// A root of unity `q ≠ ±1`: `e = ord(q²)`, `f = ord(q)`.
///
/// Either `f = 2e` (then `q^e = −1`) or `f = e` with `e` odd (then `q^e = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSpec {
    e: u64,
    f: u64,
}

impl RootSpec {
    pub fn new(e: u64, f: u64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidParameters(format!(
                "order of q² must be at least 2 (got {e}); q = ±1 is handled by the Brauer case"
            )));
        }
        if f != 2 * e && !(f == e && e % 2 == 1) {
            return Err(Error::InvalidParameters(format!(
                "order of q must be 2e, or e when e is odd (got e = {e}, f = {f})"
            )));
        }
        Ok(RootSpec { e, f })
    }

    /// From `e` and the sign of `q^e`.
    pub fn from_qe_sign(e: u64, qe_sign: i8) -> Result<Self> {
        match qe_sign {
            1 => RootSpec::new(e, e),
            -1 => RootSpec::new(e, 2 * e),
            _ => Err(Error::InvalidParameters(format!("sign of q^e must be ±1 (got {qe_sign})"))),
        }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    /// `[m]_q = 0`, i.e. `q^{2m} = 1`.
    pub fn qint_vanishes(&self, m: i64) -> bool {
        m.rem_euclid(self.e as i64) == 0
    }

    /// `q^m = sign` for `sign = ±1`. In characteristic 2 the two signs agree.
    pub fn q_power_equals(&self, m: i64, sign: i8, char2: bool) -> bool {
        let f = self.f as i64;
        if sign == 1 || char2 {
            m.rem_euclid(f) == 0
        } else {
            f % 2 == 0 && m.rem_euclid(f) == f / 2
        }
    }

    /// A prime `p ≡ 1 (mod f)` with `p > 2` and an element of `𝔽_p` of exact
    /// order `f`. Used to cross-check congruence decisions numerically.
    pub fn realize(&self) -> (u64, PrimeFieldElement) {
        let mut p = self.f + 1;
        while !(p > 2 && super::is_prime(p)) {
            p += self.f;
        }
        let generator = (2..p)
            .map(|g| PrimeFieldElement::new(g as i64, p))
            .find(|g| g.order() == Some(p - 1))
            .expect("a prime field has a primitive root");
        let q = generator.pow_u((p - 1) / self.f);
        (p, q)
    }
}

/// The parameter `q` of a q-Brauer or BMW algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QParam {
    /// `q²` is not a root of unity.
    NotRootOfUnity,
    Root(RootSpec),
    /// `q = ±1`; the algebra is isomorphic to a Brauer algebra.
    PlusMinusOne,
}

/// `e(q)`: the least `d > 0` with `[d]_q = 0`.
pub fn e_of_q(q: &QParam, characteristic: u64) -> Bound {
    match q {
        QParam::Root(spec) => Bound::Finite(spec.e()),
        QParam::PlusMinusOne if characteristic > 0 => Bound::Finite(characteristic),
        _ => Bound::Unbounded,
    }
}
