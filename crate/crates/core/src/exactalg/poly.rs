//! Dense univariate polynomials over ℚ, coefficients stored low degree first.
//! Only the pieces needed for Laurent division and gcd live here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

pub(crate) type Dense = Vec<Rational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Polynomial long division: `a = q·b + r` with `deg r < deg b`.
pub(crate) fn div_rem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = &b[db];
    let mut q = vec![Rational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / lead;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[shift + k] -= &c * bk;
            }
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Replaces `p` by a primitive integer polynomial with positive leading
/// coefficient (same roots). Cuts coefficient growth in Euclid.
fn make_primitive(p: &mut Dense) {
    if p.is_empty() {
        return;
    }
    let c = content(p);
    for x in p.iter_mut() {
        *x /= &c;
    }
}

/// The rational `c` such that `p / c` has coprime integer coefficients and a
/// positive leading coefficient.
pub(crate) fn content(p: &Dense) -> Rational {
    let mut den_lcm = BigInt::one();
    for c in p {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in p {
        let scaled = c * Rational::from_integer(den_lcm.clone());
        num_gcd = num_gcd.gcd(&scaled.to_integer());
    }
    let mut c = Rational::new(num_gcd, den_lcm);
    if p.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    c
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    make_primitive(&mut x);
    make_primitive(&mut y);
    while !y.is_empty() {
        let (_, mut r) = div_rem(&x, &y);
        make_primitive(&mut r);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(&mut x);
    x
}

#[cfg(test)]
pub(crate) fn mul(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}
