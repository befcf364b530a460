//! Coset representatives `D_{n,s}`, `D′_{n,s}` and the unique factorization
//! of a diagram through `ex(n, s)`.

use super::diagram::BrauerDiagram;
use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Perfect matchings of `points` as pairs `(a, b)` with `a < b`, sorted by
/// the left endpoint.
fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for k in 0..rest.len() {
        let partner = rest[k];
        let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &p)| p).collect();
        for mut m in matchings(&remaining) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn check_s(n: usize, s: usize) -> Result<()> {
    if 2 * s > n {
        return Err(Error::IndexOutOfRange(format!("need 2s ≤ n (got n = {n}, s = {s})")));
    }
    Ok(())
}

/// Builds every representative from a choice of through positions and a
/// matching of the rest; `arcs_first` selects the `D′` layout.
fn representatives(n: usize, s: usize, arcs_first: bool) -> Result<Vec<Perm>> {
    check_s(n, s)?;
    let ell = n - 2 * s;
    let mut out = Vec::new();
    for through in subsets(n, ell) {
        let rest: Vec<usize> = (0..n).filter(|i| !through.contains(i)).collect();
        for m in matchings(&rest) {
            let arcs = m.iter().flat_map(|&(a, b)| [a, b]);
            let p: Perm = if arcs_first {
                arcs.chain(through.iter().copied()).collect()
            } else {
                through.iter().copied().chain(arcs).collect()
            };
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// `D_{n,s}`: permutations increasing on `1..ℓ`, with `π(ℓ+1) < π(ℓ+3) < ⋯`
/// and `π(ℓ+2i−1) < π(ℓ+2i)`. Sorted lexicographically.
pub fn gen_d(n: usize, s: usize) -> Result<Vec<Perm>> {
    representatives(n, s, false)
}

/// `D′_{n,s}`: the same conditions with the pairs on positions `1..2s` and
/// the increasing block on `2s+1..n`.
pub fn gen_dprime(n: usize, s: usize) -> Result<Vec<Perm>> {
    representatives(n, s, true)
}

/// `d = u·π·ex(n,s)·v⁻¹` with `u, v ∈ D_{n,s}` and `π ∈ 𝔖_ℓ` acting on the
/// leftmost `ℓ = n − 2s` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub u: Perm,
    pub pi: Perm,
    pub v: Perm,
    pub s: usize,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.u.len()
    }

    /// Multiplies the factors back together; the product never closes a loop.
    pub fn compose(&self) -> Result<BrauerDiagram> {
        let n = self.n();
        let factors = [
            BrauerDiagram::from_permutation(&self.u),
            BrauerDiagram::from_permutation(&perm::extend(&self.pi, n)),
            BrauerDiagram::ex(n, self.s)?,
            BrauerDiagram::from_permutation(&perm::inverse(&self.v)),
        ];
        compose_loop_free(&factors)
    }
}

/// `d = u·e₁e₃⋯e_{2s−1}·π·v⁻¹` with `u, v ∈ D′_{n,s}` and `π` permuting the
/// rightmost `n − 2s` strands (stored as a permutation of `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationPrime {
    pub u: Perm,
    pub pi: Perm,
    pub v: Perm,
    pub s: usize,
}

impl FactorizationPrime {
    pub fn compose(&self) -> Result<BrauerDiagram> {
        let n = self.u.len();
        let factors = [
            BrauerDiagram::from_permutation(&self.u),
            BrauerDiagram::ex_left(n, self.s)?,
            BrauerDiagram::from_permutation(&self.pi),
            BrauerDiagram::from_permutation(&perm::inverse(&self.v)),
        ];
        compose_loop_free(&factors)
    }
}

fn compose_loop_free(factors: &[BrauerDiagram]) -> Result<BrauerDiagram> {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        let (next, loops) = acc.compose(f)?;
        if loops != 0 {
            return Err(Error::InvalidDiagram("factorization closed a loop".into()));
        }
        acc = next;
    }
    Ok(acc)
}

/// Through-strand endpoints (sorted) and caps (sorted by left endpoint) of
/// one row, as positions `0..n`.
fn row_structure(d: &BrauerDiagram, top: bool) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = d.n();
    let offset = if top { 0 } else { n };
    let same_row = |w: usize| (w < n) == top;
    let mut through = Vec::new();
    let mut caps = Vec::new();
    for i in 0..n {
        let w = d.partner(offset + i);
        if !same_row(w) {
            through.push(i);
        } else if w - offset > i {
            caps.push((i, w - offset));
        }
    }
    (through, caps)
}

/// The factorization `d = u·π·ex(n,s)·v⁻¹`.
pub fn factorize(d: &BrauerDiagram) -> Factorization {
    let n = d.n();
    let (top_through, top_caps) = row_structure(d, true);
    let (bottom_through, bottom_caps) = row_structure(d, false);
    let ell = top_through.len();
    let u: Perm = top_through.iter().copied().chain(top_caps.iter().flat_map(|&(a, b)| [a, b])).collect();
    let v: Perm = bottom_through.iter().copied().chain(bottom_caps.iter().flat_map(|&(a, b)| [a, b])).collect();
    let pi: Perm = bottom_through
        .iter()
        .map(|&b| {
            let t = d.partner(n + b);
            top_through.binary_search(&t).expect("through strand ends on the top row")
        })
        .collect();
    debug_assert_eq!(pi.len(), ell);
    Factorization { u, pi, v, s: (n - ell) / 2 }
}

/// The factorization `d = u·e₁e₃⋯e_{2s−1}·π·v⁻¹` over `D′_{n,s}`.
pub fn factorize_prime(d: &BrauerDiagram) -> FactorizationPrime {
    let n = d.n();
    let (top_through, top_caps) = row_structure(d, true);
    let (bottom_through, bottom_caps) = row_structure(d, false);
    let s = top_caps.len();
    let u: Perm = top_caps.iter().flat_map(|&(a, b)| [a, b]).chain(top_through.iter().copied()).collect();
    let v: Perm = bottom_caps.iter().flat_map(|&(a, b)| [a, b]).chain(bottom_through.iter().copied()).collect();
    let mut pi = perm::identity(n);
    for (j, &b) in bottom_through.iter().enumerate() {
        let t = d.partner(n + b);
        pi[2 * s + j] = 2 * s + top_through.binary_search(&t).expect("through strand ends on the top row");
    }
    FactorizationPrime { u, pi, v, s }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_factorial(n: usize) -> u64 {
        (1..=n as u64).rev().step_by(2).product()
    }

    fn factorial(n: usize) -> u64 {
        (1..=n as u64).product()
    }

    /// The defining inequalities, checked directly.
    fn in_d(p: &[usize], s: usize) -> bool {
        let n = p.len();
        let ell = n - 2 * s;
        p[..ell].windows(2).all(|w| w[0] < w[1])
            && (ell..n).step_by(2).all(|i| p[i] < p[i + 1])
            && (ell..n).step_by(2).collect::<Vec<_>>().windows(2).all(|w| p[w[0]] < p[w[1]])
    }

    fn in_dprime(p: &[usize], s: usize) -> bool {
        let n = p.len();
        p[2 * s..].windows(2).all(|w| w[0] < w[1])
            && (0..2 * s).step_by(2).all(|i| p[i] < p[i + 1])
            && (0..2 * s).step_by(2).collect::<Vec<_>>().windows(2).all(|w| p[w[0]] < p[w[1]])
            && n >= 2 * s
    }

    #[test]
    fn representatives_match_their_definitions() {
        for n in 0..=6 {
            let all = perm::all(n);
            for s in 0..=n / 2 {
                let direct: Vec<Perm> = all.iter().filter(|p| in_d(p, s)).cloned().collect();
                assert_eq!(gen_d(n, s).unwrap(), direct, "D n={n} s={s}");
                let direct: Vec<Perm> = all.iter().filter(|p| in_dprime(p, s)).cloned().collect();
                assert_eq!(gen_dprime(n, s).unwrap(), direct, "D' n={n} s={s}");
            }
        }
        assert_eq!(gen_d(4, 1).unwrap().len(), 6);
        assert_eq!(gen_dprime(4, 1).unwrap().len(), 6);
        assert_eq!(gen_d(3, 1).unwrap().len(), 3);
        assert_eq!(gen_d(3, 0).unwrap(), vec![vec![0, 1, 2]]);
        assert!(gen_d(3, 2).is_err());
    }

    #[test]
    fn counting_identity() {
        for n in 0..=8 {
            let total: u64 = (0..=n / 2)
                .map(|s| {
                    let d = gen_d(n, s).unwrap().len() as u64;
                    d * d * factorial(n - 2 * s)
                })
                .sum();
            assert_eq!(total, double_factorial((2 * n).saturating_sub(1)), "n = {n}");
        }
    }

    #[test]
    fn factorization_examples() {
        let e1 = BrauerDiagram::e(1, 2).unwrap();
        assert_eq!(factorize(&e1), Factorization { u: vec![0, 1], pi: vec![], v: vec![0, 1], s: 1 });
        let p = vec![2, 0, 3, 1];
        let f = factorize(&BrauerDiagram::from_permutation(&p));
        assert_eq!(f, Factorization { u: perm::identity(4), pi: p, v: perm::identity(4), s: 0 });
    }

    #[test]
    fn factorization_round_trips() {
        for n in 0..=5 {
            for d in BrauerDiagram::all(n) {
                let f = factorize(&d);
                assert!(in_d(&f.u, f.s) && in_d(&f.v, f.s), "{d}");
                assert_eq!(f.compose().unwrap(), d);
                let g = factorize_prime(&d);
                assert!(in_dprime(&g.u, g.s) && in_dprime(&g.v, g.s), "{d}");
                assert!(g.pi[..2 * g.s].iter().enumerate().all(|(i, &x)| i == x));
                assert_eq!(g.compose().unwrap(), d);
            }
        }
    }

    #[test]
    fn factorization_is_unique() {
        // Distinct factor triples give distinct diagrams, so their number
        // equals the number of diagrams.
        let n = 4;
        let mut seen = std::collections::BTreeSet::new();
        for s in 0..=n / 2 {
            let ds = gen_d(n, s).unwrap();
            for u in &ds {
                for v in &ds {
                    for pi in perm::all(n - 2 * s) {
                        let f = Factorization { u: u.clone(), pi, v: v.clone(), s };
                        assert!(seen.insert(f.compose().unwrap()));
                    }
                }
            }
        }
        assert_eq!(seen.len(), 105);
    }
}
