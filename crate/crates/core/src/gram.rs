//! Gram matrices of the Markov trace form `(b, b′) ↦ tr(b·b′)` on `Br_n`.
//!
//! Every entry is a power `δ^k` with `k ≤ 0`, so a Gram matrix is fixed by
//! its exponent table. Over `ℚ` the matrix is scaled by `δⁿ` to become
//! integral and ranked fraction-free; over `𝔽_p` it is ranked directly.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::brauer::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exactalg::{Coefficient, PrimeFieldElement};
use crate::linalg::{bareiss_rank, field_rank, Matrix};
use crate::params::{DeltaSpec, Family, ParamSpec};
use crate::weights::n1;

/// Largest `n` for which a Gram matrix over `ℚ` is built.
pub const MAX_N_RATIONAL: usize = 4;
/// Largest `n` for which a Gram matrix over a prime field is built.
pub const MAX_N_PRIME: usize = 5;

/// Diagrams ordered by through strands (descending), then by matching array.
pub fn gram_basis(n: usize) -> Vec<BrauerDiagram> {
    let mut basis = BrauerDiagram::all(n);
    basis.sort_by(|a, b| b.through_strands().cmp(&a.through_strands()).then_with(|| a.cmp(b)));
    basis
}

/// The exponents `k` with `tr(b_i·b_j) = δ^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceExponents {
    basis: Vec<BrauerDiagram>,
    exponents: Matrix<i64>,
}

impl TraceExponents {
    pub fn new(n: usize) -> Result<Self> {
        let basis = gram_basis(n);
        let mut rows = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in &basis {
                let (c, loops) = a.compose(b)?;
                row.push(loops as i64 + c.trace_exponent());
            }
            rows.push(row);
        }
        Ok(TraceExponents { basis, exponents: Matrix::from_rows(rows)? })
    }

    pub fn n(&self) -> usize {
        self.basis.first().map_or(0, BrauerDiagram::n)
    }

    pub fn basis(&self) -> &[BrauerDiagram] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn exponent(&self, i: usize, j: usize) -> i64 {
        *self.exponents.get(i, j)
    }

    /// `(tr(b_i·b_j))` at the given `δ`, which must be invertible.
    pub fn evaluate<T: Coefficient>(&self, delta: &T) -> Result<Matrix<T>> {
        let n = self.n() as i64;
        let powers: Vec<T> = (0..=n).map(|k| delta.pow_i(-k).ok_or(Error::DivisionByZero)).collect::<Result<_>>()?;
        Ok(self.exponents.map(|&k| powers[(-k) as usize].clone()))
    }

    /// `δⁿ·(tr(b_i·b_j))`, which has polynomial entries `δ^(n+k)`.
    pub fn evaluate_cleared<T: Coefficient>(&self, delta: &T) -> Matrix<T> {
        let n = self.n() as i64;
        let powers: Vec<T> = (0..=n).map(|k| delta.pow_u(k as u64)).collect();
        self.exponents.map(|&k| powers[(n + k) as usize].clone())
    }
}

/// The Gram matrix of the trace form on `Br_n` at `δ`.
pub fn gram_matrix<T: Coefficient>(n: usize, delta: &T) -> Result<Matrix<T>> {
    TraceExponents::new(n)?.evaluate(delta)
}

/// Rank and corank of a Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub n: usize,
    pub dim: usize,
    pub rank: usize,
    /// Entries were multiplied by `δⁿ` before elimination.
    pub cleared: bool,
}

impl GramReport {
    pub fn corank(&self) -> usize {
        self.dim - self.rank
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank < self.dim
    }
}

/// The integer `δ` of a Brauer specification and its characteristic.
fn integer_delta(spec: &ParamSpec) -> Result<(i64, u64)> {
    let spec = match spec.family {
        Family::Brauer => *spec,
        _ => spec.as_brauer()?,
    };
    match spec.delta {
        Some(DeltaSpec::Integer(d)) => Ok((d, spec.characteristic)),
        other => Err(Error::Unsupported(format!("Gram ranks need an integer loop parameter (got {other:?})"))),
    }
}

fn check_desk_bound(n: usize, characteristic: u64) -> Result<()> {
    let max = if characteristic == 0 { MAX_N_RATIONAL } else { MAX_N_PRIME };
    if n > max {
        return Err(Error::OutOfRange(format!("a Gram matrix of Br_{n} in characteristic {characteristic}")));
    }
    Ok(())
}

fn report(table: &TraceExponents, delta: i64, characteristic: u64) -> GramReport {
    let (rank, cleared) = if characteristic == 0 {
        (bareiss_rank(&table.evaluate_cleared(&BigInt::from(delta))), true)
    } else {
        let d = PrimeFieldElement::new(delta, characteristic);
        (field_rank(&table.evaluate(&d).expect("δ is a unit")), false)
    };
    GramReport { n: table.n(), dim: table.dim(), rank, cleared }
}

/// Rank of the Gram matrix of `Br_n` for a Brauer specification with an
/// integer loop parameter.
pub fn gram_rank(spec: &ParamSpec, n: usize) -> Result<GramReport> {
    let (delta, p) = integer_delta(spec)?;
    check_desk_bound(n, p)?;
    Ok(report(&TraceExponents::new(n)?, delta, p))
}

/// The least `n ≤ n_max` at which the trace form is degenerate.
///
/// Needs `n_max ≤ n₁`, so that the quotient by the caps ideal is still
/// semisimple on the range searched.
pub fn first_degenerate_level(spec: &ParamSpec, n_max: usize) -> Result<Option<GramReport>> {
    let (delta, p) = integer_delta(spec)?;
    check_desk_bound(n_max, p)?;
    if let Some(k) = n1(spec).finite() {
        if n_max as u64 > k {
            return Err(Error::OutOfRange(format!("n_max = {n_max} beyond n₁ = {k}")));
        }
    }
    for n in 0..=n_max {
        let r = report(&TraceExponents::new(n)?, delta, p);
        if r.is_degenerate() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Checks that `tr(b·b′) = δ^k` with `k ≤ 0`, and `k = 0` exactly when
/// `b′ = b*`. The generic Gram matrix is then a signed permutation matrix
/// plus terms of negative degree, hence invertible over `ℚ(δ)`.
pub fn generic_structure_check(n: usize) -> Result<bool> {
    check_desk_bound(n, 0)?;
    let table = TraceExponents::new(n)?;
    let basis = table.basis();
    Ok((0..table.dim()).all(|i| {
        let star = basis[i].involute();
        (0..table.dim()).all(|j| {
            let k = table.exponent(i, j);
            k <= 0 && ((k == 0) == (basis[j] == star))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::AlgebraElement;
    use crate::exactalg::{rat, LaurentPoly, Rational};
    use crate::linalg::bareiss_det;

    fn brauer(p: u64, d: i64) -> ParamSpec {
        ParamSpec::brauer(p, DeltaSpec::Integer(d)).unwrap()
    }

    #[test]
    fn small_matrices() {
        let one = rat(1, 1);
        assert_eq!(gram_matrix(0, &one).unwrap(), Matrix::from_rows(vec![vec![one.clone()]]).unwrap());
        assert_eq!(gram_matrix(1, &rat(3, 1)).unwrap(), Matrix::from_rows(vec![vec![one.clone()]]).unwrap());
        // Basis: id, s₁, e₁.
        let d = LaurentPoly::var('δ');
        let g = gram_matrix(2, &d).unwrap();
        let inv = LaurentPoly::power('δ', -1);
        let one = LaurentPoly::one('δ');
        let expected = vec![
            vec![one.clone(), inv.clone(), inv.clone()],
            vec![inv.clone(), one.clone(), inv.clone()],
            vec![inv.clone(), inv, one],
        ];
        assert_eq!(g, Matrix::from_rows(expected).unwrap());
    }

    #[test]
    fn matches_algebra_arithmetic() {
        let delta: Rational = rat(-7, 2);
        for n in 0..=3 {
            let table = TraceExponents::new(n).unwrap();
            let g = table.evaluate(&delta).unwrap();
            assert!(g.is_symmetric());
            for (i, a) in table.basis().iter().enumerate() {
                let x = AlgebraElement::from_diagram(a.clone(), rat(1, 1));
                for (j, b) in table.basis().iter().enumerate() {
                    let y = AlgebraElement::from_diagram(b.clone(), rat(1, 1));
                    let t = x.multiply(&y, &delta).unwrap().markov_trace(&delta).unwrap();
                    assert_eq!(&t, g.get(i, j), "{a} · {b}");
                }
            }
        }
    }

    #[test]
    fn basis_order() {
        let basis = gram_basis(3);
        assert_eq!(basis.len(), 15);
        assert!(basis[..6].iter().all(|d| d.through_strands() == 3));
        assert!(basis.windows(2).all(|w| w[0].through_strands() >= w[1].through_strands()));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(gram_rank(&brauer(0, 1), 2).unwrap().rank, 1);
        assert_eq!(gram_rank(&brauer(0, 1), 2).unwrap().corank(), 2);
        assert_eq!(gram_rank(&brauer(0, 5), 2).unwrap().rank, 3);
        let id = Matrix::from_fn(4, 4, |i, j| BigInt::from(i64::from(i == j)));
        assert_eq!(bareiss_rank(&id), 4);
        assert!(gram_rank(&brauer(0, 2), 5).is_err());
        assert!(gram_rank(&ParamSpec::brauer(0, DeltaSpec::Generic).unwrap(), 2).is_err());
    }

    #[test]
    fn degenerate_levels() {
        assert_eq!(first_degenerate_level(&brauer(0, 2), 4).unwrap().map(|r| r.n), Some(3));
        assert_eq!(first_degenerate_level(&brauer(0, 5), 4).unwrap(), None);
        assert_eq!(first_degenerate_level(&brauer(5, 2), 3).unwrap().map(|r| r.n), Some(3));
        assert!(first_degenerate_level(&brauer(5, 2), 5).is_err());
        let r = first_degenerate_level(&brauer(0, 3), 4).unwrap().unwrap();
        assert_eq!(r.n, 4);
        assert!(r.corank() > 0);
    }

    #[test]
    fn kernel_vectors_lie_in_the_radical() {
        // At δ = 1 on Br₂, id − s₁ pairs to zero with everything.
        let delta = rat(1, 1);
        let basis = gram_basis(2);
        let x = &AlgebraElement::from_diagram(basis[0].clone(), rat(1, 1))
            - &AlgebraElement::from_diagram(basis[1].clone(), rat(1, 1));
        for b in &basis {
            let y = AlgebraElement::from_diagram(b.clone(), rat(1, 1));
            assert_eq!(x.multiply(&y, &delta).unwrap().markov_trace(&delta).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn generic_structure() {
        for n in 0..=4 {
            assert!(generic_structure_check(n).unwrap(), "n = {n}");
        }
        let g = TraceExponents::new(3).unwrap().evaluate_cleared(&LaurentPoly::var('δ'));
        assert!(!bareiss_det(&g).unwrap().is_zero());
    }
}
