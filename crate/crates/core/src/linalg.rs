//! Dense matrices over exact rings: fraction-free (Bareiss) elimination for
//! integral domains, plain Gauss–Jordan for fields.

use crate::error::{Error, Result};
use crate::exactalg::{Coefficient, ExactDivision};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("{cols} columns"), format!("{} columns", bad.len())));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Coefficient> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("{} columns", self.cols), format!("vector of {}", v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = v.first().map_or_else(|| self.get(i, 0).zero_like(), Coefficient::zero_like);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect())
    }
}

/// Outcome of fraction-free elimination.
struct Echelon<T> {
    rank: usize,
    /// Last pivot; for a square nonsingular matrix this is `±det`.
    last_pivot: Option<T>,
    swaps: usize,
}

fn bareiss<T: ExactDivision>(m: &Matrix<T>) -> Echelon<T> {
    let mut a = m.clone();
    let mut prev: Option<T> = None;
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            swaps += 1;
        }
        let pivot = a.get(r, c).clone();
        for i in r + 1..a.rows {
            let lead = a.get(i, c).clone();
            for j in c + 1..a.cols {
                let mut v = pivot.clone() * a.get(i, j).clone();
                if !lead.is_zero() {
                    v = v - lead.clone() * a.get(r, j).clone();
                }
                if let Some(d) = &prev {
                    v = v.div_exact(d).expect("Bareiss step is an exact division");
                }
                a.set(i, j, v);
            }
            a.set(i, c, pivot.zero_like());
        }
        prev = Some(pivot);
        r += 1;
    }
    Echelon { rank: r, last_pivot: prev, swaps }
}

/// Rank over the fraction field of an integral domain.
pub fn bareiss_rank<T: ExactDivision>(m: &Matrix<T>) -> usize {
    bareiss(m).rank
}

/// Determinant by fraction-free elimination.
pub fn bareiss_det<T: ExactDivision>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{}", m.rows, m.cols), "square".into()));
    }
    if m.rows == 0 {
        return Err(Error::ShapeMismatch("0x0".into(), "nonempty".into()));
    }
    let e = bareiss(m);
    if e.rank < m.rows {
        return Ok(m.get(0, 0).zero_like());
    }
    let d = e.last_pivot.expect("nonempty matrix has a pivot");
    Ok(if e.swaps % 2 == 1 { -d } else { d })
}

/// Rank over a field by Gaussian elimination.
pub fn field_rank<T: Coefficient>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).inverse().expect("nonzero field element is invertible");
        for i in r + 1..a.rows {
            let lead = a.get(i, c).clone();
            if lead.is_zero() {
                continue;
            }
            let factor = lead * inv.clone();
            for j in c..a.cols {
                let rj = a.get(r, j).clone();
                if !rj.is_zero() {
                    let v = a.get(i, j).clone() - factor.clone() * rj;
                    a.set(i, j, v);
                }
            }
        }
        r += 1;
    }
    r
}

/// Inverse over a field by Gauss–Jordan elimination.
pub fn field_inverse<T: Coefficient>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = m.rows;
    if !m.is_square() || n == 0 {
        return Err(Error::ShapeMismatch(format!("{}x{}", m.rows, m.cols), "nonempty square".into()));
    }
    let zero = m.get(0, 0).zero_like();
    let one = zero.one_like();
    let mut a = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            one.clone()
        } else {
            zero.clone()
        }
    });
    for c in 0..n {
        let p = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(Error::DivisionByZero)?;
        a.swap_rows(p, c);
        let inv = a.get(c, c).inverse().ok_or(Error::DivisionByZero)?;
        for j in 0..2 * n {
            let v = a.get(c, j).clone() * inv.clone();
            a.set(c, j, v);
        }
        for i in 0..n {
            let lead = a.get(i, c).clone();
            if i == c || lead.is_zero() {
                continue;
            }
            for j in 0..2 * n {
                let cj = a.get(c, j).clone();
                if !cj.is_zero() {
                    let v = a.get(i, j).clone() - lead.clone() * cj;
                    a.set(i, j, v);
                }
            }
        }
    }
    Ok(Matrix::from_fn(n, n, |i, j| a.get(i, j + n).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, LaurentPoly, PrimeFieldElement, Rational};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_det(&int_matrix(&[&[2, 1], &[1, 3]])).unwrap(), BigInt::from(5));
        assert_eq!(bareiss_det(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(bareiss_det(&int_matrix(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
        let m = int_matrix(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(bareiss_det(&m).unwrap(), BigInt::from(4));
    }

    #[test]
    fn ranks() {
        let ones = int_matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(bareiss_rank(&ones), 1);
        let id = Matrix::from_fn(4, 4, |i, j| BigInt::from((i == j) as i64));
        assert_eq!(bareiss_rank(&id), 4);
        let skip = int_matrix(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]);
        assert_eq!(bareiss_rank(&skip), 2);
        let fp = skip.map(|x| PrimeFieldElement::from_bigint(x, 5));
        assert_eq!(field_rank(&fp), 2);
    }

    #[test]
    fn polynomial_determinant() {
        // [[d, 1], [1, d]] has determinant d^2 - 1
        let d = LaurentPoly::var('d');
        let one = LaurentPoly::one('d');
        let m = Matrix::from_rows(vec![vec![d.clone(), one.clone()], vec![one.clone(), d.clone()]]).unwrap();
        assert_eq!(bareiss_det(&m).unwrap(), &(&d * &d) - &one);
    }

    fn small_int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_field_elimination(rows in small_int_matrix()) {
            let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap();
            let q: Matrix<Rational> = m.map(|x| Rational::from_integer(x.clone()));
            prop_assert_eq!(bareiss_rank(&m), field_rank(&q));
            let det = bareiss_det(&m).unwrap();
            match field_inverse(&q) {
                Ok(inv) => {
                    prop_assert!(!num_traits::Zero::is_zero(&det));
                    let n = q.rows();
                    for i in 0..n {
                        let col: Vec<Rational> = (0..n).map(|k| inv.get(k, i).clone()).collect();
                        let e = q.mul_vec(&col).unwrap();
                        for (k, x) in e.iter().enumerate() {
                            prop_assert_eq!(x.clone(), rat((k == i) as i64, 1));
                        }
                    }
                }
                Err(_) => prop_assert!(num_traits::Zero::is_zero(&det)),
            }
        }
    }
}
