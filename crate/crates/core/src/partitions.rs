//! Young-diagram combinatorics.
//!
//! Boxes are addressed 1-based as `(row, col)`. Besides hook lengths, the
//! module provides the integers `d_λ(i,j)`, `a_λ(i,j)` and `b_λ(i,j)` that
//! control when a trace weight vanishes.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its positive parts in weakly decreasing
/// order. The empty partition has no parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Result of comparing two elements of a partially ordered set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Comparison {
    pub fn reverse(self) -> Comparison {
        match self {
            Comparison::Greater => Comparison::Less,
            Comparison::Less => Comparison::Greater,
            other => other,
        }
    }

    /// `self ⊵` holds.
    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equal)
    }
}

impl Partition {
    /// Builds a partition from a weakly decreasing list. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ'_j`, the length of column `j` (1-based).
    pub fn column_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// The boxes in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts: Vec<usize> = (1..=first).map(|j| self.column_len(j)).collect();
        Partition { parts, size: self.size }
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::BoxOutsideDiagram { row: c.row, col: c.col, shape: self.to_string() })
        }
    }

    /// Hook length `λ_i − i + λ'_j − j + 1`.
    pub fn hook(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(self.hook_unchecked(c))
    }

    /// `a_λ(i,j) = λ_i + λ_j − i − j`.
    pub fn avalue(&self, c: Cell) -> Result<i64> {
        self.check(c)?;
        Ok(self.avalue_unchecked(c))
    }

    /// `b_λ(i,j) = −λ'_i − λ'_j + i + j − 2`.
    pub fn bvalue(&self, c: Cell) -> Result<i64> {
        self.check(c)?;
        Ok(self.bvalue_unchecked(c))
    }

    /// `d_λ(i,j)`: `a_λ` on and above the diagonal, `b_λ` below it.
    pub fn dvalue(&self, c: Cell) -> Result<i64> {
        self.check(c)?;
        Ok(self.dvalue_unchecked(c))
    }

    pub(crate) fn avalue_unchecked(&self, c: Cell) -> i64 {
        (self.part(c.row) + self.part(c.col)) as i64 - (c.row + c.col) as i64
    }

    pub(crate) fn bvalue_unchecked(&self, c: Cell) -> i64 {
        (c.row + c.col) as i64 - 2 - (self.column_len(c.row) + self.column_len(c.col)) as i64
    }

    pub(crate) fn dvalue_unchecked(&self, c: Cell) -> i64 {
        if c.row <= c.col {
            self.avalue_unchecked(c)
        } else {
            self.bvalue_unchecked(c)
        }
    }

    pub(crate) fn hook_unchecked(&self, c: Cell) -> usize {
        self.part(c.row) + self.column_len(c.col) + 1 - c.row - c.col
    }

    /// Dominance order on partitions of the same size.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Comparison> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let rows = self.len().max(other.len());
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=rows {
            a += self.part(i);
            b += other.part(i);
            match a.cmp(&b) {
                Ordering::Greater => le = false,
                Ordering::Less => ge = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (ge, le) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Greater,
            (false, true) => Comparison::Less,
            (false, false) => Comparison::Incomparable,
        })
    }

    /// Boxes that can be added to leave a partition.
    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let p = self.part(i);
            if i == 1 || self.part(i - 1) > p {
                out.push(Cell::new(i, p + 1));
            }
        }
        out
    }

    /// Boxes that can be removed to leave a partition.
    pub fn removable(&self) -> Vec<Cell> {
        (1..=self.len()).filter(|&i| self.part(i) > self.part(i + 1)).map(|i| Cell::new(i, self.part(i))).collect()
    }

    pub fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition { parts, size: self.size + 1 }
    }

    pub fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition { parts, size: self.size - 1 }
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone(), size: current.iter().sum() });
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `(3,1)`, `3,1`, `[3, 1]`, `()` or `∅`.
impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[2, 1]).hook(Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(p(&[1]).hook(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(p(&[3]).hook(Cell::new(1, 2)).unwrap(), 2);
        assert!(matches!(p(&[2]).hook(Cell::new(2, 1)), Err(Error::BoxOutsideDiagram { .. })));
    }

    #[test]
    fn d_a_b_values() {
        assert_eq!(p(&[3]).dvalue(Cell::new(1, 1)).unwrap(), 4);
        assert_eq!(p(&[1]).dvalue(Cell::new(1, 1)).unwrap(), 0);
        assert_eq!(p(&[2, 1]).dvalue(Cell::new(2, 1)).unwrap(), -2);
        assert_eq!(p(&[1]).bvalue(Cell::new(1, 1)).unwrap(), -2);
        assert_eq!(p(&[2]).avalue(Cell::new(1, 1)).unwrap(), 2);
        assert_eq!(p(&[1, 1]).avalue(Cell::new(1, 1)).unwrap(), 0);
        assert_eq!(p(&[1, 1]).bvalue(Cell::new(1, 1)).unwrap(), -4);
        assert!(p(&[1]).dvalue(Cell::new(1, 2)).is_err());
    }

    #[test]
    fn dominance() {
        assert_eq!(p(&[3]).dominance_cmp(&p(&[2, 1])).unwrap(), Comparison::Greater);
        assert_eq!(p(&[2, 2]).dominance_cmp(&p(&[2, 2])).unwrap(), Comparison::Equal);
        assert_eq!(p(&[3, 1, 1, 1]).dominance_cmp(&p(&[2, 2, 2])).unwrap(), Comparison::Incomparable);
        assert_eq!(p(&[1, 1, 1]).dominance_cmp(&p(&[3])).unwrap(), Comparison::Less);
        assert_eq!(p(&[3]).dominance_cmp(&p(&[2])), Err(Error::SizeMismatch(3, 2)));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        let four = partitions_of(4);
        assert_eq!(four, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn corners() {
        let l = p(&[2, 1]);
        assert_eq!(l.addable(), vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        assert_eq!(l.removable(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(Partition::empty().addable(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[2, 1, 1]).to_string(), "(2,1,1)");
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    fn all_upto(n: usize) -> impl Iterator<Item = Partition> {
        (0..=n).flat_map(partitions_of)
    }

    #[test]
    fn d_monotone_along_rows_and_columns() {
        for l in all_upto(8) {
            for c in l.cells() {
                let d = l.dvalue_unchecked(c);
                for next in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                    if !l.contains(next) {
                        continue;
                    }
                    let dn = l.dvalue_unchecked(next);
                    if c.row <= c.col && next.row <= next.col {
                        assert!(dn <= d, "{l} {c} -> {next}");
                    } else if c.row > c.col && next.row > next.col {
                        assert!(dn >= d, "{l} {c} -> {next}");
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_d_is_nonnegative_and_hooks_positive() {
        for l in all_upto(8) {
            for i in 1..=l.len() {
                let c = Cell::new(i, i);
                if l.contains(c) {
                    assert_eq!(l.dvalue_unchecked(c), 2 * l.part(i) as i64 - 2 * i as i64);
                    assert!(l.dvalue_unchecked(c) >= 0);
                }
            }
            let corners = l.removable();
            for c in l.cells() {
                let h = l.hook_unchecked(c);
                assert!(h >= 1);
                assert_eq!(h == 1, corners.contains(&c));
            }
        }
    }

    #[test]
    fn conjugation_negates_d_shifted() {
        for l in all_upto(8) {
            let lc = l.conjugate();
            assert_eq!(lc.conjugate(), l);
            assert_eq!(lc.size(), l.size());
            for c in l.cells().filter(|c| c.row <= c.col) {
                let swapped = Cell::new(c.col, c.row);
                if swapped.row == swapped.col {
                    continue;
                }
                assert_eq!(lc.dvalue_unchecked(swapped), -l.dvalue_unchecked(c) - 2, "{l} {c}");
            }
        }
    }
}
