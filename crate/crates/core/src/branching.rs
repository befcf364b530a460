//! Young's lattice and the branching diagram obtained from it by reflections.
//!
//! A vertex of the reflected diagram at level `n` is a pair `(λ, n)` with
//! `|λ| ≤ n` and `n − |λ|` even. An edge `(λ, n) → (μ, n+1)` exists when `μ`
//! differs from `λ` by adding or by removing one box. These labels index the
//! simple modules of the generic Brauer algebras, and the number of paths from
//! the root to `(λ, n)` is the dimension of the corresponding module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Comparison, Partition};

/// A vertex `(λ, n)` of the reflected branching diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReflectedLabel {
    shape: Partition,
    level: usize,
}

impl ReflectedLabel {
    pub fn new(shape: Partition, level: usize) -> Result<Self> {
        if shape.size() > level || !(level - shape.size()).is_multiple_of(2) {
            return Err(Error::InvalidLabel(format!("({shape},{level})")));
        }
        Ok(ReflectedLabel { shape, level })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of horizontal arc pairs, `(n − |λ|)/2`.
    pub fn arcs(&self) -> usize {
        (self.level - self.shape.size()) / 2
    }
}

impl fmt::Display for ReflectedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.shape, self.level)
    }
}

impl fmt::Debug for ReflectedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Neighbours of `λ` in Young's lattice: one box added (`up`) or removed
/// (`down`), in the row order of the changed box.
pub fn young_neighbors(shape: &Partition) -> (Vec<Partition>, Vec<Partition>) {
    let up = shape.addable().into_iter().map(|c| shape.with_box_added(c.row)).collect();
    let down = shape.removable().into_iter().map(|c| shape.with_box_removed(c.row)).collect();
    (up, down)
}

/// All labels at level `n`: sizes `n, n−2, …`, each in the enumeration order
/// of [`partitions_of`].
pub fn reflected_level(n: usize) -> Vec<ReflectedLabel> {
    (0..=n / 2).flat_map(|s| partitions_of(n - 2 * s)).map(|shape| ReflectedLabel { shape, level: n }).collect()
}

/// The partial order on a level: fewer boxes is larger, equal sizes compare
/// by dominance.
pub fn reflected_cmp(x: &ReflectedLabel, y: &ReflectedLabel) -> Result<Comparison> {
    if x.level != y.level {
        return Err(Error::LevelMismatch(x.level, y.level));
    }
    let (a, b) = (x.shape.size(), y.shape.size());
    Ok(if a < b {
        Comparison::Greater
    } else if a > b {
        Comparison::Less
    } else {
        x.shape.dominance_cmp(&y.shape)?
    })
}

/// Number of paths from `(∅, 0)` to `target`.
pub fn path_count(target: &ReflectedLabel) -> BigUint {
    path_counts(target.level).remove(&target.shape).unwrap_or_else(BigUint::zero)
}

/// Path counts for every label at level `n`.
pub fn path_counts(n: usize) -> BTreeMap<Partition, BigUint> {
    let mut counts = BTreeMap::new();
    counts.insert(Partition::empty(), BigUint::one());
    for _ in 0..n {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (shape, c) in &counts {
            let (up, down) = young_neighbors(shape);
            for nb in up.into_iter().chain(down) {
                *next.entry(nb).or_insert_with(BigUint::zero) += c;
            }
        }
        counts = next;
    }
    counts
}

/// Membership in the order ideal of labels with at least one arc pair.
pub fn in_order_ideal_zero(x: &ReflectedLabel) -> bool {
    x.shape.size() < x.level
}
