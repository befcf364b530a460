//! Bounds that may be infinite.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A non-negative integer or `Unbounded` (written `∞`).
///
/// `Unbounded` compares greater than every finite value, so `min` with it is
/// the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bound {
    Finite(u64),
    Unbounded,
}

impl Bound {
    pub fn finite(self) -> Option<u64> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Unbounded => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        matches!(self, Bound::Unbounded)
    }

    pub fn min_all<I: IntoIterator<Item = Bound>>(it: I) -> Bound {
        it.into_iter().fold(Bound::Unbounded, Ord::min)
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            (Bound::Finite(_), Bound::Unbounded) => Ordering::Less,
            (Bound::Unbounded, Bound::Finite(_)) => Ordering::Greater,
            (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Unbounded => f.write_str("infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unbounded_is_min_identity() {
        assert_eq!(Bound::Finite(3).min(Bound::Unbounded), Bound::Finite(3));
        assert_eq!(Bound::min_all([]), Bound::Unbounded);
        assert_eq!(Bound::min_all([Bound::Finite(7), Bound::Unbounded, Bound::Finite(4)]), Bound::Finite(4));
        assert_eq!(Bound::Unbounded.to_string(), "infinity");
    }
}
