//! Exact semisimplicity criteria for Brauer, BMW and q-Brauer algebras.
//!
//! The crate has two halves. The decision half ([`criteria`], [`weights`])
//! evaluates the Markov-trace weights of the generic algebras and reads off
//! the largest `n` for which the specialized algebra stays semisimple. The
//! verification half ([`brauer`], [`cellular`], [`gram`]) builds the Brauer
//! algebra from diagrams and checks the same answers by brute force at small
//! `n`: trace Gram matrices, the Graham–Lehrer cellular basis, and counting
//! identities.

pub mod bound;
pub mod branching;
pub mod brauer;
pub mod cellular;
pub mod criteria;
pub mod error;
pub mod exactalg;
pub mod gram;
pub mod linalg;
pub mod params;
pub mod partitions;
pub mod weights;

pub use bound::Bound;
pub use error::{Error, Result};
pub use partitions::{Cell, Comparison, Partition};
