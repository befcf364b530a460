//! Brauer diagrams, the algebra they span, and coset factorizations.

mod cosets;
mod diagram;
mod element;
pub mod perm;

pub use cosets::{factorize, factorize_prime, gen_d, gen_dprime, Factorization, FactorizationPrime};
pub use diagram::BrauerDiagram;
pub use element::AlgebraElement;
pub use perm::Perm;
