//! Free left legal semigroups (semigroups satisfying `aba = ab`) and a toolkit
//! for analysing finite semigroups given as Cayley tables.
//!
//! * [`words`]: normal forms, the product on normal forms and the word problem.
//! * [`finite`]: Cayley tables, identities, partitions and basic constructions.
//! * [`structure`]: `τ`, `η`, semilattice components, retracts, separativity
//!   and the structure-theorem audit.
//! * [`congruences`]: congruence enumeration and subdirect irreducibility.
//! * [`varieties`]: variety membership, isomorphism and small-order census.
//!
//! Data-parallel loops use rayon when the `parallel` feature (on by default)
//! is enabled and fall back to sequential iteration otherwise.

pub mod cli;
pub mod congruences;
mod error;
pub mod finite;
pub mod fixtures;
mod par;
pub mod report;
pub mod structure;
pub mod varieties;
pub mod words;

pub use error::{Error, Result};
pub use finite::{CayleyTable, Identity, Partition, Semigroup};
pub use words::{Alphabet, Letter, NormalWord, Word};
