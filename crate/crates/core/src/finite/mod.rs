//! Finite semigroups as Cayley tables.

mod identity;
pub mod io;
pub mod ops;
mod partition;
mod predicates;
mod table;

pub use identity::{identity, Identity, LARGE_ORDER, MAX_VARIABLES_ON_LARGE};
pub use ops::{
    adjoin_identity, direct_product, families, ideal_violation, is_ideal, quotient,
    rees_congruence, rees_quotient, square_ideal, SquareIdeal,
};
pub use partition::Partition;
pub(crate) use partition::UnionFind;
pub(crate) use predicates::holds;
pub use predicates::{
    basic_predicates, constant_product, is_band, is_left_legal, is_zero_semigroup, BasicPredicates,
};
pub(crate) use table::default_names;
pub use table::{CayleyTable, Semigroup};

/// `satisfies_identity` in free-function form.
pub fn satisfies_identity(t: &CayleyTable, id: &Identity) -> crate::Result<bool> {
    id.holds_in(t)
}
