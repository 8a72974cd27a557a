use super::{identity, CayleyTable, Identity};

/// Membership flags for the basic identity-defined classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicPredicates {
    pub is_band: bool,
    pub is_left_zero: bool,
    pub is_zero_semigroup: bool,
    pub is_semilattice: bool,
    pub is_left_regular_band: bool,
    pub is_left_normal_band: bool,
    pub is_left_legal: bool,
    pub is_commutative: bool,
}

/// Checks an identity with at most four variables; those never hit the
/// size guard.
pub(crate) fn holds(t: &CayleyTable, id: &str) -> bool {
    let id: Identity = identity(id);
    debug_assert!(id.variables().len() <= 4);
    id.holds_in(t)
        .expect("small identities are always checkable")
}

/// The zero element, when every product equals it.
pub fn constant_product(t: &CayleyTable) -> Option<usize> {
    let z = t.mul(0, 0);
    t.cells().iter().all(|&c| c == z).then_some(z)
}

pub fn is_zero_semigroup(t: &CayleyTable) -> bool {
    constant_product(t).is_some()
}

pub fn is_left_legal(t: &CayleyTable) -> bool {
    holds(t, "aba=ab")
}

pub fn is_band(t: &CayleyTable) -> bool {
    t.elements().all(|a| t.square(a) == a)
}

pub fn basic_predicates(t: &CayleyTable) -> BasicPredicates {
    let is_band = is_band(t);
    let is_commutative = t.is_commutative();
    let is_left_legal = is_left_legal(t);
    BasicPredicates {
        is_band,
        is_left_zero: holds(t, "ab=a"),
        is_zero_semigroup: is_zero_semigroup(t),
        is_semilattice: is_band && is_commutative,
        is_left_regular_band: is_band && is_left_legal,
        is_left_normal_band: is_band && holds(t, "abc=acb"),
        is_left_legal,
        is_commutative,
    }
}
