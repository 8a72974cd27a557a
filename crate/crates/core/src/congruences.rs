//! Congruences on small finite semigroups.
//!
//! Every congruence is a join of principal congruences, so the lattice is
//! generated by computing the principal congruence of each pair and closing
//! under join. This visits only actual congruences instead of every set
//! partition.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::finite::{CayleyTable, Partition, Semigroup, UnionFind};

/// Default bound on the order accepted by the enumeration routines.
pub const DEFAULT_MAX_ORDER: usize = 8;

/// A partition compatible with the multiplication on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence(Partition);

impl Congruence {
    pub fn new(t: &CayleyTable, partition: Partition) -> Result<Self> {
        if partition.len() != t.order() {
            return Err(Error::InvalidTable(
                "partition size differs from the order".into(),
            ));
        }
        match partition.compatibility_violation(t) {
            None => Ok(Congruence(partition)),
            Some((a, b, x, y)) => Err(Error::NotCompatible {
                a: t.name(a).to_string(),
                b: t.name(b).to_string(),
                left: t.name(x).to_string(),
                right: t.name(y).to_string(),
            }),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    pub fn render(&self, t: &CayleyTable) -> String {
        self.0.render(t.names())
    }
}

/// Smallest congruence identifying `a` and `b`.
pub fn principal_congruence(t: &CayleyTable, a: usize, b: usize) -> Partition {
    let mut uf = UnionFind::new(t.order());
    let mut pending = VecDeque::new();
    if uf.union(a, b) {
        pending.push_back((a, b));
    }
    while let Some((x, y)) = pending.pop_front() {
        for c in t.elements() {
            for (p, q) in [(t.mul(x, c), t.mul(y, c)), (t.mul(c, x), t.mul(c, y))] {
                if uf.union(p, q) {
                    pending.push_back((p, q));
                }
            }
        }
    }
    uf.into_partition()
}

fn check_bound(t: &CayleyTable, max_order: usize) -> Result<()> {
    if t.order() > max_order {
        return Err(Error::SizeLimit(format!(
            "congruence enumeration is limited to order {max_order}, got {}",
            t.order()
        )));
    }
    Ok(())
}

fn distinct_principals(t: &CayleyTable) -> Vec<Partition> {
    let n = t.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let p = principal_congruence(t, a, b);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

pub fn enumerate_congruences(s: &Semigroup) -> Result<Vec<Congruence>> {
    enumerate_congruences_bounded(s, DEFAULT_MAX_ORDER)
}

/// All congruences, sorted by number of blocks (descending) and then by the
/// canonical leader vector.
pub fn enumerate_congruences_bounded(s: &Semigroup, max_order: usize) -> Result<Vec<Congruence>> {
    check_bound(s, max_order)?;
    let principals = distinct_principals(s);
    let identity = Partition::discrete(s.order());
    let mut found: HashSet<Partition> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(c) = queue.pop_front() {
        for p in &principals {
            let j = c.join(p);
            if found.insert(j.clone()) {
                queue.push_back(j);
            }
        }
    }
    let mut all: Vec<Partition> = found.into_iter().collect();
    all.sort_by(|x, y| {
        y.num_blocks()
            .cmp(&x.num_blocks())
            .then_with(|| x.leaders().cmp(y.leaders()))
    });
    Ok(all.into_iter().map(Congruence).collect())
}

/// Intersection of all congruences other than equality, i.e. of all
/// nontrivial principal congruences. `None` for the one-element semigroup.
pub fn monolith(s: &Semigroup) -> Option<Partition> {
    distinct_principals(s)
        .into_iter()
        .reduce(|acc, p| acc.meet(&p))
}

pub fn is_subdirectly_irreducible(s: &Semigroup) -> Result<bool> {
    is_subdirectly_irreducible_bounded(s, DEFAULT_MAX_ORDER)
}

/// The one-element semigroup is reported as not subdirectly irreducible.
pub fn is_subdirectly_irreducible_bounded(s: &Semigroup, max_order: usize) -> Result<bool> {
    check_bound(s, max_order)?;
    Ok(monolith(s).is_some_and(|m| !m.is_discrete()))
}

/// True when the quotient by `p` is a semilattice.
pub fn has_semilattice_quotient(t: &CayleyTable, p: &Partition) -> bool {
    t.elements().all(|a| {
        p.same_block(t.square(a), a) && t.elements().all(|b| p.same_block(t.mul(a, b), t.mul(b, a)))
    })
}

pub fn least_semilattice_congruence(s: &Semigroup) -> Result<Congruence> {
    least_semilattice_congruence_bounded(s, DEFAULT_MAX_ORDER)
}

/// Intersection of every congruence with a semilattice quotient.
pub fn least_semilattice_congruence_bounded(s: &Semigroup, max_order: usize) -> Result<Congruence> {
    let meet = enumerate_congruences_bounded(s, max_order)?
        .into_iter()
        .map(Congruence::into_partition)
        .filter(|p| has_semilattice_quotient(s, p))
        .reduce(|acc, p| acc.meet(&p))
        .expect("the universal relation is a semilattice congruence");
    assert!(
        meet.is_compatible_with(s) && has_semilattice_quotient(s, &meet),
        "meet of semilattice congruences must be one"
    );
    Ok(Congruence(meet))
}
