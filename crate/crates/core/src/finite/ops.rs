//! Constructions on finite semigroups: `S²`, Rees quotients, quotients by
//! congruences, direct products, `S¹`, and a few standard families.

use super::{default_names, CayleyTable, Partition, Semigroup};
use crate::error::{Error, Result};

/// `S² = {ab : a, b ∈ S}` together with its subtable.
#[derive(Debug, Clone)]
pub struct SquareIdeal {
    pub subset: Vec<usize>,
    pub sub: Semigroup,
}

pub fn square_ideal(s: &Semigroup) -> SquareIdeal {
    let mut present = vec![false; s.order()];
    for &c in s.cells() {
        present[c] = true;
    }
    let subset: Vec<usize> = s.elements().filter(|&a| present[a]).collect();
    let sub = s
        .restrict(&subset)
        .expect("S² is closed under multiplication");
    SquareIdeal { subset, sub }
}

/// A pair `(s, a)` with `a` in the subset and `sa` or `as` outside it.
pub fn ideal_violation(t: &CayleyTable, subset: &[usize]) -> Option<(usize, usize)> {
    let mut inside = vec![false; t.order()];
    for &a in subset {
        inside[a] = true;
    }
    for &a in subset {
        for s in t.elements() {
            if !inside[t.mul(s, a)] || !inside[t.mul(a, s)] {
                return Some((s, a));
            }
        }
    }
    None
}

pub fn is_ideal(t: &CayleyTable, subset: &[usize]) -> bool {
    !subset.is_empty() && ideal_violation(t, subset).is_none()
}

/// Appends `'` to `base` until it differs from every name in `taken`.
pub(crate) fn fresh_name<'a>(
    base: &str,
    taken: impl Iterator<Item = &'a String> + Clone,
) -> String {
    let mut name = base.to_string();
    while taken.clone().any(|t| *t == name) {
        name.push('\'');
    }
    name
}

/// The Rees congruence of an ideal: the ideal is one block, everything else
/// is a singleton.
pub fn rees_congruence(n: usize, ideal: &[usize]) -> Partition {
    Partition::from_blocks(n, &[ideal.to_vec()])
}

/// `S/I`: the elements outside `I` in their original order, followed by the
/// collapsed ideal named `0`.
pub fn rees_quotient(s: &Semigroup, ideal: &[usize]) -> Result<Semigroup> {
    if ideal.is_empty() {
        return Err(Error::InvalidTable("an ideal must be nonempty".into()));
    }
    if let Some((x, a)) = ideal_violation(s, ideal) {
        return Err(Error::NotAnIdeal {
            s: s.name(x).to_string(),
            a: s.name(a).to_string(),
        });
    }
    let mut inside = vec![false; s.order()];
    for &a in ideal {
        inside[a] = true;
    }
    let kept: Vec<usize> = s.elements().filter(|&a| !inside[a]).collect();
    let zero = kept.len();
    let mut position = vec![zero; s.order()];
    for (i, &a) in kept.iter().enumerate() {
        position[a] = i;
    }
    let mut names: Vec<String> = kept.iter().map(|&a| s.name(a).to_string()).collect();
    names.push(fresh_name("0", names.iter()));
    let table = CayleyTable::from_fn(names, |i, j| {
        if i == zero || j == zero {
            zero
        } else {
            position[s.mul(kept[i], kept[j])]
        }
    })?;
    Ok(Semigroup::new_unchecked(table))
}

/// Quotient by a congruence; block `i` is named `[a|b|...]` after its members.
pub fn quotient(s: &Semigroup, congruence: &Partition) -> Result<Semigroup> {
    if let Some((a, b, x, y)) = congruence.compatibility_violation(s) {
        return Err(Error::NotCompatible {
            a: s.name(a).to_string(),
            b: s.name(b).to_string(),
            left: s.name(x).to_string(),
            right: s.name(y).to_string(),
        });
    }
    let blocks = congruence.blocks();
    let mut block_of = vec![0; s.order()];
    for (i, block) in blocks.iter().enumerate() {
        for &a in block {
            block_of[a] = i;
        }
    }
    let names = blocks
        .iter()
        .map(|b| {
            let members: Vec<&str> = b.iter().map(|&a| s.name(a)).collect();
            format!("[{}]", members.join("|"))
        })
        .collect();
    let table = CayleyTable::from_fn(names, |i, j| block_of[s.mul(blocks[i][0], blocks[j][0])])?;
    Ok(Semigroup::new_unchecked(table))
}

/// Componentwise product; `(a, b)` has index `a·|T| + b` and name `(a,b)`.
pub fn direct_product(s: &Semigroup, t: &Semigroup) -> Semigroup {
    let m = t.order();
    let names = s
        .elements()
        .flat_map(|a| t.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", s.name(a), t.name(b)))
        .collect();
    let table = CayleyTable::from_fn(names, |i, j| s.mul(i / m, j / m) * m + t.mul(i % m, j % m))
        .expect("product names are distinct");
    Semigroup::new_unchecked(table)
}

/// `S¹`: `S` itself when it has an identity, otherwise `S` with a new
/// identity named `1` appended.
pub fn adjoin_identity(s: &Semigroup) -> Semigroup {
    if s.identity_element().is_some() {
        return s.clone();
    }
    let n = s.order();
    let mut names = s.names().to_vec();
    names.push(fresh_name("1", s.names().iter()));
    let table = CayleyTable::from_fn(names, |a, b| match (a == n, b == n) {
        (true, _) => b,
        (_, true) => a,
        _ => s.mul(a, b),
    })
    .expect("fresh identity name");
    Semigroup::new_unchecked(table)
}

/// Standard small semigroups.
pub mod families {
    use super::*;

    /// The one-element semigroup.
    pub fn trivial() -> Semigroup {
        Semigroup::new_unchecked(CayleyTable::from_fn(vec!["e".into()], |_, _| 0).unwrap())
    }

    /// `LZ(n)`: `ab = a`, elements `l1..ln`.
    pub fn left_zero(n: usize) -> Semigroup {
        let names = (1..=n).map(|i| format!("l{i}")).collect();
        Semigroup::new_unchecked(CayleyTable::from_fn(names, |a, _| a).unwrap())
    }

    /// `RZ(n)`: `ab = b`, elements `r1..rn`.
    pub fn right_zero(n: usize) -> Semigroup {
        let names = (1..=n).map(|i| format!("r{i}")).collect();
        Semigroup::new_unchecked(CayleyTable::from_fn(names, |_, b| b).unwrap())
    }

    /// `ZM(n)`: all products equal `0`; elements `0, z1..z(n-1)`.
    pub fn zero_semigroup(n: usize) -> Semigroup {
        let names = std::iter::once("0".to_string())
            .chain((1..n).map(|i| format!("z{i}")))
            .collect();
        Semigroup::new_unchecked(CayleyTable::from_fn(names, |_, _| 0).unwrap())
    }

    /// The chain `0 < 1 < … < n-1` under `min`.
    pub fn chain(n: usize) -> Semigroup {
        Semigroup::new_unchecked(CayleyTable::from_fn(default_names(n), |a, b| a.min(b)).unwrap())
    }

    /// The cyclic group of order `n` under addition mod `n`.
    pub fn cyclic_group(n: usize) -> Semigroup {
        Semigroup::new_unchecked(
            CayleyTable::from_fn(default_names(n), |a, b| (a + b) % n).unwrap(),
        )
    }
}
