//! Structure theory of finite (left legal) semigroups: the relations `τ`,
//! `σ` and `η`, semilattice components, the square-map retract, the Putcha
//! property and separativity.
//!
//! Power searches range over exponents `1..=order+1`. In a finite semigroup
//! the powers of an element are eventually periodic with index at most the
//! order, and every condition searched for here is preserved when the
//! exponent grows, so the bound loses nothing.

mod audit;

pub use audit::{theorem_audit, AuditClause, AuditReport, ClauseStatus};

use crate::error::{Error, Result};
use crate::finite::{adjoin_identity, square_ideal, CayleyTable, Partition, Semigroup};
use crate::par;

/// An equivalence relation on the elements together with whether it is a
/// congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub relation: Partition,
    pub is_congruence: bool,
    /// `(a, b, x, y)`: `a ~ b` but a one-sided product gives `x !~ y`.
    pub witness: Option<(usize, usize, usize, usize)>,
    /// Whether the relation is a congruence with a semilattice quotient.
    pub semilattice_quotient: bool,
}

impl EquivalenceReport {
    fn from_matrix(t: &CayleyTable, related: &[Vec<bool>]) -> Result<Self> {
        let n = t.order();
        let relation = Partition::from_relation(n, |a, b| related[a][b]);
        // the closure must not add pairs
        for a in 0..n {
            for c in 0..n {
                if relation.same_block(a, c) && !related[a][c] {
                    let b = (0..n)
                        .find(|&b| related[a][b] && related[b][c])
                        .unwrap_or(a);
                    return Err(Error::NotAnEquivalence {
                        a: t.name(a).to_string(),
                        b: t.name(b).to_string(),
                        c: t.name(c).to_string(),
                    });
                }
            }
        }
        let witness = relation.compatibility_violation(t);
        let is_congruence = witness.is_none();
        let semilattice_quotient =
            is_congruence && crate::congruences::has_semilattice_quotient(t, &relation);
        Ok(EquivalenceReport {
            relation,
            is_congruence,
            witness,
            semilattice_quotient,
        })
    }
}

fn power_bound(t: &CayleyTable) -> usize {
    t.order() + 1
}

fn related_matrix(n: usize, f: impl Fn(usize, usize) -> bool + Sync + Send) -> Vec<Vec<bool>> {
    par::map_range(n, |a| (0..n).map(|b| f(a, b)).collect())
}

/// `τ`: `a ~ b` iff `aⁿb = aⁿ⁺¹` and `bⁿa = bⁿ⁺¹` for some `n ≥ 1`.
/// With `dual` set, computes `σ`: `baⁿ = aⁿ⁺¹` and `abⁿ = bⁿ⁺¹`.
pub fn tau_relation(s: &Semigroup, dual: bool) -> Result<EquivalenceReport> {
    let bound = power_bound(s);
    let powers: Vec<Vec<usize>> = s
        .elements()
        .map(|a| (1..=bound + 1).map(|k| s.pow(a, k)).collect())
        .collect();
    // powers[a][k - 1] = a^k
    let absorbs = |a: usize, b: usize, k: usize| {
        let ak = powers[a][k - 1];
        let product = if dual { s.mul(b, ak) } else { s.mul(ak, b) };
        product == powers[a][k]
    };
    let related = related_matrix(s.order(), |a, b| {
        (1..=bound).any(|k| absorbs(a, b, k) && absorbs(b, a, k))
    });
    EquivalenceReport::from_matrix(s, &related)
}

/// The left legal form of `τ`: `a²b = a²` and `b²a = b²`.
pub fn tau_shortcut(s: &Semigroup) -> Partition {
    Partition::from_relation(s.order(), |a, b| {
        let (a2, b2) = (s.square(a), s.square(b));
        s.mul(a2, b) == a2 && s.mul(b2, a) == b2
    })
}

fn require_left_legal(s: &Semigroup) -> Result<()> {
    match crate::finite::identity("aba=ab").counterexample(s)? {
        None => Ok(()),
        Some(v) => Err(Error::NotLeftLegal {
            a: s.name(v[0]).to_string(),
            b: s.name(v[1]).to_string(),
        }),
    }
}

/// `SxS` for every `x`, as membership vectors.
fn two_sided_ideals(t: &CayleyTable) -> Vec<Vec<bool>> {
    let n = t.order();
    par::map_range(n, |x| {
        let mut member = vec![false; n];
        for s in 0..n {
            let sx = t.mul(s, x);
            for u in 0..n {
                member[t.mul(sx, u)] = true;
            }
        }
        member
    })
}

/// `η` on a left legal semigroup: `a ~ b` iff `aⁿ ∈ SbS` and `bⁿ ∈ SaS` for
/// some `n ≥ 1`. Refuses semigroups that are not left legal.
pub fn eta_relation(s: &Semigroup) -> Result<EquivalenceReport> {
    require_left_legal(s)?;
    let ideals = two_sided_ideals(s);
    let bound = power_bound(s);
    let related = related_matrix(s.order(), |a, b| {
        (1..=bound).any(|k| ideals[b][s.pow(a, k)] && ideals[a][s.pow(b, k)])
    });
    EquivalenceReport::from_matrix(s, &related)
}

/// Classes `{a : a² ∈ L}` where `L` runs over the left zero classes of the
/// band `S²` (`e ~ f` iff `ef = e` and `fe = f`).
pub fn semilattice_components(s: &Semigroup) -> Result<Partition> {
    require_left_legal(s)?;
    let square = square_ideal(s);
    let classes = Partition::from_relation(s.order(), |e, f| {
        square.subset.contains(&e)
            && square.subset.contains(&f)
            && s.mul(e, f) == e
            && s.mul(f, e) == f
    });
    let labels: Vec<usize> = s.elements().map(|a| classes.leader(s.square(a))).collect();
    Ok(Partition::from_labels(&labels))
}

/// How the map `a ↦ a²` relates to `S²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractVerdict {
    pub onto_square: bool,
    pub fixes_ideal: bool,
    pub is_homomorphism: bool,
    pub is_retract: bool,
    /// `(a, b)` with `(ab)² != a²b²`, if any.
    pub homomorphism_witness: Option<(usize, usize)>,
    /// An `e ∈ S²` with `e² != e`, if any.
    pub fixed_point_witness: Option<usize>,
}

pub fn square_retract_check(s: &Semigroup) -> RetractVerdict {
    let square = square_ideal(s);
    let mut image: Vec<usize> = s.elements().map(|a| s.square(a)).collect();
    image.sort_unstable();
    image.dedup();
    let onto_square = image == square.subset;
    let fixed_point_witness = square.subset.iter().copied().find(|&e| s.square(e) != e);
    let homomorphism_witness = s.elements().find_map(|a| {
        s.elements()
            .find(|&b| s.square(s.mul(a, b)) != s.mul(s.square(a), s.square(b)))
            .map(|b| (a, b))
    });
    let fixes_ideal = fixed_point_witness.is_none();
    let is_homomorphism = homomorphism_witness.is_none();
    RetractVerdict {
        onto_square,
        fixes_ideal,
        is_homomorphism,
        is_retract: onto_square && fixes_ideal && is_homomorphism,
        homomorphism_witness,
        fixed_point_witness,
    }
}

/// A pair `(a, b)` with `a ∈ S¹bS¹` but no power of `a` in `S¹b²S¹`.
pub fn putcha_violation(s: &Semigroup) -> Option<(usize, usize)> {
    let monoid = adjoin_identity(s);
    let ideals = two_sided_ideals(&monoid);
    let bound = power_bound(s);
    par::find_first_range(s.order(), |a| {
        s.elements()
            .find(|&b| ideals[b][a] && !(1..=bound).any(|m| ideals[s.square(b)][s.pow(a, m)]))
            .map(|b| (a, b))
    })
}

/// `a ∈ S¹bS¹` implies `aᵐ ∈ S¹b²S¹` for some `m ≥ 1`.
pub fn is_putcha(s: &Semigroup) -> bool {
    putcha_violation(s).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separativity {
    /// `ab = b²` and `ba = a²` imply `a = b`.
    pub right_separative: bool,
    /// `ab = a²` and `ba = b²` imply `a = b`.
    pub left_separative: bool,
    /// `a² = ab = b²` implies `a = b`.
    pub weakly_separative: bool,
}

pub fn separativity(t: &CayleyTable) -> Separativity {
    let n = t.order();
    let all_distinct_pairs = |violates: &dyn Fn(usize, usize) -> bool| {
        !(0..n).any(|a| (0..n).any(|b| a != b && violates(a, b)))
    };
    Separativity {
        right_separative: all_distinct_pairs(&|a, b| {
            t.mul(a, b) == t.square(b) && t.mul(b, a) == t.square(a)
        }),
        left_separative: all_distinct_pairs(&|a, b| {
            t.mul(a, b) == t.square(a) && t.mul(b, a) == t.square(b)
        }),
        weakly_separative: all_distinct_pairs(&|a, b| {
            t.square(a) == t.mul(a, b) && t.mul(a, b) == t.square(b)
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::families::*;
    use crate::fixtures;

    fn blocks(s: &Semigroup, p: &Partition) -> String {
        p.render(s.names())
    }

    #[test]
    fn tau_on_table3_relates_x_and_e() {
        let s = fixtures::table3();
        let tau = tau_relation(&s, false).unwrap();
        assert!(tau.relation.same_block(0, 1));
        assert_eq!(blocks(&s, &tau.relation), "{x e f} {g h}");
    }

    #[test]
    fn tau_small_cases() {
        assert!(tau_relation(&left_zero(3), false)
            .unwrap()
            .relation
            .is_universal());
        assert!(tau_relation(&zero_semigroup(2), false)
            .unwrap()
            .relation
            .is_universal());
        // σ on a left zero semigroup: b·aⁿ = b ≠ a, so only equality
        assert!(tau_relation(&left_zero(3), true)
            .unwrap()
            .relation
            .is_discrete());
    }

    #[test]
    fn eta_examples() {
        let s = fixtures::table3();
        let eta = eta_relation(&s).unwrap();
        assert_eq!(blocks(&s, &eta.relation), "{x e f} {g h}");
        assert!(eta.is_congruence && eta.semilattice_quotient);
        let f = fixtures::table1();
        assert_eq!(
            blocks(&f, &eta_relation(&f).unwrap().relation),
            "{x xx} {y yy} {xy xxy yx yyx}"
        );
        assert!(eta_relation(&chain(4)).unwrap().relation.is_discrete());
    }

    #[test]
    fn eta_refuses_non_left_legal() {
        assert_eq!(
            eta_relation(&right_zero(2)).unwrap_err(),
            Error::NotLeftLegal {
                a: "r1".into(),
                b: "r2".into()
            }
        );
        assert!(semilattice_components(&cyclic_group(2)).is_err());
    }

    #[test]
    fn components_examples() {
        let s = fixtures::table3();
        assert_eq!(
            blocks(&s, &semilattice_components(&s).unwrap()),
            "{x e f} {g h}"
        );
        assert!(semilattice_components(&fixtures::table4())
            .unwrap()
            .is_universal());
        let f = fixtures::table1();
        assert_eq!(
            blocks(&f, &semilattice_components(&f).unwrap()),
            "{x xx} {y yy} {xy xxy yx yyx}"
        );
    }

    #[test]
    fn retract_examples() {
        assert!(square_retract_check(&fixtures::table3()).is_retract);
        let v = square_retract_check(&fixtures::table5());
        assert!(!v.is_retract && v.fixes_ideal && !v.is_homomorphism);
        assert!(square_retract_check(&chain(3)).is_retract);
    }

    #[test]
    fn putcha_examples() {
        assert!(is_putcha(&fixtures::table5()));
        assert!(is_putcha(&left_zero(2)));
        assert!(is_putcha(&cyclic_group(4)));
    }

    #[test]
    fn separativity_examples() {
        let lz = separativity(&left_zero(2));
        assert!(lz.weakly_separative && lz.right_separative && !lz.left_separative);
        let zm = separativity(&zero_semigroup(2));
        assert!(!zm.weakly_separative && !zm.right_separative && !zm.left_separative);
        let sl = separativity(&chain(3));
        assert!(sl.weakly_separative && sl.right_separative && sl.left_separative);
    }
}
