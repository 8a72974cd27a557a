mod common;

use common::{all_partitions, brute_is_congruence};
use leftlegal::congruences::{
    enumerate_congruences, is_subdirectly_irreducible, monolith, principal_congruence, Congruence,
};
use leftlegal::finite::families::{chain, left_zero, right_zero, trivial, zero_semigroup};
use leftlegal::finite::{rees_congruence, square_ideal, Partition, Semigroup};
use leftlegal::fixtures;

fn brute_congruences(s: &Semigroup) -> Vec<Partition> {
    let mut out: Vec<Partition> = all_partitions(s.order())
        .into_iter()
        .filter(|p| brute_is_congruence(s, p))
        .collect();
    out.sort();
    out
}

fn brute_is_si(s: &Semigroup) -> bool {
    let nontrivial: Vec<Partition> = brute_congruences(s)
        .into_iter()
        .filter(|p| !p.is_discrete())
        .collect();
    match nontrivial.into_iter().reduce(|a, b| a.meet(&b)) {
        Some(meet) => !meet.is_discrete(),
        None => false,
    }
}

fn enumerated(s: &Semigroup) -> Vec<Partition> {
    let mut out: Vec<Partition> = enumerate_congruences(s)
        .unwrap()
        .into_iter()
        .map(Congruence::into_partition)
        .collect();
    out.sort();
    out
}

#[test]
fn enumeration_matches_partition_scan() {
    for s in common::small_census() {
        assert_eq!(enumerated(s), brute_congruences(s), "\n{s}");
    }
    for s in common::left_legal_census()
        .iter()
        .filter(|s| s.order() == 5)
    {
        assert_eq!(enumerated(s), brute_congruences(s), "\n{s}");
    }
}

#[test]
fn subdirect_irreducibility_matches_oracle() {
    for s in common::small_census() {
        assert_eq!(
            is_subdirectly_irreducible(s).unwrap(),
            brute_is_si(s),
            "\n{s}"
        );
    }
}

#[test]
fn monolith_is_the_meet_of_nontrivial_congruences() {
    for s in common::small_census() {
        let meet = brute_congruences(s)
            .into_iter()
            .filter(|p| !p.is_discrete())
            .reduce(|a, b| a.meet(&b));
        assert_eq!(monolith(s), meet, "\n{s}");
    }
}

#[test]
fn principal_congruences_are_least() {
    let s = fixtures::table3();
    let all = brute_congruences(&s);
    for a in s.elements() {
        for b in s.elements() {
            let p = principal_congruence(&s, a, b);
            let least = all
                .iter()
                .filter(|q| q.same_block(a, b))
                .cloned()
                .reduce(|x, y| x.meet(&y))
                .unwrap();
            assert_eq!(p, least);
        }
    }
}

#[test]
fn table4_decomposes() {
    let s = fixtures::table4();
    let congruences = enumerated(&s);
    let squares: Vec<usize> = s.elements().map(|a| s.square(a)).collect();
    let kernel = Partition::from_labels(&squares);
    let rees = rees_congruence(s.order(), &square_ideal(&s).subset);
    assert!(congruences.contains(&kernel));
    assert!(congruences.contains(&rees));
    assert!(kernel.meet(&rees).is_discrete());
    assert!(!is_subdirectly_irreducible(&s).unwrap());
}

#[test]
fn small_irreducibles() {
    assert!(is_subdirectly_irreducible(&left_zero(2)).unwrap());
    assert!(is_subdirectly_irreducible(&right_zero(2)).unwrap());
    assert!(is_subdirectly_irreducible(&zero_semigroup(2)).unwrap());
    assert!(is_subdirectly_irreducible(&chain(2)).unwrap());
    assert!(!is_subdirectly_irreducible(&chain(3)).unwrap());
    assert!(!is_subdirectly_irreducible(&left_zero(3)).unwrap());
    assert!(!is_subdirectly_irreducible(&zero_semigroup(3)).unwrap());
    assert!(!is_subdirectly_irreducible(&trivial()).unwrap());
}

#[test]
fn table3_congruence_count() {
    assert_eq!(enumerated(&fixtures::table3()).len(), 10);
}
