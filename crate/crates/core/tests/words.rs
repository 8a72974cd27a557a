mod common;

use std::collections::HashSet;

use common::{all_words, from_letters, rewrite_closure, shortest, to_word};
use leftlegal::finite::{identity, CayleyTable};
use leftlegal::words::{
    are_equivalent, circ, free_semigroup, normal_word_count, normalize, Alphabet, NormalWord, Word,
};
use proptest::prelude::*;

fn w(text: &str) -> Word {
    Word::parse(text).unwrap().0
}

fn nf(text: &str) -> NormalWord {
    NormalWord::parse(text).unwrap().0
}

#[test]
fn normalize_agrees_with_rewrite_closure() {
    // one closure per class; every word of length <= 6 over {x, y, z} is
    // looked up in the closure that first reached it
    let cap = 7;
    let mut done: HashSet<Vec<u8>> = HashSet::new();
    let mut classes = 0;
    for word in all_words(3, 6) {
        if done.contains(&word) {
            continue;
        }
        let closure = rewrite_closure(&word, cap);
        let short = shortest(&closure);
        assert_eq!(
            short.len(),
            1,
            "several shortest words for {word:?}: {short:?}"
        );
        let expected = from_letters(normalize(&to_word(&word)).letters());
        assert_eq!(short[0], expected, "normal form of {word:?}");
        for other in &closure {
            // identities never change the normal form
            assert_eq!(
                from_letters(normalize(&to_word(other)).letters()),
                expected,
                "{other:?} is rewrite-equivalent to {word:?}"
            );
        }
        done.extend(closure);
        classes += 1;
    }
    // normal words over three letters, length at most six, all reached
    assert_eq!(classes, normal_word_count(3));
}

#[test]
fn homomorphism_law_on_short_words() {
    let words = all_words(3, 5);
    for u in &words {
        let (wu, nu) = (to_word(u), normalize(&to_word(u)));
        for v in &words {
            let wv = to_word(v);
            assert_eq!(
                normalize(&wu.concat(&wv)),
                circ(&nu, &normalize(&wv)),
                "{u:?} {v:?}"
            );
        }
    }
}

#[test]
fn normalize_is_idempotent_and_normal_words_are_fixed() {
    for word in all_words(3, 6) {
        let n = normalize(&to_word(&word));
        let again = normalize(&Word::new(n.letters().to_vec()).unwrap());
        assert_eq!(again, n);
    }
}

#[test]
fn equivalence_is_a_congruence() {
    let words = all_words(2, 4);
    for a in &words {
        for b in &words {
            let (wa, wb) = (to_word(a), to_word(b));
            if !are_equivalent(&wa, &wb) {
                continue;
            }
            for c in &all_words(2, 2) {
                let wc = to_word(c);
                assert!(are_equivalent(&wa.concat(&wc), &wb.concat(&wc)));
                assert!(are_equivalent(&wc.concat(&wa), &wc.concat(&wb)));
            }
        }
    }
}

#[test]
fn documented_examples() {
    assert_eq!(normalize(&w("xxxyz")), nf("xxyz"));
    assert_eq!(normalize(&w("xyxz")), nf("xyz"));
    assert_eq!(normalize(&w("xxyyx")), nf("xxy"));
    assert_eq!(circ(&nf("x"), &nf("xy")), nf("xxy"));
    assert_eq!(circ(&nf("yy"), &nf("x")), nf("yyx"));
    for other in ["x", "xx", "y", "yy", "xy", "xxy", "yx", "yyx"] {
        assert_eq!(circ(&nf("xy"), &nf(other)), nf("xy"));
    }
    assert!(are_equivalent(&w("xyx"), &w("xy")));
    assert!(are_equivalent(&w("xxx"), &w("xx")));
    assert!(!are_equivalent(&w("x"), &w("xx")));
    assert!(!are_equivalent(&w("xy"), &w("yx")));
}

#[test]
fn free_tables_satisfy_the_defining_identities() {
    for letters in ["x", "xy", "xyz"] {
        let free = free_semigroup(&Alphabet::parse(letters).unwrap()).unwrap();
        let t: &CayleyTable = &free.table;
        assert!(t.is_associative());
        for id in ["aba=ab", "aaa=aa", "abb=ab"] {
            assert!(identity(id).holds_in(t).unwrap(), "{id} over {letters}");
        }
        assert!(!identity("aa=a").holds_in(t).unwrap());
        if letters.len() > 1 {
            // x·y = xy but xx·y = xxy
            assert!(!identity("ab=aab").holds_in(t).unwrap());
            assert!(!identity("ab=ba").holds_in(t).unwrap());
        }
        assert_eq!(t.order(), normal_word_count(letters.len()));
    }
}

#[test]
fn normal_word_counts() {
    // 2 * (n + n(n-1) + ... + n!) computed directly
    for n in 1..=6usize {
        let mut total = 0;
        let mut falling = 1;
        for k in 1..=n {
            falling *= n + 1 - k;
            total += falling;
        }
        assert_eq!(normal_word_count(n), 2 * total);
    }
}

fn word_strategy() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 1..14)
}

proptest! {
    #[test]
    fn homomorphism_on_long_words(u in word_strategy(), v in word_strategy()) {
        let (wu, wv) = (to_word(&u), to_word(&v));
        prop_assert_eq!(normalize(&wu.concat(&wv)), circ(&normalize(&wu), &normalize(&wv)));
    }

    #[test]
    fn normal_forms_are_short(u in word_strategy()) {
        let n = normalize(&to_word(&u));
        let distinct: HashSet<u8> = u.iter().copied().collect();
        prop_assert!(n.len() <= distinct.len() + 1);
        prop_assert_eq!(n.letters()[0].as_str(), common::LETTERS[u[0] as usize]);
    }

    #[test]
    fn circ_is_associative(a in word_strategy(), b in word_strategy(), c in word_strategy()) {
        let (na, nb, nc) = (normalize(&to_word(&a)), normalize(&to_word(&b)), normalize(&to_word(&c)));
        prop_assert_eq!(circ(&circ(&na, &nb), &nc), circ(&na, &circ(&nb, &nc)));
    }
}
