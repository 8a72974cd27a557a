//! Oracles shared by the integration tests. None of these call into the
//! code paths they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use leftlegal::finite::{CayleyTable, Partition};
use leftlegal::words::{Letter, Word};

pub const LETTERS: [&str; 3] = ["x", "y", "z"];

/// All words of length `1..=max_len` over `k` letters, as letter indices.
pub fn all_words(k: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..k as u8 {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn to_word(w: &[u8]) -> Word {
    Word::new(
        w.iter()
            .map(|&l| Letter::new(LETTERS[l as usize]).unwrap())
            .collect(),
    )
    .unwrap()
}

pub fn from_letters(w: &[Letter]) -> Vec<u8> {
    w.iter()
        .map(|l| LETTERS.iter().position(|s| *s == l.as_str()).unwrap() as u8)
        .collect()
}

/// Words reachable from `w` in one application of `uvu ↔ uv`, `uuu ↔ uu`
/// or `uvv ↔ uv` (either direction) to a factor, staying within `cap`.
pub fn rewrite_neighbours(w: &[u8], cap: usize) -> Vec<Vec<u8>> {
    let n = w.len();
    let mut out = Vec::new();
    let splice = |start: usize, end: usize, insert: &[u8]| {
        let mut v = w[..start].to_vec();
        v.extend_from_slice(insert);
        v.extend_from_slice(&w[end..]);
        v
    };
    for i in 0..n {
        for p in 1..=n - i {
            let u = &w[i..i + p];
            // uu -> uuu and uuu -> uu
            if i + 2 * p <= n && &w[i + p..i + 2 * p] == u {
                if i + 3 * p <= n && &w[i + 2 * p..i + 3 * p] == u {
                    out.push(splice(i + 2 * p, i + 3 * p, &[]));
                }
                if n + p <= cap {
                    out.push(splice(i + 2 * p, i + 2 * p, u));
                }
            }
            for q in 1..=n - i - p {
                let v = &w[i + p..i + p + q];
                let end = i + p + q;
                // uvu -> uv
                if end + p <= n && &w[end..end + p] == u {
                    out.push(splice(end, end + p, &[]));
                }
                // uvv -> uv
                if end + q <= n && &w[end..end + q] == v {
                    out.push(splice(end, end + q, &[]));
                }
                // uv -> uvu, uv -> uvv
                if n + p <= cap {
                    out.push(splice(end, end, u));
                }
                if n + q <= cap {
                    out.push(splice(end, end, v));
                }
            }
        }
    }
    out
}

/// Breadth-first closure of `w` under the rewrite moves, bounded in length.
pub fn rewrite_closure(w: &[u8], cap: usize) -> HashSet<Vec<u8>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for next in rewrite_neighbours(&cur, cap) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Shortest words of a closure, sorted.
pub fn shortest(closure: &HashSet<Vec<u8>>) -> Vec<Vec<u8>> {
    let min = closure.iter().map(Vec::len).min().unwrap();
    let mut out: Vec<Vec<u8>> = closure.iter().filter(|w| w.len() == min).cloned().collect();
    out.sort();
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn relabel(cells: &[usize], n: usize, p: &[usize]) -> Vec<usize> {
    let mut image = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            image[p[a] * n + p[b]] = p[cells[a * n + b]];
        }
    }
    image
}

fn brute_associative(cells: &[usize], n: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| cells[cells[a * n + b] * n + c] == cells[a * n + cells[b * n + c]])
        })
    })
}

fn brute_left_legal(cells: &[usize], n: usize) -> bool {
    (0..n).all(|a| (0..n).all(|b| cells[cells[a * n + b] * n + a] == cells[a * n + b]))
}

/// Every binary operation on `n` points, filtered by associativity (and
/// optionally `aba = ab`), as isomorphism-class representatives: the orbit
/// minimum over all relabellings.
pub fn brute_force_semigroups(n: usize, left_legal: bool) -> BTreeSet<Vec<usize>> {
    let perms = permutations(n);
    let total = n.pow((n * n) as u32);
    let mut classes = BTreeSet::new();
    for mut code in 0..total {
        let mut cells = vec![0; n * n];
        for c in cells.iter_mut() {
            *c = code % n;
            code /= n;
        }
        if !brute_associative(&cells, n) || (left_legal && !brute_left_legal(&cells, n)) {
            continue;
        }
        let rep = perms.iter().map(|p| relabel(&cells, n, p)).min().unwrap();
        classes.insert(rep);
    }
    classes
}

/// All set partitions of `0..n` (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(labels: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
        if labels.len() == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        let next = labels.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            labels.push(l);
            rec(labels, n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// Compatibility by definition: `a ~ b` implies `ac ~ bc` and `ca ~ cb`.
pub fn brute_is_congruence(t: &CayleyTable, p: &Partition) -> bool {
    t.elements().all(|a| {
        t.elements().all(|b| {
            !p.same_block(a, b)
                || t.elements().all(|c| {
                    p.same_block(t.mul(a, c), t.mul(b, c)) && p.same_block(t.mul(c, a), t.mul(c, b))
                })
        })
    })
}

/// Left legal semigroups of order at most five, up to isomorphism, computed
/// once per test binary.
pub fn left_legal_census() -> &'static [leftlegal::Semigroup] {
    static CENSUS: std::sync::OnceLock<Vec<leftlegal::Semigroup>> = std::sync::OnceLock::new();
    CENSUS.get_or_init(|| leftlegal::varieties::census(5, true).unwrap())
}

/// All semigroups of order at most four, up to isomorphism.
pub fn small_census() -> &'static [leftlegal::Semigroup] {
    static CENSUS: std::sync::OnceLock<Vec<leftlegal::Semigroup>> = std::sync::OnceLock::new();
    CENSUS.get_or_init(|| leftlegal::varieties::census(4, false).unwrap())
}
