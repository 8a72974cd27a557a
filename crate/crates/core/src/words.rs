//! The free left legal semigroup on a finite alphabet.
//!
//! Every word over an alphabet is equal, modulo `uvu = uv`, `u³ = u²` and
//! `uv² = uv`, to exactly one *normal word*: a word in which every letter
//! occurs at most once, except that the first letter may be doubled at the
//! front (`xxyz`). Normal words multiplied with [`circ`] form the free left
//! legal semigroup, and [`normalize`] is a homomorphism from the free
//! semigroup onto it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::finite::CayleyTable;
use crate::par;

/// Default bound on the alphabet size accepted by [`free_semigroup`].
pub const DEFAULT_MAX_LETTERS: usize = 4;

/// A letter: one printable, whitespace-free token.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(String);

impl Letter {
    pub fn new(symbol: impl Into<String>) -> Result<Self> {
        let symbol = symbol.into();
        if symbol.is_empty() {
            return Err(Error::InvalidWord("empty letter".into()));
        }
        if symbol.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidWord(format!(
                "letter {symbol:?} contains whitespace or control characters"
            )));
        }
        Ok(Letter(symbol))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// How a word was written: packed single characters (`xxy`) or
/// whitespace-separated tokens (`x x y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordFormat {
    Packed,
    Spaced,
}

impl WordFormat {
    pub fn render(self, letters: &[Letter]) -> String {
        let packable = letters.iter().all(|l| l.0.chars().count() == 1);
        match self {
            WordFormat::Packed if packable => letters.iter().map(|l| l.as_str()).collect(),
            _ => letters
                .iter()
                .map(|l| l.as_str())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

fn render_default(letters: &[Letter]) -> String {
    WordFormat::Packed.render(letters)
}

/// A nonempty finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("words must be nonempty".into()));
        }
        Ok(Word(letters))
    }

    /// Parses whitespace-separated tokens, or a bare string in which every
    /// character is a letter.
    pub fn parse(text: &str) -> Result<(Self, WordFormat)> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (letters, format) = match tokens.len() {
            0 => return Err(Error::InvalidWord("empty word".into())),
            1 => (
                tokens[0]
                    .chars()
                    .map(|c| Letter::new(c.to_string()))
                    .collect::<Result<Vec<_>>>()?,
                WordFormat::Packed,
            ),
            _ => (
                tokens
                    .iter()
                    .map(|t| Letter::new(*t))
                    .collect::<Result<Vec<_>>>()?,
                WordFormat::Spaced,
            ),
        };
        Ok((Word::new(letters)?, format))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> &Letter {
        &self.0[0]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn render(&self, format: WordFormat) -> String {
        format.render(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_default(&self.0))
    }
}

impl From<NormalWord> for Word {
    fn from(w: NormalWord) -> Self {
        Word(w.0)
    }
}

/// A word in normal form: pairwise distinct letters, except that the first
/// letter may appear twice as a doubled prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(Vec<Letter>);

impl NormalWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("words must be nonempty".into()));
        }
        if !is_normal(&letters) {
            return Err(Error::InvalidWord(format!(
                "{} is not in normal form",
                render_default(&letters)
            )));
        }
        Ok(NormalWord(letters))
    }

    pub fn parse(text: &str) -> Result<(Self, WordFormat)> {
        let (w, format) = Word::parse(text)?;
        Ok((NormalWord::new(w.0)?, format))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the first letter is doubled (`xxyz`).
    pub fn has_doubled_head(&self) -> bool {
        self.0.len() >= 2 && self.0[0] == self.0[1]
    }

    pub fn render(&self, format: WordFormat) -> String {
        format.render(&self.0)
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_default(&self.0))
    }
}

fn is_duplicate_free(letters: &[Letter]) -> bool {
    letters
        .iter()
        .enumerate()
        .all(|(i, l)| !letters[..i].contains(l))
}

fn is_normal(letters: &[Letter]) -> bool {
    if letters.len() >= 2 && letters[0] == letters[1] {
        is_duplicate_free(&letters[1..])
    } else {
        is_duplicate_free(letters)
    }
}

/// The distinct letters of `w` in order of first occurrence.
pub fn support_sequence(w: &Word) -> Word {
    let mut seen: Vec<Letter> = Vec::new();
    for l in &w.0 {
        if !seen.contains(l) {
            seen.push(l.clone());
        }
    }
    Word(seen)
}

/// Drops one copy of a doubled head; the result is duplicate-free.
pub fn star(w: &NormalWord) -> Word {
    if w.has_doubled_head() {
        Word(w.0[1..].to_vec())
    } else {
        Word(w.0.clone())
    }
}

pub fn normalize(w: &Word) -> NormalWord {
    let support = support_sequence(w).0;
    if w.len() >= 2 && w.0[0] == w.0[1] {
        let mut letters = Vec::with_capacity(support.len() + 1);
        letters.push(w.0[0].clone());
        letters.extend(support);
        NormalWord(letters)
    } else {
        NormalWord(support)
    }
}

/// The product of two normal words.
///
/// `x ∘ xw` is `xx` followed by the rest of `w`; in every other case the
/// result is `w1` followed by the letters of `star(w2)` that do not occur in
/// `w1`.
pub fn circ(w1: &NormalWord, w2: &NormalWord) -> NormalWord {
    let tail = star(w2).0;
    let mut letters = Vec::with_capacity(w1.len() + tail.len() + 1);
    if w1.len() == 1 && w1.0[0] == w2.0[0] {
        letters.push(w1.0[0].clone());
    }
    letters.extend(w1.0.iter().cloned());
    letters.extend(tail.into_iter().filter(|l| !w1.0.contains(l)));
    NormalWord(letters)
}

/// Decides the word problem: do `w1` and `w2` denote the same element of
/// the free left legal semigroup?
pub fn are_equivalent(w1: &Word, w2: &Word) -> bool {
    normalize(w1) == normalize(w2)
}

/// An ordered finite alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet(Vec<Letter>);

impl Alphabet {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("alphabet must be nonempty".into()));
        }
        if !is_duplicate_free(&letters) {
            return Err(Error::InvalidWord("alphabet has repeated letters".into()));
        }
        Ok(Alphabet(letters))
    }

    /// `xy` is `{x, y}`; `foo,bar` is `{foo, bar}`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let letters = if text.contains(',') {
            text.split(',')
                .map(|t| Letter::new(t.trim()))
                .collect::<Result<Vec<_>>>()?
        } else if text.split_whitespace().count() > 1 {
            text.split_whitespace()
                .map(Letter::new)
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| Letter::new(c.to_string()))
                .collect::<Result<Vec<_>>>()?
        };
        Alphabet::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn position(&self, l: &Letter) -> usize {
        self.0
            .iter()
            .position(|m| m == l)
            .expect("letter outside the alphabet")
    }
}

/// Number of normal words over `n` letters: `2 · Σ_{k=1..n} n!/(n−k)!`.
pub fn normal_word_count(n: usize) -> usize {
    let mut total = 0usize;
    let mut falling = 1usize;
    for k in 0..n {
        falling *= n - k;
        total += falling;
    }
    2 * total
}

/// The free left legal semigroup on a finite alphabet as a Cayley table.
#[derive(Debug, Clone)]
pub struct FreeTable {
    pub elements: Vec<NormalWord>,
    pub table: CayleyTable,
}

/// All normal words over `alphabet`, ordered by length and then
/// lexicographically in alphabet order.
pub fn enumerate_normal_words(alphabet: &Alphabet) -> Vec<NormalWord> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let n = alphabet.len();
    let mut plain = Vec::new();
    extend(&mut Vec::new(), n, &mut plain);
    let mut keys: Vec<Vec<usize>> = Vec::with_capacity(plain.len() * 2);
    for w in plain {
        let mut doubled = Vec::with_capacity(w.len() + 1);
        doubled.push(w[0]);
        doubled.extend_from_slice(&w);
        keys.push(w);
        keys.push(doubled);
    }
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    keys.into_iter()
        .map(|k| NormalWord(k.into_iter().map(|i| alphabet.0[i].clone()).collect()))
        .collect()
}

/// Element name used in Cayley tables: packed when every letter is a single
/// character, dot-separated otherwise.
pub fn element_name(w: &NormalWord) -> String {
    if w.0.iter().all(|l| l.0.chars().count() == 1) {
        render_default(&w.0)
    } else {
        w.0.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(".")
    }
}

pub fn free_semigroup(alphabet: &Alphabet) -> Result<FreeTable> {
    free_semigroup_bounded(alphabet, DEFAULT_MAX_LETTERS)
}

pub fn free_semigroup_bounded(alphabet: &Alphabet, max_letters: usize) -> Result<FreeTable> {
    if alphabet.len() > max_letters {
        return Err(Error::SizeLimit(format!(
            "alphabet of {} letters gives {} elements; the bound is {} letters ({} elements)",
            alphabet.len(),
            normal_word_count(alphabet.len()),
            max_letters,
            normal_word_count(max_letters),
        )));
    }
    let elements = enumerate_normal_words(alphabet);
    debug_assert!(elements
        .iter()
        .all(|w| { w.0.iter().all(|l| alphabet.position(l) < alphabet.len()) }));
    let index: HashMap<&NormalWord, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = elements.len();
    let rows = par::map_range(n, |a| {
        (0..n)
            .map(|b| index[&circ(&elements[a], &elements[b])])
            .collect::<Vec<_>>()
    });
    let names = elements.iter().map(element_name).collect();
    let table = CayleyTable::new(names, rows.into_iter().flatten().collect())?;
    Ok(FreeTable { elements, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap().0
    }

    fn nw(s: &str) -> NormalWord {
        NormalWord::parse(s).unwrap().0
    }

    #[test]
    fn support_sequence_reads_first_occurrences() {
        assert_eq!(support_sequence(&w("xxy")), w("xy"));
        assert_eq!(support_sequence(&w("xyxzx")), w("xyz"));
        assert_eq!(support_sequence(&w("x")), w("x"));
    }

    #[test]
    fn star_drops_doubled_head() {
        assert_eq!(star(&nw("xxy")), w("xy"));
        assert_eq!(star(&nw("xy")), w("xy"));
        assert_eq!(star(&nw("yy")), w("y"));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&w("xxxyz")), nw("xxyz"));
        assert_eq!(normalize(&w("xyx")), nw("xy"));
        assert_eq!(normalize(&w("yyxyx")), nw("yyx"));
        assert_eq!(normalize(&w("x")), nw("x"));
    }

    #[test]
    fn circ_examples() {
        assert_eq!(circ(&nw("x"), &nw("xy")), nw("xxy"));
        assert_eq!(circ(&nw("xy"), &nw("yx")), nw("xy"));
        assert_eq!(circ(&nw("yy"), &nw("x")), nw("yyx"));
        assert_eq!(circ(&nw("x"), &nw("x")), nw("xx"));
    }

    #[test]
    fn equivalence_examples() {
        assert!(are_equivalent(&w("xyx"), &w("xy")));
        assert!(!are_equivalent(&w("xxy"), &w("xy")));
        assert!(are_equivalent(&w("xyxz"), &w("xyzz")));
    }

    #[test]
    fn normal_word_shape_is_enforced() {
        assert!(NormalWord::parse("xxy").is_ok());
        assert!(NormalWord::parse("xyy").is_err());
        assert!(NormalWord::parse("xyx").is_err());
        assert!(NormalWord::parse("xxx").is_err());
        assert!(Word::parse("  ").is_err());
    }

    #[test]
    fn spaced_words_keep_their_format() {
        let (word, format) = Word::parse("foo bar foo").unwrap();
        assert_eq!(format, WordFormat::Spaced);
        assert_eq!(normalize(&word).render(format), "foo bar");
        let (word, format) = Word::parse("x x y").unwrap();
        assert_eq!(normalize(&word).render(format), "x x y");
    }

    #[test]
    fn single_letter_table() {
        let free = free_semigroup(&Alphabet::parse("x").unwrap()).unwrap();
        assert_eq!(free.elements, vec![nw("x"), nw("xx")]);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(free.table.mul(a, b), 1);
            }
        }
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(normal_word_count(1), 2);
        assert_eq!(normal_word_count(2), 8);
        assert_eq!(normal_word_count(3), 30);
        assert_eq!(normal_word_count(4), 128);
        for n in 1..=4 {
            let letters: Vec<Letter> = (0..n)
                .map(|i| Letter::new(((b'a' + i as u8) as char).to_string()).unwrap())
                .collect();
            let alphabet = Alphabet::new(letters).unwrap();
            assert_eq!(
                enumerate_normal_words(&alphabet).len(),
                normal_word_count(n)
            );
        }
    }

    #[test]
    fn alphabet_bound() {
        let alphabet = Alphabet::parse("abcde").unwrap();
        assert!(matches!(
            free_semigroup(&alphabet),
            Err(Error::SizeLimit(_))
        ));
        assert_eq!(
            free_semigroup_bounded(&alphabet, 5).unwrap().elements.len(),
            650
        );
    }

    #[test]
    fn alphabet_parsing() {
        assert_eq!(Alphabet::parse("xy").unwrap().len(), 2);
        assert_eq!(
            Alphabet::parse("foo,bar").unwrap().letters()[1].as_str(),
            "bar"
        );
        assert!(Alphabet::parse("xx").is_err());
    }
}
