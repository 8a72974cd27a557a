use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::par;

/// A finite magma stored as a row-major `n × n` table of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    names: Vec<String>,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table from element names and row-major products.
    pub fn new(names: Vec<String>, cells: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidTable(
                "a table needs at least one element".into(),
            ));
        }
        if cells.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for order {n}, found {}",
                n * n,
                cells.len()
            )));
        }
        if let Some(bad) = cells.iter().find(|&&c| c >= n) {
            return Err(Error::InvalidTable(format!(
                "entry {bad} is out of range for order {n}"
            )));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidTable(format!("bad element name {name:?}")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidTable(format!(
                    "duplicate element name {name}"
                )));
            }
        }
        Ok(CayleyTable { names, cells })
    }

    /// Builds a table with names `0..n`.
    pub fn from_cells(n: usize, cells: Vec<usize>) -> Result<Self> {
        CayleyTable::new(default_names(n), cells)
    }

    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = names.len();
        let cells = (0..n * n).map(|i| f(i / n, i % n)).collect();
        CayleyTable::new(names, cells)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.names.len() + b]
    }

    /// Product of a nonempty sequence of elements, left to right.
    pub fn product(&self, elements: &[usize]) -> usize {
        elements[1..]
            .iter()
            .fold(elements[0], |acc, &e| self.mul(acc, e))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn square(&self, a: usize) -> usize {
        self.mul(a, a)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn row(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.cells[a * n..(a + 1) * n]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Same products under new element names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::InvalidTable("wrong number of names".into()));
        }
        CayleyTable::new(names, self.cells.clone())
    }

    /// The first triple `(a, b, c)` with `(ab)c != a(bc)`, scanning `a`
    /// outermost.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        par::find_first_range(n, |a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A two-sided identity element, if there is one.
    pub fn identity_element(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|a| self.mul(e, a) == a && self.mul(a, e) == a)
        })
    }

    /// Subtable on `subset` (in the given order); fails unless `subset` is
    /// closed under multiplication.
    pub fn restrict(&self, subset: &[usize]) -> Result<CayleyTable> {
        let mut position = vec![usize::MAX; self.order()];
        for (i, &a) in subset.iter().enumerate() {
            position[a] = i;
        }
        let mut cells = Vec::with_capacity(subset.len() * subset.len());
        for &a in subset {
            for &b in subset {
                let p = self.mul(a, b);
                if position[p] == usize::MAX {
                    return Err(Error::NotClosed {
                        a: self.name(a).to_string(),
                        b: self.name(b).to_string(),
                    });
                }
                cells.push(position[p]);
            }
        }
        let names = subset.iter().map(|&a| self.names[a].clone()).collect();
        CayleyTable::new(names, cells)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Serializes in the Cayley file format: an `elements:` line, the order, and
/// `n` rows of 0-based indices.
impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements: {}", self.names.join(" "))?;
        writeln!(f, "{}", self.order())?;
        for a in self.elements() {
            let row: Vec<String> = self.row(a).iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A Cayley table known to be associative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup(CayleyTable);

impl Semigroup {
    pub fn new(table: CayleyTable) -> Result<Self> {
        match table.associativity_violation() {
            None => Ok(Semigroup(table)),
            Some((a, b, c)) => {
                let name = |x: usize| table.name(x).to_string();
                Err(Error::NotAssociative {
                    a: name(a),
                    b: name(b),
                    c: name(c),
                    left: name(table.mul(table.mul(a, b), c)),
                    right: name(table.mul(a, table.mul(b, c))),
                })
            }
        }
    }

    /// Wraps a table whose associativity the caller has already established.
    pub(crate) fn new_unchecked(table: CayleyTable) -> Self {
        debug_assert!(table.is_associative());
        Semigroup(table)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.0
    }

    pub fn into_table(self) -> CayleyTable {
        self.0
    }

    /// Subsemigroup on a closed subset.
    pub fn restrict(&self, subset: &[usize]) -> Result<Semigroup> {
        self.0.restrict(subset).map(Semigroup)
    }

    pub fn renamed(&self, names: Vec<String>) -> Result<Semigroup> {
        self.0.renamed(names).map(Semigroup)
    }
}

impl Deref for Semigroup {
    type Target = CayleyTable;

    fn deref(&self) -> &CayleyTable {
        &self.0
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
