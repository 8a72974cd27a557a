//! Exhaustive search for associative tables of a given small order.
//!
//! Cells are filled in row-major order. Every assignment is checked against
//! all associativity triples it completes, and each finished row is checked
//! against the identity filters on the triples that are already defined. The
//! search is split over the choices of the first row, which run in parallel.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::finite::{identity, CayleyTable, Identity, Semigroup};
use crate::par;

/// Largest order searched without the left legal filter.
pub const MAX_UNFILTERED_ORDER: usize = 4;
/// Largest order searched with the left legal filter.
pub const MAX_FILTERED_ORDER: usize = 5;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub order: usize,
    pub identities: Vec<Identity>,
    pub left_legal: bool,
    pub up_to_iso: bool,
}

impl EnumerationOptions {
    pub fn new(order: usize) -> Self {
        EnumerationOptions {
            order,
            identities: Vec::new(),
            left_legal: false,
            up_to_iso: false,
        }
    }

    pub fn left_legal(mut self) -> Self {
        self.left_legal = true;
        self
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn with_identity(mut self, id: Identity) -> Self {
        self.identities.push(id);
        self
    }

    fn filters(&self) -> Vec<Identity> {
        let mut ids = self.identities.clone();
        let aba = identity("aba=ab");
        if self.left_legal && !ids.contains(&aba) {
            ids.push(aba);
        }
        ids
    }

    fn max_order(&self) -> usize {
        if self.filters().contains(&identity("aba=ab")) {
            MAX_FILTERED_ORDER
        } else {
            MAX_UNFILTERED_ORDER
        }
    }
}

/// An identity compiled to variable slots.
struct Compiled {
    vars: usize,
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

impl Compiled {
    fn new(id: &Identity) -> Self {
        let vars = id.variables();
        let slot = |v: &u8| vars.iter().position(|w| w == v).unwrap();
        Compiled {
            vars: vars.len(),
            lhs: id.lhs().iter().map(slot).collect(),
            rhs: id.rhs().iter().map(slot).collect(),
        }
    }

    fn eval(side: &[usize], values: &[u8], cells: &[u8], n: usize) -> Option<u8> {
        let mut acc = values[side[0]];
        for &s in &side[1..] {
            acc = cells[acc as usize * n + values[s] as usize];
            if acc == UNSET {
                return None;
            }
        }
        Some(acc)
    }

    /// False only if some assignment evaluates both sides to different
    /// defined values.
    fn consistent(&self, cells: &[u8], n: usize) -> bool {
        let mut values = vec![0u8; self.vars];
        let total = n.pow(self.vars as u32);
        for mut code in 0..total {
            for v in values.iter_mut() {
                *v = (code % n) as u8;
                code /= n;
            }
            if let (Some(l), Some(r)) = (
                Self::eval(&self.lhs, &values, cells, n),
                Self::eval(&self.rhs, &values, cells, n),
            ) {
                if l != r {
                    return false;
                }
            }
        }
        true
    }
}

struct Searcher {
    n: usize,
    filters: Vec<Compiled>,
}

impl Searcher {
    #[inline]
    fn get(&self, cells: &[u8], a: u8, b: u8) -> u8 {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            cells[a as usize * self.n + b as usize]
        }
    }

    /// Checks every associativity triple that uses the cell `(a, b)`.
    fn associative_at(&self, cells: &[u8], a: usize, b: usize) -> bool {
        let n = self.n;
        let (a8, b8) = (a as u8, b as u8);
        let v = cells[a * n + b];
        let agree = |x: u8, y: u8| x == UNSET || y == UNSET || x == y;
        for z in 0..n as u8 {
            // (ab)z = a(bz)
            let bz = self.get(cells, b8, z);
            if !agree(self.get(cells, v, z), self.get(cells, a8, bz)) {
                return false;
            }
            // (za)b = z(ab)
            let za = self.get(cells, z, a8);
            if !agree(self.get(cells, za, b8), self.get(cells, z, v)) {
                return false;
            }
        }
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                // (xy)b = x(yb) with xy = a
                if self.get(cells, x, y) == a8 {
                    let yb = self.get(cells, y, b8);
                    if !agree(v, self.get(cells, x, yb)) {
                        return false;
                    }
                }
                // a(xy) = (ax)y with xy = b
                if self.get(cells, x, y) == b8 {
                    let ax = self.get(cells, a8, x);
                    if !agree(v, self.get(cells, ax, y)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn filters_consistent(&self, cells: &[u8]) -> bool {
        self.filters.iter().all(|f| f.consistent(cells, self.n))
    }

    fn dfs(&self, cells: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        let n = self.n;
        if k == n * n {
            out.push(cells.clone());
            return;
        }
        let (a, b) = (k / n, k % n);
        for v in 0..n as u8 {
            cells[k] = v;
            if self.associative_at(cells, a, b) && (b + 1 < n || self.filters_consistent(cells)) {
                self.dfs(cells, k + 1, out);
            }
        }
        cells[k] = UNSET;
    }

    /// All completions whose first row is the base-`n` digits of `code`.
    fn search_from_first_row(&self, code: usize) -> Vec<Vec<u8>> {
        let n = self.n;
        let mut cells = vec![UNSET; n * n];
        let mut rest = code;
        for b in (0..n).rev() {
            cells[b] = (rest % n) as u8;
            rest /= n;
        }
        // re-check row 0 cell by cell against itself
        let mut partial = vec![UNSET; n * n];
        for b in 0..n {
            partial[b] = cells[b];
            if !self.associative_at(&partial, 0, b) {
                return Vec::new();
            }
        }
        if !self.filters_consistent(&partial) {
            return Vec::new();
        }
        let mut out = Vec::new();
        self.dfs(&mut partial, n, &mut out);
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical_cells(cells: &[usize], n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut image = vec![0; n * n];
    for p in perms {
        for a in 0..n {
            for b in 0..n {
                image[p[a] * n + p[b]] = p[cells[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image.clone());
        }
    }
    best.unwrap()
}

/// The lexicographically least relabelling of `t`, with names `0..n`.
pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    let cells = canonical_cells(t.cells(), n, &permutations(n));
    CayleyTable::from_cells(n, cells).expect("relabelling preserves validity")
}

/// All associative tables of the requested order passing the filters, in
/// lexicographic order of their cells. With `up_to_iso`, one canonical
/// representative per isomorphism class.
pub fn enumerate_semigroups(options: &EnumerationOptions) -> Result<Vec<Semigroup>> {
    let n = options.order;
    if n == 0 {
        return Err(Error::InvalidTable("order must be positive".into()));
    }
    let max = options.max_order();
    if n > max {
        return Err(Error::SizeLimit(format!(
            "enumeration is limited to order {max} with these filters, got {n}"
        )));
    }
    let searcher = Searcher {
        n,
        filters: options.filters().iter().map(Compiled::new).collect(),
    };
    let found: Vec<Vec<u8>> =
        par::flat_map_range(n.pow(n as u32), |code| searcher.search_from_first_row(code));
    let mut tables: Vec<Vec<usize>> = found
        .into_iter()
        .map(|cells| cells.into_iter().map(usize::from).collect())
        .collect();
    if options.up_to_iso {
        let perms = permutations(n);
        let canon: BTreeSet<Vec<usize>> =
            par::map_range(tables.len(), |i| canonical_cells(&tables[i], n, &perms))
                .into_iter()
                .collect();
        tables = canon.into_iter().collect();
    } else {
        tables.sort();
    }
    tables
        .into_iter()
        .map(|cells| {
            let t = CayleyTable::from_cells(n, cells)?;
            debug_assert!(t.is_associative());
            Ok(Semigroup::new_unchecked(t))
        })
        .collect()
}

/// Semigroups of every order `1..=max_order` up to isomorphism, optionally
/// restricted to left legal ones.
pub fn census(max_order: usize, left_legal: bool) -> Result<Vec<Semigroup>> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        let mut options = EnumerationOptions::new(order).up_to_iso();
        options.left_legal = left_legal;
        out.extend(enumerate_semigroups(&options)?);
    }
    Ok(out)
}
