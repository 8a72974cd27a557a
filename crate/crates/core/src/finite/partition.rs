use std::fmt::Write;

use super::CayleyTable;

/// A partition of `0..n`, stored canonically: every element maps to the
/// least element of its block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    leaders: Vec<usize>,
}

impl Partition {
    /// The equality relation: all singletons.
    pub fn discrete(n: usize) -> Self {
        Partition {
            leaders: (0..n).collect(),
        }
    }

    /// The universal relation: a single block.
    pub fn universal(n: usize) -> Self {
        Partition {
            leaders: vec![0; n],
        }
    }

    /// Groups elements with equal labels.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let leaders = (0..labels.len())
            .map(|i| (0..=i).find(|&j| labels[j] == labels[i]).unwrap())
            .collect();
        Partition { leaders }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut uf = UnionFind::new(n);
        for block in blocks {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.into_partition()
    }

    /// Equivalence closure of a symmetric-or-not relation given as a predicate.
    pub fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if related(a, b) {
                    uf.union(a, b);
                }
            }
        }
        uf.into_partition()
    }

    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    pub fn leader(&self, a: usize) -> usize {
        self.leaders[a]
    }

    pub fn leaders(&self) -> &[usize] {
        &self.leaders
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.leaders[a] == self.leaders[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.leaders
            .iter()
            .enumerate()
            .filter(|(i, &l)| *i == l)
            .count()
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks ordered by least element, each in increasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.len()];
        for (a, &l) in self.leaders.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[l]].push(a);
        }
        blocks
    }

    /// Intersection of the two equivalences.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let pairs: Vec<(usize, usize)> = self
            .leaders
            .iter()
            .zip(&other.leaders)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Smallest equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for a in 0..self.len() {
            uf.union(a, self.leaders[a]);
            uf.union(a, other.leaders[a]);
        }
        uf.into_partition()
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.len()).all(|a| other.same_block(a, self.leaders[a]))
    }

    /// A pair `(a, b)` with `a ~ b` whose products with some `c` separate,
    /// returned as `(a, b, ac-or-ca, bc-or-cb)`.
    pub fn compatibility_violation(
        &self,
        table: &CayleyTable,
    ) -> Option<(usize, usize, usize, usize)> {
        for a in 0..self.len() {
            let b = self.leaders[a];
            if a == b {
                continue;
            }
            for c in table.elements() {
                let (ac, bc) = (table.mul(a, c), table.mul(b, c));
                if !self.same_block(ac, bc) {
                    return Some((a, b, ac, bc));
                }
                let (ca, cb) = (table.mul(c, a), table.mul(c, b));
                if !self.same_block(ca, cb) {
                    return Some((a, b, ca, cb));
                }
            }
        }
        None
    }

    pub fn is_compatible_with(&self, table: &CayleyTable) -> bool {
        self.compatibility_violation(table).is_none()
    }

    /// `{x e f} {g h}` using the table's element names.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('{');
            for (j, &a) in block.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", names[a]);
            }
            out.push('}');
        }
        out
    }
}

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Merges the blocks of `a` and `b`; true if they were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so leaders stay least elements
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub(crate) fn into_partition(mut self) -> Partition {
        let leaders = (0..self.parent.len()).map(|a| self.find(a)).collect();
        Partition { leaders }
    }
}
