use crate::finite::CayleyTable;

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    index: usize,
    period: usize,
    left_fixers: usize,
    right_fixers: usize,
    row_image: usize,
    column_image: usize,
    square_idempotent: bool,
}

fn signatures(t: &CayleyTable) -> Vec<Signature> {
    let n = t.order();
    t.elements()
        .map(|a| {
            // power sequence a, a², … until it repeats
            let mut seen: Vec<usize> = vec![a];
            let (index, period) = loop {
                let next = t.mul(*seen.last().unwrap(), a);
                if let Some(pos) = seen.iter().position(|&p| p == next) {
                    break (pos + 1, seen.len() - pos);
                }
                seen.push(next);
            };
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[t.mul(a, b)] = true;
                col[t.mul(b, a)] = true;
            }
            let sq = t.square(a);
            Signature {
                idempotent: sq == a,
                index,
                period,
                left_fixers: (0..n).filter(|&b| t.mul(b, a) == a).count(),
                right_fixers: (0..n).filter(|&b| t.mul(a, b) == a).count(),
                row_image: row.iter().filter(|&&x| x).count(),
                column_image: col.iter().filter(|&&x| x).count(),
                square_idempotent: t.square(sq) == sq,
            }
        })
        .collect()
}

struct Search<'a> {
    t1: &'a CayleyTable,
    t2: &'a CayleyTable,
    sig1: Vec<Signature>,
    sig2: Vec<Signature>,
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and every assignment it forces through products.
    /// On failure the partial map is left for the caller to roll back.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            match self.forward[x] {
                Some(fx) if fx == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.backward[y].is_some() || self.sig1[x] != self.sig2[y] {
                return false;
            }
            self.forward[x] = Some(y);
            self.backward[y] = Some(x);
            self.assigned.push(x);
            for i in 0..self.assigned.len() {
                let u = self.assigned[i];
                let fu = self.forward[u].unwrap();
                pending.push((self.t1.mul(x, u), self.t2.mul(y, fu)));
                pending.push((self.t1.mul(u, x), self.t2.mul(fu, y)));
            }
        }
        true
    }

    fn rollback(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().unwrap();
            let y = self.forward[x].take().unwrap();
            self.backward[y] = None;
        }
    }

    fn solve(&mut self) -> bool {
        let Some(x) = (0..self.t1.order()).find(|&x| self.forward[x].is_none()) else {
            return true;
        };
        for y in 0..self.t2.order() {
            if self.backward[y].is_some() || self.sig1[x] != self.sig2[y] {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.rollback(mark);
        }
        false
    }
}

/// A bijection `f` (as `f[a]`) with `f(ab) = f(a)f(b)`, if one exists.
pub fn are_isomorphic(t1: &CayleyTable, t2: &CayleyTable) -> Option<Vec<usize>> {
    if t1.order() != t2.order() {
        return None;
    }
    let sig1 = signatures(t1);
    let sig2 = signatures(t2);
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }
    let n = t1.order();
    let mut search = Search {
        t1,
        t2,
        sig1,
        sig2,
        forward: vec![None; n],
        backward: vec![None; n],
        assigned: Vec::with_capacity(n),
    };
    if !search.solve() {
        return None;
    }
    let map: Vec<usize> = search.forward.into_iter().map(Option::unwrap).collect();
    debug_assert!(t1.elements().all(|a| t1
        .elements()
        .all(|b| map[t1.mul(a, b)] == t2.mul(map[a], map[b]))));
    Some(map)
}
