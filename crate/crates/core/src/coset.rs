//! Coset enumeration for finitely presented commutative monoids.
//!
//! Nodes stand for elements, `next[n][s]` for `n + s`. Relations `u = v` are
//! imposed at every node in turn (HLT order); coincidences are merged through
//! a union-find and their edge tables folded together. Commutativity must be
//! part of the relation list.

use std::collections::VecDeque;

use crate::error::SearchError;

pub(crate) type Word = Vec<u32>;

const UNDEF: u32 = u32::MAX;

pub(crate) struct Presentation {
    pub gens: usize,
    pub relations: Vec<(Word, Word)>,
}

/// A finished enumeration, nodes renumbered in breadth-first order from zero.
#[derive(Debug, Clone)]
pub(crate) struct CayleyTable {
    pub gens: usize,
    pub next: Vec<u32>,
    /// Shortest word reaching each node, generators non-decreasing.
    pub words: Vec<Word>,
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn step(&self, n: usize, s: usize) -> usize {
        self.next[n * self.gens + s] as usize
    }

    pub fn trace(&self, mut n: usize, word: &[u32]) -> usize {
        for &s in word {
            n = self.step(n, s as usize);
        }
        n
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.trace(a, &self.words[b])
    }
}

struct Enumerator {
    k: usize,
    next: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
    total_cap: usize,
    pending: VecDeque<(u32, u32)>,
}

impl Enumerator {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn new_node(&mut self) -> Result<u32, SearchError> {
        if self.live >= self.cap || self.parent.len() >= self.total_cap {
            return Err(SearchError::TensorOverflow {
                cap: self.cap,
                reached: self.live + 1,
            });
        }
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.next.extend(std::iter::repeat_n(UNDEF, self.k));
        self.live += 1;
        Ok(id)
    }

    fn step(&mut self, n: u32, s: u32) -> Result<u32, SearchError> {
        let n = self.find(n);
        let slot = n as usize * self.k + s as usize;
        match self.next[slot] {
            UNDEF => {
                let m = self.new_node()?;
                self.next[slot] = m;
                Ok(m)
            }
            t => Ok(self.find(t)),
        }
    }

    fn trace(&mut self, mut n: u32, word: &[u32]) -> Result<u32, SearchError> {
        for &s in word {
            n = self.step(n, s)?;
        }
        Ok(n)
    }

    fn coincide(&mut self, a: u32, b: u32) {
        self.pending.push_back((a, b));
        while let Some((a, b)) = self.pending.pop_front() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop as usize] = keep;
            self.live -= 1;
            for s in 0..self.k {
                let d = self.next[drop as usize * self.k + s];
                if d == UNDEF {
                    continue;
                }
                let slot = keep as usize * self.k + s;
                match self.next[slot] {
                    UNDEF => self.next[slot] = d,
                    e => self.pending.push_back((e, d)),
                }
            }
        }
    }
}

/// Enumerates the monoid, failing once more than `cap` live nodes coexist.
pub(crate) fn enumerate(p: &Presentation, cap: usize) -> Result<CayleyTable, SearchError> {
    let k = p.gens;
    let mut e = Enumerator {
        k,
        next: Vec::new(),
        parent: Vec::new(),
        live: 0,
        cap: cap.max(1),
        total_cap: cap.max(1).saturating_mul(64),
        pending: VecDeque::new(),
    };
    e.new_node()?;
    let mut i = 0u32;
    while (i as usize) < e.parent.len() {
        if e.find(i) != i {
            i += 1;
            continue;
        }
        for (u, v) in &p.relations {
            if e.find(i) != i {
                break;
            }
            let a = e.trace(i, u)?;
            let b = e.trace(i, v)?;
            e.coincide(a, b);
        }
        if e.find(i) == i {
            for s in 0..k as u32 {
                e.step(i, s)?;
            }
        }
        i += 1;
    }

    // Canonical renumbering: breadth-first from zero, generators in order.
    let root = e.find(0);
    let mut id = vec![UNDEF; e.parent.len()];
    let mut order = vec![root];
    let mut words: Vec<Word> = vec![Vec::new()];
    id[root as usize] = 0;
    let mut head = 0;
    while head < order.len() {
        let n = order[head];
        // Only extend by generators ≥ the last one used, so words stay sorted;
        // commutativity makes every node reachable this way.
        let last = words[head].last().copied().unwrap_or(0);
        for s in last..k as u32 {
            let t = e.find(e.next[n as usize * k + s as usize]);
            if id[t as usize] == UNDEF {
                id[t as usize] = order.len() as u32;
                order.push(t);
                let mut w = words[head].clone();
                w.push(s);
                words.push(w);
            }
        }
        head += 1;
    }
    // Nodes reached only through unsorted paths (not expected) are picked up here.
    head = 0;
    while head < order.len() {
        let n = order[head];
        for s in 0..k as u32 {
            let t = e.find(e.next[n as usize * k + s as usize]);
            if id[t as usize] == UNDEF {
                id[t as usize] = order.len() as u32;
                order.push(t);
                let mut w = words[head].clone();
                w.push(s);
                w.sort_unstable();
                words.push(w);
            }
        }
        head += 1;
    }
    let mut next = vec![0u32; order.len() * k];
    for (new, &old) in order.iter().enumerate() {
        for s in 0..k {
            let t = e.find(e.next[old as usize * k + s]);
            next[new * k + s] = id[t as usize];
        }
    }
    Ok(CayleyTable { gens: k, next, words })
}

/// The relations `s t = t s` for all generator pairs.
pub(crate) fn commutation(gens: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for s in 0..gens as u32 {
        for t in s + 1..gens as u32 {
            out.push((vec![s, t], vec![t, s]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_monoid_with_idempotent_tail() {
        // x^3 = x^2: elements 0, x, 2x
        let p = Presentation {
            gens: 1,
            relations: vec![(vec![0, 0, 0], vec![0, 0])],
        };
        let t = enumerate(&p, 100).unwrap();
        assert_eq!(t.size(), 3);
        assert_eq!(t.words, vec![vec![], vec![0], vec![0, 0]]);
        assert_eq!(t.add(2, 1), 2);
    }

    #[test]
    fn boolean_lattice_on_two_generators() {
        let mut relations = commutation(2);
        relations.push((vec![0, 0], vec![0]));
        relations.push((vec![1, 1], vec![1]));
        let t = enumerate(&Presentation { gens: 2, relations }, 100).unwrap();
        assert_eq!(t.size(), 4);
        assert_eq!(t.words[3], vec![0, 1]);
        assert_eq!(t.add(1, 2), 3);
        assert_eq!(t.add(3, 3), 3);
    }

    #[test]
    fn infinite_monoid_overflows() {
        let p = Presentation {
            gens: 1,
            relations: Vec::new(),
        };
        assert!(matches!(
            enumerate(&p, 50),
            Err(SearchError::TensorOverflow { cap: 50, .. })
        ));
    }
}
