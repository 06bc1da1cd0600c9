//! Brute-force isomorphism search between finite module systems.

use crate::carrier::generating_set;
use crate::module::{same_ground, FiniteModuleSystem, Side};
use crate::semiring::Elem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    /// `map[x]` is the image of `x`.
    pub map: Vec<Elem>,
    /// Whether the bijection also carries tangibles exactly onto tangibles.
    /// Reported apart: the structural isomorphism is what the tensor
    /// identities assert, and saturating products can make the simple
    /// tensors a different set from the tangibles.
    pub tangibles_match: bool,
}

const UNSET: Elem = Elem::MAX;

struct Search<'a> {
    m1: &'a FiniteModuleSystem,
    m2: &'a FiniteModuleSystem,
    sides: Vec<(Side, usize)>,
    gens: Vec<Elem>,
    fwd: Vec<Elem>,
    back: Vec<Elem>,
    trail: Vec<Elem>,
}

impl Search<'_> {
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.fwd[x] != UNSET {
                if self.fwd[x] != y {
                    return false;
                }
                continue;
            }
            if self.back[y] != UNSET {
                return false;
            }
            self.fwd[x] = y;
            self.back[y] = x;
            self.trail.push(x);
            queue.push((self.m1.neg(x), self.m2.neg(y)));
            for &(side, scalars) in &self.sides {
                for a in 0..scalars {
                    queue.push((self.m1.act(side, a, x), self.m2.act(side, a, y)));
                }
            }
            for i in 0..self.trail.len() {
                let z = self.trail[i];
                queue.push((self.m1.add(x, z), self.m2.add(y, self.fwd[z])));
            }
        }
        true
    }

    fn undo(&mut self, to: usize) {
        while self.trail.len() > to {
            let x = self.trail.pop().expect("non-empty trail");
            self.back[self.fwd[x]] = UNSET;
            self.fwd[x] = UNSET;
        }
    }

    fn complete(&self) -> bool {
        let (m1, m2) = (self.m1, self.m2);
        m1.elements().all(|a| {
            m1.elements()
                .all(|b| m1.preceq(a, b) == m2.preceq(self.fwd[a], self.fwd[b]))
        })
    }

    fn dfs(&mut self, i: usize) -> bool {
        if i == self.gens.len() {
            return self.fwd.iter().all(|&y| y != UNSET) && self.complete();
        }
        let g = self.gens[i];
        if self.fwd[g] != UNSET {
            return self.dfs(i + 1);
        }
        for y in self.m2.elements() {
            let mark = self.trail.len();
            if self.assign(g, y) && self.dfs(i + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// A bijection preserving addition, negation, every scalar action (over the
/// same grounds) and the surpassing relation in both directions.
pub fn find_isomorphism(m1: &FiniteModuleSystem, m2: &FiniteModuleSystem) -> Option<Isomorphism> {
    if m1.size() != m2.size() {
        return None;
    }
    let mut sides = Vec::new();
    for side in [Side::Left, Side::Right] {
        match (m1.ground(side), m2.ground(side)) {
            (None, None) => {}
            (Some(a), Some(b)) if same_ground(a, b) => sides.push((side, a.size())),
            _ => return None,
        }
    }
    let n = m1.size();
    let mut s = Search {
        m1,
        m2,
        sides,
        gens: generating_set(m1),
        fwd: vec![UNSET; n],
        back: vec![UNSET; n],
        trail: Vec::new(),
    };
    if !s.assign(m1.zero(), m2.zero()) || !s.dfs(0) {
        return None;
    }
    let tangibles_match = m1.elements().all(|x| m1.is_tangible(x) == m2.is_tangible(s.fwd[x]));
    Some(Isomorphism {
        map: s.fwd,
        tangibles_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{make_boolean, symmetrize};
    use crate::module::direct_power;
    use std::sync::Arc;

    #[test]
    fn power_is_isomorphic_to_itself_but_not_to_the_base() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        let a2 = direct_power(&a, 2, 100).unwrap();
        let iso = find_isomorphism(&a2, &a2).unwrap();
        assert!(iso.tangibles_match);
        assert!(find_isomorphism(&a, &a2).is_none());
    }

    #[test]
    fn relation_must_be_preserved() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        let coarse = a
            .clone()
            .with_surpass(crate::surpass::SurpassRelation::full(a.size()))
            .unwrap();
        assert!(find_isomorphism(&a, &coarse).is_none());
    }
}
