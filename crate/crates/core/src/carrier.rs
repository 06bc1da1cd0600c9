//! Axiom checks shared by ground systems and module systems: anything with a
//! finite additive monoid, a tangible subset and a negation map.

use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::{Elem, FiniteSemiring};

/// Finite commutative monoid with named elements and a tangible subset.
pub trait Carrier {
    fn size(&self) -> usize;
    fn zero(&self) -> Elem;
    fn plus(&self, a: Elem, b: Elem) -> Elem;
    fn label(&self, e: Elem) -> &str;
    fn is_tangible(&self, e: Elem) -> bool;
}

impl Carrier for FiniteSemiring {
    fn size(&self) -> usize {
        FiniteSemiring::size(self)
    }
    fn zero(&self) -> Elem {
        FiniteSemiring::zero(self)
    }
    fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, b)
    }
    fn label(&self, e: Elem) -> &str {
        self.name(e)
    }
    fn is_tangible(&self, e: Elem) -> bool {
        FiniteSemiring::is_tangible(self, e)
    }
}

/// A scalar action restricted to some scalars, as `act(scalar, element)`
/// regardless of the side it acts from.
pub struct ScalarAction<'a> {
    pub side: &'static str,
    pub scalars: &'a [Elem],
    pub scalar_name: &'a dyn Fn(Elem) -> String,
    pub act: &'a dyn Fn(Elem, Elem) -> Elem,
}

/// `flags[q]` iff `q = b + (-)b` for some `b`.
pub fn quasi_zero_flags<C: Carrier + ?Sized>(c: &C, neg: &NegationMap) -> Vec<bool> {
    let mut flags = vec![false; c.size()];
    for b in 0..c.size() {
        flags[c.plus(b, neg.apply(b))] = true;
    }
    flags
}

pub fn quasi_zero_set<C: Carrier + ?Sized>(c: &C, neg: &NegationMap) -> Vec<Elem> {
    let flags = quasi_zero_flags(c, neg);
    (0..c.size()).filter(|&q| flags[q]).collect()
}

/// Elements reachable as finite sums of `gens` (including the empty sum).
pub fn additive_closure<C: Carrier + ?Sized>(c: &C, gens: &[Elem]) -> Vec<bool> {
    let mut reached = vec![false; c.size()];
    reached[c.zero()] = true;
    let mut frontier = vec![c.zero()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = c.plus(x, g);
            if !reached[y] {
                reached[y] = true;
                frontier.push(y);
            }
        }
    }
    reached
}

/// Commutative-monoid axioms for the additive table.
pub(crate) fn check_additive_monoid<C: Carrier + ?Sized>(c: &C, report: &mut ValidationReport) {
    let n = c.size();
    let nm = |e: Elem| c.label(e).to_string();
    let chk = report.check("add.assoc", "(a+b)+c = a+(b+c)");
    for a in 0..n {
        for b in 0..n {
            let ab = c.plus(a, b);
            for e in 0..n {
                chk.require(c.plus(ab, e) == c.plus(a, c.plus(b, e)), || {
                    Witness::new([nm(a), nm(b), nm(e)], "addition not associative")
                });
            }
        }
    }
    let chk = report.check("add.comm", "a+b = b+a");
    for a in 0..n {
        for b in 0..n {
            chk.require(c.plus(a, b) == c.plus(b, a), || {
                Witness::new([nm(a), nm(b)], "addition not commutative")
            });
        }
    }
    let chk = report.check("add.zero", "0+a = a");
    for a in 0..n {
        chk.require(c.plus(c.zero(), a) == a, || {
            Witness::new([nm(a)], "zero is not an additive identity")
        });
    }
}

/// Negation is an additive involution fixing zero and preserving tangibles,
/// compatible with each scalar action: `((-)a)b = (-)(ab) = a((-)b)`.
pub(crate) fn check_negation<C: Carrier + ?Sized>(
    c: &C,
    neg: &NegationMap,
    actions: &[NegatedAction<'_>],
    report: &mut ValidationReport,
) {
    let n = c.size();
    let nm = |e: Elem| c.label(e).to_string();
    if neg.len() != n {
        report
            .check("negation.shape", "negation is a permutation of the carrier")
            .fail(|| Witness::new(Vec::<String>::new(), format!("negation has size {}, carrier {n}", neg.len())));
        return;
    }
    let chk = report.check("negation.involution", "(-)(-)b = b");
    for b in 0..n {
        chk.require(neg.apply(neg.apply(b)) == b, || {
            Witness::new([nm(b)], "negation is not an involution")
        });
    }
    let chk = report.check("negation.zero", "(-)0 = 0");
    chk.require(neg.apply(c.zero()) == c.zero(), || {
        Witness::new([nm(c.zero())], "negation moves zero")
    });
    let chk = report.check("negation.additive", "(-)(a+b) = (-)a + (-)b");
    for a in 0..n {
        for b in 0..n {
            chk.require(neg.apply(c.plus(a, b)) == c.plus(neg.apply(a), neg.apply(b)), || {
                Witness::new([nm(a), nm(b)], "negation not additive")
            });
        }
    }
    let chk = report.check("negation.tangibles", "(-)T = T");
    for t in (0..n).filter(|&t| c.is_tangible(t)) {
        chk.require(c.is_tangible(neg.apply(t)), || {
            Witness::new([nm(t)], format!("(-){} = {} is not tangible", nm(t), nm(neg.apply(t))))
        });
    }
    for act in actions {
        let chk = report.check(
            format!("negation.action.{}", act.side),
            format!("((-)a)b = (-)(ab) = a((-)b) ({} action)", act.side),
        );
        for s in 0..act.scalar_count {
            for b in 0..n {
                let ab = (act.act)(s, b);
                let lhs = (act.act)((act.scalar_neg)(s), b);
                let rhs = (act.act)(s, neg.apply(b));
                chk.require(lhs == neg.apply(ab) && rhs == neg.apply(ab), || {
                    Witness::new([(act.scalar_name)(s), nm(b)], "negation does not commute with the action")
                });
            }
        }
    }
}

/// A scalar action together with the negation on the scalars.
pub struct NegatedAction<'a> {
    pub side: &'static str,
    pub scalar_count: usize,
    pub scalar_name: &'a dyn Fn(Elem) -> String,
    pub scalar_neg: &'a dyn Fn(Elem) -> Elem,
    pub act: &'a dyn Fn(Elem, Elem) -> Elem,
}

/// Tangibles avoid the quasi-zeros and, with zero, generate the carrier
/// additively.
pub(crate) fn check_triple_conditions<C: Carrier + ?Sized>(
    c: &C,
    neg: &NegationMap,
    report: &mut ValidationReport,
) {
    let n = c.size();
    let nm = |e: Elem| c.label(e).to_string();
    let qz = quasi_zero_flags(c, neg);
    let chk = report.check("disjoint", "T ∩ A° = ∅");
    for t in (0..n).filter(|&t| c.is_tangible(t)) {
        chk.require(!qz[t], || {
            Witness::new([nm(t)], format!("{} ∈ T ∩ A°", nm(t)))
        });
    }
    let tangibles: Vec<Elem> = (0..n).filter(|&t| c.is_tangible(t)).collect();
    let reached = additive_closure(c, &tangibles);
    let chk = report.check("generates", "T ∪ {0} generates (A,+)");
    for (b, &ok) in reached.iter().enumerate() {
        chk.require(ok, || {
            Witness::new([nm(b)], format!("{} is not a sum of tangibles", nm(b)))
        });
    }
    let chk = report.check("negated_quasi_zero", "(-)b° = b°");
    for b in 0..n {
        let q = c.plus(b, neg.apply(b));
        chk.require(neg.apply(q) == q, || {
            Witness::new([nm(b)], format!("(-)({})° differs from ({})°", nm(b), nm(b)))
        });
    }
}

/// An additive generating set: the tangibles, then greedily every element
/// not yet reached, in carrier order.
pub fn generating_set<C: Carrier + ?Sized>(c: &C) -> Vec<Elem> {
    let mut gens: Vec<Elem> = (0..c.size()).filter(|&e| c.is_tangible(e)).collect();
    let mut reached = additive_closure(c, &gens);
    while let Some(e) = reached.iter().position(|&r| !r) {
        gens.push(e);
        reached = additive_closure(c, &gens);
    }
    gens
}

/// Shortest decomposition of every element as a sum of `gens`, found
/// breadth-first with generators tried in order; `None` if unreachable.
pub fn decompositions<C: Carrier + ?Sized>(c: &C, gens: &[Elem]) -> Vec<Option<Vec<usize>>> {
    let mut out: Vec<Option<Vec<usize>>> = vec![None; c.size()];
    out[c.zero()] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([c.zero()]);
    while let Some(x) = queue.pop_front() {
        let word = out[x].clone().expect("queued elements are decomposed");
        for (i, &g) in gens.iter().enumerate() {
            let y = c.plus(x, g);
            if out[y].is_none() {
                let mut w = word.clone();
                w.push(i);
                out[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    out
}
