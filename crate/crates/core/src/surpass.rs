//! Surpassing relations: partial pre-orders compatible with the triple
//! structure, and the canonical relation generated by quasi-zeros.

use crate::carrier::{quasi_zero_flags, Carrier, ScalarAction};
use crate::error::StructureError;
use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::Elem;

/// Boolean relation table; `holds(a, c)` reads `a ≼ c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurpassRelation {
    n: usize,
    rel: Vec<bool>,
}

impl SurpassRelation {
    pub fn from_table(n: usize, rel: Vec<bool>) -> Result<Self, StructureError> {
        if rel.len() != n * n {
            return Err(StructureError::Shape {
                what: "surpass".into(),
                expected: n * n,
                found: rel.len(),
            });
        }
        Ok(SurpassRelation { n, rel })
    }

    pub fn from_pairs(n: usize, pairs: &[(Elem, Elem)]) -> Result<Self, StructureError> {
        let mut rel = vec![false; n * n];
        for &(a, c) in pairs {
            if a >= n || c >= n {
                return Err(StructureError::OutOfRange {
                    what: "surpass".into(),
                    index: a.max(c),
                    size: n,
                });
            }
            rel[a * n + c] = true;
        }
        Ok(SurpassRelation { n, rel })
    }

    pub fn from_fn(n: usize, f: impl Fn(Elem, Elem) -> bool) -> Self {
        SurpassRelation {
            n,
            rel: (0..n * n).map(|i| f(i / n, i % n)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |a, c| a == c)
    }

    pub fn full(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a ≼ c`.
    #[inline]
    pub fn holds(&self, a: Elem, c: Elem) -> bool {
        self.rel[a * self.n + c]
    }

    /// `c ≽ a`.
    #[inline]
    pub fn surpasses(&self, c: Elem, a: Elem) -> bool {
        self.holds(a, c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |a, c| self.holds(c, a))
    }

    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        (0..self.n * self.n)
            .filter(|&i| self.rel[i])
            .map(|i| (i / self.n, i % self.n))
            .collect()
    }

    /// `{b : b ≽ 0}`, the stand-in for zero in kernel-style definitions.
    pub fn null_elements(&self, zero: Elem) -> Vec<Elem> {
        (0..self.n).filter(|&b| self.holds(zero, b)).collect()
    }

    /// Upper set `{c : a ≼ c}`.
    pub fn above(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).filter(move |&c| self.holds(a, c))
    }
}

/// `a ≼∘ c` iff `a + b° = c` for some `b`; computed on any carrier with a negation.
pub fn circ_relation<C: Carrier + ?Sized>(c: &C, neg: &NegationMap) -> SurpassRelation {
    let n = c.size();
    let qz = quasi_zero_flags(c, neg);
    let mut rel = vec![false; n * n];
    for a in 0..n {
        for q in (0..n).filter(|&q| qz[q]) {
            rel[a * n + c.plus(a, q)] = true;
        }
    }
    SurpassRelation { n, rel }
}

/// Checks the surpassing-relation axioms (pre-order, (i)–(v)) and, if
/// requested, the stronger tangible variant, appending to `report`.
pub(crate) fn check_surpass_axioms<C: Carrier + ?Sized>(
    c: &C,
    neg: &NegationMap,
    r: &SurpassRelation,
    actions: &[ScalarAction<'_>],
    t_variant: bool,
    report: &mut ValidationReport,
) {
    let n = c.size();
    let nm = |e: Elem| c.label(e).to_string();
    if r.size() != n {
        report
            .check("surpass.shape", "relation is over the carrier")
            .fail(|| Witness::new(Vec::<String>::new(), format!("relation has size {}, carrier {n}", r.size())));
        return;
    }
    let els = 0..n;

    let chk = report.check("surpass.reflexive", "b ≼ b");
    for b in els.clone() {
        chk.require(r.holds(b, b), || Witness::new([nm(b)], "not reflexive"));
    }
    let chk = report.check("surpass.transitive", "a ≼ b ≼ c implies a ≼ c");
    for a in els.clone() {
        for b in r.above(a) {
            for e in r.above(b) {
                chk.require(r.holds(a, e), || {
                    Witness::new([nm(a), nm(b), nm(e)], "not transitive")
                });
            }
        }
    }
    let qz = quasi_zero_flags(c, neg);
    let chk = report.check("surpass.i", "0 ≼ c° for every c");
    for q in els.clone().filter(|&q| qz[q]) {
        chk.require(r.holds(c.zero(), q), || {
            Witness::new([nm(q)], format!("0 ⋠ {}", nm(q)))
        });
    }
    let chk = report.check("surpass.ii", "b₁ ≼ b₂ implies (-)b₁ ≼ (-)b₂");
    for a in els.clone() {
        for b in r.above(a) {
            chk.require(r.holds(neg.apply(a), neg.apply(b)), || {
                Witness::new([nm(a), nm(b)], "negation does not preserve ≼")
            });
        }
    }
    let chk = report.check("surpass.iii", "b₁ ≼ b₂, b₁' ≼ b₂' imply b₁+b₁' ≼ b₂+b₂'");
    for a in els.clone() {
        for b in r.above(a) {
            for a2 in els.clone() {
                for b2 in r.above(a2) {
                    chk.require(r.holds(c.plus(a, a2), c.plus(b, b2)), || {
                        Witness::new([nm(a), nm(b), nm(a2), nm(b2)], "≼ not additive")
                    });
                }
            }
        }
    }
    for act in actions {
        let chk = report.check(
            format!("surpass.iv.{}", act.side),
            format!("tangible a, b₁ ≼ b₂ imply a·b₁ ≼ a·b₂ ({} action)", act.side),
        );
        for &s in act.scalars {
            for a in els.clone() {
                for b in r.above(a) {
                    chk.require(r.holds((act.act)(s, a), (act.act)(s, b)), || {
                        Witness::new([(act.scalar_name)(s), nm(a), nm(b)], "scalar action breaks ≼")
                    });
                }
            }
        }
    }
    let chk = report.check("surpass.v", "tangibles a₀ ≼ a₁ implies a₀ = a₁");
    for a in els.clone().filter(|&a| c.is_tangible(a)) {
        for b in r.above(a).filter(|&b| c.is_tangible(b)) {
            chk.require(a == b, || {
                Witness::new([nm(a), nm(b)], format!("{} ≼ {} but they differ", nm(a), nm(b)))
            });
        }
    }
    if t_variant {
        let chk = report.check("surpass.tangible", "b ≼ a with a tangible implies b = a");
        for b in els.clone() {
            for a in r.above(b).filter(|&a| c.is_tangible(a)) {
                chk.require(a == b, || {
                    Witness::new([nm(b), nm(a)], format!("{} ≼ {} but they differ", nm(b), nm(a)))
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_round_trip_and_transpose() {
        let r = SurpassRelation::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 2)]).unwrap();
        assert!(r.holds(0, 2));
        assert!(!r.holds(2, 0));
        assert!(r.transpose().holds(2, 0));
        assert_eq!(r.pairs(), vec![(0, 0), (0, 2), (1, 1), (2, 2)]);
        assert_eq!(r.null_elements(0), vec![0, 2]);
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        assert!(SurpassRelation::from_pairs(2, &[(0, 5)]).is_err());
        assert!(SurpassRelation::from_table(2, vec![true; 3]).is_err());
    }
}
