//! Table-driven finite semirings.

use std::collections::HashMap;

use crate::error::StructureError;
use crate::report::{ValidationReport, Witness};

/// Dense element index into a carrier. Canonical order is declaration order.
pub type Elem = usize;

/// Checks that `table` is `rows × cols` and every entry indexes `0..size`.
pub(crate) fn check_table(
    what: &str,
    table: &[Elem],
    rows: usize,
    cols: usize,
    size: usize,
) -> Result<(), StructureError> {
    if table.len() != rows * cols {
        return Err(StructureError::Shape {
            what: what.to_string(),
            expected: rows * cols,
            found: table.len(),
        });
    }
    if let Some(&bad) = table.iter().find(|&&e| e >= size) {
        return Err(StructureError::OutOfRange {
            what: what.to_string(),
            index: bad,
            size,
        });
    }
    Ok(())
}

pub(crate) fn check_index(what: &str, e: Elem, size: usize) -> Result<(), StructureError> {
    if e >= size {
        Err(StructureError::OutOfRange {
            what: what.to_string(),
            index: e,
            size,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn name_index(names: &[String]) -> Result<HashMap<String, Elem>, StructureError> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(StructureError::DuplicateName(n.clone()));
        }
    }
    Ok(index)
}

/// Carrier with addition and multiplication tables, zero, one and a
/// distinguished subset of tangible elements. Tables are row-major.
#[derive(Debug, Clone)]
pub struct FiniteSemiring {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    zero: Elem,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    tangible: Vec<bool>,
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.zero == other.zero
            && self.one == other.one
            && self.tangible == other.tangible
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteSemiring {}

impl FiniteSemiring {
    pub fn new(
        names: Vec<String>,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        tangibles: &[Elem],
    ) -> Result<Self, StructureError> {
        let n = names.len();
        if n == 0 {
            return Err(StructureError::Invalid("empty carrier".into()));
        }
        let index = name_index(&names)?;
        check_index("zero", zero, n)?;
        check_index("one", one, n)?;
        check_table("add", &add, n, n, n)?;
        check_table("mul", &mul, n, n, n)?;
        let mut tangible = vec![false; n];
        for &t in tangibles {
            check_index("tangibles", t, n)?;
            tangible[t] = true;
        }
        Ok(FiniteSemiring {
            names,
            index,
            zero,
            one,
            add,
            mul,
            tangible,
        })
    }

    /// Tabulates the operations from closures over indices.
    pub fn from_fn(
        names: Vec<String>,
        zero: Elem,
        one: Elem,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        tangibles: &[Elem],
    ) -> Result<Self, StructureError> {
        let n = names.len();
        let add = (0..n * n).map(|i| add(i / n, i % n)).collect();
        let mul = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        Self::new(names, zero, one, add, mul, tangibles)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.names.len()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.names.len() + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.names.len() + b]
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.index.get(name).copied()
    }

    /// Looks up a name, panicking on typos; meant for fixtures and tests.
    pub fn el(&self, name: &str) -> Elem {
        self.index_of(name)
            .unwrap_or_else(|| panic!("no element named {name:?}"))
    }

    pub fn is_tangible(&self, e: Elem) -> bool {
        self.tangible[e]
    }

    pub fn tangible_flags(&self) -> &[bool] {
        &self.tangible
    }

    pub fn tangibles(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.tangible[e]).collect()
    }

    /// Tangibles together with zero.
    pub fn tangibles_or_zero(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&e| self.tangible[e] || e == self.zero)
            .collect()
    }

    pub fn with_tangibles(&self, tangibles: &[Elem]) -> Result<Self, StructureError> {
        Self::new(
            self.names.clone(),
            self.zero,
            self.one,
            self.add.clone(),
            self.mul.clone(),
            tangibles,
        )
    }

    pub fn is_additively_idempotent(&self) -> bool {
        self.elements().all(|a| self.add(a, a) == a)
    }
}

/// Exhaustive check of the semiring axioms: commutative additive monoid,
/// multiplicative monoid, absorbing zero, both distributive laws.
pub fn validate_semiring(s: &FiniteSemiring) -> ValidationReport {
    let mut report = ValidationReport::new("semiring");
    validate_semiring_into(s, &mut report);
    report
}

pub(crate) fn validate_semiring_into(s: &FiniteSemiring, report: &mut ValidationReport) {
    let els = s.elements();
    let nm = |e: Elem| s.name(e).to_string();
    let (z, one) = (s.zero(), s.one());

    let c = report.check("add.assoc", "(a+b)+c = a+(b+c)");
    for a in els.clone() {
        for b in els.clone() {
            let ab = s.add(a, b);
            for e in els.clone() {
                c.require(s.add(ab, e) == s.add(a, s.add(b, e)), || {
                    Witness::new([nm(a), nm(b), nm(e)], "addition not associative")
                });
            }
        }
    }
    let c = report.check("add.comm", "a+b = b+a");
    for a in els.clone() {
        for b in els.clone() {
            c.require(s.add(a, b) == s.add(b, a), || {
                Witness::new([nm(a), nm(b)], "addition not commutative")
            });
        }
    }
    let c = report.check("add.zero", "0+a = a");
    for a in els.clone() {
        c.require(s.add(z, a) == a && s.add(a, z) == a, || {
            Witness::new([nm(a)], "zero is not an additive identity")
        });
    }
    let c = report.check("mul.assoc", "(ab)c = a(bc)");
    for a in els.clone() {
        for b in els.clone() {
            let ab = s.mul(a, b);
            for e in els.clone() {
                c.require(s.mul(ab, e) == s.mul(a, s.mul(b, e)), || {
                    Witness::new([nm(a), nm(b), nm(e)], "multiplication not associative")
                });
            }
        }
    }
    let c = report.check("mul.one", "1a = a1 = a");
    for a in els.clone() {
        c.require(s.mul(one, a) == a && s.mul(a, one) == a, || {
            Witness::new([nm(a)], "one is not a multiplicative identity")
        });
    }
    let c = report.check("mul.zero", "0a = a0 = 0");
    for a in els.clone() {
        c.require(s.mul(z, a) == z && s.mul(a, z) == z, || {
            Witness::new([nm(a)], "zero is not absorbing")
        });
    }
    let c = report.check("distrib.left", "a(b+c) = ab+ac");
    for a in els.clone() {
        for b in els.clone() {
            for e in els.clone() {
                c.require(s.mul(a, s.add(b, e)) == s.add(s.mul(a, b), s.mul(a, e)), || {
                    Witness::new([nm(a), nm(b), nm(e)], "left distributivity fails")
                });
            }
        }
    }
    let c = report.check("distrib.right", "(b+c)a = ba+ca");
    for a in els.clone() {
        for b in els.clone() {
            for e in els.clone() {
                c.require(s.mul(s.add(b, e), a) == s.add(s.mul(b, a), s.mul(e, a)), || {
                    Witness::new([nm(a), nm(b), nm(e)], "right distributivity fails")
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn boolean_is_valid() {
        let b = FiniteSemiring::from_fn(names(&["0", "1"]), 0, 1, |a, b| a | b, |a, b| a & b, &[1])
            .unwrap();
        assert!(validate_semiring(&b).is_valid());
    }

    #[test]
    fn planted_distributivity_failure_reports_first_witness() {
        // 1+1 = 2 saturating; 2·2 = 1 breaks 2(1+1) = 2·1 + 2·1.
        let add = |a: usize, b: usize| (a + b).min(2);
        let mul = |a: usize, b: usize| match (a, b) {
            (0, _) | (_, 0) => 0,
            (1, x) | (x, 1) => x,
            _ => 1,
        };
        let s = FiniteSemiring::from_fn(names(&["0", "1", "2"]), 0, 1, add, mul, &[1]).unwrap();
        let r = validate_semiring(&s);
        assert!(!r.is_valid());
        let w = r.get("distrib.left").unwrap().witness.clone().unwrap();
        assert_eq!(w.elements, vec!["2", "1", "1"]);
    }

    #[test]
    fn shape_errors_are_structural() {
        let err = FiniteSemiring::new(names(&["0", "1"]), 0, 1, vec![0, 1, 1], vec![0; 4], &[])
            .unwrap_err();
        assert!(matches!(err, StructureError::Shape { expected: 4, found: 3, .. }));
        let err = FiniteSemiring::new(names(&["0", "1"]), 0, 1, vec![0, 1, 1, 7], vec![0; 4], &[])
            .unwrap_err();
        assert!(matches!(err, StructureError::OutOfRange { index: 7, .. }));
        let err = FiniteSemiring::new(names(&["a", "a"]), 0, 1, vec![0; 4], vec![0; 4], &[])
            .unwrap_err();
        assert_eq!(err, StructureError::DuplicateName("a".into()));
    }
}
