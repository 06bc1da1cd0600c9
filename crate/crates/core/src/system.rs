//! Triples (semiring, tangibles, negation) and systems (a triple with a
//! surpassing relation that is uniquely negated).

use crate::carrier::{
    check_negation, check_triple_conditions, quasi_zero_set, NegatedAction, ScalarAction,
};
use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::{validate_semiring_into, Elem, FiniteSemiring};
use crate::surpass::{check_surpass_axioms, circ_relation, SurpassRelation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub semiring: FiniteSemiring,
    pub negation: NegationMap,
}

impl Triple {
    pub fn new(semiring: FiniteSemiring, negation: NegationMap) -> Self {
        Triple { semiring, negation }
    }

    pub fn neg(&self, e: Elem) -> Elem {
        self.negation.apply(e)
    }

    /// `b° = b + (-)b`.
    pub fn circ(&self, b: Elem) -> Elem {
        self.semiring.add(b, self.negation.apply(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDef {
    pub triple: Triple,
    pub surpass: SurpassRelation,
    pub t_surpassing: bool,
}

impl SystemDef {
    pub fn new(triple: Triple, surpass: SurpassRelation, t_surpassing: bool) -> Self {
        SystemDef {
            triple,
            surpass,
            t_surpassing,
        }
    }

    /// System with the canonical relation `≼∘`.
    pub fn with_circ(triple: Triple, t_surpassing: bool) -> Self {
        let surpass = surpass_circ(&triple);
        SystemDef::new(triple, surpass, t_surpassing)
    }

    pub fn semiring(&self) -> &FiniteSemiring {
        &self.triple.semiring
    }

    pub fn negation(&self) -> &NegationMap {
        &self.triple.negation
    }

    pub fn size(&self) -> usize {
        self.triple.semiring.size()
    }

    pub fn zero(&self) -> Elem {
        self.triple.semiring.zero()
    }

    pub fn one(&self) -> Elem {
        self.triple.semiring.one()
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.triple.semiring.add(a, b)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.triple.semiring.mul(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.triple.negation.apply(a)
    }

    pub fn name(&self, a: Elem) -> &str {
        self.triple.semiring.name(a)
    }

    pub fn el(&self, name: &str) -> Elem {
        self.triple.semiring.el(name)
    }

    /// `a ≼ c`.
    pub fn preceq(&self, a: Elem, c: Elem) -> bool {
        self.surpass.holds(a, c)
    }

    pub fn tangibles(&self) -> Vec<Elem> {
        self.triple.semiring.tangibles()
    }

    pub fn is_tangible(&self, e: Elem) -> bool {
        self.triple.semiring.is_tangible(e)
    }
}

/// `{b + (-)b : b ∈ A}` in canonical order.
pub fn quasi_zeros(t: &Triple) -> Vec<Elem> {
    quasi_zero_set(&t.semiring, &t.negation)
}

/// The canonical surpassing relation: `a ≼∘ c` iff `a + b° = c` for some `b`.
pub fn surpass_circ(t: &Triple) -> SurpassRelation {
    circ_relation(&t.semiring, &t.negation)
}

fn negated_mul_action(t: &Triple) -> impl Fn(&mut ValidationReport) + '_ {
    move |report| {
        let s = &t.semiring;
        let name = |e: Elem| s.name(e).to_string();
        let neg = |e: Elem| t.negation.apply(e);
        let act = |a: Elem, b: Elem| s.mul(a, b);
        let actions = [NegatedAction {
            side: "mul",
            scalar_count: s.size(),
            scalar_name: &name,
            scalar_neg: &neg,
            act: &act,
        }];
        check_negation(s, &t.negation, &actions, report);
    }
}

/// Negation compatibility plus `(-)T = T`, `T ∩ A° = ∅` and additive
/// generation by `T ∪ {0}`.
pub fn validate_triple(t: &Triple) -> ValidationReport {
    let mut report = ValidationReport::new("triple");
    negated_mul_action(t)(&mut report);
    if report.get("negation.shape").is_none() {
        check_triple_conditions(&t.semiring, &t.negation, &mut report);
    }
    report
}

/// Axioms (i)–(v) of a surpassing relation on `t`; with `t_variant` also
/// the tangible-surpassing strengthening.
pub fn validate_surpass(r: &SurpassRelation, t: &Triple, t_variant: bool) -> ValidationReport {
    let mut report = ValidationReport::new("surpass");
    let s = &t.semiring;
    let tangibles = s.tangibles();
    let name = |e: Elem| s.name(e).to_string();
    let left = |a: Elem, b: Elem| s.mul(a, b);
    let right = |a: Elem, b: Elem| s.mul(b, a);
    let actions = [
        ScalarAction {
            side: "left",
            scalars: &tangibles,
            scalar_name: &name,
            act: &left,
        },
        ScalarAction {
            side: "right",
            scalars: &tangibles,
            scalar_name: &name,
            act: &right,
        },
    ];
    check_surpass_axioms(s, &t.negation, r, &actions, t_variant, &mut report);
    report
}

/// Tangibles `b` with `0 ≼ a + b`, the candidates for the negative of `a`.
pub fn negation_partners(s: &SystemDef, a: Elem) -> Vec<Elem> {
    let z = s.zero();
    s.tangibles()
        .into_iter()
        .filter(|&b| s.preceq(z, s.add(a, b)))
        .collect()
}

fn check_uniquely_negated(s: &SystemDef, report: &mut ValidationReport) {
    let nm = |e: Elem| s.name(e).to_string();
    let chk = report.check(
        "uniquely_negated",
        "each tangible a has exactly one tangible b with 0 ≼ a+b, namely (-)a",
    );
    for a in s.tangibles() {
        let partners = negation_partners(s, a);
        chk.require(partners == [s.neg(a)], || {
            let found: Vec<String> = partners.iter().map(|&b| nm(b)).collect();
            Witness::new(
                [nm(a)],
                format!("partners {{{}}}, expected {{{}}}", found.join(", "), nm(s.neg(a))),
            )
        });
    }
}

/// The weaker uniqueness condition: exactly one tangible `b` with
/// `a + b ∈ A°`. Reported separately; the `0 ≼ a+b` version is the one
/// [`validate_system`] enforces.
pub fn validate_uniquely_negated_weak(t: &Triple) -> ValidationReport {
    let mut report = ValidationReport::new("uniquely negated (quasi-zero membership)");
    let s = &t.semiring;
    let qz = crate::carrier::quasi_zero_flags(s, &t.negation);
    let nm = |e: Elem| s.name(e).to_string();
    let chk = report.check(
        "uniquely_negated.weak",
        "each tangible a has exactly one tangible b with a+b ∈ A°",
    );
    for a in s.tangibles() {
        let partners: Vec<Elem> = s.tangibles().into_iter().filter(|&b| qz[s.add(a, b)]).collect();
        chk.require(partners == [t.neg(a)], || {
            Witness::new([nm(a)], format!("{} partners", partners.len()))
        });
    }
    report
}

/// Full system check: semiring axioms, triple conditions, surpassing
/// relation axioms and unique negation.
pub fn validate_system(s: &SystemDef) -> ValidationReport {
    let mut report = ValidationReport::new("system");
    let mut semiring = ValidationReport::new("");
    validate_semiring_into(s.semiring(), &mut semiring);
    report.absorb("semiring", semiring);
    report.absorb("triple", validate_triple(&s.triple));
    report.absorb("", validate_surpass(&s.surpass, &s.triple, s.t_surpassing));
    if s.surpass.size() == s.size() {
        check_uniquely_negated(s, &mut report);
    }
    report
}
