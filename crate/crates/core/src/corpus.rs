//! Built-in structures used as fixtures throughout: Boolean, symmetrized
//! Boolean, truncated supertropical semirings and the sign hyperfield.

use crate::error::StructureError;
use crate::negation::NegationMap;
use crate::semiring::{Elem, FiniteSemiring};
use crate::surpass::SurpassRelation;
use crate::system::{SystemDef, Triple};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub system: SystemDef,
    pub provenance: String,
}

fn strings<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}

/// `{0, 1}` with `1 + 1 = 1`; tangibles `{1}`.
pub fn make_boolean() -> FiniteSemiring {
    FiniteSemiring::from_fn(strings(["0", "1"]), 0, 1, |a, b| a | b, |a, b| a & b, &[1])
        .expect("boolean tables are well formed")
}

/// Boolean semiring with the identity as negation. Not a triple: `1° = 1`.
pub fn boolean_identity_negation() -> Triple {
    Triple::new(make_boolean(), NegationMap::identity(2))
}

/// `{-inf, 0, .., k}` with max as addition and addition capped at `k` as
/// multiplication; tangibles are the finite values.
pub fn truncated_max_plus(k: usize) -> FiniteSemiring {
    let mut names = vec!["-inf".to_string()];
    names.extend((0..=k).map(|v| v.to_string()));
    // index 0 is -inf, index v+1 is the value v
    let mul = |a: Elem, b: Elem| {
        if a == 0 || b == 0 {
            0
        } else {
            ((a - 1) + (b - 1)).min(k) + 1
        }
    };
    let tangibles: Vec<Elem> = (1..=k + 1).collect();
    FiniteSemiring::from_fn(names, 0, 1, |a, b| a.max(b), mul, &tangibles)
        .expect("max-plus tables are well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StValue {
    NegInf,
    Layer { value: usize, ghost: bool },
}

/// Truncated supertropical semiring `ST(n)`.
///
/// Carrier `{-inf} ∪ {0..n} ∪ {0ᵛ..nᵛ}`. Addition takes the larger value;
/// equal values sum to the ghost. Multiplication adds values; a product whose
/// value passes `n` saturates to the top ghost `nᵛ`, which keeps
/// distributivity (a tangible cap would not: `1·(0+1) = 1` but
/// `1·0 + 1·1 = 1 + 1 = 1ᵛ` when `1·1` is capped to `1`). Negation is the
/// identity, tangibles are `{0..n}`, surpassing relation `≼∘`.
pub fn make_supertropical(n: usize) -> Result<SystemDef, StructureError> {
    if n < 1 {
        return Err(StructureError::Invalid(format!(
            "supertropical truncation must be at least 1, got {n}"
        )));
    }
    let mut values = vec![StValue::NegInf];
    values.extend((0..=n).map(|v| StValue::Layer { value: v, ghost: false }));
    values.extend((0..=n).map(|v| StValue::Layer { value: v, ghost: true }));
    let names: Vec<String> = values
        .iter()
        .map(|v| match v {
            StValue::NegInf => "-inf".to_string(),
            StValue::Layer { value, ghost: false } => value.to_string(),
            StValue::Layer { value, ghost: true } => format!("{value}v"),
        })
        .collect();
    let index_of = |v: StValue| values.iter().position(|&w| w == v).expect("value in carrier");
    let add = |a: Elem, b: Elem| match (values[a], values[b]) {
        (StValue::NegInf, _) => b,
        (_, StValue::NegInf) => a,
        (StValue::Layer { value: x, ghost: gx }, StValue::Layer { value: y, ghost: gy }) => {
            if x > y {
                a
            } else if y > x {
                b
            } else {
                let _ = (gx, gy);
                index_of(StValue::Layer { value: x, ghost: true })
            }
        }
    };
    let mul = |a: Elem, b: Elem| match (values[a], values[b]) {
        (StValue::NegInf, _) | (_, StValue::NegInf) => 0,
        (StValue::Layer { value: x, ghost: gx }, StValue::Layer { value: y, ghost: gy }) => {
            if x + y > n {
                index_of(StValue::Layer { value: n, ghost: true })
            } else {
                index_of(StValue::Layer { value: x + y, ghost: gx || gy })
            }
        }
    };
    let tangibles: Vec<Elem> = (1..=n + 1).collect();
    let semiring = FiniteSemiring::from_fn(names, 0, 1, add, mul, &tangibles)?;
    let size = semiring.size();
    Ok(SystemDef::with_circ(
        Triple::new(semiring, NegationMap::identity(size)),
        true,
    ))
}

/// The symmetrized triple over `a`: pairs `(x, y)` with componentwise sum,
/// `(a,b)(c,d) = (ac+bd, ad+bc)`, the swap as negation and tangibles
/// `(T×{0}) ∪ ({0}×T)`.
pub fn symmetrize(a: &FiniteSemiring) -> SystemDef {
    let n = a.size();
    let pair = |x: Elem, y: Elem| x * n + y;
    let names: Vec<String> = (0..n * n)
        .map(|p| format!("({},{})", a.name(p / n), a.name(p % n)))
        .collect();
    let add = |p: Elem, q: Elem| pair(a.add(p / n, q / n), a.add(p % n, q % n));
    let mul = |p: Elem, q: Elem| {
        let (x, y, u, v) = (p / n, p % n, q / n, q % n);
        pair(
            a.add(a.mul(x, u), a.mul(y, v)),
            a.add(a.mul(x, v), a.mul(y, u)),
        )
    };
    let z = a.zero();
    let mut tangibles: Vec<Elem> = a
        .tangibles()
        .into_iter()
        .flat_map(|t| [pair(t, z), pair(z, t)])
        .collect();
    tangibles.sort_unstable();
    tangibles.dedup();
    let semiring = FiniteSemiring::from_fn(names, pair(z, z), pair(a.one(), z), add, mul, &tangibles)
        .expect("symmetrized tables are well formed");
    let swap = NegationMap::new((0..n * n).map(|p| pair(p % n, p / n)).collect())
        .expect("swap is an involution");
    SystemDef::with_circ(Triple::new(semiring, swap), true)
}

/// Signs 0, +, - as bits of a subset.
const ZERO: u8 = 0b001;
const PLUS: u8 = 0b010;
const MINUS: u8 = 0b100;

fn sign_hypersum(s: u8, t: u8) -> u8 {
    match (s, t) {
        (ZERO, x) | (x, ZERO) => x,
        (PLUS, PLUS) => PLUS,
        (MINUS, MINUS) => MINUS,
        _ => ZERO | PLUS | MINUS,
    }
}

fn sign_product(s: u8, t: u8) -> u8 {
    match (s, t) {
        (ZERO, _) | (_, ZERO) => ZERO,
        (x, y) if x == y => PLUS,
        _ => MINUS,
    }
}

fn lift(set_a: u8, set_b: u8, op: fn(u8, u8) -> u8) -> u8 {
    let mut out = 0;
    for s in [ZERO, PLUS, MINUS] {
        for t in [ZERO, PLUS, MINUS] {
            if set_a & s != 0 && set_b & t != 0 {
                out |= op(s, t);
            }
        }
    }
    out
}

fn sign_set_name(set: u8) -> String {
    let parts: Vec<&str> = [(ZERO, "0"), (PLUS, "+"), (MINUS, "-")]
        .into_iter()
        .filter(|&(bit, _)| set & bit != 0)
        .map(|(_, s)| s)
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Subsets of the sign hyperfield reachable from the singletons under
/// elementwise hyperaddition, ordered by inclusion.
pub fn make_sign_hyperfield() -> SystemDef {
    let mut sets = vec![ZERO, PLUS, MINUS];
    let mut i = 0;
    while i < sets.len() {
        for j in 0..=i {
            let s = lift(sets[i], sets[j], sign_hypersum);
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
        i += 1;
    }
    let pos = |s: u8| sets.iter().position(|&x| x == s).expect("closed under the operations");
    let names: Vec<String> = sets.iter().map(|&s| sign_set_name(s)).collect();
    let add = |a: Elem, b: Elem| pos(lift(sets[a], sets[b], sign_hypersum));
    let mul = |a: Elem, b: Elem| pos(lift(sets[a], sets[b], sign_product));
    let semiring = FiniteSemiring::from_fn(names, pos(ZERO), pos(PLUS), add, mul, &[pos(PLUS), pos(MINUS)])
        .expect("sign tables are well formed");
    let flip = |s: u8| {
        let mut out = s & ZERO;
        if s & PLUS != 0 {
            out |= MINUS;
        }
        if s & MINUS != 0 {
            out |= PLUS;
        }
        out
    };
    let negation = NegationMap::new(sets.iter().map(|&s| pos(flip(s))).collect())
        .expect("sign flip is an involution");
    let n = sets.len();
    let inclusion = SurpassRelation::from_fn(n, |a, c| sets[a] & !sets[c] == 0);
    SystemDef::new(Triple::new(semiring, negation), inclusion, false)
}

/// The systems every downstream test draws on.
pub fn entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "symmetrized-boolean".into(),
            system: symmetrize(&make_boolean()),
            provenance: "symmetrized triple over the Boolean semiring, ≼∘".into(),
        },
        CorpusEntry {
            name: "supertropical-1".into(),
            system: make_supertropical(1).expect("n = 1 is valid"),
            provenance: "truncated supertropical semiring, identity negation, ≼∘".into(),
        },
        CorpusEntry {
            name: "supertropical-3".into(),
            system: make_supertropical(3).expect("n = 3 is valid"),
            provenance: "truncated supertropical semiring, identity negation, ≼∘".into(),
        },
        CorpusEntry {
            name: "sign-hyperfield".into(),
            system: make_sign_hyperfield(),
            provenance: "subsets of the sign hyperfield ordered by inclusion".into(),
        },
    ]
}

/// Looks up a corpus system by name; `supertropical-<n>` accepts any `n ≥ 1`.
pub fn system_by_name(name: &str) -> Option<SystemDef> {
    if let Some(n) = name.strip_prefix("supertropical-") {
        return n.parse().ok().and_then(|n| make_supertropical(n).ok());
    }
    entries().into_iter().find(|e| e.name == name).map(|e| e.system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::validate_semiring;
    use crate::system::{quasi_zeros, validate_surpass, validate_system};

    #[test]
    fn boolean_tables() {
        let b = make_boolean();
        assert_eq!(b.add(1, 1), 1);
        assert_eq!(b.mul(1, 1), 1);
        assert_eq!(b.mul(0, 1), 0);
    }

    #[test]
    fn supertropical_one_arithmetic() {
        let st = make_supertropical(1).unwrap();
        assert_eq!(st.size(), 5);
        assert_eq!(st.add(st.el("1"), st.el("1")), st.el("1v"));
        assert_eq!(st.add(st.el("0"), st.el("1")), st.el("1"));
        assert_eq!(st.add(st.el("1"), st.el("1v")), st.el("1v"));
        assert_eq!(st.add(st.el("1"), st.el("0v")), st.el("1"));
        assert_eq!(st.mul(st.el("1"), st.el("1")), st.el("1v"));
        assert_eq!(st.mul(st.el("0"), st.el("1")), st.el("1"));
        assert!(validate_system(&st).is_valid(), "{}", validate_system(&st));
    }

    #[test]
    fn supertropical_rejects_zero_truncation() {
        assert!(make_supertropical(0).is_err());
    }

    #[test]
    fn symmetrized_boolean_products_and_negation() {
        let s = symmetrize(&make_boolean());
        assert_eq!(s.mul(s.el("(1,0)"), s.el("(0,1)")), s.el("(0,1)"));
        assert_eq!(s.neg(s.el("(1,0)")), s.el("(0,1)"));
        let qz: Vec<&str> = quasi_zeros(&s.triple).iter().map(|&q| s.name(q)).collect();
        assert_eq!(qz, ["(0,0)", "(1,1)"]);
    }

    #[test]
    fn sign_hyperfield_sums() {
        let h = make_sign_hyperfield();
        assert_eq!(h.size(), 4);
        assert_eq!(h.name(h.add(h.el("{+}"), h.el("{-}"))), "{0,+,-}");
        assert_eq!(h.add(h.el("{+}"), h.el("{+}")), h.el("{+}"));
        let r = validate_surpass(&h.surpass, &h.triple, false);
        assert!(r.is_valid(), "{r}");
    }

    #[test]
    fn every_entry_is_a_system() {
        for e in entries() {
            let r = validate_system(&e.system);
            assert!(r.is_valid(), "{}: {r}", e.name);
        }
    }

    #[test]
    fn truncated_max_plus_is_a_semiring() {
        assert!(validate_semiring(&truncated_max_plus(2)).is_valid());
    }
}
