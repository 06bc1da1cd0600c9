//! Finite module systems over ground systems: an additive monoid with left
//! and/or right scalar actions, tangibles, negation and a surpassing relation.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::carrier::{
    check_additive_monoid, check_negation, check_triple_conditions, quasi_zero_set, Carrier,
    NegatedAction, ScalarAction,
};
use crate::error::{SearchError, StructureError};
use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::{check_index, check_table, name_index, Elem};
use crate::surpass::{check_surpass_axioms, circ_relation, SurpassRelation};
use crate::system::SystemDef;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Grounds are shared between modules; equal content counts as the same ground.
pub fn same_ground(a: &Arc<SystemDef>, b: &Arc<SystemDef>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Scalar action table, stored scalar-major for both sides:
/// `table[a * |M| + x]` is `a·x` (left) or `x·a` (right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub ground: Arc<SystemDef>,
    table: Vec<Elem>,
}

impl Action {
    pub fn new(ground: Arc<SystemDef>, table: Vec<Elem>, module_size: usize) -> Result<Self, StructureError> {
        check_table("action", &table, ground.size(), module_size, module_size)?;
        Ok(Action { ground, table })
    }

    pub fn from_fn(ground: Arc<SystemDef>, module_size: usize, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let table = (0..ground.size() * module_size)
            .map(|i| f(i / module_size, i % module_size))
            .collect();
        Action { ground, table }
    }

    #[inline]
    fn get(&self, scalar: Elem, x: Elem, module_size: usize) -> Elem {
        self.table[scalar * module_size + x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModuleSystem {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    zero: Elem,
    add: Vec<Elem>,
    tangible: Vec<bool>,
    negation: NegationMap,
    surpass: SurpassRelation,
    left: Option<Action>,
    right: Option<Action>,
}

impl Carrier for FiniteModuleSystem {
    fn size(&self) -> usize {
        self.names.len()
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.names.len() + b]
    }
    fn label(&self, e: Elem) -> &str {
        &self.names[e]
    }
    fn is_tangible(&self, e: Elem) -> bool {
        self.tangible[e]
    }
}

/// Components of a module system before it is assembled.
#[derive(Debug, Clone)]
pub struct ModuleParts {
    pub names: Vec<String>,
    pub zero: Elem,
    pub add: Vec<Elem>,
    pub tangibles: Vec<Elem>,
    pub negation: NegationMap,
    /// `None` selects `≼∘`.
    pub surpass: Option<SurpassRelation>,
    pub left: Option<Action>,
    pub right: Option<Action>,
}

impl FiniteModuleSystem {
    pub fn new(parts: ModuleParts) -> Result<Self, StructureError> {
        let n = parts.names.len();
        if n == 0 {
            return Err(StructureError::Invalid("empty module carrier".into()));
        }
        let index = name_index(&parts.names)?;
        check_index("zero", parts.zero, n)?;
        check_table("add", &parts.add, n, n, n)?;
        if parts.negation.len() != n {
            return Err(StructureError::Shape {
                what: "negation".into(),
                expected: n,
                found: parts.negation.len(),
            });
        }
        let mut tangible = vec![false; n];
        for &t in &parts.tangibles {
            check_index("tangibles", t, n)?;
            tangible[t] = true;
        }
        for act in parts.left.iter().chain(parts.right.iter()) {
            check_table("action", &act.table, act.ground.size(), n, n)?;
        }
        let mut m = FiniteModuleSystem {
            names: parts.names,
            index,
            zero: parts.zero,
            add: parts.add,
            tangible,
            negation: parts.negation,
            surpass: SurpassRelation::identity(n),
            left: parts.left,
            right: parts.right,
        };
        m.surpass = match parts.surpass {
            Some(r) if r.size() == n => r,
            Some(r) => {
                return Err(StructureError::Shape {
                    what: "surpass".into(),
                    expected: n * n,
                    found: r.size() * r.size(),
                })
            }
            None => circ_relation(&m, &m.negation),
        };
        Ok(m)
    }

    /// The ground acting on itself from both sides, with its own relation.
    pub fn regular(ground: &Arc<SystemDef>) -> Self {
        let s = ground.semiring();
        let n = s.size();
        FiniteModuleSystem {
            names: s.names().to_vec(),
            index: name_index(s.names()).expect("semiring names are unique"),
            zero: s.zero(),
            add: s.add_table().to_vec(),
            tangible: s.tangible_flags().to_vec(),
            negation: ground.negation().clone(),
            surpass: ground.surpass.clone(),
            left: Some(Action::from_fn(ground.clone(), n, |a, x| s.mul(a, x))),
            right: Some(Action::from_fn(ground.clone(), n, |a, x| s.mul(x, a))),
        }
    }

    /// `{0}` with trivial actions from both sides.
    pub fn zero_module(ground: &Arc<SystemDef>) -> Self {
        FiniteModuleSystem {
            names: vec!["0".into()],
            index: name_index(&["0".to_string()]).expect("single name"),
            zero: 0,
            add: vec![0],
            tangible: vec![false],
            negation: NegationMap::identity(1),
            surpass: SurpassRelation::identity(1),
            left: Some(Action::from_fn(ground.clone(), 1, |_, _| 0)),
            right: Some(Action::from_fn(ground.clone(), 1, |_, _| 0)),
        }
    }

    /// The quasi-zeros of the ground as a submodule of the regular module.
    /// It has no tangibles, since tangibles avoid quasi-zeros.
    pub fn quasi_zero_submodule(ground: &Arc<SystemDef>) -> Result<Self, StructureError> {
        let regular = Self::regular(ground);
        let qz = quasi_zero_set(&regular, &regular.negation);
        regular.submodule(&qz, &[])
    }

    /// Restriction to `elements`, which must contain zero and be closed
    /// under addition, negation and both actions.
    pub fn submodule(&self, elements: &[Elem], tangibles: &[Elem]) -> Result<Self, StructureError> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        let pos: HashMap<Elem, Elem> = els.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let find = |e: Elem, what: &str| {
            pos.get(&e).copied().ok_or_else(|| {
                StructureError::Invalid(format!("{what} leaves the subset at {}", self.names[e]))
            })
        };
        let k = els.len();
        let mut add = Vec::with_capacity(k * k);
        for &a in &els {
            for &b in &els {
                add.push(find(self.plus(a, b), "addition")?);
            }
        }
        let negation = NegationMap::new(
            els.iter()
                .map(|&e| find(self.negation.apply(e), "negation"))
                .collect::<Result<_, _>>()?,
        )?;
        let restrict = |act: &Option<Action>| -> Result<Option<Action>, StructureError> {
            let Some(act) = act else { return Ok(None) };
            let mut table = Vec::with_capacity(act.ground.size() * k);
            for a in 0..act.ground.size() {
                for &x in &els {
                    table.push(find(act.get(a, x, self.size()), "scalar action")?);
                }
            }
            Ok(Some(Action { ground: act.ground.clone(), table }))
        };
        let surpass = SurpassRelation::from_fn(k, |i, j| self.surpass.holds(els[i], els[j]));
        FiniteModuleSystem::new(ModuleParts {
            names: els.iter().map(|&e| self.names[e].clone()).collect(),
            zero: find(self.zero, "zero")?,
            add,
            tangibles: tangibles.iter().map(|&t| find(t, "tangibles")).collect::<Result<_, _>>()?,
            negation,
            surpass: Some(surpass),
            left: restrict(&self.left)?,
            right: restrict(&self.right)?,
        })
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

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.names.len() + b]
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.negation.apply(a)
    }

    pub fn negation(&self) -> &NegationMap {
        &self.negation
    }

    pub fn surpass(&self) -> &SurpassRelation {
        &self.surpass
    }

    /// `a ≼ c`.
    pub fn preceq(&self, a: Elem, c: Elem) -> bool {
        self.surpass.holds(a, c)
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

    pub fn el(&self, name: &str) -> Elem {
        self.index_of(name)
            .unwrap_or_else(|| panic!("no module element named {name:?}"))
    }

    pub fn is_tangible(&self, e: Elem) -> bool {
        self.tangible[e]
    }

    pub fn tangibles(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.tangible[e]).collect()
    }

    pub fn action(&self, side: Side) -> Option<&Action> {
        match side {
            Side::Left => self.left.as_ref(),
            Side::Right => self.right.as_ref(),
        }
    }

    pub fn ground(&self, side: Side) -> Option<&Arc<SystemDef>> {
        self.action(side).map(|a| &a.ground)
    }

    /// `a·x` for the left action, `x·a` for the right one.
    #[inline]
    pub fn act(&self, side: Side, scalar: Elem, x: Elem) -> Elem {
        let act = self.action(side).expect("module has an action on this side");
        act.get(scalar, x, self.names.len())
    }

    pub fn quasi_zeros(&self) -> Vec<Elem> {
        quasi_zero_set(self, &self.negation)
    }

    pub fn with_surpass(mut self, surpass: SurpassRelation) -> Result<Self, StructureError> {
        if surpass.size() != self.size() {
            return Err(StructureError::Shape {
                what: "surpass".into(),
                expected: self.size(),
                found: surpass.size(),
            });
        }
        self.surpass = surpass;
        Ok(self)
    }

    pub fn without_action(mut self, side: Side) -> Self {
        match side {
            Side::Left => self.left = None,
            Side::Right => self.right = None,
        }
        self
    }

    pub fn with_action(mut self, side: Side, action: Action) -> Result<Self, StructureError> {
        check_table("action", &action.table, action.ground.size(), self.size(), self.size())?;
        match side {
            Side::Left => self.left = Some(action),
            Side::Right => self.right = Some(action),
        }
        Ok(self)
    }

    /// Takes the module apart, e.g. to patch a table and rebuild it.
    pub fn into_parts(self) -> ModuleParts {
        let tangibles = self.tangibles();
        ModuleParts {
            names: self.names,
            zero: self.zero,
            add: self.add,
            tangibles,
            negation: self.negation,
            surpass: Some(self.surpass),
            left: self.left,
            right: self.right,
        }
    }
}

/// Module-system axioms: additive commutative monoid, each action
/// distributive, associative and unital with absorbing zeros, negation
/// compatible with the actions, the bimodule law when both actions
/// are present, and the surpassing-relation axioms with tangible scalars.
pub fn validate_module(m: &FiniteModuleSystem) -> ValidationReport {
    let mut report = ValidationReport::new("module system");
    check_additive_monoid(m, &mut report);
    let nm = |e: Elem| m.name(e).to_string();
    let n = m.size();
    for side in [Side::Left, Side::Right] {
        let Some(act) = m.action(side) else { continue };
        let g = &act.ground;
        let s = side.as_str();
        let gn = |a: Elem| g.name(a).to_string();
        let apply = |a: Elem, x: Elem| m.act(side, a, x);
        let chk = report.check(format!("act.{s}.zero"), "a·0 = 0");
        for a in 0..g.size() {
            chk.require(apply(a, m.zero) == m.zero, || Witness::new([gn(a)], "a·0 ≠ 0"));
        }
        let chk = report.check(format!("act.{s}.zero_scalar"), "0·x = 0");
        for x in 0..n {
            chk.require(apply(g.zero(), x) == m.zero, || Witness::new([nm(x)], "0·x ≠ 0"));
        }
        let chk = report.check(format!("act.{s}.one"), "1·x = x");
        for x in 0..n {
            chk.require(apply(g.one(), x) == x, || Witness::new([nm(x)], "1·x ≠ x"));
        }
        let chk = report.check(format!("act.{s}.distrib"), "a(x+y) = ax+ay");
        for a in 0..g.size() {
            for x in 0..n {
                for y in 0..n {
                    chk.require(apply(a, m.add(x, y)) == m.add(apply(a, x), apply(a, y)), || {
                        Witness::new([gn(a), nm(x), nm(y)], "action does not distribute over the module sum")
                    });
                }
            }
        }
        let chk = report.check(format!("act.{s}.scalar_sum"), "(a+b)x = ax+bx");
        for a in 0..g.size() {
            for b in 0..g.size() {
                for x in 0..n {
                    chk.require(apply(g.add(a, b), x) == m.add(apply(a, x), apply(b, x)), || {
                        Witness::new([gn(a), gn(b), nm(x)], "action does not distribute over the scalar sum")
                    });
                }
            }
        }
        let chk = report.check(format!("act.{s}.assoc"), "scalar products act compositionally");
        for a in 0..g.size() {
            for b in 0..g.size() {
                // left: (ab)x = a(bx); right: x(ab) = (xa)b
                let prod = g.mul(a, b);
                for x in 0..n {
                    let ok = match side {
                        Side::Left => apply(prod, x) == apply(a, apply(b, x)),
                        Side::Right => apply(prod, x) == apply(b, apply(a, x)),
                    };
                    chk.require(ok, || Witness::new([gn(a), gn(b), nm(x)], "action not associative"));
                }
            }
        }
    }
    if let (Some(l), Some(r)) = (&m.left, &m.right) {
        let chk = report.check("bimodule", "(a·x)·b = a·(x·b)");
        for a in 0..l.ground.size() {
            for b in 0..r.ground.size() {
                for x in 0..n {
                    let lhs = m.act(Side::Right, b, m.act(Side::Left, a, x));
                    let rhs = m.act(Side::Left, a, m.act(Side::Right, b, x));
                    chk.require(lhs == rhs, || {
                        Witness::new(
                            [l.ground.name(a).to_string(), nm(x), r.ground.name(b).to_string()],
                            "actions do not commute",
                        )
                    });
                }
            }
        }
    }

    let left_name = |a: Elem| m.left.as_ref().map_or(String::new(), |l| l.ground.name(a).to_string());
    let right_name = |a: Elem| m.right.as_ref().map_or(String::new(), |r| r.ground.name(a).to_string());
    let left_neg = |a: Elem| m.left.as_ref().map_or(a, |l| l.ground.neg(a));
    let right_neg = |a: Elem| m.right.as_ref().map_or(a, |r| r.ground.neg(a));
    let left_act = |a: Elem, x: Elem| m.act(Side::Left, a, x);
    let right_act = |a: Elem, x: Elem| m.act(Side::Right, a, x);
    let mut negated = Vec::new();
    if let Some(l) = &m.left {
        negated.push(NegatedAction {
            side: "left",
            scalar_count: l.ground.size(),
            scalar_name: &left_name,
            scalar_neg: &left_neg,
            act: &left_act,
        });
    }
    if let Some(r) = &m.right {
        negated.push(NegatedAction {
            side: "right",
            scalar_count: r.ground.size(),
            scalar_name: &right_name,
            scalar_neg: &right_neg,
            act: &right_act,
        });
    }
    check_negation(m, &m.negation, &negated, &mut report);

    let left_t = m.left.as_ref().map(|l| l.ground.tangibles()).unwrap_or_default();
    let right_t = m.right.as_ref().map(|r| r.ground.tangibles()).unwrap_or_default();
    let mut scalar = Vec::new();
    if m.left.is_some() {
        scalar.push(ScalarAction {
            side: "left",
            scalars: &left_t,
            scalar_name: &left_name,
            act: &left_act,
        });
    }
    if m.right.is_some() {
        scalar.push(ScalarAction {
            side: "right",
            scalars: &right_t,
            scalar_name: &right_name,
            act: &right_act,
        });
    }
    check_surpass_axioms(m, &m.negation, &m.surpass, &scalar, false, &mut report);
    report
}

/// Conditions on the tangible set of a module: `T_M ∩ M° = ∅`, additive
/// generation by `T_M ∪ {0}` and closure `T·T_M ⊆ T_M` under each action.
///
/// Kept apart from [`validate_module`]: the quasi-zero submodule has no
/// tangibles at all, and under a saturating product (`1·1 = 1ᵛ` in ST(1))
/// even the regular module is not closed.
pub fn validate_module_triple(m: &FiniteModuleSystem) -> ValidationReport {
    let mut report = ValidationReport::new("module triple");
    check_triple_conditions(m, &m.negation, &mut report);
    let nm = |e: Elem| m.name(e).to_string();
    for side in [Side::Left, Side::Right] {
        let Some(act) = m.action(side) else { continue };
        let g = &act.ground;
        let s = side.as_str();
        let chk = report.check(format!("act.{s}.tangible"), "T·T_M ⊆ T_M");
        for a in g.tangibles() {
            for x in m.tangibles() {
                let ax = m.act(side, a, x);
                chk.require(m.is_tangible(ax), || {
                    Witness::new([g.name(a).to_string(), nm(x)], format!("product {} is not tangible", nm(ax)))
                });
            }
        }
    }
    report
}

/// Mixed-radix encoding of tuples over a carrier of size `base`.
pub(crate) fn decode(mut code: usize, base: usize, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % base;
        code /= base;
    }
    out
}

pub(crate) fn encode(coords: &[Elem], base: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * base + c)
}

/// `m^n` with componentwise structure. Tangibles are the tuples with exactly
/// one tangible coordinate and zeros elsewhere.
pub fn direct_power(
    m: &FiniteModuleSystem,
    n: usize,
    carrier_bound: usize,
) -> Result<FiniteModuleSystem, SearchError> {
    if n == 0 {
        return Err(SearchError::Precondition("direct power exponent must be positive".into()));
    }
    let base = m.size();
    let size = base
        .checked_pow(n as u32)
        .filter(|&s| s <= carrier_bound)
        .ok_or(SearchError::CarrierBound {
            size: base.saturating_pow(n as u32),
            bound: carrier_bound,
        })?;
    if n == 1 {
        return Ok(m.clone());
    }
    let tuples: Vec<Vec<Elem>> = (0..size).map(|c| decode(c, base, n)).collect();
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().map(|&e| m.name(e)).collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    let zip = |f: &dyn Fn(Elem, Elem) -> Elem, a: usize, b: usize| {
        let coords: Vec<Elem> = tuples[a].iter().zip(&tuples[b]).map(|(&x, &y)| f(x, y)).collect();
        encode(&coords, base)
    };
    let add = (0..size * size)
        .map(|i| zip(&|x, y| m.add(x, y), i / size, i % size))
        .collect();
    let negation = NegationMap::new(
        tuples
            .iter()
            .map(|t| encode(&t.iter().map(|&x| m.neg(x)).collect::<Vec<_>>(), base))
            .collect(),
    )
    .expect("componentwise involution");
    let tangibles = (0..size)
        .filter(|&c| {
            let t = &tuples[c];
            t.iter().filter(|&&x| x != m.zero()).count() == 1
                && t.iter().any(|&x| m.is_tangible(x))
        })
        .collect();
    let surpass = SurpassRelation::from_fn(size, |a, c| {
        tuples[a].iter().zip(&tuples[c]).all(|(&x, &y)| m.preceq(x, y))
    });
    let power_action = |side: Side| {
        m.action(side).map(|act| {
            Action::from_fn(act.ground.clone(), size, |a, c| {
                let coords: Vec<Elem> = tuples[c].iter().map(|&x| m.act(side, a, x)).collect();
                encode(&coords, base)
            })
        })
    };
    Ok(FiniteModuleSystem::new(ModuleParts {
        names,
        zero: encode(&vec![m.zero(); n], base),
        add,
        tangibles,
        negation,
        surpass: Some(surpass),
        left: power_action(Side::Left),
        right: power_action(Side::Right),
    })
    .expect("power of a well-formed module is well formed"))
}

/// Coordinates of an element of `direct_power(m, n)`.
pub fn power_coordinates(m: &FiniteModuleSystem, n: usize, code: Elem) -> Vec<Elem> {
    decode(code, m.size(), n)
}

pub fn power_element(m: &FiniteModuleSystem, coords: &[Elem]) -> Elem {
    encode(coords, m.size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{make_boolean, make_sign_hyperfield, make_supertropical, symmetrize};

    fn sym() -> Arc<SystemDef> {
        Arc::new(symmetrize(&make_boolean()))
    }

    #[test]
    fn regular_modules_validate() {
        for g in [sym(), Arc::new(make_sign_hyperfield())] {
            let r = validate_module(&FiniteModuleSystem::regular(&g));
            assert!(r.is_valid(), "{r}");
        }
    }

    #[test]
    fn supertropical_regular_module_only_misses_tangible_closure() {
        let g = Arc::new(make_supertropical(1).unwrap());
        assert!(validate_module(&FiniteModuleSystem::regular(&g)).is_valid());
        let r = validate_module_triple(&FiniteModuleSystem::regular(&g));
        let failed: Vec<&str> = r.failures().map(|c| c.axiom.as_str()).collect();
        assert_eq!(failed, ["act.left.tangible", "act.right.tangible"]);
    }

    #[test]
    fn power_of_symmetrized_boolean() {
        let g = sym();
        let a = FiniteModuleSystem::regular(&g);
        let a2 = direct_power(&a, 2, 1 << 16).unwrap();
        assert_eq!(a2.size(), 16);
        assert!(validate_module(&a2).is_valid());
        assert!(validate_module_triple(&a2).is_valid());
        let qz: Vec<Elem> = a2.quasi_zeros();
        let expected: Vec<Elem> = {
            let q = a.quasi_zeros();
            let mut v: Vec<Elem> = q
                .iter()
                .flat_map(|&x| q.iter().map(move |&y| (x, y)))
                .map(|(x, y)| power_element(&a, &[x, y]))
                .collect();
            v.sort_unstable();
            v
        };
        assert_eq!(qz, expected);
        assert_eq!(direct_power(&a, 1, 10).unwrap(), a);
        assert!(matches!(
            direct_power(&a, 3, 32),
            Err(SearchError::CarrierBound { size: 64, bound: 32 })
        ));
    }

    #[test]
    fn planted_distributivity_failure() {
        let g = sym();
        let a = FiniteModuleSystem::regular(&g);
        let mut parts = a.clone().into_parts();
        let n = a.size();
        let left = parts.left.take().unwrap();
        let mut table = left.table().to_vec();
        // (1,0)·(1,1) := (1,0) breaks (1,0)·((1,0)+(0,1)) = (1,0) + (0,1)
        let (s, x) = (g.el("(1,0)"), g.el("(1,1)"));
        table[s * n + x] = g.el("(1,0)");
        parts.left = Some(Action::new(g.clone(), table, n).unwrap());
        let planted = FiniteModuleSystem::new(parts).unwrap();
        let r = validate_module(&planted);
        let w = r.get("act.left.distrib").unwrap();
        assert!(!w.passed());
        assert_eq!(w.witness.as_ref().unwrap().elements[0], "(1,0)");
    }

    #[test]
    fn quasi_zero_submodule_of_supertropical() {
        let g = Arc::new(make_supertropical(1).unwrap());
        let q = FiniteModuleSystem::quasi_zero_submodule(&g).unwrap();
        assert_eq!(q.names(), ["-inf", "0v", "1v"]);
        assert!(q.tangibles().is_empty());
        assert!(validate_module(&q).is_valid());
    }
}
