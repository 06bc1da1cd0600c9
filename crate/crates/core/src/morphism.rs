//! Homomorphisms and ≼-morphisms of module systems: validation, exhaustive
//! enumeration by propagating backtracking, and the ≼-image predicates.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carrier::additive_closure;
use crate::error::{SearchError, StructureError};
use crate::module::{same_ground, FiniteModuleSystem, Side};
use crate::report::{ValidationReport, Witness};
use crate::semiring::{check_table, Elem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    /// `f(b₁ + b₂) = f(b₁) + f(b₂)`.
    Homomorphism,
    /// `f(b₁ + b₂) ≼' f(b₁) + f(b₂)`.
    PreceqMorphism,
}

impl MorphismKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MorphismKind::Homomorphism => "homomorphism",
            MorphismKind::PreceqMorphism => "preceq_morphism",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Morphism<'a> {
    pub source: &'a FiniteModuleSystem,
    pub target: &'a FiniteModuleSystem,
    pub map: Vec<Elem>,
    pub kind: MorphismKind,
    pub side: Side,
}

impl<'a> Morphism<'a> {
    pub fn new(
        source: &'a FiniteModuleSystem,
        target: &'a FiniteModuleSystem,
        map: Vec<Elem>,
        kind: MorphismKind,
        side: Side,
    ) -> Result<Self, StructureError> {
        check_table("morphism", &map, 1, source.size(), target.size())?;
        Ok(Morphism { source, target, map, kind, side })
    }

    pub fn from_fn(
        source: &'a FiniteModuleSystem,
        target: &'a FiniteModuleSystem,
        kind: MorphismKind,
        side: Side,
        f: impl Fn(Elem) -> Elem,
    ) -> Self {
        let map = source.elements().map(f).collect();
        Morphism { source, target, map, kind, side }
    }

    pub fn identity(m: &'a FiniteModuleSystem, side: Side) -> Self {
        Self::from_fn(m, m, MorphismKind::Homomorphism, side, |x| x)
    }

    pub fn zero(source: &'a FiniteModuleSystem, target: &'a FiniteModuleSystem, side: Side) -> Self {
        Self::from_fn(source, target, MorphismKind::Homomorphism, side, |_| target.zero())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `next ∘ self`; a homomorphism only if both factors are.
    pub fn then<'b>(&self, next: &Morphism<'b>) -> Morphism<'b>
    where
        'a: 'b,
    {
        let kind = if self.kind == MorphismKind::Homomorphism && next.kind == MorphismKind::Homomorphism {
            MorphismKind::Homomorphism
        } else {
            MorphismKind::PreceqMorphism
        };
        Morphism {
            source: self.source,
            target: next.target,
            map: self.map.iter().map(|&y| next.map[y]).collect(),
            kind,
            side: self.side,
        }
    }

    /// Element-pair list `(x, f(x))` by name.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.source
            .elements()
            .map(|x| (self.source.name(x).to_string(), self.target.name(self.map[x]).to_string()))
            .collect()
    }
}

/// Tangible scalars through which both modules are acted on from `side`,
/// provided the grounds agree.
pub(crate) fn shared_tangible_scalars(
    src: &FiniteModuleSystem,
    tgt: &FiniteModuleSystem,
    side: Side,
) -> Result<Vec<Elem>, SearchError> {
    match (src.ground(side), tgt.ground(side)) {
        (Some(a), Some(b)) if same_ground(a, b) => Ok(a.tangibles()),
        (Some(_), Some(_)) => Err(SearchError::Precondition(format!(
            "source and target have different {} grounds",
            side.as_str()
        ))),
        _ => Err(SearchError::Precondition(format!(
            "both modules need a {} action",
            side.as_str()
        ))),
    }
}

/// Checks `f(0) = 0`, `f((-)b) = (-)f(b)`, `f(ab) = a f(b)` for tangible `a`
/// and additivity of the declared kind.
pub fn validate_morphism(f: &Morphism<'_>) -> ValidationReport {
    let (src, tgt) = (f.source, f.target);
    let mut report = ValidationReport::new(format!("{} ({})", f.kind.as_str(), f.side.as_str()));
    let sn = |x: Elem| src.name(x).to_string();
    if f.map.len() != src.size() || f.map.iter().any(|&y| y >= tgt.size()) {
        report
            .check("shape", "map is a function from source to target")
            .fail(|| Witness::new(Vec::<String>::new(), "map does not fit source and target"));
        return report;
    }
    let chk = report.check("zero", "f(0) = 0");
    chk.require(f.apply(src.zero()) == tgt.zero(), || {
        Witness::new([sn(src.zero())], "zero not preserved")
    });
    let chk = report.check("negation", "f((-)b) = (-)f(b)");
    for x in src.elements() {
        chk.require(f.apply(src.neg(x)) == tgt.neg(f.apply(x)), || {
            Witness::new([sn(x)], "negation not preserved")
        });
    }
    match shared_tangible_scalars(src, tgt, f.side) {
        Ok(scalars) => {
            let g = src.ground(f.side).expect("checked above");
            let chk = report.check("scalar", "f(ab) = a f(b) for tangible a");
            for &a in &scalars {
                for x in src.elements() {
                    chk.require(f.apply(src.act(f.side, a, x)) == tgt.act(f.side, a, f.apply(x)), || {
                        Witness::new([g.name(a).to_string(), sn(x)], "scalar action not preserved")
                    });
                }
            }
        }
        Err(e) => {
            report
                .check("scalar", "f(ab) = a f(b) for tangible a")
                .fail(|| Witness::new(Vec::<String>::new(), e.to_string()));
        }
    }
    let (id, desc) = match f.kind {
        MorphismKind::Homomorphism => ("additive", "f(b₁+b₂) = f(b₁)+f(b₂)"),
        MorphismKind::PreceqMorphism => ("subadditive", "f(b₁+b₂) ≼ f(b₁)+f(b₂)"),
    };
    let chk = report.check(id, desc);
    for x in src.elements() {
        for y in src.elements() {
            let lhs = f.apply(src.add(x, y));
            let rhs = tgt.add(f.apply(x), f.apply(y));
            let ok = match f.kind {
                MorphismKind::Homomorphism => lhs == rhs,
                MorphismKind::PreceqMorphism => tgt.preceq(lhs, rhs),
            };
            chk.require(ok, || Witness::new([sn(x), sn(y)], format!("f(b₁+b₂) = {}", tgt.name(lhs))));
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of value assignments tried before giving up.
    pub node_bound: u64,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_bound: 1_000_000,
            parallel: true,
        }
    }
}

const UNSET: Elem = Elem::MAX;

struct Problem<'a> {
    src: &'a FiniteModuleSystem,
    tgt: &'a FiniteModuleSystem,
    side: Side,
    kind: MorphismKind,
    scalars: Vec<Elem>,
    /// Derive `f(x + y) = f(x) + f(y)` while searching.
    extend_additively: bool,
    branch: Vec<Elem>,
    /// `decompositions[x]` lists `(y, z)` with `y + z = x`.
    decompositions: Vec<Vec<(Elem, Elem)>>,
}

struct State {
    val: Vec<Elem>,
    trail: Vec<Elem>,
}

impl<'a> Problem<'a> {
    fn new(
        src: &'a FiniteModuleSystem,
        tgt: &'a FiniteModuleSystem,
        side: Side,
        kind: MorphismKind,
        extend_additively: bool,
        branch: Vec<Elem>,
    ) -> Result<Self, SearchError> {
        let scalars = shared_tangible_scalars(src, tgt, side)?;
        let mut decompositions = vec![Vec::new(); src.size()];
        for y in src.elements() {
            for z in y..src.size() {
                decompositions[src.add(y, z)].push((y, z));
            }
        }
        Ok(Problem {
            src,
            tgt,
            side,
            kind,
            scalars,
            extend_additively,
            branch,
            decompositions,
        })
    }

    fn related(&self, value: Elem, sum: Elem) -> bool {
        match self.kind {
            MorphismKind::Homomorphism => value == sum,
            MorphismKind::PreceqMorphism => self.tgt.preceq(value, sum),
        }
    }

    /// Assigns `f(x) = v` with everything it forces; on conflict the trail is
    /// left for the caller to unwind.
    fn assign(&self, st: &mut State, x: Elem, v: Elem) -> bool {
        let start = st.trail.len();
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            if st.val[x] != UNSET {
                if st.val[x] != v {
                    return false;
                }
                continue;
            }
            st.val[x] = v;
            st.trail.push(x);
            queue.push((self.src.neg(x), self.tgt.neg(v)));
            for &a in &self.scalars {
                queue.push((self.src.act(self.side, a, x), self.tgt.act(self.side, a, v)));
            }
            if self.extend_additively {
                for i in 0..st.trail.len() {
                    let y = st.trail[i];
                    queue.push((self.src.add(x, y), self.tgt.add(v, st.val[y])));
                }
            }
        }
        for i in start..st.trail.len() {
            let x = st.trail[i];
            let fx = st.val[x];
            for &y in &st.trail {
                let s = st.val[self.src.add(x, y)];
                if s != UNSET && !self.related(s, self.tgt.add(fx, st.val[y])) {
                    return false;
                }
            }
            for &(y, z) in &self.decompositions[x] {
                let (fy, fz) = (st.val[y], st.val[z]);
                if fy != UNSET && fz != UNSET && !self.related(fx, self.tgt.add(fy, fz)) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(st: &mut State, to: usize) {
        while st.trail.len() > to {
            let x = st.trail.pop().expect("non-empty trail");
            st.val[x] = UNSET;
        }
    }

    fn initial(&self) -> Option<State> {
        let mut st = State {
            val: vec![UNSET; self.src.size()],
            trail: Vec::new(),
        };
        self.assign(&mut st, self.src.zero(), self.tgt.zero()).then_some(st)
    }

    fn next_branch(&self, st: &State, from: usize) -> Option<usize> {
        (from..self.branch.len()).find(|&i| st.val[self.branch[i]] == UNSET)
    }

    fn dfs(
        &self,
        st: &mut State,
        from: usize,
        nodes: &AtomicU64,
        bound: u64,
        abort: &AtomicBool,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if abort.load(Ordering::Relaxed) {
            return;
        }
        let Some(i) = self.next_branch(st, from) else {
            if st.val.iter().all(|&v| v != UNSET) {
                out.push(st.val.clone());
            }
            return;
        };
        let x = self.branch[i];
        for v in self.tgt.elements() {
            if nodes.fetch_add(1, Ordering::Relaxed) >= bound {
                abort.store(true, Ordering::Relaxed);
                return;
            }
            let mark = st.trail.len();
            if self.assign(st, x, v) {
                self.dfs(st, i + 1, nodes, bound, abort, out);
            }
            Self::undo(st, mark);
        }
    }

    fn run(&self, opts: SearchOptions) -> Result<Vec<Vec<Elem>>, SearchError> {
        let Some(mut st) = self.initial() else {
            return Ok(Vec::new());
        };
        let nodes = AtomicU64::new(0);
        let abort = AtomicBool::new(false);
        let mut out = Vec::new();
        match self.next_branch(&st, 0) {
            Some(i) if opts.parallel => {
                let x = self.branch[i];
                let parts: Vec<Vec<Vec<Elem>>> = self
                    .tgt
                    .elements()
                    .into_par_iter()
                    .map(|v| {
                        let mut local = State {
                            val: st.val.clone(),
                            trail: st.trail.clone(),
                        };
                        let mut found = Vec::new();
                        if nodes.fetch_add(1, Ordering::Relaxed) >= opts.node_bound {
                            abort.store(true, Ordering::Relaxed);
                        } else if self.assign(&mut local, x, v) {
                            self.dfs(&mut local, i + 1, &nodes, opts.node_bound, &abort, &mut found);
                        }
                        found
                    })
                    .collect();
                out.extend(parts.into_iter().flatten());
            }
            _ => self.dfs(&mut st, 0, &nodes, opts.node_bound, &abort, &mut out),
        }
        if abort.load(Ordering::Relaxed) {
            return Err(SearchError::EnumerationBound { bound: opts.node_bound });
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Branching order: tangibles first, then by number of summands needed.
fn branch_order(m: &FiniteModuleSystem) -> Vec<Elem> {
    let mut level = vec![usize::MAX; m.size()];
    level[m.zero()] = 0;
    let tangibles = m.tangibles();
    let mut frontier = vec![m.zero()];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &x in &frontier {
            for &t in &tangibles {
                let y = m.add(x, t);
                if level[y] == usize::MAX {
                    level[y] = depth;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut order: Vec<Elem> = m.elements().collect();
    order.sort_by_key(|&x| (level[x], x));
    order
}

/// All maps `src → tgt` of the requested kind, in lexicographic order of
/// their value tables.
pub fn enumerate_morphisms<'a>(
    src: &'a FiniteModuleSystem,
    tgt: &'a FiniteModuleSystem,
    side: Side,
    kind: MorphismKind,
    opts: SearchOptions,
) -> Result<Vec<Morphism<'a>>, SearchError> {
    let problem = Problem::new(
        src,
        tgt,
        side,
        kind,
        kind == MorphismKind::Homomorphism,
        branch_order(src),
    )?;
    Ok(problem
        .run(opts)?
        .into_iter()
        .map(|map| Morphism { source: src, target: tgt, map, kind, side })
        .collect())
}

/// Maps determined by their values on `generators` and extended additively.
///
/// These are exactly the homomorphisms when `generators` additively generate
/// `src`; for `PreceqMorphism` the result is the sound subset of ≼-morphisms
/// that happen to be additive.
pub fn enumerate_morphisms_on_generators<'a>(
    src: &'a FiniteModuleSystem,
    tgt: &'a FiniteModuleSystem,
    side: Side,
    kind: MorphismKind,
    generators: &[Elem],
    opts: SearchOptions,
) -> Result<Vec<Morphism<'a>>, SearchError> {
    if let Some(&g) = generators.iter().find(|&&g| g >= src.size()) {
        return Err(SearchError::Precondition(format!("generator index {g} out of range")));
    }
    if let Some(missed) = additive_closure(src, generators).iter().position(|&r| !r) {
        return Err(SearchError::Precondition(format!(
            "generators do not reach {}",
            src.name(missed)
        )));
    }
    let problem = Problem::new(src, tgt, side, MorphismKind::Homomorphism, true, generators.to_vec())?;
    Ok(problem
        .run(opts)?
        .into_iter()
        .map(|map| Morphism { source: src, target: tgt, map, kind, side })
        .collect())
}

/// `{b' : b' ≼ f(b) for some b}`.
pub fn preceq_image(f: &Morphism<'_>) -> Vec<Elem> {
    let tgt = f.target;
    let mut hit = vec![false; tgt.size()];
    for &y in &f.map {
        hit[y] = true;
    }
    tgt.elements()
        .filter(|&b| tgt.elements().any(|y| hit[y] && tgt.preceq(b, y)))
        .collect()
}

/// A yes/no answer with an element certifying a no.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Elem>,
}

impl Decision {
    fn from_counterexample(c: Option<Elem>) -> Self {
        Decision {
            holds: c.is_none(),
            witness: c,
        }
    }
}

/// Every target element is ≼ some value of `f`; otherwise the first one
/// that is not.
pub fn is_preceq_onto(f: &Morphism<'_>) -> Decision {
    let image = preceq_image(f);
    Decision::from_counterexample(f.target.elements().find(|b| image.binary_search(b).is_err()))
}

/// `f(b) ≽ 0` implies `b ≽ 0`; otherwise the first offending `b`.
pub fn is_null_monic(f: &Morphism<'_>) -> Decision {
    let (src, tgt) = (f.source, f.target);
    Decision::from_counterexample(
        src.elements()
            .find(|&b| tgt.preceq(tgt.zero(), f.apply(b)) && !src.preceq(src.zero(), b)),
    )
}
