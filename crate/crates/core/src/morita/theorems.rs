//! Executable checks of the two Morita results on a concrete context: a
//! ≼-onto `τ'` makes `M` a ≼-progenerator, and a `≽`-onto `τ` forces
//! null-monic pairings on the tensor products.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::module::{FiniteModuleSystem, Side};
use crate::morphism::{validate_morphism, Morphism, MorphismKind, SearchOptions};
use crate::report::Verdict;
use crate::semiring::Elem;
use crate::system::SystemDef;
use crate::tensor::{factor_bilinear, tensor_product, TensorPresentation, DEFAULT_CLASS_CAP};

use super::context::{validate_context, MoritaContext};
use super::generator::{is_fin_generated_preceq, is_preceq_generator};
use super::projective::{dual_basis_counterexample, DualBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisUnmet,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::HypothesisUnmet => "HYPOTHESIS UNMET",
            Status::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub verdict: Verdict,
    /// Whether the verdict counts towards the overall status.
    pub required: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
}

impl Claim {
    fn new(name: &str, verdict: Verdict, required: bool, detail: impl Into<String>, witnesses: Vec<String>) -> Self {
        Claim { name: name.into(), verdict, required, detail: detail.into(), witnesses }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub status: Status,
    pub hypothesis: Claim,
    pub claims: Vec<Claim>,
}

impl TheoremReport {
    fn settle(theorem: &str, hypothesis: Claim, claims: Vec<Claim>) -> Self {
        let status = match hypothesis.verdict {
            Verdict::False => Status::HypothesisUnmet,
            Verdict::Indeterminate => Status::Indeterminate,
            Verdict::True => {
                let required = claims.iter().filter(|c| c.required);
                if required.clone().any(|c| c.verdict == Verdict::False) {
                    Status::Fail
                } else if required.clone().all(|c| c.verdict == Verdict::True) {
                    Status::Pass
                } else {
                    Status::Indeterminate
                }
            }
        };
        TheoremReport { theorem: theorem.into(), status, hypothesis, claims }
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.theorem, self.status)?;
        for c in std::iter::once(&self.hypothesis).chain(&self.claims) {
            let tag = if c.required { "" } else { " (informational)" };
            writeln!(f, "  [{}] {}{tag}: {}", c.verdict, c.name, c.detail)?;
            for w in &c.witnesses {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremOptions {
    /// Most summands tried in the hypothesis searches.
    pub t_max: usize,
    /// Bound for the generator and finite-generation searches.
    pub n_max: usize,
    /// Tensor class cap.
    pub cap: usize,
    pub search: SearchOptions,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions { t_max: 4, n_max: 3, cap: DEFAULT_CLASS_CAP, search: SearchOptions::default() }
    }
}

enum SumSearch {
    /// Pairs whose values sum to an element meeting the goal.
    Found(Vec<(Elem, Elem)>, Elem),
    /// Every reachable sum was examined.
    Exhausted,
    Bounded,
}

/// Breadth-first search over sums of one or more `values` (each tagged with
/// the argument pair producing it) for a sum satisfying `goal`.
fn sum_search(a: &SystemDef, values: &[(Elem, (Elem, Elem))], t_max: usize, goal: impl Fn(Elem) -> bool) -> SumSearch {
    let mut parent: HashMap<Elem, (Option<Elem>, usize)> = HashMap::new();
    let mut frontier = Vec::new();
    for (i, &(v, _)) in values.iter().enumerate() {
        if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(v) {
            e.insert((None, i));
            frontier.push(v);
        }
    }
    let trace = |parent: &HashMap<Elem, (Option<Elem>, usize)>, mut s: Elem| {
        let mut pairs = Vec::new();
        loop {
            let (prev, i) = parent[&s];
            pairs.push(values[i].1);
            match prev {
                Some(p) => s = p,
                None => break,
            }
        }
        pairs.reverse();
        pairs
    };
    for level in 1..=t_max {
        if let Some(&s) = frontier.iter().find(|&&s| goal(s)) {
            return SumSearch::Found(trace(&parent, s), s);
        }
        if level == t_max {
            break;
        }
        let mut next = Vec::new();
        for &s in &frontier {
            for (i, &(v, _)) in values.iter().enumerate() {
                let t = a.add(s, v);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(t) {
                    e.insert((Some(s), i));
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return SumSearch::Exhausted;
        }
        frontier = next;
    }
    SumSearch::Bounded
}

/// Prefers sums equal to `target`, the tight instances the arguments use,
/// over sums merely related to it by `goal`.
fn sum_search_tight(
    a: &SystemDef,
    values: &[(Elem, (Elem, Elem))],
    t_max: usize,
    target: Elem,
    goal: impl Fn(Elem) -> bool,
) -> SumSearch {
    match sum_search(a, values, t_max, |s| s == target) {
        found @ SumSearch::Found(..) => found,
        _ => sum_search(a, values, t_max, goal),
    }
}

/// Distinct values of a pairing over all argument pairs, with the first
/// pair producing each.
fn pairing_values(rows: usize, cols: usize, pair: impl Fn(Elem, Elem) -> Elem) -> Vec<(Elem, (Elem, Elem))> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for x in 0..rows {
        for y in 0..cols {
            let v = pair(x, y);
            if seen.insert(v, ()).is_none() {
                out.push((v, (x, y)));
            }
        }
    }
    out
}

fn context_claim(ctx: &MoritaContext) -> Claim {
    let r = validate_context(ctx);
    let first = r.failures().next().cloned();
    match first {
        None => Claim::new("context", Verdict::True, true, format!("{} axioms hold", r.checks.len()), vec![]),
        Some(c) => Claim::new(
            "context",
            Verdict::False,
            true,
            format!("axiom {} fails ({} violations)", c.axiom, c.violations),
            c.witness.iter().map(|w| w.to_string()).collect(),
        ),
    }
}

fn hypothesis_claim(
    name: &str,
    search: SumSearch,
    t_max: usize,
    ground: &SystemDef,
    describe: impl Fn(&(Elem, Elem)) -> String,
    goal_text: &str,
) -> (Claim, Option<Vec<(Elem, Elem)>>) {
    match search {
        SumSearch::Found(pairs, s) => {
            let witnesses = pairs.iter().map(&describe).collect();
            let claim = Claim::new(
                name,
                Verdict::True,
                true,
                format!("{goal_text} with sum {} of {} term(s)", ground.name(s), pairs.len()),
                witnesses,
            );
            (claim, Some(pairs))
        }
        SumSearch::Exhausted => (
            Claim::new(name, Verdict::False, true, format!("no finite sum satisfies {goal_text}"), vec![]),
            None,
        ),
        SumSearch::Bounded => (
            Claim::new(
                name,
                Verdict::Indeterminate,
                true,
                format!("no sum of at most {t_max} terms satisfies {goal_text}"),
                vec![],
            ),
            None,
        ),
    }
}

/// If `𝟙' ≼ Σ [y'ⱼ, yⱼ]` for some pairs, then `fⱼ = (·, y'ⱼ)` and `yⱼ` form a
/// ≼-dual basis of `M`, and `M` is a ≼-generator and ≼-finitely generated.
pub fn verify_mor1(ctx: &MoritaContext, opts: TheoremOptions) -> TheoremReport {
    let theorem = "τ' ≼-onto ⇒ M is a ≼-progenerator";
    let (m, mp) = (&ctx.m, &ctx.m_prime);
    let context = context_claim(ctx);

    let values = pairing_values(mp.size(), m.size(), |yp, y| ctx.tau_prime(yp, y));
    let one_p = ctx.a_prime.one();
    let search = sum_search_tight(&ctx.a_prime, &values, opts.t_max, one_p, |s| ctx.a_prime.preceq(one_p, s));
    let (hypothesis, pairs) = hypothesis_claim(
        "hypothesis",
        search,
        opts.t_max,
        &ctx.a_prime,
        |&(yp, y)| format!("[{}, {}] = {}", mp.name(yp), m.name(y), ctx.a_prime.name(ctx.tau_prime(yp, y))),
        "1 ≼ Σ [y'ⱼ, yⱼ]",
    );
    let Some(pairs) = pairs else {
        return TheoremReport::settle(theorem, hypothesis, vec![context]);
    };

    let mut claims = vec![context];
    let regular = FiniteModuleSystem::regular(&ctx.a);
    let fs: Vec<Morphism<'_>> = pairs
        .iter()
        .map(|&(yp, _)| Morphism::from_fn(m, &regular, MorphismKind::Homomorphism, Side::Left, |x| ctx.tau(x, yp)))
        .collect();
    let bad_map = fs.iter().zip(&pairs).find_map(|(f, &(yp, _))| {
        let r = validate_morphism(f);
        let first = r.failures().next().cloned();
        first.map(|c| {
            format!(
                "(·, {}) fails {}{}",
                mp.name(yp),
                c.axiom,
                c.witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default()
            )
        })
    });
    claims.push(match &bad_map {
        None => Claim::new(
            "dual_basis.maps",
            Verdict::True,
            true,
            format!("{} maps (·, y'ⱼ) are homomorphisms M → A", fs.len()),
            vec![],
        ),
        Some(w) => Claim::new("dual_basis.maps", Verdict::False, true, "a pairing map is not a morphism", vec![w.clone()]),
    });

    // x ≼ Σ (x, y'ⱼ)·yⱼ, fanned out over x.
    let offender = m.elements().into_par_iter().find_first(|&x| {
        let total = pairs
            .iter()
            .fold(m.zero(), |acc, &(yp, y)| m.add(acc, m.act(Side::Left, ctx.tau(x, yp), y)));
        !m.preceq(x, total)
    });
    let basis_witnesses: Vec<String> = pairs
        .iter()
        .map(|&(yp, y)| format!("(y = {}, f = (·, {}))", m.name(y), mp.name(yp)))
        .collect();
    claims.push(match offender {
        None => Claim::new(
            "dual_basis",
            Verdict::True,
            true,
            format!("x ≼ Σ fⱼ(x)yⱼ for all {} elements of M", m.size()),
            basis_witnesses,
        ),
        Some(x) => Claim::new(
            "dual_basis",
            Verdict::False,
            true,
            "dual-basis inequality fails",
            vec![format!("x = {}", m.name(x))],
        ),
    });

    // Independent replay from the value tables alone.
    let basis = DualBasis {
        side: Side::Left,
        pairs: pairs.iter().zip(&fs).map(|(&(_, y), f)| (y, f.map.clone())).collect(),
    };
    claims.push(match dual_basis_counterexample(m, &basis) {
        None => Claim::new("dual_basis.replay", Verdict::True, true, "re-evaluated from tables", vec![]),
        Some(x) => Claim::new(
            "dual_basis.replay",
            Verdict::False,
            true,
            "replay disagrees",
            vec![format!("x = {}", m.name(x))],
        ),
    });

    // ≼-generator: 1 ≼ Σ (xᵢ, x'ᵢ) puts 1 below a trace element, since each
    // (·, x'ᵢ) lies in M*; otherwise decide the generator conditions directly.
    let tau_values = pairing_values(m.size(), mp.size(), |x, xp| ctx.tau(x, xp));
    let one = ctx.a.one();
    claims.push(
        match sum_search_tight(&ctx.a, &tau_values, opts.t_max, one, |s| ctx.a.preceq(one, s)) {
            SumSearch::Found(ps, s) => Claim::new(
                "generator",
                Verdict::True,
                true,
                format!("1 ≼ {} = Σ (xᵢ, x'ᵢ), a trace element", ctx.a.name(s)),
                ps.iter().map(|&(x, xp)| format!("({}, {})", m.name(x), mp.name(xp))).collect(),
            ),
            _ => match is_preceq_generator(m, opts.n_max, opts.search) {
                Ok(v) => Claim::new(
                    "generator",
                    v.verdict(),
                    true,
                    format!(
                        "onto: {}; trace: {}; image: {}",
                        v.onto.verdict, v.trace.verdict, v.image.verdict
                    ),
                    vec![v.onto.detail, v.trace.detail, v.image.detail],
                ),
                Err(e) => Claim::new("generator", Verdict::Indeterminate, true, e.to_string(), vec![]),
            },
        },
    );

    // ≼-finite generation is asserted by the statement but not argued in the
    // proof; it is computed on its own. Every finite module is generated by
    // its nonzero elements, so the bounded search only looks for a small family.
    let fg = is_fin_generated_preceq(m, opts.n_max);
    let gens = fg
        .generators
        .unwrap_or_else(|| m.elements().filter(|&x| x != m.zero()).collect());
    claims.push(Claim::new(
        "finitely_generated",
        Verdict::True,
        true,
        format!(
            "{} generator(s){}",
            gens.len(),
            if fg.holds { "" } else { " (no family within n_max; all nonzero elements used)" }
        ),
        vec![gens.iter().map(|&x| m.name(x).to_string()).collect::<Vec<_>>().join(", ")],
    ));

    TheoremReport::settle(theorem, hypothesis, claims)
}

/// Every class `c` of `t` with `0 ≼ pair̄(c)` must satisfy `0 ≼∘ c`.
fn null_kernel_claim(
    name: &str,
    required: bool,
    t: &TensorPresentation,
    pair: &[Elem],
    target_ground: &std::sync::Arc<SystemDef>,
) -> Claim {
    let target = FiniteModuleSystem::regular(target_ground);
    let f = match factor_bilinear(pair, t, &target) {
        Ok(f) => f,
        Err(e) => return Claim::new(name, Verdict::False, required, format!("pairing does not factor: {e}"), vec![]),
    };
    let module = &t.module;
    let kernel: Vec<Elem> = module
        .elements()
        .filter(|&c| target.preceq(target.zero(), f.apply(c)))
        .collect();
    let bad = kernel
        .par_iter()
        .find_first(|&&c| !module.preceq(module.zero(), c))
        .copied();
    let render = |c: Elem| {
        let rep = t.representative(c);
        let body = if rep.is_empty() {
            "0".to_string()
        } else {
            rep.iter()
                .map(|&(x, y)| format!("{}⊗{}", t.left.name(x), t.right.name(y)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        format!("{body} ↦ {}", target.name(f.apply(c)))
    };
    match bad {
        None => Claim::new(
            name,
            Verdict::True,
            required,
            format!("{} of {} classes in the null kernel, all ≽ 0", kernel.len(), module.size()),
            vec![],
        ),
        Some(c) => Claim::new(name, Verdict::False, required, "null-kernel class not ≽ 0", vec![render(c)]),
    }
}

/// If `Σ (xᵢ, x'ᵢ) ≼ 𝟙` for some pairs, the pairing is null-monic on the
/// tensor product. The τ-side on `M ⊗_{A'} M'` is what the argument
/// establishes; the τ'-side on `M' ⊗_A M`, which the statement names, is
/// computed and reported without affecting the status.
pub fn verify_morplus(ctx: &MoritaContext, opts: TheoremOptions) -> Result<TheoremReport, SearchError> {
    let theorem = "τ ≽-onto ⇒ null-monic pairing";
    let (m, mp) = (&ctx.m, &ctx.m_prime);
    let context = context_claim(ctx);
    let values = pairing_values(m.size(), mp.size(), |x, xp| ctx.tau(x, xp));
    let one = ctx.a.one();
    let search = sum_search_tight(&ctx.a, &values, opts.t_max, one, |s| ctx.a.preceq(s, one));
    let (hypothesis, pairs) = hypothesis_claim(
        "hypothesis",
        search,
        opts.t_max,
        &ctx.a,
        |&(x, xp)| format!("({}, {}) = {}", m.name(x), mp.name(xp), ctx.a.name(ctx.tau(x, xp))),
        "Σ (xᵢ, x'ᵢ) ≼ 1",
    );
    if pairs.is_none() {
        return Ok(TheoremReport::settle(theorem, hypothesis, vec![context]));
    }
    let t = tensor_product(m, mp, &ctx.a_prime, opts.cap)?;
    let tau_side = null_kernel_claim("null_monic.tau", true, &t, &ctx.tau, &ctx.a);
    let tp = tensor_product(mp, m, &ctx.a, opts.cap)?;
    let tau_prime_side = null_kernel_claim("null_monic.tau_prime", false, &tp, &ctx.tau_prime, &ctx.a_prime);
    Ok(TheoremReport::settle(theorem, hypothesis, vec![context, tau_side, tau_prime_side]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{make_boolean, symmetrize};
    use crate::morita::context::{row_column_context, trivial_context};
    use std::sync::Arc;

    fn sym_bool() -> Arc<SystemDef> {
        Arc::new(symmetrize(&make_boolean()))
    }

    #[test]
    fn trivial_context_passes_both() {
        let ctx = trivial_context(&sym_bool());
        let r = verify_mor1(&ctx, TheoremOptions::default());
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.hypothesis.witnesses.len(), 1);
        let r = verify_morplus(&ctx, TheoremOptions::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn row_column_context_passes_mor1_both_ways() {
        let ctx = row_column_context(&sym_bool());
        let r = verify_mor1(&ctx, TheoremOptions::default());
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.hypothesis.witnesses.len(), 2, "{r}");
        let r = verify_mor1(&ctx.swap(), TheoremOptions::default());
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn row_column_context_passes_morplus_on_the_tau_side() {
        let ctx = row_column_context(&sym_bool());
        for c in [ctx.clone(), ctx.swap()] {
            let r = verify_morplus(&c, TheoremOptions::default()).unwrap();
            assert_eq!(r.status, Status::Pass, "{r}");
            assert!(r.claim("null_monic.tau_prime").is_some());
        }
    }

    #[test]
    fn zero_bimodule_leaves_the_hypothesis_unmet() {
        let a = sym_bool();
        let mut ctx = trivial_context(&a);
        let zero = FiniteModuleSystem::zero_module(&a);
        ctx.m_prime = zero;
        ctx.tau = vec![a.zero(); ctx.m.size()];
        ctx.tau_prime = vec![a.zero(); ctx.m.size()];
        let r = verify_mor1(&ctx, TheoremOptions::default());
        assert_eq!(r.status, Status::HypothesisUnmet, "{r}");
        let r = verify_morplus(&ctx, TheoremOptions::default()).unwrap();
        assert_eq!(r.status, Status::HypothesisUnmet, "{r}");
    }

    #[test]
    fn broken_context_fails() {
        let a = sym_bool();
        let mut ctx = trivial_context(&a);
        ctx.tau_prime = ctx.tau_prime.iter().map(|&v| a.neg(v)).collect();
        let r = verify_mor1(&ctx, TheoremOptions::default());
        assert_eq!(r.status, Status::Fail, "{r}");
        assert_eq!(r.claim("context").unwrap().verdict, Verdict::False);
    }
}
