//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p sysalg --test acceptance`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sysalg::corpus::{
    boolean_identity_negation, entries, make_boolean, make_sign_hyperfield, make_supertropical, symmetrize,
    truncated_max_plus,
};
use sysalg::morita::{
    is_preceq_generator, row_column_context, trivial_context, validate_matrix_semiring, MatrixSemiring, Status,
};
use sysalg::tensor::DEFAULT_CLASS_CAP;
use sysalg::{
    direct_power, enumerate_morphisms, factor_bilinear, find_isomorphism, load_str, quasi_zeros, surpass_circ,
    tensor_product, validate_context, validate_module, validate_semiring, validate_surpass, validate_system,
    validate_triple, verify_mor1, verify_morplus, Elem, FiniteModuleSystem, FiniteSemiring, MoritaContext,
    MorphismKind, NegationMap, SearchOptions, Side, Structure, SystemDef, TheoremOptions, Triple,
    ValidationReport,
};

/// Wall-clock limits.
const CORPUS_LIMIT: Duration = Duration::from_secs(5);
const MOR1_LIMIT: Duration = Duration::from_secs(30);
/// Minimum counts.
const MIN_PLANTED: usize = 5;
const MIN_BILINEAR: usize = 10;
const MIN_GENERATOR_MODULES: usize = 6;
const MIN_PLANTED_CONTEXTS: usize = 3;
const RANDOM_SYSTEMS: usize = 500;
const RANDOM_MAX_SIZE: usize = 6;
const RANDOM_SEED: u64 = 0x5eed_2026;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sym() -> Arc<SystemDef> {
    Arc::new(symmetrize(&make_boolean()))
}

fn st1() -> Arc<SystemDef> {
    Arc::new(make_supertropical(1).unwrap())
}

fn first_failure(r: &ValidationReport) -> String {
    r.failures()
        .next()
        .map(|c| format!("{}: {}", c.axiom, c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()))
        .unwrap_or_else(|| "none".into())
}

// 1 ------------------------------------------------------------------------

fn corpus_validity() -> Outcome {
    let start = Instant::now();
    let b = validate_semiring(&make_boolean());
    ensure(b.is_valid(), || format!("Boolean semiring: {}", first_failure(&b)))?;
    let mut names = vec!["boolean".to_string()];
    let mut seen_st3 = false;
    for e in entries() {
        let r = validate_system(&e.system);
        ensure(r.is_valid(), || format!("{}: {}", e.name, first_failure(&r)))?;
        seen_st3 |= e.name == "supertropical-3";
        names.push(e.name);
    }
    ensure(seen_st3 && names.len() >= 5, || format!("corpus incomplete: {names:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < CORPUS_LIMIT, || format!("took {elapsed:?}, limit {CORPUS_LIMIT:?}"))?;
    Ok(format!("{} structures valid in {elapsed:.2?}", names.len()))
}

// 2 ------------------------------------------------------------------------

/// Planted files: (file, contents, violated axiom, witness elements).
const PLANTED: &[(&str, &str, &str, &[&str])] = &[
    ("planted_add_comm", include_str!("fixtures/planted_add_comm.json"), "semiring.add.comm", &["(0,1)", "(1,0)"]),
    ("planted_zero_absorbing", include_str!("fixtures/planted_zero_absorbing.json"), "semiring.mul.zero", &["(1,1)"]),
    (
        "planted_distributivity",
        include_str!("fixtures/planted_distributivity.json"),
        "semiring.distrib.left",
        &["(0,1)", "(0,1)", "(1,0)"],
    ),
    (
        "planted_tangible_quasi_zero",
        include_str!("fixtures/planted_tangible_quasi_zero.json"),
        "triple.disjoint",
        &["(1,1)"],
    ),
    ("planted_surpass_reflexive", include_str!("fixtures/planted_surpass_reflexive.json"), "surpass.reflexive", &["(1,0)"]),
    (
        "planted_module_distrib",
        include_str!("fixtures/planted_module_distrib.json"),
        "act.left.distrib",
        &["(0,1)", "(0,1)", "(1,0)"],
    ),
    ("planted_context_tau", include_str!("fixtures/planted_context_tau.json"), "axiom.i", &["(1,0)", "(1,0)", "(0,1)"]),
];

fn validate_any(s: &Structure) -> ValidationReport {
    match s {
        Structure::Semiring(s) => validate_semiring(s),
        Structure::Triple(t) => validate_triple(t),
        Structure::System(s) => validate_system(s),
        Structure::Module(m) => validate_module(m),
        Structure::Context(c) => validate_context(c),
        Structure::Tensor(t) => validate_module(&t.module),
    }
}

fn negative_fixtures() -> Outcome {
    let r = validate_triple(&boolean_identity_negation());
    let w = r.get("disjoint").and_then(|c| c.witness.clone());
    ensure(w.as_ref().is_some_and(|w| w.detail == "1 ∈ T ∩ A°"), || {
        format!("Boolean with identity negation: expected witness 1 ∈ T ∩ A°, got {w:?}")
    })?;
    let mut caught = 0;
    for (file, text, axiom, witness) in PLANTED {
        let loaded = load_str(text).map_err(|e| format!("{file}: {e}"))?;
        let r = validate_any(&loaded.structure);
        let check = r.failures().find(|c| c.axiom.ends_with(axiom));
        let got = check.and_then(|c| c.witness.as_ref()).map(|w| w.elements.clone());
        ensure(got.as_deref() == Some(&witness.iter().map(|s| s.to_string()).collect::<Vec<_>>()[..]), || {
            format!("{file}: expected {axiom} at {witness:?}, got {got:?}")
        })?;
        caught += 1;
    }
    ensure(caught >= MIN_PLANTED, || format!("only {caught} planted files"))?;
    Ok(format!("identity negation rejected (1 ∈ T ∩ A°); {caught} planted violations caught at their witnesses"))
}

// 3 ------------------------------------------------------------------------

fn surpass_suite() -> Outcome {
    let mut triples: Vec<(String, Triple)> = entries().into_iter().map(|e| (e.name, e.system.triple)).collect();
    triples.push(("supertropical-2".into(), make_supertropical(2).unwrap().triple));
    for (name, t) in &triples {
        let circ = surpass_circ(t);
        let r = validate_surpass(&circ, t, false);
        ensure(r.is_valid(), || format!("{name}: {}", first_failure(&r)))?;
        let zero = t.semiring.zero();
        let above_zero: Vec<Elem> = t.semiring.elements().filter(|&b| circ.holds(zero, b)).collect();
        let qz = quasi_zeros(t);
        ensure(above_zero == qz, || format!("{name}: {{b ≽∘ 0}} = {above_zero:?} but A° = {qz:?}"))?;
    }
    Ok(format!("≼∘ satisfies every axiom and {{b ≽∘ 0}} = A° on {} triples", triples.len()))
}

// 4 ------------------------------------------------------------------------

fn tensor_universal_property() -> Outcome {
    let mut isos = 0;
    let mut factored = 0;
    for (gname, g) in [("symmetrized-boolean", sym()), ("supertropical-1", st1())] {
        let a = FiniteModuleSystem::regular(&g);
        let a2 = direct_power(&a, 2, 10_000).map_err(|e| e.to_string())?;
        for (mname, m) in [("A", &a), ("A²", &a2)] {
            let t = tensor_product(&a, m, &g, DEFAULT_CLASS_CAP).map_err(|e| format!("{gname} A⊗{mname}: {e}"))?;
            // compare over the scalar sides the tensor carries
            let mut target = m.clone();
            for side in [Side::Left, Side::Right] {
                if t.module.action(side).is_none() {
                    target = target.without_action(side);
                }
            }
            ensure(find_isomorphism(&t.module, &target).is_some(), || {
                format!("{gname}: A⊗{mname} ({} classes) is not isomorphic to {mname}", t.classes())
            })?;
            isos += 1;

            // psi(x, y) = h(x·y) for homomorphisms h: M → N
            for (nname, n) in [("A", &a), ("A²", &a2)] {
                let hs = enumerate_morphisms(m, n, Side::Left, MorphismKind::Homomorphism, SearchOptions::default())
                    .map_err(|e| e.to_string())?;
                for h in hs.iter().take(8) {
                    let psi: Vec<Elem> = a
                        .elements()
                        .flat_map(|x| m.elements().map(move |y| (x, y)))
                        .map(|(x, y)| h.apply(m.act(Side::Left, x, y)))
                        .collect();
                    let f = factor_bilinear(&psi, &t, n)
                        .map_err(|e| format!("{gname}: A⊗{mname} → {nname}: {e}"))?;
                    for x in a.elements() {
                        for y in m.elements() {
                            let v = f.apply(t.simple_tensor(x, y));
                            ensure(v == psi[x * m.size() + y], || {
                                format!("{gname}: factor∘⊗ ≠ psi at ({}, {})", a.name(x), m.name(y))
                            })?;
                        }
                    }
                    factored += 1;
                }
            }
        }
    }
    ensure(factored >= MIN_BILINEAR, || format!("only {factored} bilinear maps"))?;
    Ok(format!("{isos} isomorphisms A⊗M ≅ M; {factored} bilinear maps factor exactly"))
}

// 5 ------------------------------------------------------------------------

fn generator_equivalence() -> Outcome {
    let mut modules: Vec<(String, FiniteModuleSystem)> = Vec::new();
    let hyper = Arc::new(make_sign_hyperfield());
    for (gname, g) in [("symmetrized-boolean", sym()), ("supertropical-1", st1()), ("sign-hyperfield", hyper)] {
        let reg = FiniteModuleSystem::regular(&g);
        if g.size() <= 5 {
            modules.push((format!("{gname}: A²"), direct_power(&reg, 2, 10_000).map_err(|e| e.to_string())?));
        }
        if let Ok(qz) = FiniteModuleSystem::quasi_zero_submodule(&g) {
            modules.push((format!("{gname}: A°"), qz));
        }
        modules.push((format!("{gname}: 0"), FiniteModuleSystem::zero_module(&g)));
        modules.push((format!("{gname}: A"), reg));
    }
    let mut summary = Vec::new();
    for (name, m) in &modules {
        let v = is_preceq_generator(m, 3, SearchOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.agree(), || {
            format!("{name}: onto {}, trace {}, image {}", v.onto.verdict, v.trace.verdict, v.image.verdict)
        })?;
        summary.push(format!("{name}={}", v.verdict()));
    }
    ensure(modules.len() >= MIN_GENERATOR_MODULES, || format!("only {} modules", modules.len()))?;
    Ok(format!("{} modules agree [{}]", modules.len(), summary.join(", ")))
}

// 6 ------------------------------------------------------------------------

fn with_pairings(ctx: &MoritaContext, tau: Vec<Elem>, tau_prime: Vec<Elem>) -> MoritaContext {
    MoritaContext::new(ctx.a.clone(), ctx.a_prime.clone(), ctx.m.clone(), ctx.m_prime.clone(), tau, tau_prime)
        .expect("same shapes")
}

fn matrix_equivalence() -> Outcome {
    let g = sym();
    let triv = trivial_context(&g);
    let rc = row_column_context(&g);
    let mut cases: Vec<(String, MoritaContext, bool)> = vec![
        ("trivial".into(), triv.clone(), false),
        ("row/column".into(), rc.clone(), false),
    ];
    for (name, ctx) in [("trivial", &triv), ("row/column", &rc)] {
        let zero_tau = vec![ctx.a.zero(); ctx.tau.len()];
        let zero_tau_p = vec![ctx.a_prime.zero(); ctx.tau_prime.len()];
        let neg_tau: Vec<Elem> = ctx.tau.iter().map(|&v| ctx.a.neg(v)).collect();
        let neg_tau_p: Vec<Elem> = ctx.tau_prime.iter().map(|&v| ctx.a_prime.neg(v)).collect();
        cases.push((format!("{name}, τ = 0"), with_pairings(ctx, zero_tau, ctx.tau_prime.clone()), true));
        cases.push((format!("{name}, τ' = 0"), with_pairings(ctx, ctx.tau.clone(), zero_tau_p), true));
        cases.push((format!("{name}, τ ↦ (-)τ"), with_pairings(ctx, neg_tau, ctx.tau_prime.clone()), true));
        cases.push((format!("{name}, τ' ↦ (-)τ'"), with_pairings(ctx, ctx.tau.clone(), neg_tau_p), true));
    }
    let mut planted = 0;
    for (name, ctx, broken) in &cases {
        let c = validate_context(ctx);
        let axioms_fail = ["axiom.i", "axiom.ii"].iter().any(|a| c.get(a).is_some_and(|x| !x.passed()));
        ensure(axioms_fail == *broken, || format!("{name}: planted break not seen by the context check"))?;
        let m = validate_matrix_semiring(&MatrixSemiring::new(ctx.clone()));
        let assoc_fails = m.get("mul.assoc").is_some_and(|x| !x.passed());
        ensure(assoc_fails == axioms_fail, || {
            format!("{name}: axioms (i)/(ii) broken = {axioms_fail}, associativity fails = {assoc_fails}")
        })?;
        if !broken {
            ensure(m.is_valid(), || format!("{name}: {}", first_failure(&m)))?;
        }
        planted += usize::from(*broken);
    }
    // the 256-element matrix semiring of the trivial context, in full
    let full = MatrixSemiring::new(triv).to_system(1024).map_err(|e| e.to_string())?;
    let r = validate_semiring(full.semiring());
    ensure(r.is_valid(), || format!("trivial, full table: {}", first_failure(&r)))?;
    ensure(planted >= MIN_PLANTED_CONTEXTS, || format!("only {planted} planted contexts"))?;
    Ok(format!("2 contexts valid; associativity fails exactly on the {planted} planted breaks"))
}

// 7–9 --------------------------------------------------------------------

fn contexts() -> Vec<(&'static str, MoritaContext)> {
    let g = sym();
    vec![("trivial", trivial_context(&g)), ("row/column", row_column_context(&g))]
}

fn mor1() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (name, ctx) in contexts() {
        let r = verify_mor1(&ctx, TheoremOptions::default());
        ensure(r.status == Status::Pass, || format!("{name}: {}", r.to_string().trim_end()))?;
        let replay = r.claim("dual_basis.replay").map(|c| c.verdict.is_true()).unwrap_or(false);
        ensure(replay, || format!("{name}: dual basis not re-verified"))?;
        parts.push(format!("{name} ({} hypothesis terms)", r.hypothesis.witnesses.len()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < MOR1_LIMIT, || format!("took {elapsed:?}, limit {MOR1_LIMIT:?}"))?;
    Ok(format!("PASS on {} in {elapsed:.2?}", parts.join(", ")))
}

fn morplus() -> Outcome {
    let mut parts = Vec::new();
    for (name, ctx) in contexts() {
        let r = verify_morplus(&ctx, TheoremOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.status == Status::Pass, || format!("{name}: {}", r.to_string().trim_end()))?;
        let tau = r.claim("null_monic.tau").ok_or("missing τ claim")?;
        let tau_p = r.claim("null_monic.tau_prime").ok_or("missing τ' claim")?;
        parts.push(format!("{name}: τ {} [{}], τ' {} [{}]", tau.verdict, tau.detail, tau_p.verdict, tau_p.detail));
    }
    Ok(parts.join("; "))
}

fn symmetry() -> Outcome {
    let mut parts = Vec::new();
    for (name, ctx) in contexts() {
        let swapped = ctx.swap();
        let m1 = verify_mor1(&swapped, TheoremOptions::default());
        let mp = verify_morplus(&swapped, TheoremOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(m1.status == Status::Pass && mp.status == Status::Pass, || {
            format!("{name} swapped: Mor1 {}, Morplus {}", m1.status, mp.status)
        })?;
        parts.push(name);
    }
    Ok(format!("both verifiers PASS on the swapped {} contexts", parts.join(" and ")))
}

// 10 -----------------------------------------------------------------------

/// Base semirings of size at most six.
fn bases() -> Vec<FiniteSemiring> {
    let mut out = vec![make_boolean(), symmetrize(&make_boolean()).triple.semiring, make_supertropical(1).unwrap().triple.semiring];
    for k in 1..=4 {
        out.push(truncated_max_plus(k));
    }
    // (max, min) chains
    for n in 2..=RANDOM_MAX_SIZE {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        out.push(FiniteSemiring::from_fn(names, 0, n - 1, |a, b| a.max(b), |a, b| a.min(b), &[]).unwrap());
    }
    out.retain(|s| s.size() <= RANDOM_MAX_SIZE);
    out
}

fn random_involution(rng: &mut ChaCha8Rng, n: usize, zero: Elem) -> Vec<Elem> {
    let mut perm: Vec<Elem> = (0..n).collect();
    let mut free: Vec<Elem> = (0..n).filter(|&i| i != zero).collect();
    free.shuffle(rng);
    while free.len() >= 2 {
        let (a, b) = (free.pop().unwrap(), free.pop().unwrap());
        if rng.gen_bool(0.5) {
            perm[a] = b;
            perm[b] = a;
        }
    }
    perm
}

/// A random candidate: a relabelled base, with random tangibles and
/// negation, sometimes with a corrupted table entry.
fn random_candidate(rng: &mut ChaCha8Rng, bases: &[FiniteSemiring], corpus: &[Triple]) -> Option<(Triple, bool)> {
    let (semiring, negation) = if rng.gen_bool(0.35) {
        let t = corpus.choose(rng).unwrap();
        (t.semiring.clone(), t.negation.as_slice().to_vec())
    } else {
        let s = bases.choose(rng).unwrap().clone();
        let neg = if rng.gen_bool(0.5) { (0..s.size()).collect() } else { random_involution(rng, s.size(), s.zero()) };
        let nonzero: Vec<Elem> = s.elements().filter(|&e| e != s.zero()).collect();
        let tangibles: Vec<Elem> = nonzero.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        (s.with_tangibles(&tangibles).ok()?, neg)
    };
    let n = semiring.size();
    let mut perm: Vec<Elem> = (0..n).collect();
    perm.shuffle(rng);
    let inv = {
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    };
    let mut add: Vec<Elem> = (0..n * n).map(|k| perm[semiring.add(inv[k / n], inv[k % n])]).collect();
    let mut mul: Vec<Elem> = (0..n * n).map(|k| perm[semiring.mul(inv[k / n], inv[k % n])]).collect();
    if rng.gen_bool(0.3) {
        let table = if rng.gen_bool(0.5) { &mut add } else { &mut mul };
        let k = rng.gen_range(0..n * n);
        table[k] = rng.gen_range(0..n);
    }
    let names: Vec<String> = (0..n).map(|i| semiring.name(inv[i]).to_string()).collect();
    let tangibles: Vec<Elem> = semiring.tangibles().into_iter().map(|t| perm[t]).collect();
    let neg: Vec<Elem> = (0..n).map(|i| perm[negation[inv[i]]]).collect();
    let s = FiniteSemiring::new(names, perm[semiring.zero()], perm[semiring.one()], add, mul, &tangibles).ok()?;
    let negation = NegationMap::new(neg).ok()?;
    Some((Triple::new(s, negation), rng.gen_bool(0.3)))
}

/// Independent restatement of the ≼∘ axioms and unique negation, straight
/// from the definitions and the raw tables.
fn naive_recheck(s: &SystemDef) -> Result<(), String> {
    let sr = s.semiring();
    let n = sr.size();
    let (add, mul) = (sr.add_table(), sr.mul_table());
    let plus = |a: usize, b: usize| add[a * n + b];
    let times = |a: usize, b: usize| mul[a * n + b];
    let neg = |a: usize| s.negation().as_slice()[a];
    let tangible: Vec<bool> = (0..n).map(|a| sr.tangible_flags()[a]).collect();
    let zero = sr.zero();
    // a ≼∘ c  iff  a + b° = c for some b
    let circs: Vec<usize> = (0..n).map(|b| plus(b, neg(b))).collect();
    let mut le = vec![false; n * n];
    for a in 0..n {
        for &c in &circs {
            le[a * n + plus(a, c)] = true;
        }
    }
    let le = |a: usize, c: usize| le[a * n + c];
    for a in 0..n {
        for c in 0..n {
            if le(a, c) != s.preceq(a, c) {
                return Err(format!("declared relation differs from ≼∘ at ({a}, {c})"));
            }
        }
    }
    for a in 0..n {
        if !le(a, a) {
            return Err(format!("not reflexive at {a}"));
        }
        for b in 0..n {
            for c in 0..n {
                if le(a, b) && le(b, c) && !le(a, c) {
                    return Err(format!("not transitive at ({a}, {b}, {c})"));
                }
            }
        }
    }
    for &c in &circs {
        if !le(zero, c) {
            return Err(format!("(i) fails at {c}"));
        }
    }
    for b1 in 0..n {
        for b2 in (0..n).filter(|&b2| le(b1, b2)) {
            if !le(neg(b1), neg(b2)) {
                return Err(format!("(ii) fails at ({b1}, {b2})"));
            }
            for c1 in 0..n {
                for c2 in (0..n).filter(|&c2| le(c1, c2)) {
                    if !le(plus(b1, c1), plus(b2, c2)) {
                        return Err(format!("(iii) fails at ({b1}, {b2}, {c1}, {c2})"));
                    }
                }
            }
            for a in (0..n).filter(|&a| tangible[a]) {
                if !le(times(a, b1), times(a, b2)) {
                    return Err(format!("(iv) fails at ({a}, {b1}, {b2})"));
                }
            }
            if tangible[b2] && b1 != b2 && (tangible[b1] || s.t_surpassing) {
                return Err(format!("(v) fails at ({b1}, {b2})"));
            }
        }
    }
    for a in (0..n).filter(|&a| tangible[a]) {
        let partners: Vec<usize> = (0..n).filter(|&b| tangible[b] && le(zero, plus(a, b))).collect();
        if partners != [neg(a)] {
            return Err(format!("{a} is not uniquely negated: partners {partners:?}"));
        }
    }
    Ok(())
}

fn randomized_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let bases = bases();
    let corpus: Vec<Triple> = entries()
        .into_iter()
        .map(|e| e.system.triple)
        .filter(|t| t.semiring.size() <= RANDOM_MAX_SIZE)
        .collect();
    let (mut accepted, mut rejected, mut generated) = (0, 0, 0);
    while generated < RANDOM_SYSTEMS {
        let Some((triple, t_surpassing)) = random_candidate(&mut rng, &bases, &corpus) else { continue };
        generated += 1;
        let s = SystemDef::with_circ(triple, t_surpassing);
        if validate_system(&s).is_valid() {
            accepted += 1;
            naive_recheck(&s).map_err(|e| format!("accepted system disagrees with the naive check: {e}\n{s:?}"))?;
        } else {
            rejected += 1;
        }
    }
    ensure(accepted > 0 && rejected > 0, || format!("degenerate sample: {accepted} accepted, {rejected} rejected"))?;
    Ok(format!("{generated} systems: {accepted} accepted and re-confirmed, {rejected} rejected; 0 discrepancies"))
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: [Criterion; 10] = [
        ("corpus validity", corpus_validity),
        ("negative fixtures", negative_fixtures),
        ("surpassing-relation suite", surpass_suite),
        ("tensor universal property", tensor_universal_property),
        ("≼-generator equivalence", generator_equivalence),
        ("matrix semiring equivalence", matrix_equivalence),
        ("Mor1", mor1),
        ("Morplus", morplus),
        ("symmetry", symmetry),
        ("randomized soundness", randomized_soundness),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({t:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({t:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
