use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::select;

use sysalg::corpus::{entries, make_boolean, make_supertropical, symmetrize};
use sysalg::morita::{row_column_context, trivial_context, validate_context};
use sysalg::tensor::DEFAULT_CLASS_CAP;
use sysalg::{
    direct_power, dump, enumerate_morphisms, load_str, quasi_zeros, surpass_circ, tensor_product, validate_module,
    validate_morphism, validate_system, Elem, FiniteModuleSystem, FiniteSemiring, Loaded, MorphismKind,
    NegationMap, SearchOptions, Side, Structure, SystemDef, Triple,
};

fn corpus() -> Vec<SystemDef> {
    entries().into_iter().map(|e| e.system).collect()
}

/// The same system with its elements renumbered by `perm`.
fn relabel(s: &SystemDef, perm: &[Elem]) -> SystemDef {
    let sr = s.semiring();
    let n = sr.size();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let names = (0..n).map(|i| sr.name(inv[i]).to_string()).collect();
    let tangibles: Vec<Elem> = sr.tangibles().into_iter().map(|t| perm[t]).collect();
    let semiring = FiniteSemiring::from_fn(
        names,
        perm[sr.zero()],
        perm[sr.one()],
        |a, b| perm[sr.add(inv[a], inv[b])],
        |a, b| perm[sr.mul(inv[a], inv[b])],
        &tangibles,
    )
    .unwrap();
    let negation = NegationMap::new((0..n).map(|i| perm[s.neg(inv[i])]).collect()).unwrap();
    let surpass = sysalg::SurpassRelation::from_fn(n, |a, c| s.preceq(inv[a], inv[c]));
    SystemDef::new(Triple::new(semiring, negation), surpass, s.t_surpassing)
}

fn system_and_perm() -> impl Strategy<Value = (SystemDef, Vec<Elem>)> {
    select(corpus()).prop_flat_map(|s| {
        let n = s.size();
        (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Random, mostly invalid, small tables.
fn raw_semiring() -> impl Strategy<Value = FiniteSemiring> {
    (2usize..=5).prop_flat_map(|n| {
        (
            prop::collection::vec(0..n, n * n),
            prop::collection::vec(0..n, n * n),
            prop::collection::vec(any::<bool>(), n),
            0..n,
            0..n,
        )
            .prop_map(move |(add, mul, tang, zero, one)| {
                let names = (0..n).map(|i| format!("e{i}")).collect();
                let tangibles: Vec<Elem> = (0..n).filter(|&i| tang[i]).collect();
                FiniteSemiring::new(names, zero, one, add, mul, &tangibles).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validity_is_invariant_under_relabelling((s, perm) in system_and_perm()) {
        let r = relabel(&s, &perm);
        prop_assert!(validate_system(&r).is_valid());
        let mut qz: Vec<Elem> = quasi_zeros(&s.triple).into_iter().map(|q| perm[q]).collect();
        qz.sort_unstable();
        prop_assert_eq!(quasi_zeros(&r.triple), qz);
    }

    #[test]
    fn adding_a_quasi_zero_surpasses(s in select(corpus()), a in 0usize..64, b in 0usize..64) {
        let t = &s.triple;
        let n = t.semiring.size();
        let (a, b) = (a % n, b % n);
        let circ = surpass_circ(t);
        prop_assert!(circ.holds(a, t.semiring.add(a, t.circ(b))));
    }

    #[test]
    fn raw_tables_round_trip(s in raw_semiring()) {
        let loaded = Loaded { name: "raw".into(), structure: Structure::Semiring(s.clone()) };
        let text = dump(&loaded);
        let again = load_str(&text).unwrap();
        prop_assert_eq!(dump(&again), text);
        match again.structure {
            Structure::Semiring(t) => prop_assert_eq!(t, s),
            other => prop_assert!(false, "loaded a {}", other.kind()),
        }
    }

    #[test]
    fn negation_pairs_round_trip(perm in Just((1usize..6).collect::<Vec<_>>()).prop_shuffle(), k in 0usize..3) {
        // swap the first k pairs of shuffled non-zero elements; pairs are directed
        let pairs: Vec<(Elem, Elem)> = perm
            .chunks(2)
            .take(k)
            .filter(|c| c.len() == 2)
            .flat_map(|c| [(c[0], c[1]), (c[1], c[0])])
            .collect();
        let neg = NegationMap::from_pairs(6, &pairs).unwrap();
        let back = NegationMap::from_pairs(6, &neg.moved_pairs()).unwrap();
        prop_assert_eq!(&back, &neg);
        for x in 0..6 {
            prop_assert_eq!(neg.apply(neg.apply(x)), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn simple_tensors_are_balanced_and_biadditive(x in 0usize..4, x2 in 0usize..4, y in 0usize..16, y2 in 0usize..16, a in 0usize..4) {
        let g = Arc::new(symmetrize(&make_boolean()));
        let reg = FiniteModuleSystem::regular(&g);
        let sq = direct_power(&reg, 2, 100).unwrap();
        let t = tensor_product(&reg, &sq, &g, DEFAULT_CLASS_CAP).unwrap();
        let m = &t.module;
        prop_assert_eq!(t.simple_tensor(reg.add(x, x2), y), m.add(t.simple_tensor(x, y), t.simple_tensor(x2, y)));
        prop_assert_eq!(t.simple_tensor(x, sq.add(y, y2)), m.add(t.simple_tensor(x, y), t.simple_tensor(x, y2)));
        prop_assert_eq!(t.simple_tensor(reg.act(Side::Right, a, x), y), t.simple_tensor(x, sq.act(Side::Left, a, y)));
        prop_assert_eq!(t.simple_tensor(reg.neg(x), y), t.simple_tensor(x, sq.neg(y)));
    }

    #[test]
    fn composites_of_homomorphisms_are_homomorphisms(i in 0usize..1000, j in 0usize..1000) {
        let g = Arc::new(make_supertropical(1).unwrap());
        let reg = FiniteModuleSystem::regular(&g);
        let sq = direct_power(&reg, 2, 100).unwrap();
        let opts = SearchOptions::default();
        let fs = enumerate_morphisms(&reg, &sq, Side::Left, MorphismKind::Homomorphism, opts).unwrap();
        let gs = enumerate_morphisms(&sq, &reg, Side::Left, MorphismKind::Homomorphism, opts).unwrap();
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let f = &fs[i % fs.len()];
        let h = &gs[j % gs.len()];
        let composite = f.then(h);
        prop_assert!(validate_morphism(&composite).is_valid());
    }

    #[test]
    fn powers_are_module_systems(k in 1usize..=3, which in 0usize..2) {
        let g = Arc::new(if which == 0 { symmetrize(&make_boolean()) } else { make_supertropical(1).unwrap() });
        let reg = FiniteModuleSystem::regular(&g);
        let p = direct_power(&reg, k, 1000).unwrap();
        prop_assert_eq!(p.size(), g.size().pow(k as u32));
        prop_assert!(validate_module(&p).is_valid());
    }
}

#[test]
fn swapping_twice_is_the_identity() {
    let g = Arc::new(symmetrize(&make_boolean()));
    for ctx in [trivial_context(&g), row_column_context(&g)] {
        let back = ctx.swap().swap();
        assert_eq!(back.tau, ctx.tau);
        assert_eq!(back.tau_prime, ctx.tau_prime);
        assert_eq!(back.m, ctx.m);
        assert!(validate_context(&ctx.swap()).is_valid());
    }
}
