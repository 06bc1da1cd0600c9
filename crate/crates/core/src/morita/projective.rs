//! ≼-projectivity: dual-basis search and a direct lifting check.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::module::{same_ground, FiniteModuleSystem, Side};
use crate::morphism::{enumerate_morphisms, is_preceq_onto, MorphismKind, SearchOptions};
use crate::report::Verdict;
use crate::semiring::Elem;

use super::generator::module_side;

/// Pairs `(yⱼ, fⱼ)` with `x ≼ Σ fⱼ(x)·yⱼ` for every `x`; each `fⱼ` is the
/// value table of a ≼-morphism into the regular module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBasis {
    pub side: Side,
    pub pairs: Vec<(Elem, Vec<Elem>)>,
}

/// Recomputes `Σ fⱼ(x)·yⱼ` from scratch and returns the first `x` it fails
/// to surpass.
pub fn dual_basis_counterexample(p: &FiniteModuleSystem, basis: &DualBasis) -> Option<Elem> {
    p.elements().find(|&x| {
        let mut total = p.zero();
        for (y, f) in &basis.pairs {
            total = p.add(total, p.act(basis.side, f[x], *y));
        }
        !p.preceq(x, total)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBasisSearch {
    pub verdict: Verdict,
    pub basis: Option<DualBasis>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingCheck {
    pub verdict: Verdict,
    /// `(h, f)` pairs examined.
    pub pairs: usize,
    pub counterexample: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projectivity {
    pub dual_basis: DualBasisSearch,
    pub lifting: LiftingCheck,
}

/// Distinct sums tracked by the dual-basis search.
const SUM_CAP: usize = 200_000;

/// Dual-basis search with at most `t_max` pairs.
///
/// Each pair contributes the vector `x ↦ f(x)·y`; a vector below another
/// pointwise can always be swapped for it, so only maximal ones are kept.
/// Sums are explored breadth-first; if a level adds nothing new the search
/// was exhaustive and a negative answer is exact.
pub fn find_dual_basis(
    p: &FiniteModuleSystem,
    t_max: usize,
    opts: SearchOptions,
) -> Result<DualBasisSearch, SearchError> {
    let side = module_side(p);
    let a = p
        .ground(side)
        .cloned()
        .ok_or_else(|| SearchError::Precondition("module has no scalar action".into()))?;
    let regular = FiniteModuleSystem::regular(&a);
    let maps = enumerate_morphisms(p, &regular, side, MorphismKind::PreceqMorphism, opts)?;

    let mut contributions: Vec<(Vec<Elem>, Elem, usize)> = Vec::new();
    let mut seen = HashMap::new();
    for y in p.elements() {
        for (fi, f) in maps.iter().enumerate() {
            let v: Vec<Elem> = p.elements().map(|x| p.act(side, f.apply(x), y)).collect();
            if seen.insert(v.clone(), ()).is_none() {
                contributions.push((v, y, fi));
            }
        }
    }
    let below = |v: &[Elem], w: &[Elem]| v.iter().zip(w).all(|(&s, &t)| p.preceq(s, t));
    let maximal: Vec<usize> = (0..contributions.len())
        .filter(|&i| {
            !(0..contributions.len()).any(|j| {
                j != i
                    && below(&contributions[i].0, &contributions[j].0)
                    && (!below(&contributions[j].0, &contributions[i].0) || j < i)
            })
        })
        .collect();

    let done = |s: &[Elem]| p.elements().all(|x| p.preceq(x, s[x]));
    let zero = vec![p.zero(); p.size()];
    if done(&zero) {
        return Ok(DualBasisSearch {
            verdict: Verdict::True,
            basis: Some(DualBasis { side, pairs: Vec::new() }),
            detail: "every element is ≼ 0; the empty family is a dual basis".into(),
        });
    }
    // sum → (parent sum, contribution index)
    let mut parent: HashMap<Vec<Elem>, Option<(Vec<Elem>, usize)>> = HashMap::new();
    parent.insert(zero.clone(), None);
    let mut frontier = vec![zero];
    let mut found = None;
    let mut exhausted = false;
    let mut capped = false;
    'levels: for _ in 0..t_max {
        let mut next = Vec::new();
        for s in &frontier {
            for &ci in &maximal {
                let t: Vec<Elem> = s.iter().zip(&contributions[ci].0).map(|(&u, &v)| p.add(u, v)).collect();
                if parent.contains_key(&t) {
                    continue;
                }
                if parent.len() >= SUM_CAP {
                    capped = true;
                    break 'levels;
                }
                parent.insert(t.clone(), Some((s.clone(), ci)));
                if done(&t) {
                    found = Some(t);
                    break 'levels;
                }
                next.push(t);
            }
        }
        if next.is_empty() {
            exhausted = true;
            break;
        }
        frontier = next;
    }
    if let Some(mut s) = found {
        let mut pairs = Vec::new();
        while let Some(Some((prev, ci))) = parent.get(&s).cloned() {
            let (_, y, fi) = &contributions[ci];
            pairs.push((*y, maps[*fi].map.clone()));
            s = prev;
        }
        pairs.reverse();
        let n = pairs.len();
        return Ok(DualBasisSearch {
            verdict: Verdict::True,
            basis: Some(DualBasis { side, pairs }),
            detail: format!("dual basis with {n} pair{}", if n == 1 { "" } else { "s" }),
        });
    }
    let (verdict, detail) = if exhausted {
        (Verdict::False, format!("all sums of the {} maximal contributions explored; none surpasses the identity", maximal.len()))
    } else if capped {
        (Verdict::Indeterminate, format!("sum cap of {SUM_CAP} reached"))
    } else {
        (Verdict::Indeterminate, format!("no dual basis with at most {t_max} pairs"))
    };
    Ok(DualBasisSearch { verdict, basis: None, detail })
}

/// For every ≼-onto homomorphism `h: M → M''` and ≼-morphism `f: P → M''`
/// between modules of `pool` (over the same ground as `p`), looks for a
/// ≼-morphism `g: P → M` with `f ≼ h∘g`. `work_bound` caps the number of
/// `(h, f, g)` triples compared.
///
/// `h` must be additive: with merely subadditive `h` even the regular module
/// fails, e.g. over the symmetrized Boolean `h = (0,1),(1,0) ↦ (1,1) ↦ 0` is
/// ≼-onto but the identity has no lift, as any lift must send the
/// negation-fixed `(1,1)` to a negation-fixed element.
pub fn check_lifting(
    p: &FiniteModuleSystem,
    pool: &[FiniteModuleSystem],
    work_bound: u64,
    opts: SearchOptions,
) -> Result<LiftingCheck, SearchError> {
    let side = module_side(p);
    let ground = p
        .ground(side)
        .ok_or_else(|| SearchError::Precondition("module has no scalar action".into()))?;
    let pool: Vec<&FiniteModuleSystem> = pool
        .iter()
        .filter(|m| m.ground(side).is_some_and(|g| same_ground(g, ground)))
        .collect();
    let kind = MorphismKind::PreceqMorphism;
    let mut pairs = 0usize;
    let mut work = 0u64;
    for &m in &pool {
        let lifts = enumerate_morphisms(p, m, side, kind, opts)?;
        for &m2 in &pool {
            let hs: Vec<_> = enumerate_morphisms(m, m2, side, MorphismKind::Homomorphism, opts)?
                .into_iter()
                .filter(|h| is_preceq_onto(h).holds)
                .collect();
            if hs.is_empty() {
                continue;
            }
            let fs = enumerate_morphisms(p, m2, side, kind, opts)?;
            for (hi, h) in hs.iter().enumerate() {
                for (fi, f) in fs.iter().enumerate() {
                    pairs += 1;
                    let lifted = lifts.iter().any(|g| {
                        work += 1;
                        p.elements().all(|x| m2.preceq(f.apply(x), h.apply(g.apply(x))))
                    });
                    if !lifted {
                        return Ok(LiftingCheck {
                            verdict: Verdict::False,
                            pairs,
                            counterexample: Some(format!(
                                "h #{hi} into a module of size {}, f #{fi}: no ≼-lift",
                                m2.size()
                            )),
                            detail: format!("f = {:?}", f.pairs()),
                        });
                    }
                    if work > work_bound {
                        return Ok(LiftingCheck {
                            verdict: Verdict::Indeterminate,
                            pairs,
                            counterexample: None,
                            detail: format!("work bound {work_bound} reached"),
                        });
                    }
                }
            }
        }
    }
    Ok(LiftingCheck {
        verdict: Verdict::True,
        pairs,
        counterexample: None,
        detail: format!("{pairs} (h, f) pairs over {} pool modules lift", pool.len()),
    })
}

/// Runs both projectivity checks.
pub fn check_preceq_projective(
    p: &FiniteModuleSystem,
    pool: &[FiniteModuleSystem],
    t_max: usize,
    work_bound: u64,
    opts: SearchOptions,
) -> Result<Projectivity, SearchError> {
    Ok(Projectivity {
        dual_basis: find_dual_basis(p, t_max, opts)?,
        lifting: check_lifting(p, pool, work_bound, opts)?,
    })
}
