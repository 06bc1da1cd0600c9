//! Free module systems and the negated tensor product `M₁ ⊗_A M₂`.
//!
//! The tensor product is the commutative monoid on pairs `(x₁, x₂)` modulo
//! the congruence generated by sum splitting (including empty sums, so
//! `0 ⊗ x = x ⊗ 0 = 0`), balancing `(x₁a, x₂) ~ (x₁, ax₂)`, the double
//! negation pair and the transfer axiom `((-)x) ⊗ y = x ⊗ ((-)y)`.
//! Sum splitting reduces everything to pairs of additive generators, so the
//! quotient is a finitely presented commutative monoid and is enumerated
//! by [`crate::coset`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::carrier::{decompositions, generating_set};
use crate::coset::{self, CayleyTable, Presentation, Word};
use crate::error::{BilinearityError, SearchError};
use crate::module::{same_ground, Action, FiniteModuleSystem, ModuleParts, Side};
use crate::morphism::{Morphism, MorphismKind};
use crate::negation::NegationMap;
use crate::semiring::Elem;
use crate::surpass::SurpassRelation;
use crate::system::SystemDef;

pub const DEFAULT_CLASS_CAP: usize = 20_000;

/// A finite linear combination of base symbols, stored as the coefficient
/// of every symbol (zero coefficients included), which is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum {
    pub coefficients: Vec<Elem>,
}

impl FormalSum {
    pub fn render(&self, base: &[String], ground: &SystemDef) -> String {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .zip(base)
            .filter(|(&c, _)| c != ground.zero())
            .map(|(&c, b)| format!("{}{}", ground.name(c), b))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Formal `T₀`-combinations of `base`, closed under pointwise addition and
/// both scalar actions. Tangibles are `t·b` for tangible `t`.
pub fn free_module(
    base: &[String],
    ground: &Arc<SystemDef>,
    cap: usize,
) -> Result<FiniteModuleSystem, SearchError> {
    let k = base.len();
    let zero = FormalSum {
        coefficients: vec![ground.zero(); k],
    };
    let monomial = |i: usize, c: Elem| {
        let mut s = zero.clone();
        s.coefficients[i] = c;
        s
    };
    let gens: Vec<FormalSum> = (0..k)
        .flat_map(|i| ground.tangibles().into_iter().map(move |t| (i, t)))
        .map(|(i, t)| monomial(i, t))
        .collect();
    let mut sums = vec![zero.clone()];
    let mut index: HashMap<FormalSum, Elem> = HashMap::from([(zero.clone(), 0)]);
    let mut head = 0;
    while head < sums.len() {
        for g in &gens {
            let s = FormalSum {
                coefficients: sums[head]
                    .coefficients
                    .iter()
                    .zip(&g.coefficients)
                    .map(|(&a, &b)| ground.add(a, b))
                    .collect(),
            };
            if !index.contains_key(&s) {
                if sums.len() >= cap {
                    return Err(SearchError::FreeOverflow {
                        cap,
                        reached: sums.len() + 1,
                    });
                }
                index.insert(s.clone(), sums.len());
                sums.push(s);
            }
        }
        head += 1;
    }
    let n = sums.len();
    let mut add = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let s = FormalSum {
                coefficients: sums[x]
                    .coefficients
                    .iter()
                    .zip(&sums[y].coefficients)
                    .map(|(&a, &b)| ground.add(a, b))
                    .collect(),
            };
            add.push(index[&s]);
        }
    }
    let closed = |f: &dyn Fn(Elem) -> Elem| -> Result<Vec<Elem>, SearchError> {
        (0..n)
            .map(|x| {
                let s = FormalSum {
                    coefficients: sums[x].coefficients.iter().map(|&c| f(c)).collect(),
                };
                index.get(&s).copied().ok_or_else(|| {
                    SearchError::Precondition("tangibles do not generate the ground additively".into())
                })
            })
            .collect()
    };
    let negation = NegationMap::new(closed(&|c| ground.neg(c))?).expect("pointwise involution");
    let mut left = Vec::with_capacity(ground.size() * n);
    let mut right = Vec::with_capacity(ground.size() * n);
    for a in 0..ground.size() {
        left.extend(closed(&|c| ground.mul(a, c))?);
        right.extend(closed(&|c| ground.mul(c, a))?);
    }
    let tangibles: Vec<Elem> = gens.iter().map(|g| index[g]).collect();
    let surpass = SurpassRelation::from_fn(n, |x, y| {
        sums[x]
            .coefficients
            .iter()
            .zip(&sums[y].coefficients)
            .all(|(&a, &b)| ground.preceq(a, b))
    });
    Ok(FiniteModuleSystem::new(ModuleParts {
        names: sums.iter().map(|s| s.render(base, ground)).collect(),
        zero: 0,
        add,
        tangibles,
        negation,
        surpass: Some(surpass),
        left: Some(Action::new(ground.clone(), left, n).expect("sized above")),
        right: Some(Action::new(ground.clone(), right, n).expect("sized above")),
    })
    .expect("free module tables are well formed"))
}

/// The computed quotient together with the data needed to map into and
/// out of it.
#[derive(Debug, Clone)]
pub struct TensorPresentation {
    pub left: FiniteModuleSystem,
    pub right: FiniteModuleSystem,
    pub ground: Arc<SystemDef>,
    pub module: FiniteModuleSystem,
    simple: Vec<Elem>,
    representatives: Vec<Vec<(Elem, Elem)>>,
}

impl TensorPresentation {
    /// Class of `x₁ ⊗ x₂`.
    pub fn simple_tensor(&self, x1: Elem, x2: Elem) -> Elem {
        self.simple[x1 * self.right.size() + x2]
    }

    pub fn simple_table(&self) -> &[Elem] {
        &self.simple
    }

    /// A sum of simple tensors of generators representing `class`.
    pub fn representative(&self, class: Elem) -> &[(Elem, Elem)] {
        &self.representatives[class]
    }

    pub fn classes(&self) -> usize {
        self.module.size()
    }
}

struct Setup<'a> {
    m1: &'a FiniteModuleSystem,
    m2: &'a FiniteModuleSystem,
    g1: Vec<Elem>,
    g2: Vec<Elem>,
    d1: Vec<Vec<usize>>,
    d2: Vec<Vec<usize>>,
}

impl Setup<'_> {
    fn gen(&self, i: usize, j: usize) -> u32 {
        (i * self.g2.len() + j) as u32
    }

    /// Word of `Σ_{i ∈ u, j ∈ v} g1[i] ⊗ g2[j]`, sorted.
    fn product(&self, u: &[usize], v: &[usize]) -> Word {
        let mut w: Word = u
            .iter()
            .flat_map(|&i| v.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.gen(i, j))
            .collect();
        w.sort_unstable();
        w
    }

    fn pair_word(&self, x1: Elem, x2: Elem) -> Word {
        self.product(&self.d1[x1], &self.d2[x2])
    }

    fn relations(&self, ground: &SystemDef) -> Vec<(Word, Word)> {
        let (m1, m2) = (self.m1, self.m2);
        let mut rel = coset::commutation(self.g1.len() * self.g2.len());
        for x in m1.elements() {
            for (i, &g) in self.g1.iter().enumerate() {
                let mut joined = self.d1[x].clone();
                joined.push(i);
                let lhs = &self.d1[m1.add(x, g)];
                for j in 0..self.g2.len() {
                    rel.push((self.product(lhs, &[j]), self.product(&joined, &[j])));
                }
            }
        }
        for y in m2.elements() {
            for (j, &h) in self.g2.iter().enumerate() {
                let mut joined = self.d2[y].clone();
                joined.push(j);
                let lhs = &self.d2[m2.add(y, h)];
                for i in 0..self.g1.len() {
                    rel.push((self.product(&[i], lhs), self.product(&[i], &joined)));
                }
            }
        }
        for (i, &g) in self.g1.iter().enumerate() {
            for (j, &h) in self.g2.iter().enumerate() {
                for a in 0..ground.size() {
                    let xa = m1.act(Side::Right, a, g);
                    let ay = m2.act(Side::Left, a, h);
                    rel.push((self.product(&self.d1[xa], &[j]), self.product(&[i], &self.d2[ay])));
                }
                let (ng, nh) = (&self.d1[m1.neg(g)], &self.d2[m2.neg(h)]);
                rel.push((self.product(&[i], &[j]), self.product(ng, nh)));
                rel.push((self.product(ng, &[j]), self.product(&[i], nh)));
            }
        }
        let commutations = coset::commutation(self.g1.len() * self.g2.len()).len();
        let mut rest: Vec<(Word, Word)> = rel
            .split_off(commutations)
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        rest.sort();
        rest.dedup();
        rel.extend(rest);
        rel
    }
}

/// Evaluates a map given on generators along every Cayley edge; returns
/// the per-class values, or the first class where they disagree.
fn induced(
    table: &CayleyTable,
    target_zero: Elem,
    target_add: impl Fn(Elem, Elem) -> Elem,
    on_gen: &[Elem],
) -> Result<Vec<Elem>, (usize, usize)> {
    let values: Vec<Elem> = table
        .words
        .iter()
        .map(|w| w.iter().fold(target_zero, |acc, &s| target_add(acc, on_gen[s as usize])))
        .collect();
    for n in 0..table.size() {
        for s in 0..table.gens {
            if values[table.step(n, s)] != target_add(values[n], on_gen[s]) {
                return Err((n, s));
            }
        }
    }
    Ok(values)
}

/// `m1 ⊗_ground m2` for a right ground-module `m1` and a left ground-module
/// `m2`. Left scalars of `m1` and right scalars of `m2` carry over.
pub fn tensor_product(
    m1: &FiniteModuleSystem,
    m2: &FiniteModuleSystem,
    ground: &Arc<SystemDef>,
    cap: usize,
) -> Result<TensorPresentation, SearchError> {
    match (m1.ground(Side::Right), m2.ground(Side::Left)) {
        (Some(a), Some(b)) if same_ground(a, ground) && same_ground(b, ground) => {}
        _ => {
            return Err(SearchError::Precondition(
                "the left factor needs a right action and the right factor a left action by the ground".into(),
            ))
        }
    }
    let g1 = generating_set(m1);
    let g2 = generating_set(m2);
    let unwrap = |d: Vec<Option<Vec<usize>>>| -> Vec<Vec<usize>> {
        d.into_iter().map(|w| w.expect("generating set reaches everything")).collect()
    };
    let setup = Setup {
        m1,
        m2,
        d1: unwrap(decompositions(m1, &g1)),
        d2: unwrap(decompositions(m2, &g2)),
        g1,
        g2,
    };
    let k = setup.g1.len() * setup.g2.len();
    let table = coset::enumerate(
        &Presentation {
            gens: k,
            relations: setup.relations(ground),
        },
        cap,
    )?;
    let n = table.size();
    let gen_pair = |s: usize| (setup.g1[s / setup.g2.len()], setup.g2[s % setup.g2.len()]);
    let word_class = |w: &[u32]| table.trace(0, w);

    let mut add = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(table.add(a, b));
        }
    }
    let add_fn = |a: Elem, b: Elem| add[a * n + b];

    let simple: Vec<Elem> = m1
        .elements()
        .flat_map(|x| m2.elements().map(move |y| (x, y)))
        .map(|(x, y)| word_class(&setup.pair_word(x, y)))
        .collect();

    let neg_gen: Vec<Elem> = (0..k)
        .map(|s| {
            let (g, h) = gen_pair(s);
            word_class(&setup.pair_word(m1.neg(g), h))
        })
        .collect();
    let neg = induced(&table, 0, add_fn, &neg_gen)
        .map_err(|_| SearchError::Precondition("negation is not well defined on the tensor classes".into()))?;
    let negation = NegationMap::new(neg)
        .map_err(|_| SearchError::Precondition("negation on the tensor classes is not a permutation".into()))?;

    let carried = |side: Side| -> Result<Option<Action>, SearchError> {
        let (factor, on_left) = match side {
            Side::Left => (m1, true),
            Side::Right => (m2, false),
        };
        let Some(act) = factor.action(side) else { return Ok(None) };
        let mut table_out = Vec::with_capacity(act.ground.size() * n);
        for c in 0..act.ground.size() {
            let on_gen: Vec<Elem> = (0..k)
                .map(|s| {
                    let (g, h) = gen_pair(s);
                    let w = if on_left {
                        setup.pair_word(m1.act(Side::Left, c, g), h)
                    } else {
                        setup.pair_word(g, m2.act(Side::Right, c, h))
                    };
                    word_class(&w)
                })
                .collect();
            let values = induced(&table, 0, add_fn, &on_gen).map_err(|_| {
                SearchError::Precondition(format!(
                    "{} action does not pass to the tensor classes (bimodule law fails)",
                    side.as_str()
                ))
            })?;
            table_out.extend(values);
        }
        Ok(Some(Action::new(act.ground.clone(), table_out, n).expect("sized above")))
    };
    let left = carried(Side::Left)?;
    let right = carried(Side::Right)?;

    let mut tangibles: Vec<Elem> = m1
        .tangibles()
        .into_iter()
        .flat_map(|x| m2.tangibles().into_iter().map(move |y| (x, y)))
        .map(|(x, y)| simple[x * m2.size() + y])
        .collect();
    tangibles.sort_unstable();
    tangibles.dedup();

    let representatives: Vec<Vec<(Elem, Elem)>> = table
        .words
        .iter()
        .map(|w| w.iter().map(|&s| gen_pair(s as usize)).collect())
        .collect();
    let names: Vec<String> = representatives
        .iter()
        .map(|rep| {
            if rep.is_empty() {
                "0".to_string()
            } else {
                let terms: Vec<String> = rep
                    .iter()
                    .map(|&(x, y)| format!("{}⊗{}", m1.name(x), m2.name(y)))
                    .collect();
                terms.join(" + ")
            }
        })
        .collect();

    let module = FiniteModuleSystem::new(ModuleParts {
        names,
        zero: 0,
        add,
        tangibles,
        negation,
        surpass: None,
        left,
        right,
    })
    .map_err(|e| SearchError::Precondition(format!("tensor classes: {e}")))?;
    Ok(TensorPresentation {
        left: m1.clone(),
        right: m2.clone(),
        ground: ground.clone(),
        module,
        simple,
        representatives,
    })
}

/// Checks that `psi: M₁ × M₂ → N` respects every generator of the tensor
/// congruence, reporting the first violated one.
pub fn validate_bilinear(
    psi: &[Elem],
    m1: &FiniteModuleSystem,
    m2: &FiniteModuleSystem,
    target: &FiniteModuleSystem,
    ground: &SystemDef,
) -> Result<(), BilinearityError> {
    let n2 = m2.size();
    if psi.len() != m1.size() * n2 || psi.iter().any(|&v| v >= target.size()) {
        return Err(BilinearityError {
            generator: "shape".into(),
            witness: format!("table of {} entries for {}×{} pairs", psi.len(), m1.size(), n2),
        });
    }
    let p = |x: Elem, y: Elem| psi[x * n2 + y];
    let fail = |generator: &str, names: &[&str]| BilinearityError {
        generator: generator.into(),
        witness: format!("({})", names.join(", ")),
    };
    for x in m1.elements() {
        for y in m2.elements() {
            if (x == m1.zero() || y == m2.zero()) && p(x, y) != target.zero() {
                return Err(fail("zero", &[m1.name(x), m2.name(y)]));
            }
            for x2 in m1.elements() {
                if p(m1.add(x, x2), y) != target.add(p(x, y), p(x2, y)) {
                    return Err(fail("additive.left", &[m1.name(x), m1.name(x2), m2.name(y)]));
                }
            }
            for y2 in m2.elements() {
                if p(x, m2.add(y, y2)) != target.add(p(x, y), p(x, y2)) {
                    return Err(fail("additive.right", &[m1.name(x), m2.name(y), m2.name(y2)]));
                }
            }
            for a in 0..ground.size() {
                if p(m1.act(Side::Right, a, x), y) != p(x, m2.act(Side::Left, a, y)) {
                    return Err(fail("balanced", &[m1.name(x), ground.name(a), m2.name(y)]));
                }
            }
            if p(m1.neg(x), m2.neg(y)) != p(x, y) {
                return Err(fail("double_negation", &[m1.name(x), m2.name(y)]));
            }
            if p(m1.neg(x), y) != p(x, m2.neg(y)) {
                return Err(fail("negation_transfer", &[m1.name(x), m2.name(y)]));
            }
        }
    }
    Ok(())
}

/// The map `x₁ ⊗ x₂ ↦ psi(x₁, x₂)` on classes, as a homomorphism over
/// whichever scalar side the tensor and `target` share (left preferred).
pub fn factor_bilinear<'a>(
    psi: &[Elem],
    t: &'a TensorPresentation,
    target: &'a FiniteModuleSystem,
) -> Result<Morphism<'a>, BilinearityError> {
    validate_bilinear(psi, &t.left, &t.right, target, &t.ground)?;
    let n2 = t.right.size();
    let map: Vec<Elem> = (0..t.classes())
        .map(|c| {
            t.representative(c)
                .iter()
                .fold(target.zero(), |acc, &(x, y)| target.add(acc, psi[x * n2 + y]))
        })
        .collect();
    for x in t.left.elements() {
        for y in t.right.elements() {
            let c = t.simple_tensor(x, y);
            if map[c] != psi[x * n2 + y] {
                return Err(BilinearityError {
                    generator: "factorization".into(),
                    witness: format!("({}, {})", t.left.name(x), t.right.name(y)),
                });
            }
        }
    }
    for a in t.module.elements() {
        for b in t.module.elements() {
            if map[t.module.add(a, b)] != target.add(map[a], map[b]) {
                return Err(BilinearityError {
                    generator: "well_defined".into(),
                    witness: format!("({}, {})", t.module.name(a), t.module.name(b)),
                });
            }
        }
    }
    let shares = |side: Side| match (t.module.ground(side), target.ground(side)) {
        (Some(a), Some(b)) => same_ground(a, b),
        _ => false,
    };
    let side = if shares(Side::Left) || !shares(Side::Right) {
        Side::Left
    } else {
        Side::Right
    };
    Ok(Morphism {
        source: &t.module,
        target,
        map,
        kind: MorphismKind::Homomorphism,
        side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{make_boolean, make_supertropical, symmetrize};
    use crate::module::{direct_power, validate_module};
    use crate::morphism::validate_morphism;
    use crate::system::Triple;

    fn boolean() -> Arc<SystemDef> {
        Arc::new(SystemDef::with_circ(
            Triple::new(make_boolean(), NegationMap::identity(2)),
            false,
        ))
    }

    #[test]
    fn free_module_sizes() {
        let b = boolean();
        let s = Arc::new(symmetrize(&make_boolean()));
        let x = ["x".to_string()];
        let xy = ["x".to_string(), "y".to_string()];
        let f = free_module(&x, &b, 100).unwrap();
        assert_eq!(f.names(), ["0", "1x"]);
        assert_eq!(free_module(&xy, &b, 100).unwrap().size(), 4);
        let f = free_module(&x, &s, 100).unwrap();
        assert_eq!(f.size(), 4);
        assert!(f.index_of("(1,1)x").is_some());
        assert!(validate_module(&f).is_valid());
        assert!(matches!(
            free_module(&xy, &s, 10),
            Err(SearchError::FreeOverflow { cap: 10, .. })
        ));
    }

    #[test]
    fn regular_tensor_regular_has_four_classes() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        let t = tensor_product(&a, &a, &g, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(t.classes(), 4);
        let x = g.el("(1,0)");
        assert_eq!(t.simple_tensor(x, a.zero()), t.module.zero());
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(t.simple_tensor(a.neg(x), y), t.simple_tensor(x, a.neg(y)));
            }
        }
        assert!(validate_module(&t.module).is_valid(), "{}", validate_module(&t.module));
        let gr = &*g;
        let mul: Vec<Elem> = a.elements().flat_map(|x| a.elements().map(move |y| gr.mul(x, y))).collect();
        let f = factor_bilinear(&mul, &t, &a).unwrap();
        assert!(validate_morphism(&f).is_valid());
        let mut image = f.map.clone();
        image.sort_unstable();
        assert_eq!(image, a.elements().collect::<Vec<_>>());
    }

    #[test]
    fn cap_below_size_overflows() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        assert!(matches!(
            tensor_product(&a, &a, &g, 2),
            Err(SearchError::TensorOverflow { cap: 2, .. })
        ));
    }

    #[test]
    fn zero_factor_gives_one_class() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        let z = FiniteModuleSystem::zero_module(&g);
        assert_eq!(tensor_product(&a, &z, &g, 100).unwrap().classes(), 1);
        assert_eq!(tensor_product(&z, &a, &g, 100).unwrap().classes(), 1);
    }

    #[test]
    fn unbalanced_map_is_rejected() {
        let g = Arc::new(symmetrize(&make_boolean()));
        let a = FiniteModuleSystem::regular(&g);
        let t = tensor_product(&a, &a, &g, 100).unwrap();
        // (x, y) ↦ x for y ≠ 0: biadditive since addition is idempotent, but
        // (x·a, y) and (x, a·y) differ
        let psi: Vec<Elem> = a.elements().flat_map(|x| a.elements().map(move |y| if y == 0 { 0 } else { x })).collect();
        let err = factor_bilinear(&psi, &t, &a).unwrap_err();
        assert_eq!(err.generator, "balanced");
    }

    #[test]
    fn supertropical_tensor_square() {
        let g = Arc::new(make_supertropical(1).unwrap());
        let a = FiniteModuleSystem::regular(&g);
        let t = tensor_product(&a, &a, &g, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(t.classes(), a.size());
        let a2 = direct_power(&a, 2, 1000).unwrap();
        let t2 = tensor_product(&a, &a2, &g, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(t2.classes(), a2.size());
    }
}
