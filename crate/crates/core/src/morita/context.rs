//! Morita contexts `(A, A', M, M', τ, τ')` and the standard instances.

use std::sync::Arc;

use crate::error::StructureError;
use crate::module::{direct_power, same_ground, validate_module, Action, FiniteModuleSystem, Side};
use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::{Elem, FiniteSemiring};
use crate::surpass::SurpassRelation;
use crate::system::{validate_system, SystemDef, Triple};

/// `m` is an `(A, A')`-bimodule, `m_prime` an `(A', A)`-bimodule,
/// `tau[x·|M'| + x'] = (x, x')` and `tau_prime[x'·|M| + x] = [x', x]`.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    pub a: Arc<SystemDef>,
    pub a_prime: Arc<SystemDef>,
    pub m: FiniteModuleSystem,
    pub m_prime: FiniteModuleSystem,
    pub tau: Vec<Elem>,
    pub tau_prime: Vec<Elem>,
}

impl MoritaContext {
    pub fn new(
        a: Arc<SystemDef>,
        a_prime: Arc<SystemDef>,
        m: FiniteModuleSystem,
        m_prime: FiniteModuleSystem,
        tau: Vec<Elem>,
        tau_prime: Vec<Elem>,
    ) -> Result<Self, StructureError> {
        let wants = |what: &str, module: &FiniteModuleSystem, side: Side, ground: &Arc<SystemDef>| {
            match module.ground(side) {
                Some(g) if same_ground(g, ground) => Ok(()),
                _ => Err(StructureError::Invalid(format!(
                    "{what} needs a {} action by its declared ground",
                    side.as_str()
                ))),
            }
        };
        wants("M", &m, Side::Left, &a)?;
        wants("M", &m, Side::Right, &a_prime)?;
        wants("M'", &m_prime, Side::Left, &a_prime)?;
        wants("M'", &m_prime, Side::Right, &a)?;
        crate::semiring::check_table("tau", &tau, m.size(), m_prime.size(), a.size())?;
        crate::semiring::check_table("tau'", &tau_prime, m_prime.size(), m.size(), a_prime.size())?;
        Ok(MoritaContext { a, a_prime, m, m_prime, tau, tau_prime })
    }

    /// `(x, x')`.
    #[inline]
    pub fn tau(&self, x: Elem, xp: Elem) -> Elem {
        self.tau[x * self.m_prime.size() + xp]
    }

    /// `[x', x]`.
    #[inline]
    pub fn tau_prime(&self, xp: Elem, x: Elem) -> Elem {
        self.tau_prime[xp * self.m.size() + x]
    }

    /// `(A', A, M', M, τ', τ)`.
    pub fn swap(&self) -> MoritaContext {
        MoritaContext {
            a: self.a_prime.clone(),
            a_prime: self.a.clone(),
            m: self.m_prime.clone(),
            m_prime: self.m.clone(),
            tau: self.tau_prime.clone(),
            tau_prime: self.tau.clone(),
        }
    }
}

/// Bilinearity of a pairing `P × Q → R` where `P` is a left `R`-module and
/// `Q` a right `R`-module, balanced over the ground `S` acting on `P` from
/// the right and on `Q` from the left.
fn check_pairing(
    report: &mut ValidationReport,
    id: &str,
    p: &FiniteModuleSystem,
    q: &FiniteModuleSystem,
    r: &SystemDef,
    s: &SystemDef,
    pair: impl Fn(Elem, Elem) -> Elem,
) {
    let pn = |x: Elem| p.name(x).to_string();
    let qn = |x: Elem| q.name(x).to_string();
    let chk = report.check(format!("{id}.zero"), "pairing with zero is zero");
    for x in p.elements() {
        for y in q.elements() {
            if x == p.zero() || y == q.zero() {
                chk.require(pair(x, y) == r.zero(), || Witness::new([pn(x), qn(y)], "nonzero value"));
            }
        }
    }
    let chk = report.check(format!("{id}.additive.left"), "additive in the first argument");
    for x in p.elements() {
        for x2 in p.elements() {
            for y in q.elements() {
                chk.require(pair(p.add(x, x2), y) == r.add(pair(x, y), pair(x2, y)), || {
                    Witness::new([pn(x), pn(x2), qn(y)], "not additive")
                });
            }
        }
    }
    let chk = report.check(format!("{id}.additive.right"), "additive in the second argument");
    for x in p.elements() {
        for y in q.elements() {
            for y2 in q.elements() {
                chk.require(pair(x, q.add(y, y2)) == r.add(pair(x, y), pair(x, y2)), || {
                    Witness::new([pn(x), qn(y), qn(y2)], "not additive")
                });
            }
        }
    }
    let chk = report.check(format!("{id}.linear.left"), "pair(a·x, y) = a·pair(x, y)");
    for a in 0..r.size() {
        for x in p.elements() {
            for y in q.elements() {
                chk.require(pair(p.act(Side::Left, a, x), y) == r.mul(a, pair(x, y)), || {
                    Witness::new([r.name(a).to_string(), pn(x), qn(y)], "not left linear")
                });
            }
        }
    }
    let chk = report.check(format!("{id}.linear.right"), "pair(x, y·a) = pair(x, y)·a");
    for a in 0..r.size() {
        for x in p.elements() {
            for y in q.elements() {
                chk.require(pair(x, q.act(Side::Right, a, y)) == r.mul(pair(x, y), a), || {
                    Witness::new([pn(x), qn(y), r.name(a).to_string()], "not right linear")
                });
            }
        }
    }
    let chk = report.check(format!("{id}.balanced"), "pair(x·s, y) = pair(x, s·y)");
    for c in 0..s.size() {
        for x in p.elements() {
            for y in q.elements() {
                chk.require(pair(p.act(Side::Right, c, x), y) == pair(x, q.act(Side::Left, c, y)), || {
                    Witness::new([pn(x), s.name(c).to_string(), qn(y)], "not balanced")
                });
            }
        }
    }
    let chk = report.check(format!("{id}.negation"), "pair((-)x, y) = (-)pair(x, y) = pair(x, (-)y)");
    for x in p.elements() {
        for y in q.elements() {
            let v = r.neg(pair(x, y));
            chk.require(pair(p.neg(x), y) == v && pair(x, q.neg(y)) == v, || {
                Witness::new([pn(x), qn(y)], "negation not respected")
            });
        }
    }
}

/// Component validity, bilinearity of both pairings and the two
/// associativity axioms `(x,x')y = x[x',y]` and `x'(x,y') = [x',x]y'`.
pub fn validate_context(ctx: &MoritaContext) -> ValidationReport {
    let mut report = ValidationReport::new("Morita context");
    report.absorb("A", validate_system(&ctx.a));
    if !Arc::ptr_eq(&ctx.a, &ctx.a_prime) {
        report.absorb("A'", validate_system(&ctx.a_prime));
    }
    report.absorb("M", validate_module(&ctx.m));
    report.absorb("M'", validate_module(&ctx.m_prime));
    let (m, mp) = (&ctx.m, &ctx.m_prime);
    check_pairing(&mut report, "tau", m, mp, &ctx.a, &ctx.a_prime, |x, xp| ctx.tau(x, xp));
    check_pairing(&mut report, "tau'", mp, m, &ctx.a_prime, &ctx.a, |xp, x| ctx.tau_prime(xp, x));

    let chk = report.check("axiom.i", "(x,x')y = x[x',y]");
    for x in m.elements() {
        for xp in mp.elements() {
            let t = ctx.tau(x, xp);
            for y in m.elements() {
                let lhs = m.act(Side::Left, t, y);
                let rhs = m.act(Side::Right, ctx.tau_prime(xp, y), x);
                chk.require(lhs == rhs, || {
                    Witness::new(
                        [m.name(x), mp.name(xp), m.name(y)],
                        format!("{} ≠ {}", m.name(lhs), m.name(rhs)),
                    )
                });
            }
        }
    }
    let chk = report.check("axiom.ii", "x'(x,y') = [x',x]y'");
    for xp in mp.elements() {
        for x in m.elements() {
            let t = ctx.tau_prime(xp, x);
            for yp in mp.elements() {
                let lhs = mp.act(Side::Right, ctx.tau(x, yp), xp);
                let rhs = mp.act(Side::Left, t, yp);
                chk.require(lhs == rhs, || {
                    Witness::new(
                        [mp.name(xp), m.name(x), mp.name(yp)],
                        format!("{} ≠ {}", mp.name(lhs), mp.name(rhs)),
                    )
                });
            }
        }
    }
    report
}

/// `A` over itself: `M = M' = A`, both pairings the multiplication.
pub fn trivial_context(a: &Arc<SystemDef>) -> MoritaContext {
    let m = FiniteModuleSystem::regular(a);
    let n = a.size();
    let mul: Vec<Elem> = (0..n * n).map(|i| a.mul(i / n, i % n)).collect();
    MoritaContext::new(a.clone(), a.clone(), m.clone(), m, mul.clone(), mul)
        .expect("regular bimodule fits")
}

/// Mixed-radix index of a 2×2 matrix `[[e0, e1], [e2, e3]]`.
pub fn mat2_index(n: usize, e: [Elem; 4]) -> Elem {
    ((e[0] * n + e[1]) * n + e[2]) * n + e[3]
}

pub fn mat2_entries(n: usize, i: Elem) -> [Elem; 4] {
    [i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n]
}

/// 2×2 matrices over `a` with entrywise negation and relation; tangibles are
/// the nonzero matrices with entries in `T ∪ {0}`.
pub fn mat2(a: &SystemDef) -> SystemDef {
    let n = a.size();
    let size = n.pow(4);
    let e = |i: Elem| mat2_entries(n, i);
    let names: Vec<String> = (0..size)
        .map(|i| {
            let [p, q, r, s] = e(i).map(|x| a.name(x).to_string());
            format!("[[{p} {q}] [{r} {s}]]")
        })
        .collect();
    let add = |i: Elem, j: Elem| {
        let (x, y) = (e(i), e(j));
        mat2_index(n, [0, 1, 2, 3].map(|k| a.add(x[k], y[k])))
    };
    let mul = |i: Elem, j: Elem| {
        let (x, y) = (e(i), e(j));
        let dot = |r: usize, c: usize| a.add(a.mul(x[2 * r], y[c]), a.mul(x[2 * r + 1], y[2 + c]));
        mat2_index(n, [dot(0, 0), dot(0, 1), dot(1, 0), dot(1, 1)])
    };
    let t0 = |x: Elem| x == a.zero() || a.is_tangible(x);
    let tangibles: Vec<Elem> = (1..size).filter(|&i| i != mat2_index(n, [a.zero(); 4]) && e(i).iter().all(|&x| t0(x))).collect();
    let zero = mat2_index(n, [a.zero(); 4]);
    let one = mat2_index(n, [a.one(), a.zero(), a.zero(), a.one()]);
    let semiring = FiniteSemiring::from_fn(names, zero, one, add, mul, &tangibles)
        .expect("matrix tables are well formed");
    let negation = NegationMap::new((0..size).map(|i| mat2_index(n, e(i).map(|x| a.neg(x)))).collect())
        .expect("entrywise involution");
    let surpass = SurpassRelation::from_fn(size, |i, j| {
        let (x, y) = (e(i), e(j));
        (0..4).all(|k| a.preceq(x[k], y[k]))
    });
    SystemDef::new(Triple::new(semiring, negation), surpass, a.t_surpassing)
}

/// `(A, Mat₂(A), A^(1×2), A^(2×1), dot product, outer product)`.
pub fn row_column_context(a: &Arc<SystemDef>) -> MoritaContext {
    let n = a.size();
    let mat = Arc::new(mat2(a));
    let regular = FiniteModuleSystem::regular(a);
    let pairs = direct_power(&regular, 2, usize::MAX).expect("n² fits");
    let vec2 = |c: Elem| [c / n, c % n];
    let enc = |v: [Elem; 2]| v[0] * n + v[1];
    let size = n * n;
    // row · matrix and matrix · column
    let row_act = Action::from_fn(mat.clone(), size, |mi, r| {
        let (x, m) = (vec2(r), mat2_entries(n, mi));
        enc([
            a.add(a.mul(x[0], m[0]), a.mul(x[1], m[2])),
            a.add(a.mul(x[0], m[1]), a.mul(x[1], m[3])),
        ])
    });
    let col_act = Action::from_fn(mat.clone(), size, |mi, c| {
        let (y, m) = (vec2(c), mat2_entries(n, mi));
        enc([
            a.add(a.mul(m[0], y[0]), a.mul(m[1], y[1])),
            a.add(a.mul(m[2], y[0]), a.mul(m[3], y[1])),
        ])
    });
    let rows = pairs.clone().with_action(Side::Right, row_act).expect("sized");
    let cols = pairs.with_action(Side::Left, col_act).expect("sized");
    let tau: Vec<Elem> = (0..size * size)
        .map(|i| {
            let (x, y) = (vec2(i / size), vec2(i % size));
            a.add(a.mul(x[0], y[0]), a.mul(x[1], y[1]))
        })
        .collect();
    let tau_prime: Vec<Elem> = (0..size * size)
        .map(|i| {
            let (y, x) = (vec2(i / size), vec2(i % size));
            mat2_index(n, [a.mul(y[0], x[0]), a.mul(y[0], x[1]), a.mul(y[1], x[0]), a.mul(y[1], x[1])])
        })
        .collect();
    MoritaContext::new(a.clone(), mat, rows, cols, tau, tau_prime).expect("row/column context fits")
}
