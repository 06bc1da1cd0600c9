//! The generalized 2×2 matrix semiring `[[A, M], [M', A']]` of a context.

use std::collections::HashMap;

use crate::error::SearchError;
use crate::module::Side;
use crate::negation::NegationMap;
use crate::report::{ValidationReport, Witness};
use crate::semiring::{Elem, FiniteSemiring};
use crate::surpass::SurpassRelation;
use crate::system::{SystemDef, Triple};

use super::context::MoritaContext;

/// Blocks `[a, x, x', a']` of `[[a x] [x' a']]`.
pub type Block = [Elem; 4];

/// Entrywise addition, negation and relation; multiplication
/// `[[a x] [x' a']]·[[b y] [y' b']] = [[ab + (x,y')  ay + xb'] [x'b + a'y'  [x',y] + a'b']]`.
/// The context axioms are not assumed: the product is whatever the tables say.
#[derive(Debug, Clone)]
pub struct MatrixSemiring {
    pub ctx: MoritaContext,
}

impl MatrixSemiring {
    pub fn new(ctx: MoritaContext) -> Self {
        MatrixSemiring { ctx }
    }

    fn radix(&self) -> [usize; 4] {
        let c = &self.ctx;
        [c.a.size(), c.m.size(), c.m_prime.size(), c.a_prime.size()]
    }

    /// Carrier size, saturating.
    pub fn size(&self) -> usize {
        self.radix().iter().fold(1usize, |acc, &r| acc.saturating_mul(r))
    }

    pub fn zero(&self) -> Block {
        let c = &self.ctx;
        [c.a.zero(), c.m.zero(), c.m_prime.zero(), c.a_prime.zero()]
    }

    pub fn one(&self) -> Block {
        let c = &self.ctx;
        [c.a.one(), c.m.zero(), c.m_prime.zero(), c.a_prime.one()]
    }

    pub fn add(&self, u: Block, v: Block) -> Block {
        let c = &self.ctx;
        [
            c.a.add(u[0], v[0]),
            c.m.add(u[1], v[1]),
            c.m_prime.add(u[2], v[2]),
            c.a_prime.add(u[3], v[3]),
        ]
    }

    pub fn mul(&self, u: Block, v: Block) -> Block {
        let c = &self.ctx;
        let [a, x, xp, ap] = u;
        let [b, y, yp, bp] = v;
        [
            c.a.add(c.a.mul(a, b), c.tau(x, yp)),
            c.m.add(c.m.act(Side::Left, a, y), c.m.act(Side::Right, bp, x)),
            c.m_prime.add(c.m_prime.act(Side::Right, b, xp), c.m_prime.act(Side::Left, ap, yp)),
            c.a_prime.add(c.tau_prime(xp, y), c.a_prime.mul(ap, bp)),
        ]
    }

    pub fn neg(&self, u: Block) -> Block {
        let c = &self.ctx;
        [c.a.neg(u[0]), c.m.neg(u[1]), c.m_prime.neg(u[2]), c.a_prime.neg(u[3])]
    }

    pub fn preceq(&self, u: Block, v: Block) -> bool {
        let c = &self.ctx;
        c.a.preceq(u[0], v[0])
            && c.m.preceq(u[1], v[1])
            && c.m_prime.preceq(u[2], v[2])
            && c.a_prime.preceq(u[3], v[3])
    }

    /// Nonzero with every block tangible or zero.
    pub fn is_tangible(&self, u: Block) -> bool {
        let c = &self.ctx;
        u != self.zero()
            && (u[0] == c.a.zero() || c.a.is_tangible(u[0]))
            && (u[1] == c.m.zero() || c.m.is_tangible(u[1]))
            && (u[2] == c.m_prime.zero() || c.m_prime.is_tangible(u[2]))
            && (u[3] == c.a_prime.zero() || c.a_prime.is_tangible(u[3]))
    }

    pub fn name(&self, u: Block) -> String {
        let c = &self.ctx;
        format!(
            "[[{} {}] [{} {}]]",
            c.a.name(u[0]),
            c.m.name(u[1]),
            c.m_prime.name(u[2]),
            c.a_prime.name(u[3])
        )
    }

    pub fn encode(&self, u: Block) -> Elem {
        let r = self.radix();
        ((u[0] * r[1] + u[1]) * r[2] + u[2]) * r[3] + u[3]
    }

    pub fn decode(&self, i: Elem) -> Block {
        let r = self.radix();
        [i / (r[1] * r[2] * r[3]), (i / (r[2] * r[3])) % r[1], (i / r[3]) % r[2], i % r[3]]
    }

    /// Zero and every matrix with exactly one nonzero block. By additivity in
    /// each block these span the carrier, so bi-additive laws checked on
    /// them hold everywhere.
    pub fn elementary(&self) -> Vec<Block> {
        let z = self.zero();
        let mut out = vec![z];
        for (k, &n) in self.radix().iter().enumerate() {
            for e in 0..n {
                if e != z[k] {
                    let mut u = z;
                    u[k] = e;
                    out.push(u);
                }
            }
        }
        out
    }

    /// The full table system, if it has at most `bound` elements.
    pub fn to_system(&self, bound: usize) -> Result<SystemDef, SearchError> {
        let n = self.size();
        if n > bound {
            return Err(SearchError::CarrierBound { size: n, bound });
        }
        let names: Vec<String> = (0..n).map(|i| self.name(self.decode(i))).collect();
        let d = |i| self.decode(i);
        let tangibles: Vec<Elem> = (0..n).filter(|&i| self.is_tangible(d(i))).collect();
        let semiring = FiniteSemiring::from_fn(
            names,
            self.encode(self.zero()),
            self.encode(self.one()),
            |i, j| self.encode(self.add(d(i), d(j))),
            |i, j| self.encode(self.mul(d(i), d(j))),
            &tangibles,
        )
        .map_err(|e| SearchError::Precondition(e.to_string()))?;
        let negation = NegationMap::new((0..n).map(|i| self.encode(self.neg(d(i)))).collect())
            .map_err(|e| SearchError::Precondition(e.to_string()))?;
        let surpass = SurpassRelation::from_fn(n, |i, j| self.preceq(d(i), d(j)));
        let t = self.ctx.a.t_surpassing && self.ctx.a_prime.t_surpassing;
        Ok(SystemDef::new(Triple::new(semiring, negation), surpass, t))
    }
}

/// Semiring laws and negation compatibility, evaluated on elementary
/// matrices (all of them for unary and binary laws, all triples for the
/// ternary ones). Axiom ids match those of the full semiring validator.
pub fn validate_matrix_semiring(ms: &MatrixSemiring) -> ValidationReport {
    let mut report = ValidationReport::new("matrix semiring");
    let el = ms.elementary();
    let (z, one) = (ms.zero(), ms.one());
    let nm = |u: Block| ms.name(u);

    let c = report.check("add.assoc", "(a+b)+c = a+(b+c)");
    for &u in &el {
        for &v in &el {
            let uv = ms.add(u, v);
            for &w in &el {
                c.require(ms.add(uv, w) == ms.add(u, ms.add(v, w)), || {
                    Witness::new([nm(u), nm(v), nm(w)], "addition not associative")
                });
            }
        }
    }
    let c = report.check("add.comm", "a+b = b+a");
    for &u in &el {
        for &v in &el {
            c.require(ms.add(u, v) == ms.add(v, u), || {
                Witness::new([nm(u), nm(v)], "addition not commutative")
            });
        }
    }
    let c = report.check("add.zero", "0+a = a");
    for &u in &el {
        c.require(ms.add(z, u) == u, || Witness::new([nm(u)], "zero is not an additive identity"));
    }
    // Products of elementary matrices are elementary, so associativity runs
    // on a product table.
    let index: HashMap<Block, usize> = el.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let k = el.len();
    let table: Vec<usize> = el
        .iter()
        .flat_map(|&u| el.iter().map(move |&v| (u, v)))
        .map(|(u, v)| index.get(&ms.mul(u, v)).copied().unwrap_or(usize::MAX))
        .collect();
    let prod = |i: usize, j: usize| -> Block {
        match table[i * k + j] {
            usize::MAX => ms.mul(el[i], el[j]),
            p => el[p],
        }
    };
    let c = report.check("mul.assoc", "(ab)c = a(bc)");
    for i in 0..k {
        for j in 0..k {
            let ij = table[i * k + j];
            for l in 0..k {
                let jl = table[j * k + l];
                let same = if ij != usize::MAX && jl != usize::MAX {
                    table[ij * k + l] == table[i * k + jl]
                        && (table[ij * k + l] != usize::MAX
                            || ms.mul(el[ij], el[l]) == ms.mul(el[i], el[jl]))
                } else {
                    ms.mul(prod(i, j), el[l]) == ms.mul(el[i], prod(j, l))
                };
                if !same {
                    let (u, v, w) = (el[i], el[j], el[l]);
                    let (lhs, rhs) = (ms.mul(ms.mul(u, v), w), ms.mul(u, ms.mul(v, w)));
                    c.fail(|| Witness::new([nm(u), nm(v), nm(w)], format!("{} ≠ {}", nm(lhs), nm(rhs))));
                }
            }
        }
    }
    let c = report.check("mul.one", "1a = a1 = a");
    for &u in &el {
        c.require(ms.mul(one, u) == u && ms.mul(u, one) == u, || {
            Witness::new([nm(u)], "one is not a multiplicative identity")
        });
    }
    let c = report.check("mul.zero", "0a = a0 = 0");
    for &u in &el {
        c.require(ms.mul(z, u) == z && ms.mul(u, z) == z, || {
            Witness::new([nm(u)], "zero is not absorbing")
        });
    }
    let c = report.check("distrib.left", "a(b+c) = ab+ac");
    for &u in &el {
        for &v in &el {
            for &w in &el {
                c.require(ms.mul(u, ms.add(v, w)) == ms.add(ms.mul(u, v), ms.mul(u, w)), || {
                    Witness::new([nm(u), nm(v), nm(w)], "left distributivity fails")
                });
            }
        }
    }
    let c = report.check("distrib.right", "(b+c)a = ba+ca");
    for &u in &el {
        for &v in &el {
            for &w in &el {
                c.require(ms.mul(ms.add(v, w), u) == ms.add(ms.mul(v, u), ms.mul(w, u)), || {
                    Witness::new([nm(u), nm(v), nm(w)], "right distributivity fails")
                });
            }
        }
    }
    let c = report.check("negation.action", "((-)a)b = (-)(ab) = a((-)b)");
    for &u in &el {
        for &v in &el {
            let p = ms.neg(ms.mul(u, v));
            c.require(ms.mul(ms.neg(u), v) == p && ms.mul(u, ms.neg(v)) == p, || {
                Witness::new([nm(u), nm(v)], "negation does not commute with the product")
            });
        }
    }
    report
}
