use crate::error::StructureError;
use crate::semiring::{check_table, Elem};

/// An involutive permutation of a carrier standing in for additive inverse.
/// Compatibility with the operations is checked by the validators, not here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegationMap {
    perm: Vec<Elem>,
}

impl NegationMap {
    pub fn new(perm: Vec<Elem>) -> Result<Self, StructureError> {
        let n = perm.len();
        check_table("negation", &perm, 1, n, n)?;
        let mut seen = vec![false; n];
        for &p in &perm {
            if std::mem::replace(&mut seen[p], true) {
                return Err(StructureError::Invalid(format!(
                    "negation is not a permutation: {p} has two preimages"
                )));
            }
        }
        Ok(NegationMap { perm })
    }

    pub fn identity(n: usize) -> Self {
        NegationMap {
            perm: (0..n).collect(),
        }
    }

    /// Builds the permutation from `(a, (-)a)` pairs; unlisted elements are fixed.
    pub fn from_pairs(n: usize, pairs: &[(Elem, Elem)]) -> Result<Self, StructureError> {
        let mut perm: Vec<Elem> = (0..n).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(StructureError::OutOfRange {
                    what: "negation".into(),
                    index: a.max(b),
                    size: n,
                });
            }
            perm[a] = b;
        }
        Self::new(perm)
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.perm[e]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Non-fixed pairs `(a, (-)a)` with `a < (-)a`, the serialized form.
    pub fn moved_pairs(&self) -> Vec<(Elem, Elem)> {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i != p)
            .map(|(i, &p)| (i, p))
            .collect()
    }
}
