use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinatorics::IndexTuple;
use crate::exact::{Poly, VariableRegistry};

/// Sparse vector of `V^{⊗n}` in the basis `v_bi`; zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    reg: Arc<VariableRegistry>,
    terms: BTreeMap<IndexTuple, Poly>,
}

impl TensorVector {
    pub fn zero(reg: &Arc<VariableRegistry>) -> Self {
        TensorVector { reg: reg.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(reg: &Arc<VariableRegistry>, bi: IndexTuple) -> Self {
        let mut v = Self::zero(reg);
        v.terms.insert(bi, Poly::one(reg));
        v
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.reg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, bi: &IndexTuple) -> Poly {
        self.terms.get(bi).cloned().unwrap_or_else(|| Poly::zero(&self.reg))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &Poly)> {
        self.terms.iter()
    }

    /// `self += c · v_bi`
    pub fn add_term(&mut self, bi: IndexTuple, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(bi) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Poly, other: &TensorVector) {
        for (bi, d) in &other.terms {
            self.add_term(bi.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &Poly) -> TensorVector {
        let mut out = Self::zero(&self.reg);
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_scaled(&-Poly::one(&self.reg), other);
        out
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_scaled(&Poly::one(&self.reg), other);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::HookProfile;

    #[test]
    fn cancellation_drops_terms() {
        let p = HookProfile::new(vec![1], vec![1]).unwrap();
        let reg = VariableRegistry::standard(p.ks(), p.ls()).unwrap();
        let bi = IndexTuple::new(vec![1, 2], &p).unwrap();
        let v = TensorVector::basis(&reg, bi.clone());
        assert!(v.sub(&v).is_zero());
        let two = v.add(&v);
        assert_eq!(two.coefficient(&bi), Poly::from_int(&reg, 2));
        assert_eq!(two.len(), 1);
        assert!(TensorVector::zero(&reg).is_empty());
    }
}
