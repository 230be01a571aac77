//! Coordinates of block-symmetric functions at the solve profile
//! `k_i = n, ℓ_i = 0`, where monomial symmetric functions are indexed by
//! multipartitions.

use std::collections::BTreeMap;

use crate::combinatorics::{enumerate_multipartitions, HookProfile, Multipartition};
use crate::error::{Error, Result};
use crate::exact::{ExactSolver, Matrix, Poly};
use crate::exec::{map_collect, Execution};
use crate::symfun::{super_schur, BlockVariables, SuperSchurAlgorithm};

/// `x`-exponents of the leading monomial of `m_bλ`: each `λ^(i)` padded to `n`.
pub(crate) fn dominant_key(lambda: &Multipartition, n: usize) -> Vec<i32> {
    let mut key = Vec::with_capacity(lambda.colors() * n);
    for comp in lambda.components() {
        key.extend((0..n).map(|j| comp.parts().get(j).copied().unwrap_or(0) as i32));
    }
    key
}

/// The Schur functions `S_bλ` at the solve profile and the inverted matrix of
/// their dominant-monomial coordinates.
pub(crate) struct SchurBasis {
    pub block: BlockVariables,
    pub labels: Vec<Multipartition>,
    pub keys: Vec<Vec<i32>>,
    pub schur: Vec<Poly>,
    pub solver: ExactSolver,
}

impl SchurBasis {
    pub fn new(m: usize, n: usize, exec: Execution) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("need m ≥ 1 and n ≥ 1, got m = {m}, n = {n}")));
        }
        let profile = HookProfile::uniform(m, n, 0)?;
        let block = BlockVariables::new(&profile)?;
        let labels = enumerate_multipartitions(m, n);
        let keys: Vec<Vec<i32>> = labels.iter().map(|l| dominant_key(l, n)).collect();
        let schur: Vec<Poly> = map_collect(exec, &labels, |l| super_schur(l, &block, SuperSchurAlgorithm::Tableaux))
            .into_iter()
            .collect::<Result<_>>()?;
        let vars = block.all_x();
        let mut a = Matrix::zeros(keys.len(), labels.len());
        for (c, s) in schur.iter().enumerate() {
            for (r, coeff) in lookup(s, &vars, &keys).into_iter().enumerate() {
                let v = coeff
                    .as_constant()
                    .ok_or_else(|| Error::Consistency(format!("Schur coordinate {coeff} is not rational")))?;
                a.set(r, c, v);
            }
        }
        let solver = ExactSolver::new(a).map_err(|e| match e {
            Error::Singular { rank, cols } => {
                Error::Profile(format!("Schur functions at {profile} have rank {rank} < {cols}"))
            }
            other => other,
        })?;
        Ok(SchurBasis { block, labels, keys, schur, solver })
    }

    pub fn vars(&self) -> Vec<usize> {
        self.block.all_x()
    }

    /// Coefficients of `p` at the dominant keys.
    pub fn coordinates(&self, p: &Poly) -> Vec<Poly> {
        lookup(p, &self.vars(), &self.keys)
    }
}

/// Coefficients of `p` at the given `vars`-monomials; other support is ignored.
pub(crate) fn lookup(p: &Poly, vars: &[usize], keys: &[Vec<i32>]) -> Vec<Poly> {
    let mut split: BTreeMap<Vec<i32>, Poly> = p.split_by(vars);
    keys.iter().map(|k| split.remove(k).unwrap_or_else(|| Poly::zero(p.registry()))).collect()
}
