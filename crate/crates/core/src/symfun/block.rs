use std::sync::Arc;

use crate::combinatorics::{HookProfile, Parity};
use crate::error::Result;
use crate::exact::{Poly, VarKind, VariableRegistry};

/// The variables `x^(i)`, `y^(i)` of a hook profile, plus `q`, `Q_i`, `t`, `z`,
/// resolved to registry positions.
#[derive(Debug, Clone)]
pub struct BlockVariables {
    profile: HookProfile,
    reg: Arc<VariableRegistry>,
    x: Vec<Vec<usize>>,
    y: Vec<Vec<usize>>,
    q: usize,
    t: usize,
    z: usize,
    params: Vec<usize>,
    zeta: Vec<Poly>,
}

impl BlockVariables {
    /// Block variables over the standard registry of `profile`.
    pub fn new(profile: &HookProfile) -> Result<Self> {
        let reg = VariableRegistry::standard(profile.ks(), profile.ls())?;
        Self::with_registry(profile, reg)
    }

    pub fn with_registry(profile: &HookProfile, reg: Arc<VariableRegistry>) -> Result<Self> {
        let m = profile.m();
        let mut x = Vec::with_capacity(m);
        let mut y = Vec::with_capacity(m);
        for c in 1..=m {
            x.push(
                (1..=profile.k(c))
                    .map(|a| reg.require_kind(VarKind::X { color: c, index: a }))
                    .collect::<Result<Vec<_>>>()?,
            );
            y.push(
                (1..=profile.l(c))
                    .map(|b| reg.require_kind(VarKind::Y { color: c, index: b }))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let params = (1..=m).map(|i| reg.require_kind(VarKind::Param(i))).collect::<Result<Vec<_>>>()?;
        let q = reg.require_kind(VarKind::Q)?;
        let t = reg.require_kind(VarKind::T)?;
        let z = reg.require_kind(VarKind::Z)?;
        let zeta = profile
            .slots()
            .iter()
            .map(|s| match s.parity {
                Parity::Even => Poly::var(&reg, x[s.color - 1][s.local - 1]),
                Parity::Odd => -Poly::var(&reg, y[s.color - 1][s.local - 1]),
            })
            .collect();
        Ok(BlockVariables { profile: profile.clone(), reg, x, y, q, t, z, params, zeta })
    }

    pub fn profile(&self) -> &HookProfile {
        &self.profile
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.reg
    }

    pub fn m(&self) -> usize {
        self.profile.m()
    }

    /// Registry positions of `x^(color)`.
    pub fn x(&self, color: usize) -> &[usize] {
        &self.x[color - 1]
    }

    pub fn y(&self, color: usize) -> &[usize] {
        &self.y[color - 1]
    }

    /// All even variables, color-major.
    pub fn all_x(&self) -> Vec<usize> {
        self.x.concat()
    }

    pub fn all_y(&self) -> Vec<usize> {
        self.y.concat()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn z(&self) -> usize {
        self.z
    }

    /// Registry position of `Q_i`.
    pub fn param(&self, i: usize) -> usize {
        self.params[i - 1]
    }

    pub fn q_poly(&self) -> Poly {
        Poly::var(&self.reg, self.q)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(&self, e: i32) -> Poly {
        Poly::var_pow(&self.reg, self.q, e).expect("q is invertible")
    }

    /// `q − q^{-1}`.
    pub fn q_minus_q_inv(&self) -> Poly {
        &self.q_pow(1) - &self.q_pow(-1)
    }

    pub fn t_poly(&self) -> Poly {
        Poly::var(&self.reg, self.t)
    }

    pub fn param_poly(&self, i: usize) -> Poly {
        Poly::var(&self.reg, self.param(i))
    }

    /// Diagonal weight of the global basis index `b`: `x` if even, `−y` if odd.
    pub fn zeta(&self, b: usize) -> &Poly {
        &self.zeta[b - 1]
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.reg)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.reg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_follow_registry() {
        let p = HookProfile::new(vec![1, 2], vec![1, 0]).unwrap();
        let b = BlockVariables::new(&p).unwrap();
        let name = |i: usize| b.registry().variable(i).name.clone();
        assert_eq!(name(b.x(2)[1]), "x2_2");
        assert_eq!(name(b.y(1)[0]), "y1_1");
        assert!(b.y(2).is_empty());
        assert_eq!(b.zeta(2).to_string(), "-y1_1");
        assert_eq!(b.zeta(3).to_string(), "x2_1");
        assert_eq!(b.q_minus_q_inv().to_string(), "q - q^-1");
    }
}
