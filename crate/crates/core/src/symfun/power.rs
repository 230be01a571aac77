use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::block::BlockVariables;
use crate::combinatorics::{Multipartition, Partition};
use crate::error::{Error, Result};
use crate::exact::{Monomial, Poly, VariableRegistry};

fn monomial_power(reg: &Arc<VariableRegistry>, var: usize, a: usize) -> Monomial {
    let mut exps = vec![0i32; reg.len()];
    exps[var] = a as i32;
    Monomial::new(exps)
}

/// `p_a = Σ_i x_i^a` over the listed variables.
pub fn power_sum(a: usize, vars: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    let mut out = Poly::zero(reg);
    for &v in vars {
        out.add_term(monomial_power(reg, v, a), BigRational::one());
    }
    out
}

/// `p_a(x/y) = p_a(x) − p_a(y)`, with `p_0(x/y) = 1`.
pub fn super_power_sum(a: usize, xs: &[usize], ys: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    if a == 0 {
        return Poly::one(reg);
    }
    let mut out = power_sum(a, xs, reg);
    for &v in ys {
        out.add_term(monomial_power(reg, v, a), -BigRational::one());
    }
    out
}

/// `p_λ = Π_j p_{λ_j}`.
pub fn power_sum_product(lambda: &Partition, vars: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    lambda.parts().iter().fold(Poly::one(reg), |acc, &a| &acc * &power_sum(a, vars, reg))
}

/// `p_λ(x/y) = Π_j p_{λ_j}(x/y)`.
pub fn super_power_sum_product(lambda: &Partition, xs: &[usize], ys: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    lambda.parts().iter().fold(Poly::one(reg), |acc, &a| &acc * &super_power_sum(a, xs, ys, reg))
}

/// `P_a^(i)(x/y) = Σ_j ς^{−ij} p_a(x^(j)/y^(j))`, with `ς` written as `z`
/// reduced modulo `Φ_m`.
pub fn colored_power_sum(a: usize, i: usize, block: &BlockVariables) -> Result<Poly> {
    let m = block.m();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange(format!("color {i} outside 1..={m}")));
    }
    if a == 0 {
        return Err(Error::Domain("colored power sums need a positive degree".into()));
    }
    let reg = block.registry();
    let mut out = block.zero();
    for j in 1..=m {
        let e = (m - (i * j) % m) % m;
        let root = Poly::var_pow(reg, block.z(), e as i32)?;
        out += &(&root * &super_power_sum(a, block.x(j), block.y(j), reg));
    }
    out.reduce_cyclotomic(m as u32)
}

/// `P_bμ(x/y) = Π_i Π_j P^(i)_{μ^(i)_j}(x/y)`.
pub fn colored_power_sum_product(mu: &Multipartition, block: &BlockVariables) -> Result<Poly> {
    if mu.colors() != block.m() {
        return Err(Error::Profile(format!("{} colors vs {} blocks", mu.colors(), block.m())));
    }
    let mut out = block.one();
    for (i, lam) in mu.components().iter().enumerate() {
        for &a in lam.parts() {
            out = (&out * &colored_power_sum(a, i + 1, block)?).reduce_cyclotomic(block.m() as u32)?;
        }
    }
    Ok(out)
}
