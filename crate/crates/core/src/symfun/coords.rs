use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::block::BlockVariables;
use crate::combinatorics::enumerate_compositions;
use crate::error::{Error, Result};
use crate::exact::{Assignment, Poly, Value};

/// Exponent vectors (over `vars`) of all monomials of degree `n`, in
/// descending graded-lex order over the registry.
pub fn monomial_keys(vars: &[usize], n: usize) -> Vec<Vec<i32>> {
    let mut keys: Vec<Vec<i32>> = enumerate_compositions(n, vars.len())
        .into_iter()
        .map(|c| c.into_iter().map(|e| e as i32).collect())
        .collect();
    // the registry order of `vars` may differ from the listed order
    let mut order: Vec<usize> = (0..vars.len()).collect();
    order.sort_by_key(|&i| vars[i]);
    keys.sort_by(|a, b| {
        let ka: Vec<i32> = order.iter().map(|&i| a[i]).collect();
        let kb: Vec<i32> = order.iter().map(|&i| b[i]).collect();
        kb.cmp(&ka)
    });
    keys
}

/// Coefficients of `p` at the given `vars`-monomials; each coefficient is a
/// polynomial in the remaining variables. Support outside `keys` is an error.
pub fn monomial_coordinates(p: &Poly, vars: &[usize], keys: &[Vec<i32>]) -> Result<Vec<Poly>> {
    let mut split: BTreeMap<Vec<i32>, Poly> = p.split_by(vars);
    let out = keys.iter().map(|k| split.remove(k).unwrap_or_else(|| Poly::zero(p.registry()))).collect();
    if let Some(k) = split.keys().next() {
        return Err(Error::Consistency(format!("support outside the monomial list at {k:?}")));
    }
    Ok(out)
}

/// Rational coordinates; fails if a coefficient is not a constant.
pub fn rational_coordinates(p: &Poly, vars: &[usize], keys: &[Vec<i32>]) -> Result<Vec<BigRational>> {
    monomial_coordinates(p, vars, keys)?
        .into_iter()
        .map(|c| {
            if c.is_zero() {
                Ok(BigRational::zero())
            } else {
                c.as_constant().ok_or_else(|| Error::Consistency(format!("non-constant coordinate {c}")))
            }
        })
        .collect()
}

/// Invariance under every adjacent transposition inside each `x^(i)` and
/// each `y^(i)`, which generate the block symmetry group.
pub fn is_block_symmetric(p: &Poly, block: &BlockVariables) -> bool {
    (1..=block.m()).all(|c| {
        [block.x(c), block.y(c)]
            .into_iter()
            .all(|vars| vars.windows(2).all(|w| p.swap_variables(w[0], w[1]) == *p))
    })
}

/// Set the last `x^(i)` and the last `y^(i)` both to `t` and report whether
/// the result is free of `t`. `None` when color `i` lacks one of them.
pub fn is_cancellation_free(p: &Poly, color: usize, block: &BlockVariables) -> Result<Option<bool>> {
    let (Some(&x), Some(&y)) = (block.x(color).last(), block.y(color).last()) else {
        return Ok(None);
    };
    let reg = block.registry();
    if p.involves(block.t()) {
        return Err(Error::Domain("input already involves t".into()));
    }
    let t = Value::Poly(block.t_poly());
    let a = Assignment::new().set(reg.variable(x).name.clone(), t.clone()).set(reg.variable(y).name.clone(), t);
    Ok(Some(!p.substitute(&a)?.involves(block.t())))
}
