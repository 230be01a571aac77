use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::block::BlockVariables;
use crate::combinatorics::{component_fillings, Multipartition, Partition, Symbol};
use crate::error::{Error, Result};
use crate::exact::{Monomial, Poly, VariableRegistry};

/// Schur polynomial `s_λ` in the listed variables, summed over semistandard tableaux.
pub fn schur(lambda: &Partition, vars: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    let mut out = Poly::zero(reg);
    if lambda.len() > vars.len() {
        return out;
    }
    for fill in component_fillings(lambda, vars.len(), 0) {
        let mut exps = vec![0i32; reg.len()];
        for s in fill.iter().flatten() {
            exps[vars[s.local() - 1]] += 1;
        }
        out.add_term(Monomial::new(exps), BigRational::one());
    }
    out
}

struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    fn new(outer: &Partition, inner: &Partition) -> Self {
        let rows = outer.len();
        SkewShape { outer: outer.parts().to_vec(), inner: (0..rows).map(|r| inner.part(r)).collect() }
    }
}

/// Littlewood-Richardson coefficient `c^η_{θν}`, counting LR tableaux of shape
/// `η/θ` and content `ν` (lattice reverse reading word).
pub fn lr_coefficient(theta: &Partition, nu: &Partition, eta: &Partition) -> u64 {
    if !eta.contains(theta) || theta.size() + nu.size() != eta.size() {
        return 0;
    }
    let shape = SkewShape::new(eta, theta);
    let mut rows: Vec<Vec<usize>> = shape.outer.iter().zip(&shape.inner).map(|(o, i)| vec![0; o - i]).collect();
    let mut used = vec![0usize; nu.len() + 1];
    let mut count = 0;
    lr_fill(&shape, nu, 0, 0, &mut rows, &mut used, &mut count);
    count
}

fn lr_fill(
    shape: &SkewShape,
    nu: &Partition,
    r: usize,
    j: usize,
    rows: &mut Vec<Vec<usize>>,
    used: &mut Vec<usize>,
    count: &mut u64,
) {
    if r == rows.len() {
        *count += 1;
        return;
    }
    if j == rows[r].len() {
        lr_fill(shape, nu, r + 1, 0, rows, used, count);
        return;
    }
    let col = shape.inner[r] + j;
    let lo = if j > 0 { rows[r][j - 1] } else { 1 };
    for v in lo..=nu.len() {
        if used[v] >= nu.part(v - 1) {
            continue;
        }
        if r > 0 && col >= shape.inner[r - 1] {
            let above = rows[r - 1][col - shape.inner[r - 1]];
            if above >= v {
                continue;
            }
        }
        rows[r][j] = v;
        used[v] += 1;
        if j + 1 == rows[r].len() && !row_keeps_lattice(&rows[r], used) {
            used[v] -= 1;
            continue;
        }
        lr_fill(shape, nu, r, j + 1, rows, used, count);
        used[v] -= 1;
    }
}

/// `used` already includes this row; replay the row right-to-left from the
/// counts before it and check every prefix.
fn row_keeps_lattice(row: &[usize], used: &[usize]) -> bool {
    let mut c = used.to_vec();
    for &v in row {
        c[v] -= 1;
    }
    for &v in row.iter().rev() {
        c[v] += 1;
        if v > 1 && c[v] > c[v - 1] {
            return false;
        }
    }
    true
}

/// Skew Schur polynomial `s_{η/θ} = Σ_ν c^η_{θν} s_ν`.
pub fn skew_schur(eta: &Partition, theta: &Partition, vars: &[usize], reg: &Arc<VariableRegistry>) -> Result<Poly> {
    if !eta.contains(theta) {
        return Err(Error::Shape(format!("{theta} is not contained in {eta}")));
    }
    let mut out = Poly::zero(reg);
    for nu in crate::combinatorics::enumerate_partitions(eta.size() - theta.size()) {
        if nu.len() > vars.len() {
            continue;
        }
        let c = lr_coefficient(theta, &nu, eta);
        if c > 0 {
            out.add_scaled(&BigRational::from_integer(c.into()), &schur(&nu, vars, reg));
        }
    }
    Ok(out)
}

/// Single-component super Schur `S_λ(x/y)` by the alternating sum
/// `Σ_{μ⊆λ} (−1)^{|λ−μ|} s_μ(x) s_{λ'/μ'}(y)`.
pub fn super_schur_alternating(lambda: &Partition, xs: &[usize], ys: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    let conj = lambda.conjugate();
    let mut out = Poly::zero(reg);
    for mu in lambda.subpartitions() {
        if mu.len() > xs.len() {
            continue;
        }
        let sx = schur(&mu, xs, reg);
        let sy = skew_schur(&conj, &mu.conjugate(), ys, reg).expect("μ ⊆ λ");
        if sy.is_zero() {
            continue;
        }
        let term = &sx * &sy;
        if (lambda.size() - mu.size()) % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

/// Single-component super Schur by super tableaux, `y` boxes weighted `−y`.
pub fn super_schur_tableau(lambda: &Partition, xs: &[usize], ys: &[usize], reg: &Arc<VariableRegistry>) -> Poly {
    let mut out = Poly::zero(reg);
    for fill in component_fillings(lambda, xs.len(), ys.len()) {
        let mut exps = vec![0i32; reg.len()];
        let mut odd = 0;
        for s in fill.iter().flatten() {
            match *s {
                Symbol::X(a) => exps[xs[a - 1]] += 1,
                Symbol::Y(b) => {
                    exps[ys[b - 1]] += 1;
                    odd += 1;
                }
            }
        }
        let c = if odd % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        out.add_term(Monomial::new(exps), c);
    }
    out
}

/// Which construction of the super Schur function to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperSchurAlgorithm {
    AlternatingSum,
    Tableaux,
}

/// `S_bλ(x/y) = Π_i S_{λ^(i)}(x^(i)/y^(i))`.
pub fn super_schur(lambda: &Multipartition, block: &BlockVariables, algorithm: SuperSchurAlgorithm) -> Result<Poly> {
    if lambda.colors() != block.m() {
        return Err(Error::Profile(format!("{} colors vs {} blocks", lambda.colors(), block.m())));
    }
    let reg = block.registry();
    let mut out = block.one();
    for (c, lam) in lambda.components().iter().enumerate() {
        let (xs, ys) = (block.x(c + 1), block.y(c + 1));
        let f = match algorithm {
            SuperSchurAlgorithm::AlternatingSum => super_schur_alternating(lam, xs, ys, reg),
            SuperSchurAlgorithm::Tableaux => super_schur_tableau(lam, xs, ys, reg),
        };
        if f.is_zero() {
            return Ok(f);
        }
        out = &out * &f;
    }
    Ok(out)
}
