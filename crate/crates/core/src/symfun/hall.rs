use std::collections::HashMap;

use super::block::BlockVariables;
use crate::combinatorics::{enumerate_compositions, Multipartition};
use crate::error::{Error, Result};
use crate::exact::{Monomial, Poly};

/// Power series in `u` truncated after `u^deg`.
struct Series(Vec<Poly>);

impl Series {
    fn one(deg: usize, unit: &Poly) -> Self {
        let mut v = vec![Poly::zero(unit.registry()); deg + 1];
        v[0] = unit.clone();
        Series(v)
    }

    /// `self *= (1 + c·u)`
    fn mul_linear(&mut self, c: &Poly) {
        for r in (1..self.0.len()).rev() {
            let add = &self.0[r - 1] * c;
            self.0[r] += &add;
        }
    }

    /// `self /= (1 − c·u)`
    fn div_linear(&mut self, c: &Poly) {
        for r in 1..self.0.len() {
            let add = &self.0[r - 1] * c;
            self.0[r] += &add;
        }
    }

    fn coefficient(mut self, a: usize) -> Poly {
        self.0.swap_remove(a)
    }
}

/// `q_a(x; t)`: coefficient of `u^a` in `Π_i (1 − x_i t u)/(1 − x_i u)`.
/// `t` may be any polynomial (a variable, `q^{-2}`, `0`, …).
pub fn hall_littlewood_q(a: usize, xs: &[usize], t: &Poly) -> Poly {
    super_hall_littlewood_q(a, xs, &[], t)
}

/// `q_a(x/y; t)`: coefficient of `u^a` in
/// `Π_i (1 − x_i t u)/(1 − x_i u) · Π_j (1 − y_j u)/(1 − y_j t u)`.
pub fn super_hall_littlewood_q(a: usize, xs: &[usize], ys: &[usize], t: &Poly) -> Poly {
    let reg = t.registry();
    let mut s = Series::one(a, &Poly::one(reg));
    for &x in xs {
        let xv = Poly::var(reg, x);
        s.mul_linear(&-(&xv * t));
        s.div_linear(&xv);
    }
    for &y in ys {
        let yv = Poly::var(reg, y);
        s.mul_linear(&-&yv);
        s.div_linear(&(&yv * t));
    }
    s.coefficient(a)
}

/// Map `t^e ↦ t^{b−e}`; turns `q_b(y; t)` into `t^b q_b(y; t^{-1})` without
/// negative exponents in `t`.
pub fn reverse_t_degree(p: &Poly, t: usize, b: i32) -> Result<Poly> {
    let mut out = Poly::zero(p.registry());
    for (m, c) in p.terms() {
        let mut exps = m.exponents().to_vec();
        exps[t] = b - exps[t];
        if exps[t] < 0 {
            return Err(Error::Domain(format!("t-degree exceeds {b}")));
        }
        out.add_term(Monomial::new(exps), c.clone());
    }
    Ok(out)
}

/// `Σ_i t^{a−i} q_i(x; t) q_{a−i}(y; t^{-1})` with `t` the registry variable.
pub fn super_hall_littlewood_split(a: usize, xs: &[usize], ys: &[usize], block: &BlockVariables) -> Result<Poly> {
    let t = block.t_poly();
    let mut out = block.zero();
    for i in 0..=a {
        let qx = hall_littlewood_q(i, xs, &t);
        let qy = reverse_t_degree(&hall_littlewood_q(a - i, ys, &t), block.t(), (a - i) as i32)?;
        out += &(&qx * &qy);
    }
    Ok(out)
}

/// `q̃_(α;β)(x/y; q) = (−1)^{|β|−ℓ(β)} q^{|α|−ℓ(α)+ℓ(β)−|β|} (q−q^{-1})^{ℓ(α;β)−1} x^α (−y)^β`,
/// with `α` indexed by all even variables and `β` by all odd ones (color-major).
pub fn q_tilde(alpha: &[usize], beta: &[usize], block: &BlockVariables) -> Result<Poly> {
    let xs = block.all_x();
    let ys = block.all_y();
    if alpha.len() != xs.len() || beta.len() != ys.len() {
        return Err(Error::SizeMismatch(format!(
            "(α;β) has lengths ({}, {}) for profile {}",
            alpha.len(),
            beta.len(),
            block.profile()
        )));
    }
    let len = |v: &[usize]| v.iter().filter(|&&e| e > 0).count() as i32;
    let size = |v: &[usize]| v.iter().sum::<usize>() as i32;
    let total_len = len(alpha) + len(beta);
    if total_len == 0 {
        return Err(Error::Domain("q̃ needs n ≥ 1".into()));
    }
    let reg = block.registry();
    let mut exps = vec![0i32; reg.len()];
    for (&v, &e) in xs.iter().zip(alpha).chain(ys.iter().zip(beta)) {
        exps[v] = e as i32;
    }
    // (−1)^{|β|−ℓ(β)} · (−1)^{|β|} = (−1)^{ℓ(β)}
    let sign: i64 = if len(beta) % 2 == 0 { 1 } else { -1 };
    let mut mono = Poly::zero(reg);
    mono.add_term(Monomial::new(exps), num_rational::BigRational::from_integer(sign.into()));
    let qe = size(alpha) - len(alpha) + len(beta) - size(beta);
    Ok(&(&mono * &block.q_pow(qe)) * &block.q_minus_q_inv().pow((total_len - 1) as u32))
}

/// `Σ_{(α;β) ∈ C(n; k|ℓ)} q̃_(α;β)`.
pub fn q_tilde_sum(n: usize, block: &BlockVariables) -> Result<Poly> {
    let k = block.profile().k_total();
    let l = block.profile().l_total();
    let mut out = block.zero();
    for c in enumerate_compositions(n, k + l) {
        out += &q_tilde(&c[..k], &c[k..], block)?;
    }
    Ok(out)
}

/// Closed forms `q_n^(i)` and `q_bμ`, with per-color pieces memoized.
pub struct HeckeTraceForms<'a> {
    block: &'a BlockVariables,
    /// `(c, j) ↦ q^c q_c(x^(j)/y^(j); q^{-2}) / (q − q^{-1})`
    reduced: HashMap<(usize, usize), Poly>,
    qni: HashMap<(usize, usize), Poly>,
}

impl<'a> HeckeTraceForms<'a> {
    pub fn new(block: &'a BlockVariables) -> Self {
        HeckeTraceForms { block, reduced: HashMap::new(), qni: HashMap::new() }
    }

    fn hl_at_q(&self, c: usize, j: usize) -> Poly {
        let b = self.block;
        super_hall_littlewood_q(c, b.x(j), b.y(j), &b.q_pow(-2))
    }

    fn reduced_piece(&mut self, c: usize, j: usize) -> Result<Poly> {
        if let Some(p) = self.reduced.get(&(c, j)) {
            return Ok(p.clone());
        }
        let b = self.block;
        let num = &b.q_pow(c as i32) * &self.hl_at_q(c, j);
        let p = num.div_exact_univariate(b.q(), &b.q_minus_q_inv()).map_err(|e| match e {
            Error::InexactDivision(msg) => Error::Consistency(format!("(q − q^-1) does not cancel: {msg}")),
            other => other,
        })?;
        self.reduced.insert((c, j), p.clone());
        Ok(p)
    }

    /// `q_n^(i) = q^n/(q−q^{-1}) Σ_{c ∈ C(n;m)} Q_c^i Π_j q_{c_j}(x^(j)/y^(j); q^{-2})`,
    /// `Q_c = Q_a` for the largest `a` with `c_a > 0`. Each color with `c_j > 0`
    /// absorbs one factor `(q−q^{-1})` exactly; the rest is polynomial.
    pub fn q_n_i(&mut self, n: usize, i: usize) -> Result<Poly> {
        let b = self.block;
        let m = b.m();
        if n == 0 || i == 0 || i > m {
            return Err(Error::Domain(format!("q_n^(i) needs n ≥ 1 and 1 ≤ i ≤ {m}")));
        }
        if let Some(p) = self.qni.get(&(n, i)) {
            return Ok(p.clone());
        }
        let mut out = b.zero();
        for c in enumerate_compositions(n, m) {
            let a = c.iter().rposition(|&x| x > 0).expect("n ≥ 1") + 1;
            let support = c.iter().filter(|&&x| x > 0).count();
            let mut term = &b.param_poly(a).pow(i as u32) * &b.q_minus_q_inv().pow((support - 1) as u32);
            for (j, &cj) in c.iter().enumerate() {
                if cj > 0 {
                    term = &term * &self.reduced_piece(cj, j + 1)?;
                }
            }
            out += &term;
        }
        self.qni.insert((n, i), out.clone());
        Ok(out)
    }

    /// `(q − q^{-1}) q_n^(i)` straight from the displayed sum, no division.
    pub fn q_n_i_times_q_minus_q_inv(&self, n: usize, i: usize) -> Result<Poly> {
        let b = self.block;
        let mut sum = b.zero();
        for c in enumerate_compositions(n, b.m()) {
            let a = c.iter().rposition(|&x| x > 0).ok_or_else(|| Error::Domain("n ≥ 1".into()))? + 1;
            let mut term = b.param_poly(a).pow(i as u32);
            for (j, &cj) in c.iter().enumerate() {
                term = &term * &self.hl_at_q(cj, j + 1);
            }
            sum += &term;
        }
        Ok(&b.q_pow(n as i32) * &sum)
    }

    /// `q_bμ = Π_i Π_j q^(i)_{μ^(i)_j}`.
    pub fn q_bmu(&mut self, mu: &Multipartition) -> Result<Poly> {
        if mu.colors() != self.block.m() {
            return Err(Error::Profile(format!("{} colors vs {} blocks", mu.colors(), self.block.m())));
        }
        let mut out = self.block.one();
        for (i, lam) in mu.components().iter().enumerate() {
            for &a in lam.parts() {
                out = &out * &self.q_n_i(a, i + 1)?;
            }
        }
        Ok(out)
    }
}

/// One-shot [`HeckeTraceForms::q_n_i`].
pub fn q_n_i(n: usize, i: usize, block: &BlockVariables) -> Result<Poly> {
    HeckeTraceForms::new(block).q_n_i(n, i)
}

/// One-shot [`HeckeTraceForms::q_bmu`].
pub fn q_bmu(mu: &Multipartition, block: &BlockVariables) -> Result<Poly> {
    HeckeTraceForms::new(block).q_bmu(mu)
}
