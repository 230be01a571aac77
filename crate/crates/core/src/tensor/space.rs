use num_rational::BigRational;

use super::vector::TensorVector;
use super::word::{Op, OperatorWord};
use crate::combinatorics::{basis_size, HookProfile, IndexTuple};
use crate::error::{Error, Result};
use crate::exec::{map_reduce_range, Execution};
use crate::exact::Poly;
use crate::symfun::BlockVariables;

/// `V^{⊗n}` for a hook profile, with the operators of the Hecke action
/// applied lazily to basis vectors.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    block: BlockVariables,
    n: usize,
    parity: Vec<u8>,
    color: Vec<usize>,
    literal_check: bool,
    q_minus: Poly,
    q: Poly,
    neg_q_inv: Poly,
}

impl TensorSpace {
    pub fn new(profile: &HookProfile, n: usize) -> Result<Self> {
        Self::with_block(BlockVariables::new(profile)?, n)
    }

    pub fn with_block(block: BlockVariables, n: usize) -> Result<Self> {
        if basis_size(n, block.profile().dim()).is_none() {
            return Err(Error::Domain("tensor space too large".into()));
        }
        let parity = block.profile().slots().iter().map(|s| s.parity.bit()).collect();
        let color = block.profile().slots().iter().map(|s| s.color).collect();
        let q_minus = block.q_minus_q_inv();
        let q = block.q_pow(1);
        let neg_q_inv = -block.q_pow(-1);
        Ok(TensorSpace { block, n, parity, color, literal_check: false, q_minus, q, neg_q_inv })
    }

    /// Also evaluate the unsimplified equal-index case of `T_a` and fail on
    /// any disagreement with the closed form.
    pub fn with_literal_check(mut self, on: bool) -> Self {
        self.literal_check = on;
        self
    }

    pub fn block(&self) -> &BlockVariables {
        &self.block
    }

    pub fn profile(&self) -> &HookProfile {
        self.block.profile()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.profile().dim().pow(self.n as u32)
    }

    pub fn basis_tuple(&self, rank: usize) -> IndexTuple {
        IndexTuple::unrank(rank, self.n, self.profile().dim())
    }

    pub fn basis_vector(&self, bi: IndexTuple) -> TensorVector {
        TensorVector::basis(self.block.registry(), bi)
    }

    fn par(&self, e: u16) -> u8 {
        self.parity[e as usize - 1]
    }

    fn col(&self, e: u16) -> usize {
        self.color[e as usize - 1]
    }

    fn check_a(&self, a: usize) -> Result<()> {
        if (2..=self.n).contains(&a) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("index {a} outside 2..={}", self.n)))
        }
    }

    /// `φ(s_a)` on one basis tuple: `(sign, image)`.
    fn phi_basis(&self, a: usize, bi: &IndexTuple) -> (i64, IndexTuple) {
        let r = bi.raw();
        let (u, v) = (r[a - 2], r[a - 1]);
        if u == v {
            (if self.par(u) == 1 { -1 } else { 1 }, bi.clone())
        } else {
            let mut s = r.to_vec();
            s.swap(a - 2, a - 1);
            (if self.par(u) * self.par(v) == 1 { -1 } else { 1 }, IndexTuple::from_raw(s))
        }
    }

    fn t_basis(&self, a: usize, bi: &IndexTuple, out: &mut TensorVector, c: &Poly) -> Result<()> {
        let r = bi.raw();
        let (u, v) = (r[a - 2], r[a - 1]);
        if u == v {
            let closed = if self.par(u) == 1 { &self.neg_q_inv } else { &self.q };
            if self.literal_check {
                let half = BigRational::new(1.into(), 2.into());
                let q_plus = &self.block.q_pow(1) + &self.block.q_pow(-1);
                let (sign, _) = self.phi_basis(a, bi);
                let literal = &self.q_minus.scale(&half) + &q_plus.scale(&half).scale_int(sign);
                if &literal != closed {
                    return Err(Error::Consistency(format!("T_{a} equal-index forms disagree at {:?}", bi.raw())));
                }
            }
            out.add_term(bi.clone(), &(c * closed));
        } else {
            if u < v {
                out.add_term(bi.clone(), &(c * &self.q_minus));
            }
            let (sign, img) = self.phi_basis(a, bi);
            out.add_term(img, &c.scale_int(sign));
        }
        Ok(())
    }

    fn omega_factor(&self, j: usize, power: u32, bi: &IndexTuple) -> Poly {
        self.block.param_poly(self.col(bi.raw()[j - 1])).pow(power)
    }

    /// `D` on one basis tuple: `Π_t ζ(i_t)`.
    pub fn d_factor(&self, bi: &IndexTuple) -> Poly {
        bi.raw().iter().fold(self.block.one(), |acc, &e| &acc * self.block.zeta(e as usize))
    }

    /// Apply a single atomic operator.
    pub fn apply(&self, op: Op, v: &TensorVector) -> Result<TensorVector> {
        let reg = self.block.registry();
        let mut out = TensorVector::zero(reg);
        match op {
            Op::PhiS(a) => {
                self.check_a(a)?;
                for (bi, c) in v.terms() {
                    let (sign, img) = self.phi_basis(a, bi);
                    out.add_term(img, &c.scale_int(sign));
                }
            }
            Op::T(a) => {
                self.check_a(a)?;
                for (bi, c) in v.terms() {
                    self.t_basis(a, bi, &mut out, c)?;
                }
            }
            Op::TInv(a) => {
                let t = self.apply(Op::T(a), v)?;
                out = t.sub(&v.scale(&self.q_minus));
            }
            Op::S(a) => {
                self.check_a(a)?;
                for (bi, c) in v.terms() {
                    let r = bi.raw();
                    if self.col(r[a - 2]) == self.col(r[a - 1]) {
                        self.t_basis(a, bi, &mut out, c)?;
                    } else {
                        let (sign, img) = self.phi_basis(a, bi);
                        out.add_term(img, &c.scale_int(sign));
                    }
                }
            }
            Op::Omega { j, power } => {
                if !(1..=self.n).contains(&j) {
                    return Err(Error::IndexOutOfRange(format!("Ω_{j} with n = {}", self.n)));
                }
                for (bi, c) in v.terms() {
                    out.add_term(bi.clone(), &(c * &self.omega_factor(j, power, bi)));
                }
            }
            Op::T1 => {
                if self.n == 0 {
                    return Err(Error::IndexOutOfRange("T_1 needs n ≥ 1".into()));
                }
                out = self.apply(Op::Omega { j: 1, power: 1 }, v)?;
                for a in 2..=self.n {
                    out = self.apply(Op::S(a), &out)?;
                }
                for a in (2..=self.n).rev() {
                    out = self.apply(Op::TInv(a), &out)?;
                }
            }
            Op::D => {
                for (bi, c) in v.terms() {
                    out.add_term(bi.clone(), &(c * &self.d_factor(bi)));
                }
            }
        }
        Ok(out)
    }

    /// Apply a word right to left.
    pub fn apply_word(&self, word: &OperatorWord, v: &TensorVector) -> Result<TensorVector> {
        if word.n() != self.n {
            return Err(Error::SizeMismatch(format!("word on n = {}, space n = {}", word.n(), self.n)));
        }
        word.ops().iter().rev().try_fold(v.clone(), |acc, &op| self.apply(op, &acc))
    }

    /// `Trace(D ∘ word, V^{⊗n})`, summing diagonal entries over all basis tuples.
    pub fn trace_d_word(&self, word: &OperatorWord, exec: Execution) -> Result<Poly> {
        let zero = self.block.zero();
        map_reduce_range(
            exec,
            self.dim(),
            || Ok(zero.clone()),
            |rank| {
                let bi = self.basis_tuple(rank);
                let image = self.apply_word(word, &self.basis_vector(bi.clone()))?;
                let diag = image.coefficient(&bi);
                Ok(if diag.is_zero() { diag } else { &diag * &self.d_factor(&bi) })
            },
            |a: Result<Poly>, b: Result<Poly>| Ok(&a? + &b?),
        )
    }
}
