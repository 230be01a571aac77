use std::fmt;

use crate::combinatorics::{Multipartition, WreathElement};
use crate::error::{Error, Result};

/// Atomic operator on `V^{⊗n}`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    PhiS(usize),
    T(usize),
    TInv(usize),
    S(usize),
    Omega { j: usize, power: u32 },
    T1,
    D,
}

impl Op {
    fn check(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Op::PhiS(a) | Op::T(a) | Op::TInv(a) | Op::S(a) => (2..=n).contains(&a),
            Op::Omega { j, .. } => (1..=n).contains(&j),
            Op::T1 => n >= 1,
            Op::D => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} with n = {n}")))
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Op::PhiS(a) => write!(f, "phi(s{a})"),
            Op::T(a) => write!(f, "T{a}"),
            Op::TInv(a) => write!(f, "T{a}^-1"),
            Op::S(a) => write!(f, "S{a}"),
            Op::Omega { j, power } => write!(f, "Omega{j}^{power}"),
            Op::T1 => write!(f, "T1"),
            Op::D => write!(f, "D"),
        }
    }
}

/// A product of operators, written left to right and applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    n: usize,
    ops: Vec<Op>,
}

impl OperatorWord {
    pub fn new(n: usize, ops: Vec<Op>) -> Result<Self> {
        for op in &ops {
            op.check(n)?;
        }
        Ok(OperatorWord { n, ops })
    }

    pub fn identity(n: usize) -> Self {
        OperatorWord { n, ops: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    /// `self · other` (apply `other` first).
    pub fn then_after(&self, other: &OperatorWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("words on n = {} and n = {}", self.n, other.n)));
        }
        let mut ops = self.ops.clone();
        ops.extend_from_slice(&other.ops);
        Ok(OperatorWord { n: self.n, ops })
    }

    /// `T(bμ)`: per block of positions `s+1..s+a` (color `i` ascending, parts
    /// in order) the factor `Ω_{s+a}^i T_{s+a} ⋯ T_{s+2}`.
    pub fn standard(mu: &Multipartition) -> Self {
        let mut ops = Vec::new();
        let mut s = 0;
        for (i, lam) in mu.components().iter().enumerate() {
            for &a in lam.parts() {
                ops.push(Op::Omega { j: s + a, power: (i + 1) as u32 });
                ops.extend((s + 2..=s + a).rev().map(Op::T));
                s += a;
            }
        }
        OperatorWord { n: mu.size(), ops }
    }

    /// `T(w) = Ω_1^{c_1} ⋯ Ω_n^{c_n} T_σ` for `w = t_1^{c_1} ⋯ t_n^{c_n} σ`, with
    /// `T_σ` read off a reduced word of `σ` found by bubble sort.
    pub fn for_element(w: &WreathElement) -> Self {
        let n = w.n();
        let mut ops: Vec<Op> = (0..n)
            .filter(|&j| w.colors()[j] != 0)
            .map(|j| Op::Omega { j: j + 1, power: w.colors()[j] as u32 })
            .collect();
        ops.extend(reduced_word(w.perm()).into_iter().map(Op::T));
        OperatorWord { n, ops }
    }
}

/// `σ = s_{a_1} ⋯ s_{a_r}` with `r` the number of inversions; `perm[j] = σ(j)`.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut rev = Vec::new();
    // peel a right descent: σ = σ' · s_{j+2} with σ' = σ · s_{j+2}
    while let Some(j) = (0..p.len().saturating_sub(1)).find(|&j| p[j] > p[j + 1]) {
        p.swap(j, j + 1);
        rev.push(j + 2);
    }
    rev.reverse();
    rev
}
