//! Explicit realization of `W_{m,n} = (Z/m)^n ⋊ S_n` as monomial matrices.

use super::multipartition::Multipartition;
use super::partition::Partition;
use crate::error::{Error, Result};

/// `w = t_1^{c_1} ⋯ t_n^{c_n} σ`, acting by `w(e_j) = ς^{c_{σ(j)}} e_{σ(j)}`.
/// Positions are 0-based internally; generator indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    m: usize,
    perm: Vec<usize>,
    colors: Vec<usize>,
}

impl WreathElement {
    pub fn new(m: usize, perm: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
        }
        if colors.len() != n || m == 0 {
            return Err(Error::SizeMismatch("color vector length".into()));
        }
        Ok(WreathElement { m, colors: colors.into_iter().map(|c| c % m).collect(), perm })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        WreathElement { m, perm: (0..n).collect(), colors: vec![0; n] }
    }

    /// `s_a = (a-1, a)` for `2 ≤ a ≤ n`.
    pub fn s(m: usize, n: usize, a: usize) -> Result<Self> {
        if a < 2 || a > n {
            return Err(Error::IndexOutOfRange(format!("s_{a} with n = {n}")));
        }
        let mut w = Self::identity(m, n);
        w.perm.swap(a - 2, a - 1);
        Ok(w)
    }

    /// `t_a`: multiplies `e_a` by `ς`.
    pub fn t(m: usize, n: usize, a: usize) -> Result<Self> {
        if a < 1 || a > n {
            return Err(Error::IndexOutOfRange(format!("t_{a} with n = {n}")));
        }
        let mut w = Self::identity(m, n);
        w.colors[a - 1] = 1 % m;
        Ok(w)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `σ(j)`, 0-based.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `c_j` for the target position `j`, 0-based.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = self.colors.clone();
        for j in 0..n {
            perm[j] = self.perm[other.perm[j]];
            let mid = other.perm[j];
            colors[self.perm[mid]] = (self.colors[self.perm[mid]] + other.colors[mid]) % self.m;
        }
        WreathElement { m: self.m, perm, colors }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            colors[j] = (self.m - self.colors[self.perm[j]]) % self.m;
        }
        WreathElement { m: self.m, perm, colors }
    }

    /// Product of a word of elements, leftmost outermost.
    pub fn product(m: usize, n: usize, word: &[WreathElement]) -> Self {
        word.iter().fold(Self::identity(m, n), |acc, w| acc.compose(w))
    }

    /// Conjugacy class: each cycle of `σ` of length `a` whose colors sum to
    /// `i (mod m)` contributes a part `a` to component `i` (color `0` read as `m`).
    pub fn class_type(&self) -> Multipartition {
        let n = self.n();
        let mut parts = vec![Vec::new(); self.m];
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let (mut len, mut sum, mut j) = (0, 0, s);
            while !seen[j] {
                seen[j] = true;
                sum += self.colors[j];
                j = self.perm[j];
                len += 1;
            }
            let comp = match sum % self.m {
                0 => self.m - 1,
                r => r - 1,
            };
            parts[comp].push(len);
        }
        let comps = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(p).expect("sorted cycle lengths")
            })
            .collect();
        Multipartition::new(comps).expect("m ≥ 1")
    }

    /// `w(bμ)`: for each color `i` and each part `a`, on the next block of
    /// positions `s+1..s+a` place `t_{s+a}^i s_{s+a} ⋯ s_{s+2}`.
    pub fn standard(mu: &Multipartition) -> Self {
        let m = mu.colors();
        let n = mu.size();
        let mut word = Vec::new();
        let mut s = 0;
        for (i, lam) in mu.components().iter().enumerate() {
            for &a in lam.parts() {
                for _ in 0..=i {
                    word.push(Self::t(m, n, s + a).expect("in range"));
                }
                for b in (s + 2..=s + a).rev() {
                    word.push(Self::s(m, n, b).expect("in range"));
                }
                s += a;
            }
        }
        Self::product(m, n, &word)
    }

    /// Every element of `W_{m,n}`.
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        let mut perms = vec![Vec::new()];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for p in perms {
            for code in 0..m.pow(n as u32) {
                let mut c = code;
                let colors = (0..n)
                    .map(|_| {
                        let v = c % m;
                        c /= m;
                        v
                    })
                    .collect();
                out.push(WreathElement { m, perm: p.clone(), colors });
            }
        }
        out
    }

    /// `|C_W(self)|` by exhaustion.
    pub fn brute_force_centralizer_order(&self) -> u128 {
        Self::all(self.m, self.n()).iter().filter(|g| g.compose(self) == self.compose(g)).count() as u128
    }
}
