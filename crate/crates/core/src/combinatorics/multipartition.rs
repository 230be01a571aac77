use std::fmt;

use super::partition::{enumerate_compositions, enumerate_partitions, factorial, Partition};
use super::profile::HookProfile;
use crate::error::{Error, Result};

/// An ordered `m`-tuple of partitions `(λ^(1); …; λ^(m))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Shape("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(components))
    }

    /// Build from nested part lists, e.g. `[[2, 1], []]`.
    pub fn from_nested(parts: &[Vec<usize>]) -> Result<Self> {
        Self::new(parts.iter().map(|p| Partition::new(p.clone())).collect::<Result<_>>()?)
    }

    pub fn to_nested(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|p| p.parts().to_vec()).collect()
    }

    /// `(∅; …; λ; …; ∅)` with `λ` in color `color` (1-based).
    pub fn single(m: usize, color: usize, lambda: Partition) -> Result<Self> {
        if color == 0 || color > m {
            return Err(Error::Shape(format!("color {color} outside 1..{m}")));
        }
        let mut comps = vec![Partition::empty(); m];
        comps[color - 1] = lambda;
        Self::new(comps)
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// Component of color `i` (1-based).
    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    /// Every component `λ^(i)` is a `(k_i, ℓ_i)`-hook partition.
    pub fn is_hook(&self, profile: &HookProfile) -> bool {
        self.colors() == profile.m()
            && self.0.iter().enumerate().all(|(i, lam)| lam.is_hook(profile.k(i + 1), profile.l(i + 1)))
    }

    /// Componentwise conjugate.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition(self.0.iter().map(Partition::conjugate).collect())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "({})", s.join(";"))
    }
}

/// All of `P_{m,n}`: size splits in descending-lex order, then the product of
/// reverse-lex partition lists, first color varying slowest.
pub fn enumerate_multipartitions(m: usize, n: usize) -> Vec<Multipartition> {
    fn rec(lists: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        let Some((first, rest)) = lists.split_first() else {
            out.push(Multipartition(cur.clone()));
            return;
        };
        for p in first {
            cur.push(p.clone());
            rec(rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for sizes in enumerate_compositions(n, m) {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&s| enumerate_partitions(s)).collect();
        rec(&lists, &mut Vec::new(), &mut out);
    }
    out
}

/// `Z_bμ = Π_i Π_j (j·m)^{m_ij} m_ij!`, the centralizer order in `W_{m,n}`.
pub fn centralizer_order_wreath(mu: &Multipartition, m: usize) -> u128 {
    mu.components()
        .iter()
        .flat_map(|p| p.multiplicities())
        .map(|(j, mult)| ((j * m) as u128).pow(mult as u32) * factorial(mult))
        .product()
}

/// `|W_{m,n}| = m^n n!`.
pub fn wreath_order(m: usize, n: usize) -> u128 {
    (m as u128).pow(n as u32) * factorial(n)
}

/// Number of standard multitableaux: `n!/Π|λ^(i)|! · Π f^{λ^(i)}`.
pub fn standard_multitableaux_count(lambda: &Multipartition) -> u128 {
    let mut out = factorial(lambda.size());
    for p in lambda.components() {
        out /= factorial(p.size());
    }
    lambda.components().iter().fold(out, |acc, p| acc * p.dimension())
}
