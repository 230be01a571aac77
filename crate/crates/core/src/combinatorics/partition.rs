use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; parts must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.0 {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Boxes `(row, col)` in reading order, 0-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.conjugate().part(col) - row - 1;
        arm + leg + 1
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, c) in self.boxes() {
            hooks *= (self.part(r) - c + conj.part(c) - r - 1) as u128;
        }
        factorial(self.size()) / hooks
    }

    /// `(λ_{k+1} ≤ ℓ)`: the diagram fits in the (k, ℓ) hook.
    pub fn is_hook(&self, k: usize, l: usize) -> bool {
        self.part(k) <= l
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in (0..=outer.part(i).min(max)).rev() {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, reverse-lexicographic: `(n), (n-1,1), …, (1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Order of the centralizer in `S_n` of a permutation of cycle type `mu`:
/// `Π_j j^{m_j} m_j!`.
pub fn centralizer_order_sym(mu: &Partition) -> u128 {
    mu.multiplicities()
        .into_iter()
        .map(|(j, mj)| (j as u128).pow(mj as u32) * factorial(mj))
        .product()
}

/// All nonnegative vectors of length `len` summing to `n`, in descending
/// lexicographic order: `(n,0,…), …, (0,…,n)`.
pub fn enumerate_compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=rest).rev() {
            cur.push(first);
            rec(rest - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    if len == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(n, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Independent count: p(n, k) = number of partitions of n with parts ≤ k.
    fn count_oracle(n: usize, k: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        count_oracle(n, k - 1) + if n >= k { count_oracle(n - k, k) } else { 0 }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(6).len(), 11);
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), count_oracle(n, n));
        }
    }

    #[test]
    fn reverse_lex_order() {
        let got: Vec<Vec<usize>> = enumerate_partitions(4).into_iter().map(|p| p.0).collect();
        assert_eq!(got, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        for n in 1..8 {
            let ps = enumerate_partitions(n);
            assert!(ps.windows(2).all(|w| w[0].0 > w[1].0));
        }
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn hook_condition() {
        assert!(!p(&[2, 2]).is_hook(1, 1));
        assert!(p(&[5]).is_hook(1, 0));
        assert!(p(&[1, 1, 1]).is_hook(0, 1));
        assert!(Partition::empty().is_hook(0, 0));
    }

    #[test]
    fn conjugates_and_dimensions() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).dimension(), 2);
        assert_eq!(p(&[3, 2]).dimension(), 5);
        assert_eq!(p(&[2, 2]).hook_length(0, 0), 3);
        for n in 1..=7 {
            let s: u128 = enumerate_partitions(n).iter().map(|l| l.dimension().pow(2)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for perm in permutations(n - 1) {
            for pos in 0..n {
                let mut v = perm.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    #[test]
    fn centralizer_orders_match_brute_force() {
        assert_eq!(centralizer_order_sym(&p(&[1, 1, 1])), 6);
        assert_eq!(centralizer_order_sym(&p(&[3])), 3);
        assert_eq!(centralizer_order_sym(&p(&[2, 2, 1])), 8);
        let perms = permutations(5);
        let target = perms.iter().find(|w| cycle_type(w) == p(&[2, 2, 1])).unwrap();
        let commuting = perms
            .iter()
            .filter(|g| (0..5).all(|i| g[target[i]] == target[g[i]]))
            .count();
        assert_eq!(commuting as u128, 8);
    }

    #[test]
    fn compositions() {
        assert_eq!(enumerate_compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(enumerate_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(enumerate_compositions(3, 2).len(), 4);
        // stars and bars: C(n + len - 1, len - 1)
        assert_eq!(enumerate_compositions(4, 3).len(), 15);
    }

    #[test]
    fn subpartitions_of_21() {
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|s| p(&[2, 1]).contains(s)));
    }
}
