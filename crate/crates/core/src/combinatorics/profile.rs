use std::fmt;

use crate::error::{Error, Result};

/// Parity of a basis vector of the superspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

/// Location of a global basis index inside the block decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisSlot {
    /// 1-based color.
    pub color: usize,
    pub parity: Parity,
    /// 1-based index among the even (resp. odd) vectors of this color.
    pub local: usize,
}

/// Dimensions `(k_i | ℓ_i)` of the `m` blocks of the superspace.
///
/// Global indices are color-major: color `i` owns `d_{i-1}+1 ..= d_i`, its
/// `k_i` even vectors first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookProfile {
    k: Vec<usize>,
    l: Vec<usize>,
    slots: Vec<BasisSlot>,
}

impl HookProfile {
    pub fn new(k: Vec<usize>, l: Vec<usize>) -> Result<Self> {
        if k.len() != l.len() || k.is_empty() {
            return Err(Error::Profile("k and l must be non-empty lists of equal length".into()));
        }
        if k.iter().chain(&l).sum::<usize>() == 0 {
            return Err(Error::Profile("k + l must be positive".into()));
        }
        let mut slots = Vec::new();
        for (c, (&kc, &lc)) in k.iter().zip(&l).enumerate() {
            slots.extend((1..=kc).map(|a| BasisSlot { color: c + 1, parity: Parity::Even, local: a }));
            slots.extend((1..=lc).map(|b| BasisSlot { color: c + 1, parity: Parity::Odd, local: b }));
        }
        Ok(HookProfile { k, l, slots })
    }

    /// The same `(k | ℓ)` in every one of `m` colors.
    pub fn uniform(m: usize, k: usize, l: usize) -> Result<Self> {
        Self::new(vec![k; m], vec![l; m])
    }

    pub fn m(&self) -> usize {
        self.k.len()
    }

    /// `k_i`, 1-based color.
    pub fn k(&self, i: usize) -> usize {
        self.k[i - 1]
    }

    pub fn l(&self, i: usize) -> usize {
        self.l[i - 1]
    }

    pub fn ks(&self) -> &[usize] {
        &self.k
    }

    pub fn ls(&self) -> &[usize] {
        &self.l
    }

    pub fn k_total(&self) -> usize {
        self.k.iter().sum()
    }

    pub fn l_total(&self) -> usize {
        self.l.iter().sum()
    }

    /// `k + ℓ`.
    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    /// `d_i = Σ_{j≤i} (k_j + ℓ_j)`, with `d_0 = 0`.
    pub fn d(&self, i: usize) -> usize {
        self.k[..i].iter().chain(&self.l[..i]).sum()
    }

    /// Slot of the 1-based global index `b`.
    pub fn slot(&self, b: usize) -> BasisSlot {
        self.slots[b - 1]
    }

    pub fn slots(&self) -> &[BasisSlot] {
        &self.slots
    }

    pub fn color_of(&self, b: usize) -> usize {
        self.slot(b).color
    }

    pub fn parity_of(&self, b: usize) -> Parity {
        self.slot(b).parity
    }

    /// Global index of `(color, parity, local)`.
    pub fn global_index(&self, color: usize, parity: Parity, local: usize) -> Result<usize> {
        let bound = match parity {
            Parity::Even => self.k(color),
            Parity::Odd => self.l(color),
        };
        if local == 0 || local > bound {
            return Err(Error::IndexOutOfRange(format!("local index {local} in color {color}")));
        }
        let offset = if parity == Parity::Even { 0 } else { self.k(color) };
        Ok(self.d(color - 1) + offset + local)
    }
}

impl fmt::Display for HookProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.k.iter().map(usize::to_string).collect();
        let ls: Vec<String> = self.l.iter().map(usize::to_string).collect();
        write!(f, "({}|{})", ks.join(","), ls.join(","))
    }
}

/// A basis tuple `(i_1, …, i_n)` of `V^{⊗n}`, entries 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<u16>);

impl IndexTuple {
    pub fn new(entries: Vec<usize>, profile: &HookProfile) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&e| e == 0 || e > profile.dim()) {
            return Err(Error::IndexOutOfRange(format!("entry {bad} outside 1..={}", profile.dim())));
        }
        Ok(IndexTuple(entries.into_iter().map(|e| e as u16).collect()))
    }

    pub(crate) fn from_raw(entries: Vec<u16>) -> Self {
        IndexTuple(entries)
    }

    pub fn raw(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `t`.
    pub fn get(&self, t: usize) -> usize {
        self.0[t - 1] as usize
    }

    pub fn entries(&self) -> Vec<usize> {
        self.0.iter().map(|&e| e as usize).collect()
    }

    pub fn parity(&self, t: usize, profile: &HookProfile) -> Parity {
        profile.parity_of(self.get(t))
    }

    pub fn color(&self, t: usize, profile: &HookProfile) -> usize {
        profile.color_of(self.get(t))
    }

    /// `wt(bi)`: multiplicity of each basis index.
    pub fn weight(&self, profile: &HookProfile) -> Vec<usize> {
        let mut w = vec![0; profile.dim()];
        for &e in &self.0 {
            w[e as usize - 1] += 1;
        }
        w
    }

    /// Position of the tuple in the mixed-radix enumeration of `I(n; k|ℓ)`.
    pub fn rank(&self, dim: usize) -> usize {
        self.0.iter().fold(0, |acc, &e| acc * dim + (e as usize - 1))
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(mut rank: usize, n: usize, dim: usize) -> Self {
        let mut v = vec![0u16; n];
        for slot in v.iter_mut().rev() {
            *slot = (rank % dim + 1) as u16;
            rank /= dim;
        }
        IndexTuple(v)
    }
}

/// `|I(n; k|ℓ)| = (k+ℓ)^n`, or `None` on overflow.
pub fn basis_size(n: usize, dim: usize) -> Option<usize> {
    dim.checked_pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_major_slots() {
        let p = HookProfile::new(vec![1, 2], vec![1, 0]).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.d(0), 0);
        assert_eq!(p.d(1), 2);
        assert_eq!(p.d(2), 4);
        assert_eq!(p.slot(1), BasisSlot { color: 1, parity: Parity::Even, local: 1 });
        assert_eq!(p.slot(2), BasisSlot { color: 1, parity: Parity::Odd, local: 1 });
        assert_eq!(p.slot(4), BasisSlot { color: 2, parity: Parity::Even, local: 2 });
        for b in 1..=p.dim() {
            let s = p.slot(b);
            assert_eq!(p.global_index(s.color, s.parity, s.local).unwrap(), b);
        }
        assert!(p.global_index(2, Parity::Odd, 1).is_err());
    }

    #[test]
    fn rejects_empty_profiles() {
        assert!(HookProfile::new(vec![0], vec![0]).is_err());
        assert!(HookProfile::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn tuples() {
        let p = HookProfile::uniform(1, 1, 1).unwrap();
        assert!(IndexTuple::new(vec![1, 3], &p).is_err());
        let t = IndexTuple::new(vec![2, 1, 2], &p).unwrap();
        assert_eq!(t.weight(&p), vec![1, 2]);
        assert!(t.parity(1, &p).is_odd());
        assert_eq!(IndexTuple::unrank(t.rank(2), 3, 2), t);
        for r in 0..27 {
            assert_eq!(IndexTuple::unrank(r, 3, 3).rank(3), r);
        }
    }
}
