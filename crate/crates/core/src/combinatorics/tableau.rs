use super::multipartition::Multipartition;
use super::partition::Partition;
use super::profile::{HookProfile, Parity};
use crate::error::{Error, Result};

/// Filling symbol within one color; every `x` precedes every `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X(usize),
    Y(usize),
}

impl Symbol {
    pub fn parity(self) -> Parity {
        match self {
            Symbol::X(_) => Parity::Even,
            Symbol::Y(_) => Parity::Odd,
        }
    }

    pub fn local(self) -> usize {
        match self {
            Symbol::X(a) | Symbol::Y(a) => a,
        }
    }
}

/// Rows of one component's filling.
pub type Filling = Vec<Vec<Symbol>>;

/// A `bk|bl`-semistandard multitableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperTableau {
    shape: Multipartition,
    filling: Vec<Filling>,
}

impl SuperTableau {
    /// Validates the row and column rules in every component.
    pub fn new(shape: Multipartition, filling: Vec<Filling>, profile: &HookProfile) -> Result<Self> {
        if filling.len() != shape.colors() || shape.colors() != profile.m() {
            return Err(Error::Shape("filling does not match the number of colors".into()));
        }
        for (c, (lam, fill)) in shape.components().iter().zip(&filling).enumerate() {
            let rows_ok = fill.len() == lam.len() && fill.iter().zip(lam.parts()).all(|(r, &p)| r.len() == p);
            if !rows_ok || !is_semistandard(fill, profile.k(c + 1), profile.l(c + 1)) {
                return Err(Error::Shape(format!("color {} is not a valid super filling", c + 1)));
            }
        }
        Ok(SuperTableau { shape, filling })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    /// Filling of color `i` (1-based).
    pub fn component(&self, i: usize) -> &Filling {
        &self.filling[i - 1]
    }

    /// Number of boxes carrying each global basis index.
    pub fn content(&self, profile: &HookProfile) -> Vec<usize> {
        let mut out = vec![0; profile.dim()];
        for (c, fill) in self.filling.iter().enumerate() {
            for s in fill.iter().flatten() {
                let b = profile.global_index(c + 1, s.parity(), s.local()).expect("symbol inside profile");
                out[b - 1] += 1;
            }
        }
        out
    }

    /// Number of `y` boxes.
    pub fn odd_boxes(&self) -> usize {
        self.filling.iter().flatten().flatten().filter(|s| s.parity().is_odd()).count()
    }
}

fn fits(left: Option<Symbol>, above: Option<Symbol>, s: Symbol) -> bool {
    let row_ok = left.map_or(true, |l| l < s || (l == s && s.parity() == Parity::Even));
    let col_ok = above.map_or(true, |a| a < s || (a == s && s.parity() == Parity::Odd));
    row_ok && col_ok
}

fn is_semistandard(fill: &Filling, k: usize, l: usize) -> bool {
    for (r, row) in fill.iter().enumerate() {
        for (c, &s) in row.iter().enumerate() {
            let in_range = match s {
                Symbol::X(a) => (1..=k).contains(&a),
                Symbol::Y(b) => (1..=l).contains(&b),
            };
            let left = c.checked_sub(1).map(|c| row[c]);
            let above = r.checked_sub(1).map(|r| fill[r][c]);
            if !in_range || !fits(left, above, s) {
                return false;
            }
        }
    }
    true
}

/// All `(k|ℓ)`-semistandard fillings of one diagram, boxes filled in reading order.
pub fn component_fillings(lambda: &Partition, k: usize, l: usize) -> Vec<Filling> {
    let alphabet: Vec<Symbol> = (1..=k).map(Symbol::X).chain((1..=l).map(Symbol::Y)).collect();
    let boxes: Vec<(usize, usize)> = lambda.boxes().collect();
    let mut rows: Filling = lambda.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fn rec(i: usize, boxes: &[(usize, usize)], alphabet: &[Symbol], rows: &mut Filling, out: &mut Vec<Filling>) {
        let Some(&(r, c)) = boxes.get(i) else {
            out.push(rows.clone());
            return;
        };
        for &s in alphabet {
            let left = c.checked_sub(1).map(|c| rows[r][c]);
            let above = r.checked_sub(1).map(|r| rows[r][c]);
            if fits(left, above, s) {
                rows[r].push(s);
                rec(i + 1, boxes, alphabet, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(0, &boxes, &alphabet, &mut rows, &mut out);
    out
}

/// All `bk|bl`-semistandard multitableaux of shape `lambda`.
pub fn enumerate_super_tableaux(lambda: &Multipartition, profile: &HookProfile) -> Result<Vec<SuperTableau>> {
    if lambda.colors() != profile.m() {
        return Err(Error::Profile(format!("{} colors vs profile with {}", lambda.colors(), profile.m())));
    }
    let per: Vec<Vec<Filling>> = lambda
        .components()
        .iter()
        .enumerate()
        .map(|(c, lam)| component_fillings(lam, profile.k(c + 1), profile.l(c + 1)))
        .collect();
    let mut out = Vec::new();
    fn rec(per: &[Vec<Filling>], cur: &mut Vec<Filling>, shape: &Multipartition, out: &mut Vec<SuperTableau>) {
        let Some((first, rest)) = per.split_first() else {
            out.push(SuperTableau { shape: shape.clone(), filling: cur.clone() });
            return;
        };
        for f in first {
            cur.push(f.clone());
            rec(rest, cur, shape, out);
            cur.pop();
        }
    }
    rec(&per, &mut Vec::new(), lambda, &mut out);
    Ok(out)
}

/// `s_{bk|bl}(bλ)`, the number of semistandard super multitableaux.
pub fn super_tableau_count(lambda: &Multipartition, profile: &HookProfile) -> Result<u128> {
    if lambda.colors() != profile.m() {
        return Err(Error::Profile(format!("{} colors vs profile with {}", lambda.colors(), profile.m())));
    }
    Ok(lambda
        .components()
        .iter()
        .enumerate()
        .map(|(c, lam)| component_fillings(lam, profile.k(c + 1), profile.l(c + 1)).len() as u128)
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::multipartition::enumerate_multipartitions;
    use crate::combinatorics::partition::enumerate_partitions;

    fn mp(parts: &[&[usize]]) -> Multipartition {
        Multipartition::from_nested(&parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_shapes() {
        let p10 = HookProfile::new(vec![1], vec![0]).unwrap();
        let p11 = HookProfile::new(vec![1], vec![1]).unwrap();
        assert_eq!(enumerate_super_tableaux(&mp(&[&[1]]), &p10).unwrap().len(), 1);
        let row = enumerate_super_tableaux(&mp(&[&[2]]), &p11).unwrap();
        let fills: Vec<_> = row.iter().map(|t| t.component(1)[0].clone()).collect();
        assert_eq!(fills, vec![vec![Symbol::X(1), Symbol::X(1)], vec![Symbol::X(1), Symbol::Y(1)]]);
        assert_eq!(super_tableau_count(&mp(&[&[1, 1]]), &p11).unwrap(), 2);
    }

    /// Brute force: every map from boxes to the alphabet, filtered by the rules.
    fn brute_count(lambda: &Partition, k: usize, l: usize) -> usize {
        let alphabet: Vec<Symbol> = (1..=k).map(Symbol::X).chain((1..=l).map(Symbol::Y)).collect();
        let n = lambda.size();
        if alphabet.is_empty() {
            return usize::from(n == 0);
        }
        let total = alphabet.len().pow(n as u32);
        (0..total)
            .filter(|&code| {
                let mut code = code;
                let mut fill: Filling = Vec::new();
                for &p in lambda.parts() {
                    let mut row = Vec::new();
                    for _ in 0..p {
                        row.push(alphabet[code % alphabet.len()]);
                        code /= alphabet.len();
                    }
                    fill.push(row);
                }
                is_semistandard(&fill, k, l)
            })
            .count()
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..=4 {
            for lam in enumerate_partitions(n) {
                for k in 0..=2 {
                    for l in 0..=2 {
                        assert_eq!(component_fillings(&lam, k, l).len(), brute_count(&lam, k, l), "{lam} {k}|{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_tableau_equivalence() {
        for m in 1..=2 {
            for n in 0..=4 {
                for kl in 0..(4usize.pow(2 * m as u32)) {
                    let mut code = kl;
                    let mut ks = Vec::new();
                    let mut ls = Vec::new();
                    for _ in 0..m {
                        ks.push(code % 4);
                        code /= 4;
                        ls.push(code % 4);
                        code /= 4;
                    }
                    if ks.iter().zip(&ls).any(|(k, l)| k + l > 3) {
                        continue;
                    }
                    let Ok(profile) = HookProfile::new(ks, ls) else { continue };
                    for lam in enumerate_multipartitions(m, n) {
                        let count = super_tableau_count(&lam, &profile).unwrap();
                        assert_eq!(count != 0, lam.is_hook(&profile), "{lam} {profile}");
                    }
                }
            }
        }
    }

    #[test]
    fn content_and_validation() {
        let p = HookProfile::new(vec![1, 0], vec![0, 1]).unwrap();
        let ts = enumerate_super_tableaux(&mp(&[&[2], &[1, 1]]), &p).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].content(&p), vec![2, 2]);
        assert_eq!(ts[0].odd_boxes(), 2);
        let bad = vec![vec![vec![Symbol::X(1), Symbol::X(1)]], vec![vec![Symbol::Y(1), Symbol::Y(1)]]];
        assert!(SuperTableau::new(mp(&[&[2], &[2]]), bad, &p).is_err());
    }
}
