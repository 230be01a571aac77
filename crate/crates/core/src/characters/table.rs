use std::sync::Arc;

use super::basis::SchurBasis;
use crate::combinatorics::{HookProfile, Multipartition, Partition};
use crate::error::{Error, Result};
use crate::exact::{Assignment, CyclotomicNumber, Poly, Value, VariableRegistry};
use crate::exec::{map_collect, Execution};
use crate::symfun::q_n_i;

/// Square table of character values `χ^{bλ}(bμ)`, rows and columns in
/// canonical multipartition order.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub(crate) m: usize,
    pub(crate) n: usize,
    pub(crate) rows: Vec<Multipartition>,
    pub(crate) cols: Vec<Multipartition>,
    pub(crate) entries: Vec<Vec<Poly>>,
    pub(crate) solve_profile: HookProfile,
    pub(crate) specialized: bool,
    pub(crate) registry: Arc<VariableRegistry>,
}

impl CharacterTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row][col]
    }

    /// Entries at `q = 1, Q_i = ς^i` are polynomials in `z`; this reads one as
    /// an element of `Q(ς_m)`.
    pub fn entry_cyclotomic(&self, row: usize, col: usize) -> Result<CyclotomicNumber> {
        if !self.specialized {
            return Err(Error::Domain("table is not specialized".into()));
        }
        self.entries[row][col].to_cyclotomic(self.m as u32)
    }

    pub fn solve_profile(&self) -> &HookProfile {
        &self.solve_profile
    }

    pub fn is_specialized(&self) -> bool {
        self.specialized
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.registry
    }

    pub fn row_index(&self, lambda: &Multipartition) -> Option<usize> {
        self.rows.iter().position(|r| r == lambda)
    }

    pub fn col_index(&self, mu: &Multipartition) -> Option<usize> {
        self.cols.iter().position(|c| c == mu)
    }

    /// The class of the identity: `(∅; …; ∅; (1^n))`, since `t^m = 1`.
    pub fn identity_column(&self) -> usize {
        let mut parts = vec![vec![]; self.m];
        parts[self.m - 1] = vec![1; self.n];
        let id = Multipartition::from_nested(&parts).expect("valid shape");
        self.col_index(&id).expect("identity class present")
    }

    /// The row that becomes all ones at `q = 1, Q_i = ς^i`.
    pub fn trivial_row(&self) -> Result<Option<usize>> {
        let spec = if self.specialized { self.clone() } else { specialize_table(self)? };
        let one = Poly::one(&spec.registry);
        Ok(spec.entries.iter().position(|row| row.iter().all(|e| *e == one)))
    }
}

/// `χ^{bλ}(bμ)` for `H_{m,n}(q, Q)`, solved from `q_bμ = Σ_bλ χ^{bλ}(bμ) S_bλ` at
/// the profile `k_i = n, ℓ_i = 0`. Each column is checked against the full
/// polynomial identity and for integer coefficients.
pub fn hecke_character_table(m: usize, n: usize, exec: Execution) -> Result<CharacterTable> {
    let basis = SchurBasis::new(m, n, exec)?;
    let block = &basis.block;
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..=m).map(move |i| (a, i))).collect();
    let qni: Vec<Poly> = map_collect(exec, &pairs, |&(a, i)| q_n_i(a, i, block)).into_iter().collect::<Result<_>>()?;
    let piece = |a: usize, i: usize| &qni[(a - 1) * m + (i - 1)];

    let columns: Vec<Vec<Poly>> = map_collect(exec, &basis.labels, |mu| {
        let mut rhs = block.one();
        for (i, lam) in mu.components().iter().enumerate() {
            for &a in lam.parts() {
                rhs = &rhs * piece(a, i + 1);
            }
        }
        let sol = basis.solver.solve(&basis.coordinates(&rhs))?;
        let mut residual = rhs;
        for (chi, s) in sol.x.iter().zip(&basis.schur) {
            residual -= &(chi * s);
        }
        if !residual.is_zero() {
            return Err(Error::Consistency(format!("q_bμ at {mu} is not spanned by the Schur functions")));
        }
        if let Some(bad) = sol.x.iter().find(|c| !c.has_integer_coefficients()) {
            return Err(Error::Consistency(format!("non-integral character value {bad} at {mu}")));
        }
        Ok(sol.x)
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let rows = basis.labels.len();
    let entries = (0..rows).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    Ok(CharacterTable {
        m,
        n,
        rows: basis.labels.clone(),
        cols: basis.labels.clone(),
        entries,
        solve_profile: block.profile().clone(),
        specialized: false,
        registry: block.registry().clone(),
    })
}

/// Entrywise `q ↦ 1, Q_i ↦ ς^i`, with values reduced in `Q(ς_m)`.
pub fn specialize_table(table: &CharacterTable) -> Result<CharacterTable> {
    if table.specialized {
        return Ok(table.clone());
    }
    let reg = &table.registry;
    let mut spec = Assignment::new().set("q", Value::integer(reg, 1));
    for i in 1..=table.m {
        spec = spec.set(format!("Q{i}"), Value::Root { order: table.m as u32, power: i as i64 });
    }
    let entries = table
        .entries
        .iter()
        .map(|row| row.iter().map(|e| e.substitute(&spec)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(CharacterTable { entries, specialized: true, ..table.clone() })
}

/// The split `(λ^(1), …)` of a single-color label, for `m = 1` comparisons.
pub fn single_component(lambda: &Multipartition) -> Option<&Partition> {
    (lambda.colors() == 1).then(|| lambda.component(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::mn_character;

    fn mp(v: Vec<Vec<usize>>) -> Multipartition {
        Multipartition::from_nested(&v).unwrap()
    }

    fn named(t: &CharacterTable, s: &str) -> Poly {
        Poly::named(&t.registry, s).unwrap()
    }

    #[test]
    fn m1_n2_generic_values() {
        let t = hecke_character_table(1, 2, Execution::Sequential).unwrap();
        let (two, ones) = (mp(vec![vec![2]]), mp(vec![vec![1, 1]]));
        let (r2, r11) = (t.row_index(&two).unwrap(), t.row_index(&ones).unwrap());
        let (c2, c11) = (t.col_index(&two).unwrap(), t.col_index(&ones).unwrap());
        let q = named(&t, "q");
        let q1 = named(&t, "Q1");
        let q_inv = q.pow_signed(-1).unwrap();
        // standard elements carry one ξ factor per part
        assert_eq!(t.entry(r2, c2), &(&q * &q1));
        assert_eq!(t.entry(r11, c2), &-(&q_inv * &q1));
        assert_eq!(t.entry(r2, c11), &(&q1 * &q1));
        assert_eq!(t.entry(r11, c11), &(&q1 * &q1));
        assert_eq!(t.identity_column(), c11);
    }

    #[test]
    fn m2_n1_values() {
        let t = hecke_character_table(2, 1, Execution::Sequential).unwrap();
        let (a, b) = (mp(vec![vec![1], vec![]]), mp(vec![vec![], vec![1]]));
        let (ra, rb) = (t.row_index(&a).unwrap(), t.row_index(&b).unwrap());
        let (ca, cb) = (t.col_index(&a).unwrap(), t.col_index(&b).unwrap());
        let (q1, q2) = (named(&t, "Q1"), named(&t, "Q2"));
        assert_eq!(t.entry(ra, ca), &q1);
        assert_eq!(t.entry(ra, cb), &q1.pow(2));
        assert_eq!(t.entry(rb, ca), &q2);
        assert_eq!(t.entry(rb, cb), &q2.pow(2));
        let s = specialize_table(&t).unwrap();
        let vals: Vec<i64> = [(ra, ca), (ra, cb), (rb, ca), (rb, cb)]
            .iter()
            .map(|&(r, c)| s.entry(r, c).as_constant().unwrap().to_integer().try_into().unwrap())
            .collect();
        assert_eq!(vals, vec![-1, 1, 1, 1]);
        assert_eq!(s.trivial_row().unwrap(), Some(rb));
    }

    #[test]
    fn m1_specializes_to_mn() {
        for n in 1..=4 {
            let s = specialize_table(&hecke_character_table(1, n, Execution::Parallel).unwrap()).unwrap();
            for (r, l) in s.rows().iter().enumerate() {
                for (c, mu) in s.cols().iter().enumerate() {
                    let v = mn_character(single_component(l).unwrap(), single_component(mu).unwrap()).unwrap();
                    assert_eq!(s.entry(r, c), &Poly::from_int(s.registry(), v), "n={n} {l} {mu}");
                }
            }
        }
    }

    #[test]
    fn invalid_sizes() {
        assert!(hecke_character_table(0, 1, Execution::Sequential).is_err());
        assert!(hecke_character_table(1, 0, Execution::Sequential).is_err());
    }
}
