use super::table::CharacterTable;
use crate::combinatorics::centralizer_order_wreath;
use crate::error::Result;
use crate::exact::{rat, BigRational, CyclotomicNumber};

/// One failed orthogonality sum.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// `"row"` for the first relation, `"column"` for the second.
    pub relation: &'static str,
    pub a: usize,
    pub b: usize,
    pub expected: CyclotomicNumber,
    pub found: CyclotomicNumber,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub row_pairs: usize,
    pub column_pairs: usize,
    pub violations: Vec<Violation>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// First relation `Σ_bμ Z_bμ^{-1} χ^{bλ}(bμ) conj χ^{bλ'}(bμ) = δ` over all row
/// pairs, second relation `Σ_bλ χ^{bλ}(bμ) conj χ^{bλ}(bν) = Z_bμ δ` over all
/// column pairs, with `conj: ς ↦ ς^{m-1}`.
pub fn verify_orthogonality(table: &CharacterTable) -> Result<OrthogonalityReport> {
    let m = table.m() as u32;
    let k = table.rows().len();
    let chi: Vec<Vec<CyclotomicNumber>> =
        (0..k).map(|r| (0..k).map(|c| table.entry_cyclotomic(r, c)).collect()).collect::<Result<_>>()?;
    let z: Vec<u128> = table.cols().iter().map(|mu| centralizer_order_wreath(mu, table.m())).collect();
    let mut violations = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let mut sum = CyclotomicNumber::zero(m);
            for c in 0..k {
                let w = CyclotomicNumber::from_rational(m, BigRational::new(1.into(), (z[c] as i64).into()));
                sum = &sum + &(&w * &(&chi[a][c] * &chi[b][c].conj()));
            }
            let expected = CyclotomicNumber::from_integer(m, (a == b) as i64);
            if sum != expected {
                violations.push(Violation { relation: "row", a, b, expected, found: sum });
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let mut sum = CyclotomicNumber::zero(m);
            for row in &chi {
                sum = &sum + &(&row[a] * &row[b].conj());
            }
            let expected =
                CyclotomicNumber::from_rational(m, if a == b { rat(z[a] as i64) } else { rat(0) });
            if sum != expected {
                violations.push(Violation { relation: "column", a, b, expected, found: sum });
            }
        }
    }
    Ok(OrthogonalityReport { row_pairs: k * k, column_pairs: k * k, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{hecke_character_table, specialize_table};
    use crate::exec::Execution;

    #[test]
    fn small_tables_are_orthonormal() {
        for (m, n) in [(1, 3), (2, 1), (2, 2), (3, 2)] {
            let t = specialize_table(&hecke_character_table(m, n, Execution::Parallel).unwrap()).unwrap();
            let report = verify_orthogonality(&t).unwrap();
            assert!(report.passed(), "m={m} n={n}: {:?}", report.violations);
        }
    }

    #[test]
    fn a_corrupted_table_is_flagged() {
        let mut t = specialize_table(&hecke_character_table(2, 1, Execution::Sequential).unwrap()).unwrap();
        t.entries[0][0] = crate::exact::Poly::from_int(&t.registry, 2);
        let report = verify_orthogonality(&t).unwrap();
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.relation == "row" && v.a == 0 && v.b == 0));
    }

    #[test]
    fn generic_tables_are_refused() {
        let t = hecke_character_table(1, 2, Execution::Sequential).unwrap();
        assert!(verify_orthogonality(&t).is_err());
    }
}
