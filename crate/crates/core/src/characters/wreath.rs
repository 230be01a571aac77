//! Characters of `W_{m,n}` solved from `S_bλ = Σ_bμ Z_bμ^{-1} χ^{bλ}(bμ) P_bμ`,
//! independently of the Hecke table.

use num_rational::BigRational;
use num_traits::Zero;

use super::basis::{lookup, SchurBasis};
use super::table::CharacterTable;
use crate::combinatorics::{centralizer_order_wreath, wreath_order, Multipartition};
use crate::error::{Error, Result};
use crate::exact::{euler_phi, rat, CyclotomicNumber, ExactSolver, Matrix, Poly};
use crate::exec::{map_collect, Execution};
use crate::symfun::colored_power_sum_product;

/// The realified system over `Q`: unknown `(bμ, f)` is the `ς^f` coordinate
/// of `χ(bμ)`, row `(key, g)` the `ς^g` coordinate at a dominant monomial.
/// Columns carry `|W| / Z_bμ` so every entry is an integer.
struct PowerSystem {
    basis: SchurBasis,
    phi: usize,
    solver: ExactSolver,
    order: BigRational,
    powers: Vec<Poly>,
}

impl PowerSystem {
    fn new(m: usize, n: usize, exec: Execution) -> Result<Self> {
        let basis = SchurBasis::new(m, n, exec)?;
        let block = &basis.block;
        let phi = euler_phi(m as u32);
        let order = wreath_order(m, n);
        let labels = &basis.labels;
        let powers: Vec<Poly> = map_collect(exec, labels, |mu| colored_power_sum_product(mu, block))
            .into_iter()
            .collect::<Result<_>>()?;
        let vars = basis.vars();
        let z = block.z();
        let mut a = Matrix::zeros(labels.len() * phi, labels.len() * phi);
        for (c, (mu, p)) in labels.iter().zip(&powers).enumerate() {
            let weight = rat((order / centralizer_order_wreath(mu, m)) as i64);
            for f in 0..phi {
                let shifted = (&p.scale(&weight) * &Poly::var_pow(block.registry(), z, f as i32)?)
                    .reduce_cyclotomic(m as u32)?;
                for (r, coeff) in lookup(&shifted, &vars, &basis.keys).into_iter().enumerate() {
                    let cyc = coeff.to_cyclotomic(m as u32)?;
                    for (g, v) in cyc.coefficients().iter().enumerate() {
                        if !v.is_zero() {
                            a.set(r * phi + g, c * phi + f, v.clone());
                        }
                    }
                }
            }
        }
        let solver = ExactSolver::new(a).map_err(|e| match e {
            Error::Singular { rank, cols } => Error::Profile(format!("power sums have rank {rank} < {cols}")),
            other => other,
        })?;
        Ok(PowerSystem { basis, phi, solver, order: rat(order as i64), powers })
    }

    /// The row `χ^{bλ}(·)` for the label at `row`.
    fn solve_row(&self, row: usize) -> Result<Vec<CyclotomicNumber>> {
        let m = self.basis.block.m() as u32;
        let s = &self.basis.schur[row];
        let mut rhs = vec![BigRational::zero(); self.basis.keys.len() * self.phi];
        for (r, coeff) in self.basis.coordinates(s).into_iter().enumerate() {
            rhs[r * self.phi] = coeff.as_constant().unwrap_or_else(BigRational::zero) * &self.order;
        }
        let x = self.solver.solve(&rhs)?.x;
        let chi: Vec<CyclotomicNumber> =
            x.chunks(self.phi).map(|c| CyclotomicNumber::from_coefficients(m, c.to_vec())).collect();
        // S_bλ = Σ Z^{-1} χ P as full polynomials
        let block = &self.basis.block;
        let mut residual = s.clone();
        for ((mu, value), p) in self.basis.labels.iter().zip(&chi).zip(&self.powers) {
            let z_inv = BigRational::new(1.into(), (centralizer_order_wreath(mu, m as usize) as i64).into());
            residual -= &(&value.to_poly(block.registry())? * &p.scale(&z_inv));
        }
        if !residual.reduce_cyclotomic(m)?.is_zero() {
            return Err(Error::Consistency(format!("S at {} is not spanned by the power sums", self.basis.labels[row])));
        }
        Ok(chi)
    }
}

/// `χ^{bλ}(bμ)` for `W_{m,n}` from the power-sum expansion of `S_bλ`.
pub fn wreath_character(lambda: &Multipartition, mu: &Multipartition, m: usize) -> Result<CyclotomicNumber> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{mu}|")));
    }
    if lambda.colors() != m || mu.colors() != m {
        return Err(Error::SizeMismatch(format!("labels need {m} components")));
    }
    let sys = PowerSystem::new(m, lambda.size(), Execution::Sequential)?;
    let row = sys.basis.labels.iter().position(|l| l == lambda).expect("canonical label");
    let col = sys.basis.labels.iter().position(|l| l == mu).expect("canonical label");
    Ok(sys.solve_row(row)?.swap_remove(col))
}

/// The full `W_{m,n}` table by the power-sum path, shaped like a specialized
/// [`CharacterTable`].
pub fn wreath_character_table(m: usize, n: usize, exec: Execution) -> Result<CharacterTable> {
    let sys = PowerSystem::new(m, n, exec)?;
    let ranks: Vec<usize> = (0..sys.basis.labels.len()).collect();
    let reg = sys.basis.block.registry().clone();
    let entries = map_collect(exec, &ranks, |&r| {
        sys.solve_row(r)?.iter().map(|c| c.to_poly(&reg)).collect::<Result<Vec<Poly>>>()
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        m,
        n,
        rows: sys.basis.labels.clone(),
        cols: sys.basis.labels.clone(),
        entries,
        solve_profile: sys.basis.block.profile().clone(),
        specialized: true,
        registry: reg,
    })
}
