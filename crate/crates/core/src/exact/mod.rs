//! Exact arithmetic: rationals, sparse Laurent polynomials, cyclotomic
//! fields and linear solving.

pub mod cyclotomic;
pub mod linsolve;
pub mod poly;
pub mod registry;

pub use num_rational::BigRational;

pub use cyclotomic::{cyclotomic_phi, euler_phi, phi_coefficients, CyclotomicNumber};
pub use linsolve::{solve_linear_exact, ExactSolver, Matrix, RhsValue, Solution};
pub use poly::{Assignment, Monomial, Poly, Value};
pub use registry::{VarKind, Variable, VariableRegistry};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
