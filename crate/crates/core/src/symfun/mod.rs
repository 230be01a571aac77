//! Schur, super Schur, power-sum and Hall-Littlewood expansions over the
//! block variables of a hook profile.

pub mod block;
pub mod coords;
pub mod hall;
pub mod power;
pub mod schur;

pub use block::BlockVariables;
pub use coords::{is_block_symmetric, is_cancellation_free, monomial_coordinates, monomial_keys, rational_coordinates};
pub use hall::{
    hall_littlewood_q, q_bmu, q_n_i, q_tilde, q_tilde_sum, reverse_t_degree, super_hall_littlewood_q,
    super_hall_littlewood_split, HeckeTraceForms,
};
pub use power::{
    colored_power_sum, colored_power_sum_product, power_sum, power_sum_product, super_power_sum,
    super_power_sum_product,
};
pub use schur::{
    lr_coefficient, schur, skew_schur, super_schur, super_schur_alternating, super_schur_tableau, SuperSchurAlgorithm,
};
