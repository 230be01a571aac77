//! Partitions, multipartitions, hook profiles, super tableaux and the
//! wreath product `W_{m,n}`.

pub mod multipartition;
pub mod partition;
pub mod profile;
pub mod tableau;
pub mod wreath;

pub use multipartition::{
    centralizer_order_wreath, enumerate_multipartitions, standard_multitableaux_count, wreath_order, Multipartition,
};
pub use partition::{centralizer_order_sym, enumerate_compositions, enumerate_partitions, factorial, Partition};
pub use profile::{basis_size, BasisSlot, HookProfile, IndexTuple, Parity};
pub use tableau::{component_fillings, enumerate_super_tableaux, super_tableau_count, Filling, SuperTableau, Symbol};
pub use wreath::WreathElement;
