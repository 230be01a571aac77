//! Character tables: Murnaghan–Nakayama for `S_n`, the Frobenius solve for
//! `H_{m,n}(q, Q)`, its specialization to `W_{m,n}`, an independent power-sum
//! solve and orthogonality audits.

mod basis;
pub mod mn;
pub mod orthogonality;
pub mod table;
pub mod wreath;

pub use mn::{mn_character, mn_table};
pub use orthogonality::{verify_orthogonality, OrthogonalityReport, Violation};
pub use table::{hecke_character_table, single_component, specialize_table, CharacterTable};
pub use wreath::{wreath_character, wreath_character_table};
