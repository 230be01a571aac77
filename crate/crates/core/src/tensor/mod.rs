//! The tensor space `V^{⊗n}` with the Hecke and classical actions.

pub mod classical;
pub mod relations;
pub mod space;
pub mod vector;
pub mod word;

pub use classical::{act, classical_trace};
pub use relations::{check_relations, RelationCheck};
pub use space::TensorSpace;
pub use vector::TensorVector;
pub use word::{reduced_word, Op, OperatorWord};
