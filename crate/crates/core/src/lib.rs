pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod exec;
pub mod symfun;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
