//! Command-line front end: character tables, verification suites and single
//! expansions, serialized as JSON or CSV.

pub mod app;
pub mod serialize;
