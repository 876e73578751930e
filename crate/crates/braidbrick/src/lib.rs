//! File formats, the bundled derivation corpus and the command line for
//! [`braidbrick_core`].

pub mod cli;
pub mod corpus;
pub mod deriv;
pub mod dot;
pub mod json;

pub use braidbrick_core;
