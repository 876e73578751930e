//! Positive braid words and the cluster combinatorics of their rainbow closures.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`braid`]: braid words, rewrite moves, the positive word problem and closure arithmetic;
//! * [`brick`]: brick diagrams and brick quivers;
//! * [`quiver`]: exchange matrices, mutation, canonical forms, Dynkin recognition and
//!   the finite/infinite type decision;
//! * [`cluster`]: seeds, the DT transformation of acyclic quivers, frieze orbits and filling seeds;
//! * [`classify`]: decomposition of finite-type braids into standard ADE links;
//! * [`derivation`]: a checker for rewrite chains.
#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod braid;
pub mod brick;
pub mod classify;
pub mod cluster;
pub mod derivation;
mod error;
pub mod quiver;

pub use braid::{BraidWord, GreedyNormalForm, Letter, Permutation};
pub use brick::{BrickDiagram, BrickQuiver};
pub use error::{Error, Result};
pub use quiver::{DynkinType, ExchangeMatrix, Family, TypeVerdict};
