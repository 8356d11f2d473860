//! Exact algebra for twisted Bernoulli shifts of `Z² ⋊ SL(2, Z)` built from
//! a triplet `(H, μ, χ)`: finitely generated abelian groups, scalar
//! 2-cocycles, the twisted group algebra over `⊕_{Z²} H`, the shift action,
//! and decision procedures for conjugacy and centralizers.

pub mod abelian;
pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod cocycle;
pub mod dynamics;
pub mod error;
pub mod io;
pub mod lambda;
pub mod lattice;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod selftest;
mod snf;

pub use error::{Error, Result, Violation};
pub use scalars::{Cyclotomic, Phase};
