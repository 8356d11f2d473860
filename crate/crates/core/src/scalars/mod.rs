//! Exact scalars: phases in Q/Z and elements of cyclotomic fields.

mod cyclotomic;
mod phase;

pub use cyclotomic::{cyclotomic_poly, totient, Cyclotomic};
pub use phase::Phase;
