//! Exact computations in the reduced Birman-Murakami-Wenzl algebra of type B.

pub mod algebra;
pub mod coeffs;
pub mod combinatorics;
pub mod diagrams;
pub mod invariant;
pub mod tensor;
pub mod trace;
