//! Exact scalar arithmetic: finite-field towers with compatible subfields,
//! multiplicative characters, and cyclotomic number fields.
//!
//! All finite-field elements of a given characteristic live in one fixed
//! extension `F_{p^D}` (the "tower"), chosen large enough for the session;
//! a subfield `F_{p^k}` with `k | D` is the subset of elements whose
//! discrete log is divisible by `(p^D - 1)/(p^k - 1)`.  Embeddings between
//! subfields are then set inclusions, so tower compatibility holds by
//! construction.  Character values are exact elements of `Q(zeta_M)`.

pub mod cyclotomic;
pub mod fp;
pub mod smallfield;
pub mod tower;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use fp::FpPoly;
pub use smallfield::SmallField;
pub use tower::Tower;
