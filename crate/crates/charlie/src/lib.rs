//! Exact computational toolkit for conjugacy classes and character tables of
//! the finite general linear groups `GL(n, F_q)`, the finite unitary groups
//! `U(n, F_{q^2})`, and their extensions by the transpose-inverse
//! automorphism.
//!
//! Everything is computed in exact arithmetic: finite-field towers for matrix
//! entries, arbitrary-precision rationals for symmetric-function
//! coefficients, and cyclotomic number fields for character values.  Two
//! independent routes to each character table are provided:
//!
//! * [`charmap`] builds tables combinatorially from Hall-Littlewood symmetric
//!   functions and Green-polynomial basis changes, and
//! * [`brutechar`] builds them by brute force from the group elements with
//!   the Dixon-Burnside class-algebra method,
//!
//! and the two are cross-checked against each other.  [`matgrp`] supplies the
//! explicit matrix groups, coset conjugacy, and reality machinery, and
//! [`brutechar::verify`] packages the individual theorem checks behind the
//! `verify` CLI subcommand.

pub mod algebra;
pub mod brutechar;
pub mod charmap;
pub mod cli;
pub mod error;
pub mod matgrp;
pub mod polyorb;
pub mod symfunc;
pub mod xpart;

pub use error::Error;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
