//! Exact computation of Hecke modifications of vector bundles on curves
//! over finite fields.
//!
//! The engine has two halves. Over the projective line, a brute-force
//! oracle represents a rank-n bundle by its splitting type, enumerates
//! subspaces of the fiber at a closed point, constructs each modification
//! explicitly and recovers its type from exact section counts; a symbolic
//! layer interpolates the resulting multiplicities into polynomials in q,
//! expands Hall products and builds the weighted graphs of Hecke operators.
//! Over the elliptic curve y^2 + y = x^3 + x + 1 / F_2, a specialized
//! pipeline runs the character/base-change bookkeeping of the Hall algebra
//! and expands the bracket [K_x, E'] for the rank-2 degree-0 trace bundle.
//!
//! All arithmetic is exact: arbitrary-precision rationals, explicit finite
//! fields, cyclotomic extensions and rational functions in v with
//! v^2 = q^{-1}. There is no floating point anywhere.

pub mod algebra;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod graph;
pub mod hall;
pub mod p1;
pub mod selftest;

pub use error::{Error, Result};
