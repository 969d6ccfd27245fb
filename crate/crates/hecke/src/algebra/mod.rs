//! Exact arithmetic foundation: finite fields and their towers, dense
//! linear algebra, polynomials in q with rational coefficients, cyclotomic
//! extensions, and rational functions in the Hall-algebra variable v.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so the whole layer is safe to share across threads.

pub mod cyclotomic;
pub mod field;
pub mod gaussian;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod qpoly;

pub use cyclotomic::{CycEl, CycField};
pub use field::{factor_prime_power, ff_create, ff_create_order, Ext, Field, Fq, PrimeField, ResidueField};
pub use gaussian::{gaussian_binomial_count, gaussian_binomial_poly};
pub use laurent::{QEval, RatFunc};
pub use matrix::{ColumnSpace, Matrix};
pub use qpoly::{interpolate_counts, lagrange_interpolate, QPoly};
