//! Symbolic layer over the oracle: multiplicity polynomials in q, the
//! Euler form, and Hall-product expansions of a skyscraper against a
//! bundle class with explicit v-normalization.
//!
//! Everything here is a pure function of immutable inputs; sampling across
//! fields is independent per field and assembled deterministically.

pub mod class;
pub mod polytable;
pub mod product;

pub use class::{euler_form, CohClassP1, Curve, ShClass, TorsionPart};
pub use polytable::{
    default_samples, degree_bound, multiplicity_polynomials, verify_sum_rule,
    MultiplicityPolynomialTable, SumRuleReport,
};
pub use product::{hall_product_skyscraper, HallCoeff, HallElementP1};
