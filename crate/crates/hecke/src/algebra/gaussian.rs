//! Gaussian binomial coefficients: point counts of Grassmannians over F_q.
//!
//! [n choose r]_q = prod_{i=0}^{r-1} (q^{n-i} - 1) / (q^{i+1} - 1),
//! the number of r-dimensional subspaces of F_q^n, equivalently the number
//! of F_q-points of Gr(r, n). Symmetric under r <-> n - r.

use crate::algebra::qpoly::QPoly;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;

/// The Gaussian binomial as an exact polynomial in q.
pub fn gaussian_binomial_poly(n: u32, r: u32) -> Result<QPoly> {
    if r > n {
        return Err(Error::validation(format!(
            "gaussian binomial needs 0 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 0..r {
        num = &num * &q_power_minus_one((n - i) as usize);
        den = &den * &q_power_minus_one((i + 1) as usize);
    }
    num.div_exact(&den)
}

fn q_power_minus_one(e: usize) -> QPoly {
    &QPoly::monomial(BigRational::one(), e) - &QPoly::one()
}

/// The Gaussian binomial evaluated at a concrete prime power.
pub fn gaussian_binomial_count(n: u32, r: u32, q: u64) -> Result<BigInt> {
    let poly = gaussian_binomial_poly(n, r)?;
    let v = poly.eval(&BigRational::from_integer(BigInt::from(q)));
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}
