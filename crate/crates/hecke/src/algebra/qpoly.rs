//! Polynomials in the symbol q with exact rational coefficients.
//!
//! These carry the multiplicity polynomials and Grassmannian point counts.
//! Rendering is canonical (decreasing degree, explicit signs) so that
//! serialized tables are byte-stable: `q^5 - q^3`, `2*q + 1`, `0`.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    /// Coefficients in ascending degree, no trailing zeros.
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(rat(n))
    }

    /// The monomial c * q^e.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    /// The variable q itself.
    pub fn q() -> Self {
        QPoly::monomial(rat(1), 1)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Substitute q -> q^d.
    pub fn compose_q_power(&self, d: usize) -> QPoly {
        assert!(d >= 1);
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        if self.coeffs.is_empty() {
            return QPoly::zero();
        }
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * d] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, rhs: &QPoly) -> Result<QPoly> {
        if rhs.is_zero() {
            return Err(Error::validation("polynomial division by zero"));
        }
        let mut r = self.coeffs.clone();
        let db = rhs.coeffs.len() - 1;
        let lead = rhs.coeffs[db].clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
        while r.len() > db || (r.len() == db + 1 && db == 0) {
            if r.is_empty() {
                break;
            }
            let dr = r.len() - 1;
            if dr < db {
                break;
            }
            let c = r[dr].clone() / lead.clone();
            q[dr - db] = c.clone();
            for i in 0..=db {
                let t = rhs.coeffs[i].clone() * c.clone();
                r[dr - db + i] = r[dr - db + i].clone() - t;
            }
            while matches!(r.last(), Some(x) if x.is_zero()) {
                r.pop();
            }
        }
        if !r.is_empty() {
            return Err(Error::internal("inexact polynomial division"));
        }
        Ok(QPoly::from_coeffs(q))
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for QPoly {
    /// Decreasing degree with explicit signs: `q^5 - q^3`, `2*q + 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign_neg = c.is_negative();
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = render_rational(&mag);
            match e {
                0 => write!(f, "{coeff_str}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "q")?;
                    } else {
                        write!(f, "{coeff_str}*q")?;
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "q^{e}")?;
                    } else {
                        write!(f, "{coeff_str}*q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact interpolation with a declared degree bound.
///
/// The first `degree_bound + 1` samples determine the polynomial (Newton's
/// divided differences, exact rational arithmetic); every remaining sample is
/// treated as held-out validation and must be reproduced exactly.
pub fn lagrange_interpolate(
    samples: &[(BigRational, BigRational)],
    degree_bound: usize,
) -> Result<QPoly> {
    let need = degree_bound + 1;
    if samples.len() < need {
        return Err(Error::validation(format!(
            "need {need} samples for degree bound {degree_bound}, got {}",
            samples.len()
        )));
    }
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            if samples[i].0 == samples[j].0 {
                return Err(Error::validation(format!(
                    "duplicate abscissa {}",
                    render_rational(&samples[i].0)
                )));
            }
        }
    }
    let fit = &samples[..need];
    // Newton divided differences.
    let mut table: Vec<BigRational> = fit.iter().map(|(_, y)| y.clone()).collect();
    let xs: Vec<BigRational> = fit.iter().map(|(x, _)| x.clone()).collect();
    for level in 1..need {
        for i in (level..need).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            table[i] = num / den;
        }
    }
    // Expand the Newton form to monomial coefficients.
    let mut result = QPoly::zero();
    let mut basis = QPoly::one();
    for (i, coef) in table.iter().enumerate() {
        result = &result + &(&basis * &QPoly::constant(coef.clone()));
        if i + 1 < need {
            let lin = QPoly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
            basis = &basis * &lin;
        }
    }
    // Held-out validation.
    for (x, y) in &samples[need..] {
        let got = result.eval(x);
        if got != *y {
            return Err(Error::validation(format!(
                "held-out sample at {} disagrees: interpolant gives {}, observed {}",
                render_rational(x),
                render_rational(&got),
                render_rational(y)
            )));
        }
    }
    Ok(result)
}

/// Convenience wrapper for integer-valued samples.
pub fn interpolate_counts(samples: &[(u64, BigRational)], degree_bound: usize) -> Result<QPoly> {
    let s: Vec<(BigRational, BigRational)> = samples
        .iter()
        .map(|(x, y)| (BigRational::from_integer(BigInt::from(*x)), y.clone()))
        .collect();
    lagrange_interpolate(&s, degree_bound)
}
