//! Dense univariate polynomials over a generic finite field.
//!
//! Polynomials are plain `Vec<F::El>` in ascending degree with no trailing
//! zeros (the zero polynomial is the empty vector). These are working
//! functions, not a wrapper type: the call sites (moduli, point polynomials,
//! section bases) all want direct access to coefficients.

use crate::algebra::field::Field;
use crate::error::{Error, Result};

pub fn trim<F: Field>(f: &F, mut v: Vec<F::El>) -> Vec<F::El> {
    while let Some(last) = v.last() {
        if f.is_zero(last) {
            v.pop();
        } else {
            break;
        }
    }
    v
}

/// Degree of a trimmed polynomial, or None for the zero polynomial.
pub fn degree<T>(v: &[T]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub fn add<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.add(&x, &y));
    }
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.sub(&x, &y));
    }
    trim(f, out)
}

pub fn mul<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &[F::El], c: &F::El) -> Vec<F::El> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

/// Quotient and remainder; the divisor need not be monic.
pub fn div_rem<F: Field>(f: &F, a: Vec<F::El>, b: &[F::El]) -> Result<(Vec<F::El>, Vec<F::El>)> {
    let b = trim(f, b.to_vec());
    let db = degree(&b).ok_or_else(|| Error::validation("division by zero polynomial"))?;
    let lead_inv = f.inv(&b[db])?;
    let mut r = trim(f, a);
    let mut q = vec![f.zero(); r.len().saturating_sub(db)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let coef = f.mul(&r[dr], &lead_inv);
        q[dr - db] = coef.clone();
        for i in 0..=db {
            let t = f.mul(&b[i], &coef);
            r[dr - db + i] = f.sub(&r[dr - db + i], &t);
        }
        r = trim(f, r);
    }
    Ok((trim(f, q), r))
}

pub fn rem<F: Field>(f: &F, a: Vec<F::El>, b: &[F::El]) -> Vec<F::El> {
    div_rem(f, a, b).expect("divisor checked nonzero by caller").1
}

pub fn eval<F: Field>(f: &F, a: &[F::El], x: &F::El) -> F::El {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Monic gcd.
pub fn gcd<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Vec<F::El> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = f.inv(&x[d]).expect("leading coefficient nonzero");
        x = scale(f, &x, &inv);
    }
    x
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
/// Errors when gcd(a, m) != 1.
pub fn inv_mod<F: Field>(f: &F, a: &[F::El], m: &[F::El]) -> Result<Vec<F::El>> {
    // Maintain r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0 = trim(f, m.to_vec());
    let mut r1 = rem(f, a.to_vec(), m);
    let mut s0: Vec<F::El> = vec![];
    let mut s1 = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(f, r0.clone(), &r1)?;
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    match degree(&r0) {
        Some(0) => {
            let c = f.inv(&r0[0])?;
            Ok(rem(f, scale(f, &s0, &c), m))
        }
        _ => Err(Error::validation("element not invertible modulo the given modulus")),
    }
}

/// Irreducibility over a finite field by trial division: a polynomial of
/// degree d >= 1 is irreducible iff no monic polynomial of degree
/// 1..=d/2 divides it. Field orders here are tiny, so this is exact and fast.
pub fn is_irreducible<F: Field>(f: &F, p: &[F::El]) -> bool {
    let d = match degree(p) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for e in 1..=d / 2 {
        let mut found = false;
        for_each_monic(f, e, |cand| {
            if rem(f, p.to_vec(), cand).is_empty() {
                found = true;
                false
            } else {
                true
            }
        });
        if found {
            return false;
        }
    }
    true
}

/// Visit all monic polynomials of exact degree d in the canonical order:
/// lexicographic by (c0, c1, ..., c_{d-1}), constant coefficient most
/// significant. The callback returns false to stop early.
pub fn for_each_monic<F: Field>(f: &F, d: usize, mut visit: impl FnMut(&[F::El]) -> bool) {
    let els = f.elements();
    let mut idx = vec![0usize; d];
    let mut poly = vec![f.zero(); d + 1];
    poly[d] = f.one();
    loop {
        for (pos, &i) in idx.iter().enumerate() {
            poly[pos] = els[i].clone();
        }
        if !visit(&poly) {
            return;
        }
        let mut pos = d;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < els.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// The lexicographically smallest monic irreducible of degree d, if any.
pub fn first_irreducible<F: Field>(f: &F, d: usize) -> Option<Vec<F::El>> {
    let mut found = None;
    for_each_monic(f, d, |cand| {
        if is_irreducible(f, cand) {
            found = Some(cand.to_vec());
            false
        } else {
            true
        }
    });
    found
}

/// Canonical rendering: decreasing degree, explicit + and -, coefficient 1
/// suppressed on nonconstant terms. Extension-field coefficients are wrapped
/// in parentheses.
pub fn render<F: Field>(f: &F, a: &[F::El], var: char) -> String {
    let a = trim(f, a.to_vec());
    if a.is_empty() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (e, c) in a.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let cs = f.render(c);
        let coeff = if f.is_one(c) && e > 0 {
            String::new()
        } else if cs.contains(['+', '-', ' ']) {
            format!("({cs})")
        } else {
            cs
        };
        let term = match e {
            0 => {
                if coeff.is_empty() {
                    "1".to_string()
                } else {
                    coeff
                }
            }
            1 => {
                if coeff.is_empty() {
                    var.to_string()
                } else {
                    format!("{coeff}*{var}")
                }
            }
            _ => {
                if coeff.is_empty() {
                    format!("{var}^{e}")
                } else {
                    format!("{coeff}*{var}^{e}")
                }
            }
        };
        parts.push(term);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{ff_create, Field, PrimeField};

    #[test]
    fn division_round_trip() {
        let f = PrimeField::new(5).unwrap();
        let a = vec![1, 2, 3, 4]; // 4t^3 + 3t^2 + 2t + 1
        let b = vec![2, 1]; // t + 2
        let (q, r) = div_rem(&f, a.clone(), &b).unwrap();
        let back = add(&f, &mul(&f, &q, &b), &r);
        assert_eq!(back, a);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let f = PrimeField::new(3).unwrap();
        let a = vec![1, 0, 1]; // t^2 + 1, irreducible over F_3
        let b = vec![1, 1]; // t + 1
        assert_eq!(gcd(&f, &a, &b), vec![1]);
    }

    #[test]
    fn irreducibles_of_degree_two_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let mut irr = vec![];
        for_each_monic(&f, 2, |p| {
            if is_irreducible(&f, p) {
                irr.push(p.to_vec());
            }
            true
        });
        assert_eq!(irr, vec![vec![1, 1, 1]]); // only t^2 + t + 1
    }

    #[test]
    fn render_is_canonical() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(render(&f, &[1, 0, 1, 0, 0, 1], 't'), "t^5 + t^2 + 1");
        assert_eq!(render(&f, &[], 't'), "0");
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(render(&f3, &[2, 2], 't'), "2*t + 2");
    }

    #[test]
    fn inv_mod_in_residue_field() {
        let f4 = ff_create(2, 2).unwrap();
        let pi = first_irreducible(&f4, 3).unwrap();
        // invert t + 1 modulo pi
        let a = vec![f4.one(), f4.one()];
        let u = inv_mod(&f4, &a, &pi).unwrap();
        let prod = rem(&f4, mul(&f4, &a, &u), &pi);
        assert_eq!(prod, vec![f4.one()]);
    }
}
