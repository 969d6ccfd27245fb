//! Exact arithmetic in the cyclotomic field Q(zeta_n).
//!
//! Elements are polynomials of degree < phi(n) in zeta, reduced modulo the
//! n-th cyclotomic polynomial after every operation. Order n = 1 degenerates
//! to plain rationals, which is what the projective-line computations use;
//! the elliptic example runs at n = 5.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type CycEl = Vec<BigRational>;

type RPoly = Vec<BigRational>;

fn rtrim(mut v: RPoly) -> RPoly {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
    v
}

fn rsub(a: &[BigRational], b: &[BigRational]) -> RPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    rtrim(out)
}

fn rmul(a: &[BigRational], b: &[BigRational]) -> RPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rtrim(out)
}

fn rdiv_rem(a: RPoly, b: &[BigRational]) -> (RPoly, RPoly) {
    let b = rtrim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r = rtrim(a);
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead.clone();
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = b[i].clone() * c.clone();
            r[dr - db + i] = r[dr - db + i].clone() - t;
        }
        r = rtrim(r);
    }
    (rtrim(q), r)
}

/// The n-th cyclotomic polynomial, exact, by the recursive quotient
/// x^n - 1 = prod_{d | n} Phi_d.
pub fn cyclotomic_polynomial(n: u32) -> RPoly {
    assert!(n >= 1);
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    let mut den = vec![BigRational::one()];
    for d in 1..n {
        if n % d == 0 {
            den = rmul(&den, &cyclotomic_polynomial(d));
        }
    }
    let (q, r) = rdiv_rem(num, &den);
    assert!(r.is_empty(), "cyclotomic division must be exact");
    q
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Descriptor for Q(zeta_n).
#[derive(Clone, Debug)]
pub struct CycField {
    n: u32,
    phi: usize,
    minimal: RPoly,
    /// zeta^e for e in 0..n, reduced to the canonical basis.
    powers: Vec<CycEl>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl CycField {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        let minimal = cyclotomic_polynomial(n);
        let phi = minimal.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        for e in 0..n {
            let mut mono = vec![BigRational::zero(); e as usize + 1];
            mono[e as usize] = BigRational::one();
            let (_, r) = rdiv_rem(mono, &minimal);
            powers.push(pad(r, phi));
        }
        CycField { n, phi, minimal, powers }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> CycEl {
        vec![BigRational::zero(); self.phi]
    }

    pub fn one(&self) -> CycEl {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, c: BigRational) -> CycEl {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    pub fn from_int(&self, n: i64) -> CycEl {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// zeta^e with e taken modulo n.
    pub fn zeta_pow(&self, e: i64) -> CycEl {
        let e = e.rem_euclid(self.n as i64) as usize;
        self.powers[e].clone()
    }

    pub fn zeta(&self) -> CycEl {
        self.zeta_pow(1)
    }

    pub fn add(&self, a: &CycEl, b: &CycEl) -> CycEl {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &CycEl, b: &CycEl) -> CycEl {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &CycEl) -> CycEl {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &CycEl, b: &CycEl) -> CycEl {
        let prod = rmul(a, b);
        let (_, r) = rdiv_rem(prod, &self.minimal);
        pad(r, self.phi)
    }

    pub fn scale(&self, a: &CycEl, c: &BigRational) -> CycEl {
        a.iter().map(|x| x * c).collect()
    }

    pub fn inv(&self, a: &CycEl) -> Result<CycEl> {
        if self.is_zero(a) {
            return Err(Error::validation("inverse of zero in cyclotomic field"));
        }
        // Extended Euclid in Q[x] against the minimal polynomial.
        let mut r0 = self.minimal.clone();
        let mut r1 = rtrim(a.clone());
        let mut s0: RPoly = vec![];
        let mut s1: RPoly = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = rdiv_rem(r0.clone(), &r1);
            let s = rsub(&s0, &rmul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.len() != 1 {
            return Err(Error::internal("cyclotomic modulus not coprime to element"));
        }
        let c = r0[0].clone();
        let inv: RPoly = s0.iter().map(|x| x / c.clone()).collect();
        let (_, r) = rdiv_rem(inv, &self.minimal);
        Ok(pad(r, self.phi))
    }

    pub fn div(&self, a: &CycEl, b: &CycEl) -> Result<CycEl> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &CycEl) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Ring automorphism zeta -> zeta^j, defined for gcd(j, n) = 1.
    pub fn aut(&self, a: &CycEl, j: u32) -> Result<CycEl> {
        if gcd(j % self.n, self.n) != 1 && self.n > 1 {
            return Err(Error::validation(format!(
                "zeta -> zeta^{j} is not an automorphism for n = {}",
                self.n
            )));
        }
        let mut out = self.zero();
        for (e, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = self.scale(&self.zeta_pow((e as i64) * (j as i64)), c);
            out = self.add(&out, &img);
        }
        Ok(out)
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conj(&self, a: &CycEl) -> CycEl {
        if self.n == 1 {
            return a.clone();
        }
        self.aut(a, self.n - 1).expect("n-1 coprime to n")
    }

    pub fn is_rational(&self, a: &CycEl) -> bool {
        a.iter().skip(1).all(|x| x.is_zero())
    }

    pub fn as_rational(&self, a: &CycEl) -> Option<BigRational> {
        if self.is_rational(a) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    pub fn render(&self, a: &CycEl) -> String {
        if self.is_zero(a) {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in a.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let body = match e {
                0 => coeff,
                1 => {
                    if mag.is_one() {
                        "z".to_string()
                    } else {
                        format!("{coeff}*z")
                    }
                }
                _ => {
                    if mag.is_one() {
                        format!("z^{e}")
                    } else {
                        format!("{coeff}*z^{e}")
                    }
                }
            };
            parts.push((sign, body));
        }
        let mut out = String::new();
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(body);
        }
        out
    }
}

fn pad(mut v: RPoly, len: usize) -> RPoly {
    v.resize(len, BigRational::zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn phi_five_is_the_quintic_sum() {
        let p = cyclotomic_polynomial(5);
        assert_eq!(p, vec![r(1), r(1), r(1), r(1), r(1)]);
        assert_eq!(cyclotomic_polynomial(1), vec![r(-1), r(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![r(1), r(1)]);
        assert_eq!(euler_phi(5), 4);
    }

    #[test]
    fn golden_ratio_relations_hold() {
        // (z + z^4) + (z^2 + z^3) = -1 and (z + z^4)(z^2 + z^3) = -1.
        let k = CycField::new(5);
        let a = k.add(&k.zeta_pow(1), &k.zeta_pow(4));
        let b = k.add(&k.zeta_pow(2), &k.zeta_pow(3));
        assert_eq!(k.add(&a, &b), k.from_int(-1));
        assert_eq!(k.mul(&a, &b), k.from_int(-1));
    }

    #[test]
    fn inverse_and_conjugation() {
        let k = CycField::new(5);
        let z = k.zeta();
        let zi = k.inv(&z).unwrap();
        assert_eq!(k.mul(&z, &zi), k.one());
        assert_eq!(k.conj(&z), k.zeta_pow(4));
        // conjugation is an automorphism: conj(ab) = conj(a) conj(b)
        let a = k.add(&z, &k.from_int(2));
        let b = k.zeta_pow(3);
        assert_eq!(
            k.conj(&k.mul(&a, &b)),
            k.mul(&k.conj(&a), &k.conj(&b))
        );
    }

    #[test]
    fn order_one_is_plain_rationals() {
        let k = CycField::new(1);
        assert_eq!(k.degree(), 1);
        let a = k.from_rational(BigRational::new(BigInt::from(3), BigInt::from(2)));
        let b = k.from_int(4);
        assert_eq!(k.mul(&a, &b), k.from_int(6));
        assert!(k.is_rational(&a));
    }

    #[test]
    fn zeta_power_reduction() {
        let k = CycField::new(5);
        // zeta^4 = -(1 + z + z^2 + z^3)
        let z4 = k.zeta_pow(4);
        let sum: CycEl = k.add(
            &k.add(&k.one(), &k.zeta_pow(1)),
            &k.add(&k.zeta_pow(2), &k.zeta_pow(3)),
        );
        assert_eq!(z4, k.neg(&sum));
        // zeta^5 = 1
        assert_eq!(k.zeta_pow(5), k.one());
    }
}
