//! Finite fields as explicit quotient rings.
//!
//! `PrimeField` is Z/p for a prime p. `Ext<F>` is F[x]/(m) for a monic
//! irreducible m over an arbitrary finite field F, so towers come for free:
//! the base field F_q = F_{p^k} is `Ext<PrimeField>` and the residue field
//! of a closed point of degree d is `Ext<Fq>`.
//!
//! Elements are always stored in canonical reduced form, so `PartialEq` on
//! element values is semantic equality. Every operation is a pure function
//! of immutable field descriptors; nothing here carries interior mutability.

use crate::algebra::poly;
use crate::error::{Error, Result};
use std::fmt;

/// Arithmetic interface shared by the prime fields and their extensions.
///
/// The field value itself is a lightweight descriptor (characteristic,
/// modulus); elements are passed by reference to the descriptor's methods.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type El: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    /// Multiplicative inverse; errors on zero.
    fn inv(&self, a: &Self::El) -> Result<Self::El>;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn characteristic(&self) -> u64;
    /// Total number of elements.
    fn order(&self) -> u128;
    /// All elements in the canonical order: lexicographic by coordinate
    /// vector, constant coordinate most significant. The first element is
    /// always 0 and the second is 1 for extensions of degree >= 1.
    fn elements(&self) -> Vec<Self::El>;
    /// Canonical text rendering of one element.
    fn render(&self, a: &Self::El) -> String;

    fn div(&self, a: &Self::El, b: &Self::El) -> Result<Self::El> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::El) -> bool {
        *a == self.one()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field Z/p with elements reduced to 0..p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::validation(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }

    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type El = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p < 2^32 in every use here, so u64 products do not overflow;
        // go through u128 anyway to keep the invariant unconditional.
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::validation("inverse of zero"));
        }
        // Fermat: a^(p-2).
        let mut result = 1u64;
        let mut base = *a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(result)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u128 {
        self.p as u128
    }
    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// F[x]/(m) for a monic irreducible m of degree k over the base field F.
///
/// Elements are coefficient vectors of fixed length k (low degree first),
/// zero-padded so equality of vectors is equality of elements.
#[derive(Clone, PartialEq, Debug)]
pub struct Ext<F: Field> {
    base: F,
    modulus: Vec<F::El>,
    var: char,
}

impl<F: Field> Ext<F> {
    /// Build F[x]/(modulus). The modulus must be monic, of degree >= 1,
    /// and irreducible over the base field.
    pub fn new(base: F, modulus: Vec<F::El>, var: char) -> Result<Self> {
        let modulus = poly::trim(&base, modulus);
        let deg = match poly::degree(&modulus) {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::validation("extension modulus must have degree >= 1")),
        };
        if !base.is_one(&modulus[deg]) {
            return Err(Error::validation("extension modulus must be monic"));
        }
        if !poly::is_irreducible(&base, &modulus) {
            return Err(Error::validation(format!(
                "modulus {} is reducible",
                poly::render(&base, &modulus, var)
            )));
        }
        Ok(Ext { base, modulus, var })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &[F::El] {
        &self.modulus
    }

    pub fn var(&self) -> char {
        self.var
    }

    /// The class of x, the canonical generator.
    pub fn gen(&self) -> Vec<F::El> {
        let mut v = vec![self.base.zero(); self.degree()];
        if self.degree() == 1 {
            // x reduces to a constant: x = -m0.
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    /// Embed a base-field element.
    pub fn embed(&self, c: &F::El) -> Vec<F::El> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c.clone();
        v
    }

    /// Reduce an arbitrary-degree coefficient vector into the field.
    pub fn reduce(&self, coeffs: Vec<F::El>) -> Vec<F::El> {
        let r = poly::rem(&self.base, coeffs, &self.modulus);
        self.pad(r)
    }

    fn pad(&self, mut v: Vec<F::El>) -> Vec<F::El> {
        v.resize(self.degree(), self.base.zero());
        v
    }
}

impl<F: Field> Field for Ext<F> {
    type El = Vec<F::El>;

    fn zero(&self) -> Vec<F::El> {
        vec![self.base.zero(); self.degree()]
    }
    fn one(&self) -> Vec<F::El> {
        self.embed(&self.base.one())
    }
    fn add(&self, a: &Vec<F::El>, b: &Vec<F::El>) -> Vec<F::El> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<F::El>, b: &Vec<F::El>) -> Vec<F::El> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<F::El>, b: &Vec<F::El>) -> Vec<F::El> {
        let prod = poly::mul(&self.base, a, b);
        self.reduce(prod)
    }
    fn neg(&self, a: &Vec<F::El>) -> Vec<F::El> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn inv(&self, a: &Vec<F::El>) -> Result<Vec<F::El>> {
        if self.is_zero(a) {
            return Err(Error::validation("inverse of zero"));
        }
        let u = poly::inv_mod(&self.base, a, &self.modulus)?;
        Ok(self.pad(u))
    }
    fn is_zero(&self, a: &Vec<F::El>) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn order(&self) -> u128 {
        let mut n = 1u128;
        for _ in 0..self.degree() {
            n *= self.base.order();
        }
        n
    }
    fn elements(&self) -> Vec<Vec<F::El>> {
        let base_els = self.base.elements();
        let k = self.degree();
        let mut out = Vec::with_capacity(base_els.len().pow(k as u32));
        let mut idx = vec![0usize; k];
        loop {
            out.push(idx.iter().map(|&i| base_els[i].clone()).collect());
            // Odometer with the last coordinate fastest: lexicographic by
            // (c0, c1, ...) with the constant coordinate most significant.
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < base_els.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    fn render(&self, a: &Vec<F::El>) -> String {
        poly::render(&self.base, a, self.var)
    }
}

/// The base field F_q = F_{p^k} over its prime field.
pub type Fq = Ext<PrimeField>;

/// Residue field of a closed point: F_q[t]/(pi_x).
pub type ResidueField = Ext<Fq>;

/// Build F_{p^k} with the canonical modulus: the lexicographically smallest
/// monic irreducible of degree k over F_p, coefficients compared from the
/// constant term up. This makes serialized output stable across runs.
pub fn ff_create(p: u64, k: usize) -> Result<Fq> {
    if k < 1 {
        return Err(Error::validation("extension degree must be >= 1"));
    }
    let prime = PrimeField::new(p)?;
    let modulus = poly::first_irreducible(&prime, k)
        .ok_or_else(|| Error::internal(format!("no irreducible of degree {k} over F_{p}")))?;
    Ext::new(prime, modulus, 'a')
}

/// Interpret a prime power q = p^k. Errors when q is not a prime power.
pub fn factor_prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::validation(format!("{q} is not a prime power")));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            if m != 1 {
                return Err(Error::validation(format!("{q} is not a prime power")));
            }
            return Ok((p, k));
        }
        p += 1;
    }
    Ok((q, 1)) // q itself is prime
}

/// Build F_q for a prime power written multiplicatively, e.g. 9 -> F_{3^2}.
pub fn ff_create_order(q: u64) -> Result<Fq> {
    let (p, k) = factor_prime_power(q)?;
    ff_create(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&3, &5), 1);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn f4_has_expected_modulus_and_elements() {
        let f4 = ff_create(2, 2).unwrap();
        // t^2 + t + 1 is the unique irreducible of degree 2 over F_2.
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.order(), 4);
        let els = f4.elements();
        assert_eq!(els.len(), 4);
        assert_eq!(els[0], f4.zero());
        // Every nonzero element is invertible and a * a^-1 = 1.
        for e in els.iter().skip(1) {
            let i = f4.inv(e).unwrap();
            assert_eq!(f4.mul(e, &i), f4.one());
        }
    }

    #[test]
    fn f2_is_the_prime_field_in_disguise() {
        let f2 = ff_create(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.elements().len(), 2);
    }

    #[test]
    fn f9_multiplicative_group_is_cyclic_of_order_8() {
        let f9 = ff_create(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        // Some element has multiplicative order exactly 8.
        let mut found = false;
        for e in f9.elements() {
            if f9.is_zero(&e) {
                continue;
            }
            let mut pow = e.clone();
            let mut ord = 1;
            while pow != f9.one() {
                pow = f9.mul(&pow, &e);
                ord += 1;
            }
            assert_eq!(8 % ord, 0);
            if ord == 8 {
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn residue_field_tower() {
        // F_4[t]/(t^2 + t + a) style tower: pick a degree-2 irreducible over F_4.
        let f4 = ff_create(2, 2).unwrap();
        let pi = poly::first_irreducible(&f4, 2).unwrap();
        let rf = Ext::new(f4.clone(), pi, 't').unwrap();
        assert_eq!(rf.order(), 16);
        for e in rf.elements() {
            if !rf.is_zero(&e) {
                let i = rf.inv(&e).unwrap();
                assert_eq!(rf.mul(&e, &i), rf.one());
            }
        }
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(factor_prime_power(8).unwrap(), (2, 3));
        assert_eq!(factor_prime_power(9).unwrap(), (3, 2));
        assert_eq!(factor_prime_power(7).unwrap(), (7, 1));
        assert!(factor_prime_power(6).is_err());
        assert!(factor_prime_power(12).is_err());
    }
}
