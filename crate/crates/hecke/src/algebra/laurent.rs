//! Rational functions in the formal variable v over Q(zeta_n).
//!
//! v stands for a square root of q^{-1}, so q = v^{-2}. Hall-algebra
//! normalizations live here. A value is stored as num/den where num is a
//! Laurent polynomial v^shift * N(v) and den is an honest polynomial with
//! constant term 1; gcd-cancelled. That form is canonical, so equality is
//! syntactic comparison.
//!
//! Concrete evaluation at a prime power substitutes v^2 = 1/q exactly and
//! reports the surviving q^{-1/2}-part separately instead of approximating:
//! integer multiplicities must come out with zero odd part, and a nonzero
//! odd part is a normalization signal the caller wants to see.

use crate::algebra::cyclotomic::{CycEl, CycField};
use crate::algebra::qpoly::QPoly;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// v^shift * (c[0] + c[1] v + ...), with c[0] nonzero unless the whole
/// thing is zero (empty c, shift 0).
#[derive(Clone, PartialEq, Debug)]
struct LPoly {
    shift: i64,
    c: Vec<CycEl>,
}

impl LPoly {
    fn zero() -> Self {
        LPoly { shift: 0, c: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn normalize(mut self, k: &CycField) -> Self {
        while matches!(self.c.last(), Some(x) if k.is_zero(x)) {
            self.c.pop();
        }
        let lead_zeros = self.c.iter().take_while(|x| k.is_zero(x)).count();
        if lead_zeros > 0 {
            self.c.drain(..lead_zeros);
            self.shift += lead_zeros as i64;
        }
        if self.c.is_empty() {
            self.shift = 0;
        }
        self
    }

    fn mul(&self, k: &CycField, other: &LPoly) -> LPoly {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        let mut c = vec![k.zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = k.add(&c[i + j], &k.mul(a, b));
            }
        }
        LPoly { shift: self.shift + other.shift, c }.normalize(k)
    }

    fn add(&self, k: &CycField, other: &LPoly) -> LPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.c.len() as i64).max(other.shift + other.c.len() as i64);
        let mut c = vec![k.zero(); (hi - lo) as usize];
        for (i, a) in self.c.iter().enumerate() {
            let pos = (self.shift - lo) as usize + i;
            c[pos] = k.add(&c[pos], a);
        }
        for (i, b) in other.c.iter().enumerate() {
            let pos = (other.shift - lo) as usize + i;
            c[pos] = k.add(&c[pos], b);
        }
        LPoly { shift: lo, c }.normalize(k)
    }

    fn neg(&self, k: &CycField) -> LPoly {
        LPoly {
            shift: self.shift,
            c: self.c.iter().map(|x| k.neg(x)).collect(),
        }
    }

    fn scale(&self, k: &CycField, s: &CycEl) -> LPoly {
        LPoly {
            shift: self.shift,
            c: self.c.iter().map(|x| k.mul(x, s)).collect(),
        }
        .normalize(k)
    }
}

// Plain polynomial helpers on coefficient vectors (no shift).
fn pgcd(k: &CycField, a: &[CycEl], b: &[CycEl]) -> Vec<CycEl> {
    let mut x: Vec<CycEl> = trimmed(k, a.to_vec());
    let mut y: Vec<CycEl> = trimmed(k, b.to_vec());
    while !y.is_empty() {
        let r = prem(k, x.clone(), &y);
        x = y;
        y = r;
    }
    if let Some(last) = x.last() {
        let inv = k.inv(last).expect("leading coefficient nonzero");
        x = x.iter().map(|c| k.mul(c, &inv)).collect();
    }
    x
}

fn trimmed(k: &CycField, mut v: Vec<CycEl>) -> Vec<CycEl> {
    while matches!(v.last(), Some(c) if k.is_zero(c)) {
        v.pop();
    }
    v
}

fn prem(k: &CycField, a: Vec<CycEl>, b: &[CycEl]) -> Vec<CycEl> {
    pdiv_rem(k, a, b).1
}

fn pdiv_rem(k: &CycField, a: Vec<CycEl>, b: &[CycEl]) -> (Vec<CycEl>, Vec<CycEl>) {
    let b = trimmed(k, b.to_vec());
    let db = b.len() - 1;
    let lead_inv = k.inv(&b[db]).expect("divisor nonzero");
    let mut r = trimmed(k, a);
    let mut q = vec![k.zero(); r.len().saturating_sub(db)];
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let c = k.mul(&r[dr], &lead_inv);
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = k.mul(&b[i], &c);
            r[dr - db + i] = k.sub(&r[dr - db + i], &t);
        }
        r = trimmed(k, r);
    }
    (trimmed(k, q), r)
}

/// A normalized rational function in v over Q(zeta_n).
#[derive(Clone, Debug)]
pub struct RatFunc {
    cyc: CycField,
    num: LPoly,
    den: LPoly, // shift 0, constant term 1
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.cyc == other.cyc && self.num == other.num && self.den == other.den
    }
}

impl RatFunc {
    pub fn zero(cyc: &CycField) -> Self {
        RatFunc {
            cyc: cyc.clone(),
            num: LPoly::zero(),
            den: LPoly { shift: 0, c: vec![cyc.one()] },
        }
    }

    pub fn one(cyc: &CycField) -> Self {
        Self::from_cyc(cyc, cyc.one())
    }

    pub fn from_cyc(cyc: &CycField, c: CycEl) -> Self {
        let num = LPoly { shift: 0, c: vec![c] }.normalize(cyc);
        RatFunc {
            cyc: cyc.clone(),
            num,
            den: LPoly { shift: 0, c: vec![cyc.one()] },
        }
    }

    pub fn from_rational(cyc: &CycField, c: BigRational) -> Self {
        Self::from_cyc(cyc, cyc.from_rational(c))
    }

    pub fn from_int(cyc: &CycField, n: i64) -> Self {
        Self::from_rational(cyc, BigRational::from_integer(BigInt::from(n)))
    }

    /// The monomial v^e.
    pub fn v_pow(cyc: &CycField, e: i64) -> Self {
        RatFunc {
            cyc: cyc.clone(),
            num: LPoly { shift: e, c: vec![cyc.one()] },
            den: LPoly { shift: 0, c: vec![cyc.one()] },
        }
    }

    /// Lift a polynomial in q: q = v^{-2}.
    pub fn from_qpoly(cyc: &CycField, p: &QPoly) -> Self {
        let mut acc = Self::zero(cyc);
        for (e, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::v_pow(cyc, -2 * e as i64).scale_rational(c);
            acc = &acc + &term;
        }
        acc
    }

    /// The quantum integer [m] = (v^m - v^{-m}) / (v - v^{-1}),
    /// i.e. v^{1-m} + v^{3-m} + ... + v^{m-1}.
    pub fn quantum_int(cyc: &CycField, m: u32) -> Self {
        let mut acc = Self::zero(cyc);
        for i in 0..m {
            acc = &acc + &Self::v_pow(cyc, 1 - m as i64 + 2 * i as i64);
        }
        acc
    }

    pub fn cyc(&self) -> &CycField {
        &self.cyc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.cyc)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale_cyc(&self.cyc.from_rational(c.clone()))
    }

    pub fn scale_cyc(&self, c: &CycEl) -> Self {
        Self::build(self.cyc.clone(), self.num.scale(&self.cyc, c), self.den.clone())
    }

    /// All coefficients rational (no surviving zeta).
    pub fn is_zeta_free(&self) -> bool {
        let k = &self.cyc;
        self.num.c.iter().chain(self.den.c.iter()).all(|c| k.is_rational(c))
    }

    fn build(cyc: CycField, num: LPoly, den: LPoly) -> Self {
        let k = &cyc;
        let num = num.normalize(k);
        let mut den = den.normalize(k);
        if num.is_zero() {
            return Self::zero(k);
        }
        assert!(!den.is_zero(), "zero denominator");
        // Cancel the polynomial gcd, fold all v-shifts into the numerator,
        // then force the denominator's lowest coefficient to 1.
        let g = pgcd(k, &num.c, &den.c);
        let (num_c, num_r) = pdiv_rem(k, num.c.clone(), &g);
        let (den_c, den_r) = pdiv_rem(k, den.c.clone(), &g);
        debug_assert!(num_r.is_empty() && den_r.is_empty());
        let shift = num.shift - den.shift;
        let mut num = LPoly { shift, c: num_c }.normalize(k);
        den = LPoly { shift: 0, c: den_c }.normalize(k);
        debug_assert_eq!(den.shift, 0, "denominator gcd keeps constant term");
        let c0inv = k.inv(&den.c[0]).expect("constant term nonzero");
        den = den.scale(k, &c0inv);
        num = num.scale(k, &c0inv);
        RatFunc { cyc, num, den }
    }

    /// Exact value at a concrete prime power q, split into the part with
    /// integer q-powers and the part carrying a leftover q^{-1/2}:
    /// value = even + q^{-1/2} * odd. Requires zeta-free input.
    pub fn eval_at_q(&self, q: u64) -> Result<QEval> {
        if !self.is_zeta_free() {
            return Err(Error::validation(
                "cannot evaluate: coefficients contain roots of unity",
            ));
        }
        let k = &self.cyc;
        let x = BigRational::new(BigInt::one(), BigInt::from(q)); // v^2
        let split = |lp: &LPoly, offset: i64| -> (Vec<BigRational>, Vec<BigRational>) {
            // coefficients of even and odd v-exponents, as polys in x = v^2
            let mut even = vec![];
            let mut odd = vec![];
            for (i, c) in lp.c.iter().enumerate() {
                let e = offset + i as i64;
                let r = k.as_rational(c).expect("zeta-free checked");
                let bucket = if e.rem_euclid(2) == 0 { &mut even } else { &mut odd };
                let pos = (e.div_euclid(2) - offset.div_euclid(2)) as usize;
                if bucket.len() <= pos {
                    bucket.resize(pos + 1, BigRational::zero());
                }
                bucket[pos] += r;
            }
            (even, odd)
        };
        let evalp = |p: &[BigRational], x: &BigRational| -> BigRational {
            let mut acc = BigRational::zero();
            for c in p.iter().rev() {
                acc = acc * x + c;
            }
            acc
        };
        // Denominator has shift 0; split it directly.
        let (de, dodd) = split(&self.den, 0);
        let de_v = evalp(&de, &x);
        let do_v = evalp(&dodd, &x);
        // Numerator: peel the shift as x^sigma * v^tau.
        let s = self.num.shift;
        let sigma = s.div_euclid(2);
        let tau = s.rem_euclid(2);
        let (ne, no) = split(&LPoly { shift: 0, c: self.num.c.clone() }, 0);
        let ne_v = evalp(&ne, &x);
        let no_v = evalp(&no, &x);
        // (Ne + v No) / (De + v Do) = [(Ne De - x No Do) + v (No De - Ne Do)] / (De^2 - x Do^2)
        let qden = de_v.clone() * de_v.clone() - x.clone() * do_v.clone() * do_v.clone();
        if qden.is_zero() {
            return Err(Error::validation(format!("denominator vanishes at q = {q}")));
        }
        let pe = (ne_v.clone() * de_v.clone() - x.clone() * no_v.clone() * do_v.clone()) / qden.clone();
        let po = (no_v * de_v - ne_v * do_v) / qden;
        let xs = pow_rational(&x, sigma);
        // v^{2 sigma + tau} (pe + v po):
        //   tau = 0: even = x^sigma pe, odd = x^sigma po
        //   tau = 1: even = x^{sigma+1} po, odd = x^sigma pe
        let (even, odd) = if tau == 0 {
            (xs.clone() * pe, xs * po)
        } else {
            (pow_rational(&x, sigma + 1) * po, xs * pe)
        };
        Ok(QEval { even, odd })
    }

    /// Exact rational value; errors when a q^{-1/2} part survives.
    pub fn eval_exact(&self, q: u64) -> Result<BigRational> {
        let v = self.eval_at_q(q)?;
        if !v.odd.is_zero() {
            return Err(Error::validation(format!(
                "value at q = {q} keeps a half-power part: {} + q^(-1/2) * {}",
                v.even, v.odd
            )));
        }
        Ok(v.even)
    }

    /// Present as a Laurent polynomial in q when the denominator is trivial
    /// and only even v-powers occur.
    pub fn as_q_laurent(&self) -> Option<Vec<(i64, BigRational)>> {
        if !self.is_zeta_free() {
            return None;
        }
        if self.den.c.len() != 1 {
            return None;
        }
        let k = &self.cyc;
        let mut terms = vec![];
        for (i, c) in self.num.c.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let e = self.num.shift + i as i64;
            if e % 2 != 0 {
                return None;
            }
            terms.push((-e / 2, k.as_rational(c).unwrap()));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Some(terms)
    }

    /// Plain polynomial in q, when that is what the value is.
    pub fn as_qpoly(&self) -> Option<QPoly> {
        let terms = self.as_q_laurent()?;
        if terms.iter().any(|(e, _)| *e < 0) {
            return None;
        }
        let mut coeffs = vec![BigRational::zero(); terms.first().map(|(e, _)| *e as usize + 1).unwrap_or(0)];
        for (e, c) in terms {
            coeffs[e as usize] = c;
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    fn render_lpoly(&self, lp: &LPoly) -> String {
        let k = &self.cyc;
        if lp.is_zero() {
            return "0".to_string();
        }
        let mut parts = vec![];
        for (i, c) in lp.c.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let e = lp.shift + i as i64;
            let cs = k.render(c);
            let coeff = if cs == "1" && e != 0 {
                String::new()
            } else if cs.contains(['+', '-', ' ']) && e != 0 {
                format!("({cs})")
            } else {
                cs
            };
            let body = match e {
                0 => {
                    if coeff.is_empty() {
                        "1".to_string()
                    } else {
                        coeff
                    }
                }
                1 => {
                    if coeff.is_empty() {
                        "v".to_string()
                    } else {
                        format!("{coeff}*v")
                    }
                }
                _ => {
                    if coeff.is_empty() {
                        format!("v^{e}")
                    } else {
                        format!("{coeff}*v^{e}")
                    }
                }
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

/// Value of a rational function at a concrete q, with the surviving
/// half-power tracked separately: value = even + q^{-1/2} * odd.
#[derive(Clone, Debug, PartialEq)]
pub struct QEval {
    pub even: BigRational,
    pub odd: BigRational,
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

impl fmt::Display for RatFunc {
    /// Canonical text form. Prefers the q-reading when the value is a
    /// Laurent polynomial in q; otherwise falls back to the v-form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.as_q_laurent() {
            if terms.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for (e, c) in terms {
                let neg = c.is_negative();
                let mag = c.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let cs = if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                };
                match e {
                    0 => write!(f, "{cs}")?,
                    1 => {
                        if mag.is_one() {
                            write!(f, "q")?;
                        } else {
                            write!(f, "{cs}*q")?;
                        }
                    }
                    _ => {
                        if mag.is_one() {
                            write!(f, "q^{e}")?;
                        } else {
                            write!(f, "{cs}*q^{e}")?;
                        }
                    }
                }
            }
            return Ok(());
        }
        let num = self.render_lpoly(&self.num);
        if self.den.c.len() == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.render_lpoly(&self.den))
        }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        assert_eq!(self.cyc, rhs.cyc, "mixed cyclotomic orders");
        let k = &self.cyc;
        let num = self
            .num
            .mul(k, &rhs.den)
            .add(k, &rhs.num.mul(k, &self.den));
        let den = self.den.mul(k, &rhs.den);
        RatFunc::build(self.cyc.clone(), num, den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            cyc: self.cyc.clone(),
            num: self.num.neg(&self.cyc),
            den: self.den.clone(),
        }
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        assert_eq!(self.cyc, rhs.cyc, "mixed cyclotomic orders");
        let k = &self.cyc;
        RatFunc::build(
            self.cyc.clone(),
            self.num.mul(k, &rhs.num),
            self.den.mul(k, &rhs.den),
        )
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert_eq!(self.cyc, rhs.cyc, "mixed cyclotomic orders");
        assert!(!rhs.is_zero(), "division by zero rational function");
        let k = &self.cyc;
        RatFunc::build(
            self.cyc.clone(),
            self.num.mul(k, &rhs.den),
            self.den.mul(k, &rhs.num),
        )
    }
}
