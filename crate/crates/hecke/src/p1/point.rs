//! Closed points of the projective line over F_q.
//!
//! A closed point of degree d on the affine chart is a monic irreducible
//! polynomial pi_x of degree d in the coordinate t; its residue field is
//! F_q[t]/(pi_x), an extension of degree d, and evaluation at the point is
//! reduction mod pi_x. The point at infinity is excluded: every statement
//! here is PGL_2-equivariant, so any degree-1 computation at infinity is
//! reproduced at t = 0.

use crate::algebra::field::{Ext, Field, Fq, ResidueField};
use crate::algebra::poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedPointP1 {
    base: Fq,
    poly: Vec<<Fq as Field>::El>,
}

impl ClosedPointP1 {
    /// Wrap a monic irreducible polynomial as a closed point.
    pub fn new(base: Fq, p: Vec<<Fq as Field>::El>) -> Result<Self> {
        let p = poly::trim(&base, p);
        let d = poly::degree(&p)
            .ok_or_else(|| Error::validation("point polynomial must be nonzero"))?;
        if d < 1 {
            return Err(Error::validation("point polynomial must have degree >= 1"));
        }
        if !base.is_one(&p[d]) {
            return Err(Error::validation("point polynomial must be monic"));
        }
        if !poly::is_irreducible(&base, &p) {
            return Err(Error::validation(format!(
                "point polynomial {} is reducible",
                poly::render(&base, &p, 't')
            )));
        }
        Ok(ClosedPointP1 { base, poly: p })
    }

    pub fn base(&self) -> &Fq {
        &self.base
    }

    pub fn poly(&self) -> &[<Fq as Field>::El] {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// The residue field F_q[t]/(pi_x).
    pub fn residue_field(&self) -> ResidueField {
        Ext::new(self.base.clone(), self.poly.clone(), 't')
            .expect("point polynomial is validated irreducible")
    }

    /// q_x = q^d, the size of the residue field.
    pub fn residue_order(&self) -> u128 {
        let mut n = 1u128;
        for _ in 0..self.degree() {
            n *= self.base.order();
        }
        n
    }

    pub fn render(&self) -> String {
        poly::render(&self.base, &self.poly, 't')
    }

    /// Powers of t reduced mod pi_x: table[e] = t^e as a residue element,
    /// for e in 0..=max_e. Shared across ladder evaluations.
    pub fn power_table(&self, max_e: usize) -> Vec<Vec<<Fq as Field>::El>> {
        let f = &self.base;
        let d = self.degree();
        let mut out = Vec::with_capacity(max_e + 1);
        let mut cur = vec![f.zero(); d];
        cur[0] = f.one();
        out.push(cur.clone());
        for _ in 0..max_e {
            // multiply by t: shift up; reduce with t^d = -(pi_0 + ... + pi_{d-1} t^{d-1})
            let carry = cur[d - 1].clone();
            for j in (1..d).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = f.zero();
            if !f.is_zero(&carry) {
                for j in 0..d {
                    let t = f.mul(&carry, &self.poly[j]);
                    cur[j] = f.sub(&cur[j], &t);
                }
            }
            out.push(cur.clone());
        }
        out
    }
}

/// All closed points of degree d (finite ones), in the canonical order:
/// lexicographic by coefficient tuple, constant term most significant.
pub fn closed_points(base: &Fq, d: usize) -> Result<Vec<ClosedPointP1>> {
    if d < 1 {
        return Err(Error::validation("point degree must be >= 1"));
    }
    let mut out = vec![];
    poly::for_each_monic(base, d, |p| {
        if poly::is_irreducible(base, p) {
            out.push(ClosedPointP1 {
                base: base.clone(),
                poly: p.to_vec(),
            });
        }
        true
    });
    Ok(out)
}

/// The index-th closed point of degree d in the canonical order,
/// without enumerating past it.
pub fn closed_point(base: &Fq, d: usize, index: usize) -> Result<ClosedPointP1> {
    if d < 1 {
        return Err(Error::validation("point degree must be >= 1"));
    }
    let mut found = None;
    let mut seen = 0usize;
    poly::for_each_monic(base, d, |p| {
        if poly::is_irreducible(base, p) {
            if seen == index {
                found = Some(p.to_vec());
                return false;
            }
            seen += 1;
        }
        true
    });
    match found {
        Some(p) => Ok(ClosedPointP1 { base: base.clone(), poly: p }),
        None => Err(Error::validation(format!(
            "degree {d} has only {seen} closed points; index {index} out of range"
        ))),
    }
}

/// Necklace count of monic irreducibles: (1/d) sum_{e | d} mu(d/e) q^e.
pub fn count_closed_points(q: u128, d: u32) -> u128 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e == 0 {
            total += moebius(d / e) as i128 * q.pow(e) as i128;
        }
    }
    (total / d as i128) as u128
}

fn moebius(n: u32) -> i32 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Parse a monic polynomial in t with integer coefficients, e.g.
/// "t^5+t^2+1" or "t^2 + 2*t + 2". Coefficients are reduced into the
/// prime subfield, so this covers prime base fields; points over extension
/// base fields are selected by (degree, index) instead.
pub fn parse_point(base: &Fq, input: &str) -> Result<ClosedPointP1> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::validation("empty point polynomial"));
    }
    let mut coeffs: Vec<i64> = vec![];
    let mut term = String::new();
    let mut sign = 1i64;
    let mut terms: Vec<(i64, String)> = vec![];
    for (i, ch) in cleaned.chars().enumerate() {
        match ch {
            '+' | '-' if i > 0 => {
                terms.push((sign, std::mem::take(&mut term)));
                sign = if ch == '-' { -1 } else { 1 };
            }
            '-' => sign = -1,
            _ => term.push(ch),
        }
    }
    terms.push((sign, term));
    for (sign, t) in terms {
        if t.is_empty() {
            return Err(Error::validation(format!("malformed polynomial '{input}'")));
        }
        let (coeff, exp) = parse_term(&t)
            .ok_or_else(|| Error::validation(format!("malformed term '{t}' in '{input}'")))?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += sign * coeff;
    }
    let p = base.characteristic() as i64;
    let elems: Vec<_> = coeffs
        .iter()
        .map(|c| base.embed(&(c.rem_euclid(p) as u64)))
        .collect();
    ClosedPointP1::new(base.clone(), elems)
}

fn parse_term(t: &str) -> Option<(i64, usize)> {
    if let Some(rest) = t.strip_prefix("t^") {
        return Some((1, rest.parse().ok()?));
    }
    if t == "t" {
        return Some((1, 1));
    }
    if let Some(pos) = t.find('t') {
        let coeff_part = t[..pos].trim_end_matches('*');
        let coeff: i64 = coeff_part.parse().ok()?;
        let rest = &t[pos..];
        if rest == "t" {
            return Some((coeff, 1));
        }
        let exp = rest.strip_prefix("t^")?.parse().ok()?;
        return Some((coeff, exp));
    }
    Some((t.parse().ok()?, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::ff_create;

    #[test]
    fn degree_one_points_over_f2() {
        let f2 = ff_create(2, 1).unwrap();
        let pts = closed_points(&f2, 1).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].render(), "t");
        assert_eq!(pts[1].render(), "t + 1");
    }

    #[test]
    fn unique_degree_two_point_over_f2() {
        let f2 = ff_create(2, 1).unwrap();
        let pts = closed_points(&f2, 2).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].render(), "t^2 + t + 1");
    }

    #[test]
    fn six_degree_five_points_over_f2_and_necklace_count() {
        let f2 = ff_create(2, 1).unwrap();
        let pts = closed_points(&f2, 5).unwrap();
        assert_eq!(pts.len(), 6);
        assert_eq!(count_closed_points(2, 5), 6);
        // canonical first point under the constant-term-first ordering
        assert_eq!(pts[0].render(), "t^5 + t^3 + 1");
        assert_eq!(closed_point(&f2, 5, 0).unwrap().render(), "t^5 + t^3 + 1");
        assert!(pts.iter().any(|p| p.render() == "t^5 + t^2 + 1"));
        // necklace count matches enumeration across small cases
        for (q, k) in [(2u64, 1usize), (3, 1), (2, 2)] {
            let f = ff_create(q, k).unwrap();
            for d in 1..=4u32 {
                let n = closed_points(&f, d as usize).unwrap().len() as u128;
                assert_eq!(n, count_closed_points(f.order(), d));
            }
        }
    }

    #[test]
    fn power_table_reduces_correctly() {
        let f2 = ff_create(2, 1).unwrap();
        let x = parse_point(&f2, "t^2+t+1").unwrap();
        let tab = x.power_table(4);
        // t^2 = t + 1, t^3 = t^2 + t = 1, t^4 = t
        assert_eq!(tab[2], vec![f2.one(), f2.one()]);
        assert_eq!(tab[3], vec![f2.one(), f2.zero()]);
        assert_eq!(tab[4], vec![f2.zero(), f2.one()]);
    }

    #[test]
    fn parser_round_trip_and_reducible_rejection() {
        let f2 = ff_create(2, 1).unwrap();
        let x = parse_point(&f2, "t^5 + t^2 + 1").unwrap();
        assert_eq!(x.render(), "t^5 + t^2 + 1");
        assert!(parse_point(&f2, "t^2+1").is_err()); // (t+1)^2
        let f3 = ff_create(3, 1).unwrap();
        assert!(parse_point(&f3, "t^2 + 1").is_ok()); // irreducible over F_3
        assert!(parse_point(&f3, "t^2 - 1").is_err());
    }

    #[test]
    fn residue_field_of_degree_five_point() {
        let f2 = ff_create(2, 1).unwrap();
        let x = closed_point(&f2, 5, 0).unwrap();
        assert_eq!(x.residue_order(), 32);
        let rf = x.residue_field();
        assert_eq!(rf.order(), 32);
    }
}
