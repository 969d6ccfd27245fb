//! Multiplicity polynomials in q.
//!
//! The Hall coefficients attached to weight-r modifications at a degree-d
//! point depend on the base field only through q, with degree at most
//! r(n-r)d. Sampling the oracle over enough fields therefore determines
//! each multiplicity exactly: fit on r(n-r)d + 1 fields, validate on the
//! rest (held-out samples must be reproduced exactly), and check the sum
//! rule -- the polynomials must add up to the Grassmannian count
//! [n choose r] with q replaced by q^d, as an exact identity.

use crate::algebra::field::{ff_create_order, Field};
use crate::algebra::gaussian::gaussian_binomial_poly;
use crate::algebra::qpoly::{interpolate_counts, QPoly};
use crate::error::{Error, Result};
use crate::p1::point::{closed_point, count_closed_points};
use crate::p1::splitting::SplittingType;
use crate::p1::table::multiplicity_table;
use num::bigint::BigInt;
use num::rational::BigRational;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct MultiplicityPolynomialTable {
    pub source: SplittingType,
    pub point_degree: usize,
    pub weight: usize,
    pub polys: BTreeMap<SplittingType, QPoly>,
    pub samples: Vec<u64>,
    pub sum_rule: SumRuleReport,
}

#[derive(Clone, Debug)]
pub struct SumRuleReport {
    pub ok: bool,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

/// Prime powers in ascending order, for default sample sets.
pub fn default_samples(count: usize) -> Vec<u64> {
    let mut out = vec![];
    let mut q = 2u64;
    while out.len() < count {
        if crate::algebra::field::factor_prime_power(q).is_ok() {
            out.push(q);
        }
        q += 1;
    }
    out
}

/// Degree bound for the multiplicity polynomials of weight-r modifications
/// of a rank-n bundle at a degree-d point.
pub fn degree_bound(n: usize, r: usize, d: usize) -> usize {
    r * (n - r) * d
}

pub fn multiplicity_polynomials(
    e: &SplittingType,
    d: usize,
    r: usize,
    samples: &[u64],
    cap: u128,
) -> Result<MultiplicityPolynomialTable> {
    let n = e.rank();
    if r < 1 || r > n {
        return Err(Error::validation(format!(
            "weight must satisfy 1 <= r <= rank; got r = {r}, rank = {n}"
        )));
    }
    let bound = degree_bound(n, r, d);
    if samples.len() < bound + 2 {
        return Err(Error::validation(format!(
            "degree bound {bound} needs at least {} sample fields (fit {} + held-out 1), got {}",
            bound + 2,
            bound + 1,
            samples.len()
        )));
    }
    let mut per_sample: Vec<(u64, BTreeMap<SplittingType, u64>)> = vec![];
    let mut independence_checked = false;
    for &q in samples {
        let field = ff_create_order(q)?;
        let x = closed_point(&field, d, 0)?;
        let table = multiplicity_table(e, &x, r, cap)?;
        // Well definedness: the counts must not depend on which degree-d
        // point was used. Check once, on the first field with a second point.
        if !independence_checked && count_closed_points(field.order(), d as u32) >= 2 {
            let x2 = closed_point(&field, d, 1)?;
            let table2 = multiplicity_table(e, &x2, r, cap)?;
            if table.counts != table2.counts {
                return Err(Error::internal(format!(
                    "multiplicity table over F_{q} depends on the degree-{d} point"
                )));
            }
            independence_checked = true;
        }
        per_sample.push((q, table.counts));
    }
    let keys: BTreeSet<SplittingType> = per_sample
        .iter()
        .flat_map(|(_, c)| c.keys().cloned())
        .collect();
    let mut polys = BTreeMap::new();
    for key in keys {
        let pts: Vec<(u64, BigRational)> = per_sample
            .iter()
            .map(|(q, c)| {
                let count = c.get(&key).copied().unwrap_or(0);
                (*q, BigRational::from_integer(BigInt::from(count)))
            })
            .collect();
        let poly = interpolate_counts(&pts, bound).map_err(|err| {
            Error::validation(format!(
                "interpolation for target {key} failed (wrong degree bound or oracle bug): {err}"
            ))
        })?;
        polys.insert(key, poly);
    }
    let sum_rule = sum_rule_report(&polys, n, r, d)?;
    if !sum_rule.ok {
        return Err(Error::internal(format!(
            "sum rule violated: {} != {}",
            sum_rule.lhs, sum_rule.rhs
        )));
    }
    Ok(MultiplicityPolynomialTable {
        source: e.clone(),
        point_degree: d,
        weight: r,
        polys,
        samples: samples.to_vec(),
        sum_rule,
    })
}

fn sum_rule_report(
    polys: &BTreeMap<SplittingType, QPoly>,
    n: usize,
    r: usize,
    d: usize,
) -> Result<SumRuleReport> {
    let mut lhs = QPoly::zero();
    for p in polys.values() {
        lhs = &lhs + p;
    }
    let rhs = gaussian_binomial_poly(n as u32, r as u32)?.compose_q_power(d);
    let difference = &lhs - &rhs;
    Ok(SumRuleReport {
        ok: difference.is_zero(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: difference.to_string(),
    })
}

/// Re-verify the sum rule of an existing table (the polynomials must add up
/// to the Grassmannian count at q^d, exactly). Always returns a verdict.
pub fn verify_sum_rule(table: &MultiplicityPolynomialTable) -> SumRuleReport {
    sum_rule_report(
        &table.polys,
        table.source.rank(),
        table.weight,
        table.point_degree,
    )
    .expect("weight validated at construction")
}

impl MultiplicityPolynomialTable {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .polys
            .iter()
            .map(|(t, p)| json!({ "type": t.entries(), "polynomial": p.to_string() }))
            .collect();
        json!({
            "source": self.source.entries(),
            "point_degree": self.point_degree,
            "weight": self.weight,
            "samples": self.samples,
            "table": rows,
            "sum_rule": {
                "ok": self.sum_rule.ok,
                "lhs": self.sum_rule.lhs,
                "rhs": self.sum_rule.rhs,
            },
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "multiplicity polynomials: source {}, point degree {}, weight {}\n",
            self.source, self.point_degree, self.weight
        );
        for (t, p) in &self.polys {
            out.push_str(&format!("  {t}  :  {p}\n"));
        }
        out.push_str(&format!(
            "  sum rule: {} = {} [{}]\n",
            self.sum_rule.lhs,
            self.sum_rule.rhs,
            if self.sum_rule.ok { "ok" } else { "VIOLATED" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn degree_one_polynomials() {
        let t = multiplicity_polynomials(&st(&[0, 0]), 1, 1, &[2, 3, 4, 5], 1 << 20).unwrap();
        assert_eq!(t.polys.len(), 1);
        assert_eq!(t.polys[&st(&[-1, 0])].to_string(), "q + 1");
        assert!(t.sum_rule.ok);

        let t1 = multiplicity_polynomials(&st(&[0, 1]), 1, 1, &[2, 3, 4, 5], 1 << 20).unwrap();
        assert_eq!(t1.polys[&st(&[0, 0])].to_string(), "q");
        assert_eq!(t1.polys[&st(&[-1, 1])].to_string(), "1");
    }

    #[test]
    fn degree_two_polynomials_and_twist_equivariance() {
        let samples = [2u64, 3, 4, 5, 7];
        let t = multiplicity_polynomials(&st(&[0, 0]), 2, 1, &samples, 1 << 20).unwrap();
        // total must be q^2 + 1
        assert_eq!(t.sum_rule.rhs, "q^2 + 1");
        // twisting the source twists every key and keeps the polynomials
        let t2 = multiplicity_polynomials(&st(&[3, 3]), 2, 1, &samples, 1 << 20).unwrap();
        for (k, p) in &t.polys {
            assert_eq!(&t2.polys[&k.twist(3)], p);
        }
    }

    #[test]
    fn insufficient_samples_is_an_error() {
        let r = multiplicity_polynomials(&st(&[0, 0]), 2, 1, &[2, 3], 1 << 20);
        assert!(r.is_err());
    }

    #[test]
    fn interpolation_round_trip_on_fresh_field() {
        // Fit on k+1 fields, then evaluate on a field the fit never saw and
        // compare against a fresh oracle run.
        let samples = [2u64, 3, 4, 5];
        let t = multiplicity_polynomials(&st(&[-1, 1]), 1, 1, &samples, 1 << 20).unwrap();
        let f7 = ff_create_order(7).unwrap();
        let x = closed_point(&f7, 1, 0).unwrap();
        let oracle = multiplicity_table(&st(&[-1, 1]), &x, 1, 1 << 20).unwrap();
        for (key, poly) in &t.polys {
            let predicted = poly.eval_u64(7);
            let observed = oracle.counts.get(key).copied().unwrap_or(0);
            assert_eq!(predicted, BigRational::from_integer(BigInt::from(observed)));
        }
    }

    #[test]
    fn perturbed_table_fails_the_sum_rule() {
        let mut t = multiplicity_polynomials(&st(&[0, 0]), 1, 1, &[2, 3, 4, 5], 1 << 20).unwrap();
        let key = st(&[-1, 0]);
        let bumped = &t.polys[&key] + &QPoly::one();
        t.polys.insert(key, bumped);
        let report = verify_sum_rule(&t);
        assert!(!report.ok);
        assert_eq!(report.difference, "1");
    }
}
