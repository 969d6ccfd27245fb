//! Hall products of a weight-r skyscraper with a bundle class.
//!
//! K_x^{(+)r} * E expands as v^{-<K, E>} times: one term for every bundle
//! class F that receives E as a weight-r modification at x, carrying the
//! multiplicity polynomial m_{x,r}(F, E); plus the split extension
//! E (+) K_x^{(+)r}. The split-extension coefficient involves automorphism
//! counts that none of the downstream consumers need, so it is carried as
//! an opaque marker rather than a number.

use crate::algebra::cyclotomic::CycField;
use crate::algebra::laurent::RatFunc;
use crate::error::Result;
use crate::hall::class::{euler_form, CohClassP1, Curve, ShClass, TorsionPart};
use crate::hall::polytable::multiplicity_polynomials;
use crate::p1::splitting::SplittingType;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub enum HallCoeff {
    Value(RatFunc),
    /// Split-extension coefficient, deliberately left symbolic.
    Opaque,
}

#[derive(Clone, Debug)]
pub struct HallElementP1 {
    pub cyc: CycField,
    pub terms: BTreeMap<CohClassP1, HallCoeff>,
}

impl HallElementP1 {
    /// Serialization order: (rank, degree, type, torsion).
    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&CohClassP1> = self.terms.keys().collect();
        keys.sort_by_key(|c| (c.rank(), c.degree(), c.bundle.clone(), c.torsion.clone()));
        let rows: Vec<Value> = keys
            .iter()
            .map(|c| {
                let coeff = match &self.terms[*c] {
                    HallCoeff::Value(v) => v.to_string(),
                    HallCoeff::Opaque => "t".to_string(),
                };
                json!({ "class": c.to_json(), "coefficient": coeff })
            })
            .collect();
        json!(rows)
    }

    pub fn coefficient(&self, class: &CohClassP1) -> Option<&HallCoeff> {
        self.terms.get(class)
    }
}

/// All splitting types that could receive `e` as a weight-r modification at
/// a degree-d point: same rank, degree raised by r*d, entries confined to
/// [min(e), max(e) + r*d] (a modification at x contains the full twist
/// down, which pins both bounds).
fn candidate_sources(e: &SplittingType, d: usize, r: usize) -> Vec<SplittingType> {
    let n = e.rank();
    let lo = e.min_entry();
    let hi = e.max_entry() + (r * d) as i64;
    let target = e.degree() + (r * d) as i64;
    let mut out = vec![];
    let mut cur: Vec<i64> = vec![];
    fn rec(
        n: usize,
        lo: i64,
        hi: i64,
        target: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<SplittingType>,
    ) {
        if cur.len() == n {
            if cur.iter().sum::<i64>() == target {
                out.push(SplittingType::new(cur.clone()).unwrap());
            }
            return;
        }
        let start = cur.last().copied().unwrap_or(lo).max(lo);
        for a in start..=hi {
            cur.push(a);
            rec(n, lo, hi, target, cur, out);
            cur.pop();
        }
    }
    rec(n, lo, hi, target, &mut cur, &mut out);
    out
}

/// Expand K_x^{(+)r} * E in the Hall algebra of the projective line.
///
/// The result is v^{-<K, E>} * [ sum_F m_{x,r}(F, E) F + t * (E (+) K) ]
/// with the bundle coefficients interpolated from the oracle and the
/// normalization exponent computed from the Euler form, never hard-coded.
pub fn hall_product_skyscraper(
    d: usize,
    r: usize,
    e: &SplittingType,
    samples: &[u64],
    cap: u128,
) -> Result<HallElementP1> {
    let cyc = CycField::new(1);
    let n = e.rank();
    let k_class = ShClass {
        curve: Curve::ProjectiveLine,
        rank: 0,
        degree: (r * d) as i64,
    };
    let e_class = ShClass {
        curve: Curve::ProjectiveLine,
        rank: n as i64,
        degree: e.degree(),
    };
    let pairing = euler_form(&k_class, &e_class)?;
    let prefactor = RatFunc::v_pow(&cyc, -pairing);

    let mut terms: BTreeMap<CohClassP1, HallCoeff> = BTreeMap::new();
    for candidate in candidate_sources(e, d, r) {
        let table = multiplicity_polynomials(&candidate, d, r, samples, cap)?;
        if let Some(poly) = table.polys.get(e) {
            if !poly.is_zero() {
                let coeff = &prefactor * &RatFunc::from_qpoly(&cyc, poly);
                terms.insert(CohClassP1::bundle(candidate), HallCoeff::Value(coeff));
            }
        }
    }
    let marker = CohClassP1::with_torsion(
        e.clone(),
        vec![TorsionPart::skyscraper("x", d, r as u32)],
    )?;
    terms.insert(marker, HallCoeff::Opaque);
    Ok(HallElementP1 { cyc, terms })
}
