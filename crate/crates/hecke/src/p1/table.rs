//! Multiplicity tables: exhaustive tally of the Hecke modifications of a
//! fixed bundle at a fixed point and weight.
//!
//! Enumerates every codimension-r subspace of the fiber, modifies along
//! each, and tallies by resulting splitting type. The grand total must be
//! the Grassmannian point count [n choose r] at q_x; that identity is
//! asserted on every run, not assumed.

use crate::algebra::field::{Field, Fq};
use crate::error::{Error, Result};
use crate::p1::modify::conditioned_type;
use crate::p1::point::ClosedPointP1;
use crate::p1::splitting::SplittingType;
use crate::p1::subspace::{enumerate_subspaces, subspace_count, DEFAULT_ENUMERATION_CAP};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct MultiplicityTable {
    pub base: Fq,
    pub point: ClosedPointP1,
    pub source: SplittingType,
    pub weight: usize,
    pub counts: BTreeMap<SplittingType, u64>,
    pub total: u64,
}

pub fn multiplicity_table(
    e: &SplittingType,
    x: &ClosedPointP1,
    weight: usize,
    cap: u128,
) -> Result<MultiplicityTable> {
    let n = e.rank();
    if weight < 1 || weight > n {
        return Err(Error::validation(format!(
            "weight must satisfy 1 <= r <= rank; got r = {weight}, rank = {n}"
        )));
    }
    let rf = x.residue_field();
    let mut counts: BTreeMap<SplittingType, u64> = BTreeMap::new();
    let mut total = 0u64;
    for w in enumerate_subspaces(&rf, n, weight, cap)? {
        let m = conditioned_type(e, &[(x, &w)])?;
        *counts.entry(m.result).or_insert(0) += 1;
        total += 1;
    }
    let expected = subspace_count(&rf, n, weight)?;
    if total as u128 != expected {
        return Err(Error::internal(format!(
            "table total {total} disagrees with Grassmannian count {expected}"
        )));
    }
    Ok(MultiplicityTable {
        base: x.base().clone(),
        point: x.clone(),
        source: e.clone(),
        weight,
        counts,
        total,
    })
}

/// Convenience wrapper with the default enumeration cap.
pub fn multiplicity_table_default(
    e: &SplittingType,
    x: &ClosedPointP1,
    weight: usize,
) -> Result<MultiplicityTable> {
    multiplicity_table(e, x, weight, DEFAULT_ENUMERATION_CAP)
}

impl MultiplicityTable {
    /// Canonical record. Table rows are sorted lexicographically by type.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .counts
            .iter()
            .map(|(t, c)| json!({ "type": t.entries(), "count": c }))
            .collect();
        json!({
            "base_field": { "p": self.base.characteristic(), "k": self.base.degree() },
            "point": self.point.render(),
            "source": self.source.entries(),
            "weight": self.weight,
            "table": rows,
            "total": self.total,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "modifications of {} at {} (degree {}), weight {}, over F_{}\n",
            self.source,
            self.point.render(),
            self.point.degree(),
            self.weight,
            self.base.order(),
        ));
        for (t, c) in &self.counts {
            out.push_str(&format!("  {t}  x {c}\n"));
        }
        out.push_str(&format!("  total {}\n", self.total));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::ff_create;
    use crate::p1::point::{closed_point, closed_points};

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    fn table(q: u64, e: &[i64], d: usize, r: usize) -> MultiplicityTable {
        let f = ff_create(q, 1).unwrap();
        let x = closed_point(&f, d, 0).unwrap();
        multiplicity_table(&st(e), &x, r, 1 << 24).unwrap()
    }

    #[test]
    fn degree_five_trivial_bundle_over_f2() {
        let t = table(2, &[0, 0], 5, 1);
        assert_eq!(t.total, 33);
        assert_eq!(t.counts[&st(&[-5, 0])], 3);
        assert_eq!(t.counts[&st(&[-4, -1])], 6);
        assert_eq!(t.counts[&st(&[-3, -2])], 24);
        assert_eq!(t.counts.len(), 3);
    }

    #[test]
    fn degree_five_unbalanced_source_over_f2() {
        let t = table(2, &[-5, 5], 5, 1);
        assert_eq!(t.total, 33);
        assert_eq!(t.counts[&st(&[-5, 0])], 32);
        assert_eq!(t.counts[&st(&[-10, 5])], 1);
        assert_eq!(t.counts.len(), 2);
    }

    #[test]
    fn weight_two_forces_the_twist() {
        let t = table(3, &[0, 0], 1, 2);
        assert_eq!(t.total, 1);
        assert_eq!(t.counts[&st(&[-1, -1])], 1);
    }

    #[test]
    fn weight_zero_and_overweight_are_rejected() {
        let f = ff_create(2, 1).unwrap();
        let x = closed_point(&f, 1, 0).unwrap();
        assert!(multiplicity_table(&st(&[0, 0]), &x, 0, 100).is_err());
        assert!(multiplicity_table(&st(&[0, 0]), &x, 3, 100).is_err());
    }

    #[test]
    fn degree_one_rank_two_tree_structure() {
        // (0, n) with n >= 1 at a degree-1 point: the q mixed lines all give
        // the balanced subsheaf (0, n-1); the one line fixed by Aut(E) -- the
        // fiber direction of the O(n) summand -- gives (-1, n). The trivial
        // bundle sends all q + 1 lines to (-1, 0).
        for q in [2u64, 3] {
            for n in 1..=4i64 {
                let t = table(q, &[0, n], 1, 1);
                assert_eq!(t.counts[&st(&[0, n - 1])], q);
                assert_eq!(t.counts[&st(&[-1, n])], 1);
                assert_eq!(t.counts.len(), 2);
            }
            let t0 = table(q, &[0, 0], 1, 1);
            assert_eq!(t0.counts[&st(&[-1, 0])], q + 1);
            assert_eq!(t0.counts.len(), 1);
        }
    }

    #[test]
    fn twist_equivariance_shifts_every_key() {
        let f = ff_create(3, 1).unwrap();
        let x = closed_point(&f, 2, 0).unwrap();
        let t0 = multiplicity_table(&st(&[-1, 2]), &x, 1, 1 << 20).unwrap();
        let t1 = multiplicity_table(&st(&[-1, 2]).twist(2), &x, 1, 1 << 20).unwrap();
        let shifted: BTreeMap<_, _> = t0
            .counts
            .iter()
            .map(|(k, v)| (k.twist(2), *v))
            .collect();
        assert_eq!(shifted, t1.counts);
    }

    #[test]
    fn point_choice_does_not_change_the_table() {
        let f = ff_create(2, 1).unwrap();
        let pts = closed_points(&f, 5).unwrap();
        let a = multiplicity_table(&st(&[0, 0]), &pts[0], 1, 1 << 20).unwrap();
        let b = multiplicity_table(&st(&[0, 0]), &pts[3], 1, 1 << 20).unwrap();
        assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn sum_rule_over_small_sweep() {
        // rank 2 and 3 sources, degrees 1..2, q in {2, 3}: total equals the
        // Grassmannian count at q^d.
        for q in [2u64, 3] {
            let f = ff_create(q, 1).unwrap();
            for d in 1..=2usize {
                let x = closed_point(&f, d, 0).unwrap();
                let qd = q.pow(d as u32);
                let t = multiplicity_table(&st(&[-2, 1]), &x, 1, 1 << 24).unwrap();
                assert_eq!(t.total, qd + 1);
                let t3 = multiplicity_table(&st(&[0, 0, 1]), &x, 1, 1 << 24).unwrap();
                assert_eq!(t3.total, qd * qd + qd + 1);
            }
        }
    }

    #[test]
    fn canonical_json_shape() {
        let t = table(2, &[0, 0], 5, 1);
        let v = t.to_json();
        assert_eq!(v["base_field"]["p"], 2);
        assert_eq!(v["base_field"]["k"], 1);
        assert_eq!(v["point"], "t^5 + t^3 + 1");
        assert_eq!(v["total"], 33);
        assert_eq!(v["table"][0]["type"][0], -5);
    }
}
