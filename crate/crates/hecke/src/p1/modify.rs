//! Hecke modification of a bundle on the projective line, computed
//! literally from the subspace-to-subsheaf construction.
//!
//! Given E = O(a_1) + ... + O(a_n), a closed point x of degree d and a
//! codimension-r subspace W of the fiber at x, the modified sheaf is
//! E' = { s : s(x) in W }. Its splitting type is recovered from section
//! counts: for each twist m,
//!
//!   h^0(E'(m)) = dim { s in (+) H^0(O(a_i + m)) : eval_x(s) in W },
//!
//! a kernel dimension over F_q (sections of O(k) on the affine chart are
//! polynomials of degree <= k, evaluation is reduction mod pi_x, and each
//! F(x)-linear condition unfolds into d rows over F_q). The multiset of
//! entries comes out of the difference sequence
//! h^0(m) - h^0(m-1) = #{ i : a'_i >= -m }.
//!
//! The entries of E' live in [min(a) - r*d, max(a)]; the ladder runs one
//! step past each end as a self-check (both differences must vanish).
//! Degree bookkeeping deg E' = deg E - r*d is asserted, not assumed.

use crate::algebra::field::{Field, Fq};
use crate::algebra::matrix::ColumnSpace;
use crate::error::{Error, Result};
use crate::p1::point::ClosedPointP1;
use crate::p1::splitting::SplittingType;
use crate::p1::subspace::FiberSubspace;

type FqEl = <Fq as Field>::El;

#[derive(Clone, Debug)]
pub struct Modification {
    pub result: SplittingType,
    /// (twist m, h^0 of the modified sheaf twisted by O(m))
    pub ladder: Vec<(i64, usize)>,
}

/// Splitting type of { s in E : s(x_c) in W_c for every condition c }.
///
/// This is the shared engine behind single-point modifications, the Hecke
/// transform of quasi-parabolic bundles, and composite elementary
/// transformations (where a doubly-modified point contributes the zero
/// subspace).
pub fn conditioned_type(
    e: &SplittingType,
    conds: &[(&ClosedPointP1, &FiberSubspace)],
) -> Result<Modification> {
    let n = e.rank();
    // Validate conditions: common base field, distinct points, matching
    // residue data, matching ambient dimension.
    for (i, (x, w)) in conds.iter().enumerate() {
        if w.ambient() != n {
            return Err(Error::validation(format!(
                "subspace ambient dimension {} does not match rank {n}",
                w.ambient()
            )));
        }
        if w.residue_field().base() != x.base() || w.residue_field().modulus() != x.poly() {
            return Err(Error::validation(
                "subspace residue field does not match the point",
            ));
        }
        for (y, _) in conds.iter().skip(i + 1) {
            if x.base() != y.base() {
                return Err(Error::validation("conditions mix base fields"));
            }
            if x.poly() == y.poly() {
                return Err(Error::validation(format!(
                    "repeated point {} in condition list",
                    x.render()
                )));
            }
        }
    }

    let total_drop: i64 = conds
        .iter()
        .map(|(x, w)| (w.codim() * x.degree()) as i64)
        .sum();
    let a_min = e.min_entry();
    let a_max = e.max_entry();
    let m_start = -a_max - 1;
    let m_end = total_drop - a_min + 1;

    // Power tables t^e mod pi_x, one per point.
    let max_e = (a_max + m_end) as usize;
    let tables: Vec<Vec<Vec<FqEl>>> = conds.iter().map(|(x, _)| x.power_table(max_e)).collect();

    let rows: usize = conds
        .iter()
        .map(|(x, w)| w.codim() * x.degree())
        .sum();
    let base = conds
        .first()
        .map(|(x, _)| x.base().clone());

    let mut ladder = Vec::with_capacity((m_end - m_start + 1) as usize);
    let mut cols = 0usize;
    let mut space = base.clone().map(|f| ColumnSpace::new(f, rows));

    for m in m_start..=m_end {
        for (s, &a) in e.entries().iter().enumerate() {
            let exp = a + m;
            if exp < 0 {
                continue;
            }
            cols += 1;
            if let (Some(cs), Some(_f)) = (space.as_mut(), base.as_ref()) {
                let mut col = Vec::with_capacity(rows);
                for (c, (_x, w)) in conds.iter().enumerate() {
                    let rf = w.residue_field();
                    let red = &tables[c][exp as usize];
                    for functional in w.functionals() {
                        let val = rf.mul(&functional[s], red);
                        col.extend(val);
                    }
                }
                cs.push(col);
            }
        }
        let rank = space.as_ref().map(|cs| cs.rank()).unwrap_or(0);
        ladder.push((m, cols - rank));
    }

    if ladder[0].1 != 0 {
        return Err(Error::internal(format!(
            "ladder start h^0({m_start}) = {} is nonzero",
            ladder[0].1
        )));
    }

    // Difference sequence: delta(m) = #{ i : a'_i >= -m }.
    let mut entries: Vec<i64> = Vec::with_capacity(n);
    let mut prev_delta = 0usize;
    for w in ladder.windows(2) {
        let (m, h_now) = w[1];
        let h_prev = w[0].1;
        let delta = h_now - h_prev;
        if delta < prev_delta {
            return Err(Error::internal(format!(
                "h^0 ladder not concave at twist {m}: delta dropped {prev_delta} -> {delta}"
            )));
        }
        let fresh = delta - prev_delta;
        if m == m_end && fresh != 0 {
            return Err(Error::internal(format!(
                "{fresh} entries below the proven lower bound at twist {m}"
            )));
        }
        for _ in 0..fresh {
            entries.push(-m);
        }
        prev_delta = delta;
    }
    if prev_delta != n {
        return Err(Error::internal(format!(
            "ladder saturated at {prev_delta} of {n} summands"
        )));
    }
    let result = SplittingType::new(entries)?;
    if result.degree() != e.degree() - total_drop {
        return Err(Error::internal(format!(
            "degree bookkeeping failed: got {}, expected {}",
            result.degree(),
            e.degree() - total_drop
        )));
    }
    Ok(Modification { result, ladder })
}

/// Hecke modification of E at x along W (weight = codim W). Weight 0 is
/// the identity and is accepted here.
pub fn modify(
    e: &SplittingType,
    x: &ClosedPointP1,
    w: &FiberSubspace,
) -> Result<Modification> {
    conditioned_type(e, &[(x, w)])
}
