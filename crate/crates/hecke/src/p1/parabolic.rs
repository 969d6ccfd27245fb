//! Quasi-parabolic bundles on the projective line and their Hecke
//! transforms: a rank-2 bundle with a marked line in the fiber at each of
//! finitely many distinct closed points.
//!
//! The Hecke transform imposes all the line conditions at once; the
//! elementary transformations el_S apply weight-1 modifications at the
//! marked points of S, replacing the marked line at a modified point by the
//! kernel line of the fiber map and pulling the other lines back unchanged.
//! Composing two of them satisfies el_T . el_R = el_{T xor R} up to a twist
//! by a line bundle: at a doubly-modified point the local lattice returns
//! to a uniformizer multiple of itself, which is checked here both on
//! splitting types (by running the section ladder on the doubled condition
//! list) and on the marked-line bookkeeping.

use crate::error::{Error, Result};
use crate::p1::modify::conditioned_type;
use crate::p1::point::ClosedPointP1;
use crate::p1::splitting::SplittingType;
use crate::p1::subspace::FiberSubspace;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct QuasiParabolicData {
    bundle: SplittingType,
    marks: Vec<(ClosedPointP1, FiberSubspace)>,
}

impl QuasiParabolicData {
    pub fn new(bundle: SplittingType, marks: Vec<(ClosedPointP1, FiberSubspace)>) -> Result<Self> {
        if bundle.rank() != 2 {
            return Err(Error::validation("quasi-parabolic data requires rank 2"));
        }
        for (i, (x, line)) in marks.iter().enumerate() {
            if line.codim() != 1 || line.ambient() != 2 {
                return Err(Error::validation(
                    "each marked subspace must be a line in the rank-2 fiber",
                ));
            }
            if line.residue_field().modulus() != x.poly() {
                return Err(Error::validation("marked line does not live at its point"));
            }
            for (y, _) in marks.iter().skip(i + 1) {
                if x.poly() == y.poly() && x.base() == y.base() {
                    return Err(Error::validation(format!(
                        "marked points must be distinct; {} repeats",
                        x.render()
                    )));
                }
            }
        }
        Ok(QuasiParabolicData { bundle, marks })
    }

    pub fn bundle(&self) -> &SplittingType {
        &self.bundle
    }

    pub fn marks(&self) -> &[(ClosedPointP1, FiberSubspace)] {
        &self.marks
    }
}

/// Splitting type of the subsheaf of sections landing in every marked line:
/// the left end of the corresponding chain of weight-1 modifications.
/// Independent of the order of the marked points.
pub fn hecke_transform(data: &QuasiParabolicData) -> Result<SplittingType> {
    let conds: Vec<(&ClosedPointP1, &FiberSubspace)> =
        data.marks.iter().map(|(x, w)| (x, w)).collect();
    Ok(conditioned_type(&data.bundle, &conds)?.result)
}

/// Outcome of comparing el_T . el_R against el_{T xor R}.
#[derive(Clone, Debug)]
pub struct ElementaryComposition {
    /// Type of the sheaf cut out by composing el_T after el_R.
    pub composite: SplittingType,
    /// Type of the single transformation el_{T xor R}.
    pub direct: SplittingType,
    /// Degree of the line-bundle twist separating them:
    /// sum of deg(x_i) over i in T intersect R.
    pub twist_degree: i64,
    pub types_agree: bool,
    pub lines_agree: bool,
}

impl ElementaryComposition {
    pub fn agree(&self) -> bool {
        self.types_agree && self.lines_agree
    }
}

/// Marked-line state at one point while elementary transformations act:
/// `kernel` records the parity of modifications at the point (the marked
/// line of an odd stage is the kernel line of the fiber map); `twists`
/// counts completed double-modifications, each a local twist by the
/// uniformizer under which the line returns to the original one.
#[derive(Clone, PartialEq, Debug)]
struct MarkState {
    kernel: bool,
    twists: u32,
}

fn apply_el(states: &mut [MarkState], set: &BTreeSet<usize>) {
    for &i in set {
        if states[i].kernel {
            states[i].kernel = false;
            states[i].twists += 1;
        } else {
            states[i].kernel = true;
        }
    }
}

/// Compute el_T . el_R and el_{T xor R} on the same quasi-parabolic datum
/// and report whether they agree up to a line-bundle twist.
pub fn elementary_transform_compose(
    data: &QuasiParabolicData,
    t_set: &BTreeSet<usize>,
    r_set: &BTreeSet<usize>,
) -> Result<ElementaryComposition> {
    let n = data.marks.len();
    for &i in t_set.iter().chain(r_set.iter()) {
        if i >= n {
            return Err(Error::validation(format!(
                "marked-point index {i} out of range (have {n})"
            )));
        }
    }
    let sym_diff: BTreeSet<usize> = t_set.symmetric_difference(r_set).cloned().collect();
    let both: BTreeSet<usize> = t_set.intersection(r_set).cloned().collect();

    // Composite condition list: a line condition at every point touched
    // exactly once, a full-fiber vanishing condition at points touched
    // twice (the local lattice drops to pi * original).
    let zero_subs: Vec<FiberSubspace> = both
        .iter()
        .map(|&i| {
            let (x, _) = &data.marks[i];
            FiberSubspace::zero_subspace(x.residue_field(), 2)
        })
        .collect();
    let mut composite_conds: Vec<(&ClosedPointP1, &FiberSubspace)> = vec![];
    for &i in &sym_diff {
        let (x, l) = &data.marks[i];
        composite_conds.push((x, l));
    }
    for (k, &i) in both.iter().enumerate() {
        let (x, _) = &data.marks[i];
        composite_conds.push((x, &zero_subs[k]));
    }
    let composite = conditioned_type(&data.bundle, &composite_conds)?.result;

    let direct_conds: Vec<(&ClosedPointP1, &FiberSubspace)> = sym_diff
        .iter()
        .map(|&i| {
            let (x, l) = &data.marks[i];
            (x, l)
        })
        .collect();
    let direct = conditioned_type(&data.bundle, &direct_conds)?.result;

    let twist_degree: i64 = both.iter().map(|&i| data.marks[i].0.degree() as i64).sum();
    let types_agree = composite == direct.twist(-twist_degree)
        || (twist_degree == 0 && composite == direct);

    // Marked-line bookkeeping: run the state machine for both routes.
    let mut composed_states = vec![MarkState { kernel: false, twists: 0 }; n];
    apply_el(&mut composed_states, r_set);
    apply_el(&mut composed_states, t_set);
    let mut direct_states = vec![MarkState { kernel: false, twists: 0 }; n];
    apply_el(&mut direct_states, &sym_diff);
    // Lines correspond when the kernel parity matches pointwise; the twist
    // counters are exactly the line-bundle discrepancy already reported.
    let lines_agree = composed_states
        .iter()
        .zip(&direct_states)
        .all(|(a, b)| a.kernel == b.kernel);

    Ok(ElementaryComposition {
        composite,
        direct,
        twist_degree,
        types_agree,
        lines_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{ff_create, Fq};
    use crate::p1::point::closed_point;
    use crate::p1::subspace::enumerate_subspaces;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    fn lines_at(x: &ClosedPointP1) -> Vec<FiberSubspace> {
        enumerate_subspaces(&x.residue_field(), 2, 1, 10_000)
            .unwrap()
            .collect()
    }

    fn two_point_data(f: &Fq, la: usize, lb: usize) -> QuasiParabolicData {
        let x0 = closed_point(f, 1, 0).unwrap();
        let x1 = closed_point(f, 1, 1).unwrap();
        let l0 = lines_at(&x0);
        let l1 = lines_at(&x1);
        QuasiParabolicData::new(
            st(&[0, 0]),
            vec![(x0, l0[la].clone()), (x1, l1[lb].clone())],
        )
        .unwrap()
    }

    #[test]
    fn empty_transform_is_identity() {
        let data = QuasiParabolicData::new(st(&[0, 0]), vec![]).unwrap();
        assert_eq!(hecke_transform(&data).unwrap(), st(&[0, 0]));
    }

    #[test]
    fn single_degree_five_point_matches_modify() {
        let f2 = ff_create(2, 1).unwrap();
        let x = closed_point(&f2, 5, 0).unwrap();
        for l in lines_at(&x) {
            let data = QuasiParabolicData::new(st(&[0, 0]), vec![(x.clone(), l)]).unwrap();
            let t = hecke_transform(&data).unwrap();
            assert!([st(&[-5, 0]), st(&[-4, -1]), st(&[-3, -2])].contains(&t));
        }
    }

    #[test]
    fn two_generic_degree_one_points_drop_both_summands() {
        // All 3 x 3 line choices over F_2 give total degree -2; the generic
        // outcome is (-1, -1).
        let f2 = ff_create(2, 1).unwrap();
        let mut seen_balanced = 0;
        for la in 0..3 {
            for lb in 0..3 {
                let data = two_point_data(&f2, la, lb);
                let t = hecke_transform(&data).unwrap();
                assert_eq!(t.degree(), -2);
                if t == st(&[-1, -1]) {
                    seen_balanced += 1;
                }
            }
        }
        assert!(seen_balanced > 0);
    }

    #[test]
    fn order_independence_of_the_point_list() {
        for q in [2u64, 3] {
            let f = ff_create(q, 1).unwrap();
            let x0 = closed_point(&f, 1, 0).unwrap();
            let x1 = closed_point(&f, 1, 1).unwrap();
            for a in lines_at(&x0) {
                for b in lines_at(&x1) {
                    let d1 = QuasiParabolicData::new(
                        st(&[0, 0]),
                        vec![(x0.clone(), a.clone()), (x1.clone(), b.clone())],
                    )
                    .unwrap();
                    let d2 = QuasiParabolicData::new(
                        st(&[0, 0]),
                        vec![(x1.clone(), b.clone()), (x0.clone(), a.clone())],
                    )
                    .unwrap();
                    assert_eq!(hecke_transform(&d1).unwrap(), hecke_transform(&d2).unwrap());
                }
            }
        }
    }

    #[test]
    fn involution_is_a_twist() {
        let f2 = ff_create(2, 1).unwrap();
        let data = two_point_data(&f2, 0, 0);
        let t: BTreeSet<usize> = [0].into();
        let c = elementary_transform_compose(&data, &t, &t).unwrap();
        assert_eq!(c.direct, st(&[0, 0])); // el_empty
        assert_eq!(c.twist_degree, 1);
        assert!(c.agree(), "el_T . el_T must be the twist E(-x_1)");
    }

    #[test]
    fn empty_left_factor_is_exact_equality() {
        let f3 = ff_create(3, 1).unwrap();
        let data = two_point_data(&f3, 1, 2);
        let t: BTreeSet<usize> = BTreeSet::new();
        let r: BTreeSet<usize> = [0, 1].into();
        let c = elementary_transform_compose(&data, &t, &r).unwrap();
        assert_eq!(c.twist_degree, 0);
        assert_eq!(c.composite, c.direct);
        assert!(c.agree());
    }

    #[test]
    fn composition_law_exhaustive_over_f3_lines() {
        let f3 = ff_create(3, 1).unwrap();
        let t: BTreeSet<usize> = [0].into();
        let r: BTreeSet<usize> = [1].into();
        for la in 0..4 {
            for lb in 0..4 {
                let data = two_point_data(&f3, la, lb);
                let c = elementary_transform_compose(&data, &t, &r).unwrap();
                assert!(c.agree(), "el_1 . el_2 != el_{{1,2}} at lines {la},{lb}");
            }
        }
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let f2 = ff_create(2, 1).unwrap();
        let data = two_point_data(&f2, 0, 0);
        let t: BTreeSet<usize> = [5].into();
        assert!(elementary_transform_compose(&data, &t, &BTreeSet::new()).is_err());
    }
}
