//! Codimension-r subspaces of the fiber F(x)^n, given by bases of defining
//! linear functionals.
//!
//! Enumeration walks row-reduced echelon functional matrices, so every
//! subspace appears exactly once and in a deterministic order. The total is
//! the Gaussian binomial [n choose r] at q_x = |F(x)|.

use crate::algebra::field::{Field, ResidueField};
use crate::algebra::gaussian::gaussian_binomial_count;
use crate::algebra::matrix::Matrix;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::traits::ToPrimitive;

type REl = <ResidueField as Field>::El;

#[derive(Clone, Debug, PartialEq)]
pub struct FiberSubspace {
    rf: ResidueField,
    ambient: usize,
    /// r x n functional matrix; the subspace is its kernel.
    functionals: Vec<Vec<REl>>,
}

impl FiberSubspace {
    pub fn new(rf: ResidueField, ambient: usize, functionals: Vec<Vec<REl>>) -> Result<Self> {
        let r = functionals.len();
        if r > ambient {
            return Err(Error::validation(format!(
                "codimension {r} exceeds ambient dimension {ambient}"
            )));
        }
        for row in &functionals {
            if row.len() != ambient {
                return Err(Error::validation("functional length must equal ambient dimension"));
            }
        }
        if r > 0 {
            let m = Matrix::from_rows(rf.clone(), functionals.clone())?;
            if m.rank() != r {
                return Err(Error::validation("defining functionals are linearly dependent"));
            }
        }
        Ok(FiberSubspace { rf, ambient, functionals })
    }

    /// The full space: no conditions.
    pub fn full(rf: ResidueField, ambient: usize) -> Self {
        FiberSubspace { rf, ambient, functionals: vec![] }
    }

    /// The zero subspace: all coordinates vanish.
    pub fn zero_subspace(rf: ResidueField, ambient: usize) -> Self {
        let mut functionals = vec![];
        for i in 0..ambient {
            let mut row = vec![rf.zero(); ambient];
            row[i] = rf.one();
            functionals.push(row);
        }
        FiberSubspace { rf, ambient, functionals }
    }

    /// Kernel of the single coordinate functional e_i^*.
    pub fn coordinate_hyperplane(rf: ResidueField, ambient: usize, i: usize) -> Result<Self> {
        if i >= ambient {
            return Err(Error::validation(format!("coordinate index {i} out of range")));
        }
        let mut row = vec![rf.zero(); ambient];
        row[i] = rf.one();
        FiberSubspace::new(rf, ambient, vec![row])
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.rf
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.functionals.len()
    }

    pub fn functionals(&self) -> &[Vec<REl>] {
        &self.functionals
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .functionals
            .iter()
            .map(|row| {
                let parts: Vec<String> = row.iter().map(|c| self.rf.render(c)).collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        format!("{{{}}}", rows.join(", "))
    }
}

/// Number of codimension-r subspaces of F(x)^n.
pub fn subspace_count(rf: &ResidueField, n: usize, r: usize) -> Result<u128> {
    let q = rf.order();
    if q <= u64::MAX as u128 {
        let c: BigInt = gaussian_binomial_count(n as u32, r as u32, q as u64)?;
        c.to_u128()
            .ok_or_else(|| Error::validation("subspace count overflows u128"))
    } else {
        Err(Error::validation("residue field too large to enumerate"))
    }
}

/// Deterministic enumeration of all codimension-r subspaces, guarded by a
/// cap on the total count.
#[derive(Debug)]
pub struct SubspaceIter {
    rf: ResidueField,
    n: usize,
    r: usize,
    elements: Vec<REl>,
    pivots: Vec<Vec<usize>>,
    pivot_idx: usize,
    free_positions: Vec<(usize, usize)>,
    odometer: Vec<usize>,
    exhausted_current: bool,
    done: bool,
}

pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

pub fn enumerate_subspaces(
    rf: &ResidueField,
    n: usize,
    r: usize,
    cap: u128,
) -> Result<SubspaceIter> {
    if r > n {
        return Err(Error::validation(format!(
            "codimension {r} exceeds ambient dimension {n}"
        )));
    }
    let required = subspace_count(rf, n, r)?;
    if required > cap {
        return Err(Error::ResourceCap { required, cap });
    }
    let pivots = combinations(n, r);
    let mut it = SubspaceIter {
        rf: rf.clone(),
        n,
        r,
        elements: rf.elements(),
        pivots,
        pivot_idx: 0,
        free_positions: vec![],
        odometer: vec![],
        exhausted_current: false,
        done: false,
    };
    it.enter_pivot_set();
    Ok(it)
}

impl SubspaceIter {
    fn enter_pivot_set(&mut self) {
        if self.pivot_idx >= self.pivots.len() {
            self.done = true;
            return;
        }
        let piv = &self.pivots[self.pivot_idx];
        self.free_positions.clear();
        for (row, &p) in piv.iter().enumerate() {
            for col in p + 1..self.n {
                if !piv.contains(&col) {
                    self.free_positions.push((row, col));
                }
            }
        }
        self.odometer = vec![0; self.free_positions.len()];
        self.exhausted_current = false;
    }

    fn current(&self) -> FiberSubspace {
        let piv = &self.pivots[self.pivot_idx];
        let mut rows = vec![vec![self.rf.zero(); self.n]; self.r];
        for (row, &p) in piv.iter().enumerate() {
            rows[row][p] = self.rf.one();
        }
        for (k, &(row, col)) in self.free_positions.iter().enumerate() {
            rows[row][col] = self.elements[self.odometer[k]].clone();
        }
        FiberSubspace {
            rf: self.rf.clone(),
            ambient: self.n,
            functionals: rows,
        }
    }

    fn advance(&mut self) {
        let m = self.elements.len();
        let mut pos = self.odometer.len();
        loop {
            if pos == 0 {
                self.exhausted_current = true;
                return;
            }
            pos -= 1;
            self.odometer[pos] += 1;
            if self.odometer[pos] < m {
                return;
            }
            self.odometer[pos] = 0;
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = FiberSubspace;

    fn next(&mut self) -> Option<FiberSubspace> {
        if self.done {
            return None;
        }
        // r = 0: the single full subspace.
        if self.r == 0 {
            self.done = true;
            return Some(FiberSubspace::full(self.rf.clone(), self.n));
        }
        if self.exhausted_current {
            self.pivot_idx += 1;
            self.enter_pivot_set();
            if self.done {
                return None;
            }
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::ff_create;
    use crate::p1::point::closed_point;

    fn rf(q: u64, k: usize, d: usize) -> ResidueField {
        let f = ff_create(q, k).unwrap();
        closed_point(&f, d, 0).unwrap().residue_field()
    }

    #[test]
    fn line_count_in_plane_fibers() {
        for (q, d) in [(2u64, 1usize), (2, 2), (3, 1), (2, 5)] {
            let rf = rf(q, 1, d);
            let n = enumerate_subspaces(&rf, 2, 1, 1 << 20).unwrap().count();
            assert_eq!(n as u128, rf.order() + 1);
        }
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        let rf = rf(2, 1, 2); // F_4
        for r in 0..=3usize {
            let n = enumerate_subspaces(&rf, 3, r, 1 << 20).unwrap().count() as u128;
            assert_eq!(n, subspace_count(&rf, 3, r).unwrap());
        }
    }

    #[test]
    fn all_enumerated_subspaces_are_distinct_and_valid() {
        let rf = rf(3, 1, 1);
        let subs: Vec<_> = enumerate_subspaces(&rf, 3, 2, 1 << 20).unwrap().collect();
        for s in &subs {
            // revalidate independence through the public constructor
            FiberSubspace::new(rf.clone(), 3, s.functionals().to_vec()).unwrap();
        }
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                assert_ne!(subs[i].functionals(), subs[j].functionals());
            }
        }
    }

    #[test]
    fn cap_is_enforced_with_required_count() {
        let rf = rf(2, 1, 5); // F_32, 33 lines
        match enumerate_subspaces(&rf, 2, 1, 10) {
            Err(crate::error::Error::ResourceCap { required, cap }) => {
                assert_eq!(required, 33);
                assert_eq!(cap, 10);
            }
            other => panic!("expected resource cap error, got {other:?}"),
        }
    }

    #[test]
    fn dependent_functionals_rejected() {
        let rf = rf(2, 1, 1);
        let row = vec![rf.one(), rf.one()];
        assert!(FiberSubspace::new(rf.clone(), 2, vec![row.clone(), row]).is_err());
    }
}
