//! Graphs of Hecke operators on projective bundle classes over the
//! projective line, at desk scale.
//!
//! A rank-2 projective class is the integer n >= 0 standing for O (+) O(n).
//! The graph of the weight-r operator at a degree-d point has an edge from
//! class n to every class receiving a modification of (0, n), weighted by
//! the multiplicity polynomial in q. The class set is infinite, so graphs
//! are built on a finite window with explicit boundary marking; operators
//! are only evaluated where every out-edge stays inside the window.

pub mod export;

use crate::algebra::qpoly::QPoly;
use crate::error::{Error, Result};
use crate::hall::polytable::{default_samples, degree_bound, multiplicity_polynomials};
use crate::p1::splitting::SplittingType;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use std::collections::BTreeMap;

pub use export::{graph_to_dot, graph_to_json};

pub type ProjectiveClass = u32;

#[derive(Clone, Debug)]
pub struct HeckeGraph {
    pub point_degree: usize,
    pub weight: usize,
    pub window: u32,
    /// edges[n] sorted by target class.
    pub edges: Vec<Vec<(ProjectiveClass, QPoly)>>,
    /// interior[n]: every out-edge of n lands inside the window.
    pub interior: Vec<bool>,
}

impl HeckeGraph {
    pub fn out_edges(&self, n: ProjectiveClass) -> &[(ProjectiveClass, QPoly)] {
        &self.edges[n as usize]
    }

    pub fn is_interior(&self, n: ProjectiveClass) -> bool {
        self.interior[n as usize]
    }

    pub fn vertex_label(n: ProjectiveClass) -> String {
        format!("O\u{2295}O({n})")
    }
}

/// Build the graph of the weight-r Hecke operator at a degree-d point on
/// the window {0, ..., window}. Edge weights come from the interpolated
/// multiplicity tables of (0, n); projecting a rank-2 splitting type (a, b)
/// to its class b - a is collision-free at fixed degree, so weights carry
/// over unchanged.
pub fn build_graph(
    d: usize,
    r: usize,
    window: u32,
    samples: Option<&[u64]>,
) -> Result<HeckeGraph> {
    if d < 1 {
        return Err(Error::validation("point degree must be >= 1"));
    }
    if r != 1 && r != 2 {
        return Err(Error::validation("rank-2 graphs support weights 1 and 2"));
    }
    let default;
    let samples = match samples {
        Some(s) => s,
        None => {
            default = default_samples(degree_bound(2, r, d) + 2);
            &default
        }
    };
    let mut edges = Vec::with_capacity(window as usize + 1);
    let mut interior = Vec::with_capacity(window as usize + 1);
    for n in 0..=window {
        let source = SplittingType::new(vec![0, n as i64]).unwrap();
        let table = multiplicity_polynomials(&source, d, r, samples, 1 << 24)?;
        let mut out: Vec<(ProjectiveClass, QPoly)> = table
            .polys
            .iter()
            .map(|(t, p)| (t.projective_class().expect("rank 2"), p.clone()))
            .collect();
        out.sort_by_key(|(c, _)| *c);
        interior.push(out.iter().all(|(c, _)| *c <= window));
        edges.push(out);
    }
    let g = HeckeGraph { point_degree: d, weight: r, window, edges, interior };
    if !g.interior.iter().any(|&b| b) {
        return Err(Error::validation(format!(
            "window {window} holds no interior vertex for degree {d}, weight {r}"
        )));
    }
    Ok(g)
}

/// Exact values on the window; automorphic forms at desk scale.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunction {
    pub window: u32,
    pub values: Vec<BigRational>,
}

impl VertexFunction {
    pub fn from_values(window: u32, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != window as usize + 1 {
            return Err(Error::validation(format!(
                "vertex function needs {} values for window {window}, got {}",
                window + 1,
                values.len()
            )));
        }
        Ok(VertexFunction { window, values })
    }

    pub fn constant(window: u32, c: BigRational) -> Self {
        VertexFunction { window, values: vec![c; window as usize + 1] }
    }

    pub fn delta(window: u32, at: ProjectiveClass) -> Result<Self> {
        if at > window {
            return Err(Error::validation(format!(
                "delta location {at} outside window {window}"
            )));
        }
        let mut values = vec![BigRational::zero(); window as usize + 1];
        values[at as usize] = BigRational::from_integer(BigInt::from(1));
        Ok(VertexFunction { window, values })
    }

    pub fn value(&self, n: ProjectiveClass) -> &BigRational {
        &self.values[n as usize]
    }
}

/// Apply the operator at a concrete prime power: (Phi f)(n) is the
/// edge-weighted sum of f over the out-neighbors of n. Defined exactly on
/// the interior vertices, which is what the returned map carries.
pub fn apply_operator(
    f: &VertexFunction,
    g: &HeckeGraph,
    q: u64,
) -> Result<BTreeMap<ProjectiveClass, BigRational>> {
    if f.window < g.window {
        return Err(Error::validation(format!(
            "function window {} smaller than graph window {}",
            f.window, g.window
        )));
    }
    let qr = BigRational::from_integer(BigInt::from(q));
    let mut out = BTreeMap::new();
    for n in 0..=g.window {
        if !g.is_interior(n) {
            continue;
        }
        let mut acc = BigRational::zero();
        for (target, w) in g.out_edges(n) {
            acc += w.eval(&qr) * f.value(*target);
        }
        out.insert(n, acc);
    }
    Ok(out)
}

fn apply_partial(
    g: &HeckeGraph,
    h: &BTreeMap<ProjectiveClass, BigRational>,
    n: ProjectiveClass,
    q: &BigRational,
) -> Option<BigRational> {
    let mut acc = BigRational::zero();
    for (target, w) in g.out_edges(n) {
        acc += w.eval(q) * h.get(target)?;
    }
    Some(acc)
}

#[derive(Clone, Debug)]
pub struct CommutativityReport {
    pub ok: bool,
    pub doubly_interior: Vec<ProjectiveClass>,
    pub max_deviation: BigRational,
    /// (delta basis location, vertex, one way, other way)
    pub first_mismatch: Option<(ProjectiveClass, ProjectiveClass, BigRational, BigRational)>,
}

/// Exact check that the operators at two point degrees commute on the
/// doubly-interior window, over the full basis of delta functions.
pub fn commutativity_check(
    d1: usize,
    d2: usize,
    r: usize,
    window: u32,
    q: u64,
) -> Result<CommutativityReport> {
    let g1 = build_graph(d1, r, window, None)?;
    let g2 = build_graph(d2, r, window, None)?;
    commutativity_check_graphs(&g1, &g2, q)
}

/// Same check on pre-built graphs (lets tests perturb a weight).
pub fn commutativity_check_graphs(
    g1: &HeckeGraph,
    g2: &HeckeGraph,
    q: u64,
) -> Result<CommutativityReport> {
    if g1.window != g2.window {
        return Err(Error::validation("graphs must share a window"));
    }
    let window = g1.window;
    let margin = (g1.weight * g1.point_degree + g2.weight * g2.point_degree) as u32;
    let doubly: Vec<ProjectiveClass> = (0..=window).filter(|n| n + margin <= window).collect();
    if doubly.is_empty() {
        return Err(Error::validation(format!(
            "window {window} too small: no vertex has margin {margin}"
        )));
    }
    let qr = BigRational::from_integer(BigInt::from(q));
    let mut max_dev = BigRational::zero();
    let mut first = None;
    for m in 0..=window {
        let delta = VertexFunction::delta(window, m)?;
        let h1 = apply_operator(&delta, g1, q)?;
        let h2 = apply_operator(&delta, g2, q)?;
        for &n in &doubly {
            let lhs = apply_partial(g1, &h2, n, &qr)
                .ok_or_else(|| Error::internal("doubly-interior evaluation escaped the window"))?;
            let rhs = apply_partial(g2, &h1, n, &qr)
                .ok_or_else(|| Error::internal("doubly-interior evaluation escaped the window"))?;
            let dev = (lhs.clone() - rhs.clone()).abs();
            if dev > max_dev {
                max_dev = dev.clone();
            }
            if !dev.is_zero() && first.is_none() {
                first = Some((m, n, lhs, rhs));
            }
        }
    }
    Ok(CommutativityReport {
        ok: first.is_none(),
        doubly_interior: doubly,
        max_deviation: max_dev,
        first_mismatch: first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qpoly::rat;

    #[test]
    fn degree_one_tree_pattern() {
        // n -> n-1 with weight q, n -> n+1 with weight 1, 0 -> 1 with q + 1:
        // the projection of the (q+1)-regular tree.
        let g = build_graph(1, 1, 8, None).unwrap();
        assert_eq!(g.out_edges(0), &[(1, &QPoly::q() + &QPoly::one())]);
        for n in 1..=7u32 {
            assert_eq!(
                g.out_edges(n),
                &[(n - 1, QPoly::q()), (n + 1, QPoly::one())]
            );
        }
        // vertex 8 reaches 9: boundary
        assert!(!g.is_interior(8));
        assert!(g.is_interior(7));
    }

    #[test]
    fn degree_five_star_out_of_the_origin() {
        let g = build_graph(5, 1, 10, None).unwrap();
        let e0: BTreeMap<_, _> = g.out_edges(0).iter().cloned().collect();
        assert_eq!(e0.len(), 3);
        assert_eq!(e0[&5].to_string(), "q + 1"); // (-5, 0)
        assert_eq!(e0[&1].to_string(), "q^5 - q^3"); // (-3, -2)
        assert_eq!(e0[&3].to_string(), "q^3 - q"); // (-4, -1)
    }

    #[test]
    fn weight_two_is_a_loop() {
        let g = build_graph(1, 2, 4, None).unwrap();
        for n in 0..=4u32 {
            assert_eq!(g.out_edges(n), &[(n, QPoly::one())]);
            assert!(g.is_interior(n));
        }
    }

    #[test]
    fn constant_function_sees_the_row_sum() {
        let g = build_graph(1, 1, 6, None).unwrap();
        let ones = VertexFunction::constant(6, rat(1));
        let out = apply_operator(&ones, &g, 3).unwrap();
        for (_, v) in out {
            assert_eq!(v, rat(4)); // q + 1 at q = 3
        }
    }

    #[test]
    fn geometric_functions_are_interior_eigenfunctions() {
        // f(n) = z^n: (Phi f)(n) = (q/z + z) f(n) on interior n >= 1.
        let g = build_graph(1, 1, 8, None).unwrap();
        let z = BigRational::new(BigInt::from(3), BigInt::from(2));
        let mut values = vec![];
        let mut acc = rat(1);
        for _ in 0..=8 {
            values.push(acc.clone());
            acc *= z.clone();
        }
        let f = VertexFunction::from_values(8, values.clone()).unwrap();
        let out = apply_operator(&f, &g, 2).unwrap();
        let eigen = rat(2) / z.clone() + z.clone();
        for n in 1..=7u32 {
            assert_eq!(out[&n], eigen.clone() * values[n as usize].clone());
        }
    }

    #[test]
    fn delta_function_reads_off_single_weights() {
        let g = build_graph(1, 1, 6, None).unwrap();
        let delta = VertexFunction::delta(6, 2).unwrap();
        let out = apply_operator(&delta, &g, 5).unwrap();
        assert_eq!(out[&1], rat(1)); // edge 1 -> 2 has weight 1
        assert_eq!(out[&3], rat(5)); // edge 3 -> 2 has weight q
        assert_eq!(out[&0], rat(0));
    }

    #[test]
    fn operators_commute_exactly() {
        let r = commutativity_check(1, 2, 1, 12, 2).unwrap();
        assert!(r.ok, "first mismatch: {:?}", r.first_mismatch);
        assert!(r.max_deviation.is_zero());
        // same operator trivially commutes with itself
        let same = commutativity_check(1, 1, 1, 6, 3).unwrap();
        assert!(same.ok);
    }

    #[test]
    fn perturbed_weight_breaks_commutativity_with_a_located_witness() {
        let g1 = build_graph(1, 1, 10, None).unwrap();
        let mut g2 = build_graph(2, 1, 10, None).unwrap();
        let (_, w) = &mut g2.edges[4][0];
        *w = &*w + &QPoly::one();
        let r = commutativity_check_graphs(&g1, &g2, 2).unwrap();
        assert!(!r.ok);
        assert!(r.first_mismatch.is_some());
        assert!(!r.max_deviation.is_zero());
    }

    #[test]
    fn window_too_small_is_rejected() {
        assert!(build_graph(5, 1, 4, None).is_err());
        assert!(commutativity_check(3, 3, 1, 5, 2).is_err());
    }

    #[test]
    fn projection_is_twist_sound() {
        // Edges computed from (0, n) agree with those from (k, n + k).
        let samples = [2u64, 3, 4, 5];
        for k in [-2i64, -1, 1, 2] {
            let a = multiplicity_polynomials(
                &SplittingType::new(vec![0, 3]).unwrap(),
                1,
                1,
                &samples,
                1 << 20,
            )
            .unwrap();
            let b = multiplicity_polynomials(
                &SplittingType::new(vec![k, 3 + k]).unwrap(),
                1,
                1,
                &samples,
                1 << 20,
            )
            .unwrap();
            let pa: BTreeMap<u32, String> = a
                .polys
                .iter()
                .map(|(t, p)| (t.projective_class().unwrap(), p.to_string()))
                .collect();
            let pb: BTreeMap<u32, String> = b
                .polys
                .iter()
                .map(|(t, p)| (t.projective_class().unwrap(), p.to_string()))
                .collect();
            assert_eq!(pa, pb);
        }
    }
}
