//! Coherent-sheaf classes and the Euler form.
//!
//! A class on the projective line is a bundle part (a splitting type,
//! possibly absent for pure torsion) plus a finite torsion part: a partition
//! at each supporting closed point. The Euler form only sees (rank, degree)
//! and the genus of the curve, so it is shared with the elliptic module
//! through a small numeric class.

use crate::error::{Error, Result};
use crate::p1::splitting::SplittingType;
use serde_json::{json, Value};
use std::fmt;

/// Which curve a numeric class lives on; fixes the genus in the Euler form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Curve {
    ProjectiveLine,
    EllipticCharTwo,
}

impl Curve {
    pub fn genus(&self) -> i64 {
        match self {
            Curve::ProjectiveLine => 0,
            Curve::EllipticCharTwo => 1,
        }
    }
}

/// The (curve, rank, degree) shadow of a coherent sheaf class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShClass {
    pub curve: Curve,
    pub rank: i64,
    pub degree: i64,
}

/// The additive Euler form
/// <F, G> = (1 - g) rk(F) rk(G) + rk(F) deg(G) - rk(G) deg(F).
pub fn euler_form(f: &ShClass, g: &ShClass) -> Result<i64> {
    if f.curve != g.curve {
        return Err(Error::validation(
            "Euler form needs both classes on the same curve",
        ));
    }
    let gen = f.curve.genus();
    Ok((1 - gen) * f.rank * g.rank + f.rank * g.degree - g.rank * f.degree)
}

/// One torsion summand: the sheaf at `point` with the given partition.
/// Partition (1, ..., 1) of length r is the weight-r skyscraper K_x^{(+)r}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TorsionPart {
    pub point: String,
    pub point_degree: usize,
    pub partition: Vec<u32>,
}

impl TorsionPart {
    pub fn skyscraper(point: impl Into<String>, point_degree: usize, weight: u32) -> Self {
        TorsionPart {
            point: point.into(),
            point_degree,
            partition: vec![1; weight as usize],
        }
    }

    pub fn length(&self) -> u64 {
        self.partition.iter().map(|&p| p as u64).sum()
    }
}

/// A coherent-sheaf class on the projective line.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CohClassP1 {
    pub bundle: Option<SplittingType>,
    pub torsion: Vec<TorsionPart>,
}

impl CohClassP1 {
    pub fn bundle(t: SplittingType) -> Self {
        CohClassP1 { bundle: Some(t), torsion: vec![] }
    }

    pub fn with_torsion(t: SplittingType, torsion: Vec<TorsionPart>) -> Result<Self> {
        for part in &torsion {
            if part.partition.is_empty()
                || part.partition.windows(2).any(|w| w[0] < w[1])
                || part.partition.iter().any(|&x| x == 0)
            {
                return Err(Error::validation(
                    "partitions must be weakly decreasing positive integers",
                ));
            }
        }
        let mut sorted = torsion;
        sorted.sort();
        Ok(CohClassP1 { bundle: Some(t), torsion: sorted })
    }

    pub fn rank(&self) -> i64 {
        self.bundle.as_ref().map(|b| b.rank() as i64).unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        let b = self.bundle.as_ref().map(|b| b.degree()).unwrap_or(0);
        let t: i64 = self
            .torsion
            .iter()
            .map(|p| p.length() as i64 * p.point_degree as i64)
            .sum();
        b + t
    }

    pub fn sh_class(&self) -> ShClass {
        ShClass {
            curve: Curve::ProjectiveLine,
            rank: self.rank(),
            degree: self.degree(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bundle": self.bundle.as_ref().map(|b| b.entries()),
            "torsion": self.torsion.iter().map(|t| json!({
                "point": t.point,
                "point_degree": t.point_degree,
                "partition": t.partition,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CohClassP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some(b) = &self.bundle {
            write!(f, "{b}")?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " (+) ")?;
            }
            first = false;
            if t.partition.iter().all(|&x| x == 1) {
                if t.partition.len() == 1 {
                    write!(f, "K_{{{}}}", t.point)?;
                } else {
                    write!(f, "K_{{{}}}^(+{})", t.point, t.partition.len())?;
                }
            } else {
                write!(f, "K_{{{}}}^{:?}", t.point, t.partition)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn euler_form_values() {
        // torsion of degree 5 against a rank-2 degree -5 bundle on P^1
        let f = ShClass { curve: Curve::ProjectiveLine, rank: 0, degree: 5 };
        let g = ShClass { curve: Curve::ProjectiveLine, rank: 2, degree: -5 };
        assert_eq!(euler_form(&f, &g).unwrap(), -10);
        // <(0,0), (0,0)> on P^1 = 4
        let t = ShClass { curve: Curve::ProjectiveLine, rank: 2, degree: 0 };
        assert_eq!(euler_form(&t, &t).unwrap(), 4);
        // degree-2 torsion against rank 2 degree 0 on the elliptic curve: -4
        let k = ShClass { curve: Curve::EllipticCharTwo, rank: 0, degree: 2 };
        let e = ShClass { curve: Curve::EllipticCharTwo, rank: 2, degree: 0 };
        assert_eq!(euler_form(&k, &e).unwrap(), -4);
        // mixed curves rejected
        assert!(euler_form(&f, &e).is_err());
    }

    #[test]
    fn class_rank_and_degree_bookkeeping() {
        let c = CohClassP1::with_torsion(
            st(&[-5, 0]),
            vec![TorsionPart::skyscraper("t^5 + t^3 + 1", 5, 1)],
        )
        .unwrap();
        assert_eq!(c.rank(), 2);
        assert_eq!(c.degree(), 0); // -5 + 5
        assert_eq!(c.to_string(), "(-5, 0) (+) K_{t^5 + t^3 + 1}");
    }

    #[test]
    fn bad_partitions_rejected() {
        assert!(CohClassP1::with_torsion(
            st(&[0]),
            vec![TorsionPart { point: "t".into(), point_degree: 1, partition: vec![1, 2] }],
        )
        .is_err());
    }
}
