//! Splitting types: isomorphism classes of vector bundles on the
//! projective line as sorted integer multisets, O(a_1) + ... + O(a_n).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    /// Build from any entry order; stored sorted ascending.
    pub fn new(mut entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::validation("splitting type needs rank >= 1"));
        }
        entries.sort_unstable();
        Ok(SplittingType(entries))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn min_entry(&self) -> i64 {
        self.0[0]
    }

    pub fn max_entry(&self) -> i64 {
        *self.0.last().unwrap()
    }

    /// Tensor by O(k): shift every entry.
    pub fn twist(&self, k: i64) -> SplittingType {
        SplittingType(self.0.iter().map(|a| a + k).collect())
    }

    /// Projective class of a rank-2 type: b - a for (a, b).
    pub fn projective_class(&self) -> Option<u32> {
        if self.0.len() != 2 {
            return None;
        }
        Some((self.0[1] - self.0[0]) as u32)
    }

    /// Parse "0,0" or "-5,3".
    pub fn parse(s: &str) -> Result<Self> {
        let entries: Result<Vec<i64>> = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::validation(format!("bad splitting type entry '{x}'")))
            })
            .collect();
        SplittingType::new(entries?)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_on_construction() {
        let t = SplittingType::new(vec![3, -5, 0]).unwrap();
        assert_eq!(t.entries(), &[-5, 0, 3]);
        assert_eq!(t.degree(), -2);
        assert_eq!(t.rank(), 3);
        assert!(SplittingType::new(vec![]).is_err());
    }

    #[test]
    fn twist_and_class() {
        let t = SplittingType::new(vec![-5, 0]).unwrap();
        assert_eq!(t.twist(2).entries(), &[-3, 2]);
        assert_eq!(t.projective_class(), Some(5));
        assert_eq!(t.to_string(), "(-5, 0)");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(SplittingType::parse("0,0").unwrap().entries(), &[0, 0]);
        assert_eq!(SplittingType::parse("3, -5").unwrap().entries(), &[-5, 3]);
        assert!(SplittingType::parse("a,b").is_err());
    }
}
