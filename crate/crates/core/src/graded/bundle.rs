use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A direct sum of line bundles `⊕ O(a_i)` on P^1, kept as the ascending
/// multiset of degrees. Equality is multiset equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct BundleSum {
    degrees: Vec<i64>,
}

/// A bundle returned as the answer to a splitting computation.
pub type SplittingType = BundleSum;

impl From<Vec<i64>> for BundleSum {
    fn from(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        BundleSum { degrees }
    }
}

impl From<BundleSum> for Vec<i64> {
    fn from(b: BundleSum) -> Self {
        b.degrees
    }
}

impl BundleSum {
    pub fn new(degrees: impl Into<Vec<i64>>) -> Self {
        Self::from(degrees.into())
    }

    /// `O(degree)^count`.
    pub fn uniform(degree: i64, count: usize) -> Self {
        BundleSum { degrees: vec![degree; count] }
    }

    /// `⊕ O(d)^m` over `(d, m)` pairs.
    pub fn from_blocks(blocks: &[(i64, usize)]) -> Self {
        Self::new(blocks.iter().flat_map(|&(d, m)| std::iter::repeat(d).take(m)).collect::<Vec<_>>())
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees.first().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degrees.last().copied()
    }

    /// Tensor with `O(t)`.
    pub fn shift(&self, t: i64) -> BundleSum {
        BundleSum { degrees: self.degrees.iter().map(|a| a + t).collect() }
    }

    /// The dual bundle `⊕ O(-a_i)`.
    pub fn dual(&self) -> BundleSum {
        Self::new(self.degrees.iter().map(|a| -a).collect::<Vec<_>>())
    }

    pub fn direct_sum(&self, other: &BundleSum) -> BundleSum {
        let mut d = self.degrees.clone();
        d.extend_from_slice(&other.degrees);
        Self::from(d)
    }

    /// `h^0(⊕ O(a_i + t))`.
    pub fn h0(&self, t: i64) -> usize {
        self.degrees.iter().map(|a| (a + t + 1).max(0) as usize).sum()
    }

    /// `h^1(⊕ O(a_i + t))`.
    pub fn h1(&self, t: i64) -> usize {
        self.degrees.iter().map(|a| (-a - t - 1).max(0) as usize).sum()
    }

    /// `max - min <= 1`; the empty sum counts as balanced.
    pub fn is_balanced(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// `max - min`.
    pub fn imbalance(&self) -> Result<i64> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::InvalidArgument("imbalance of an empty sum".into())),
        }
    }

    /// `Σ (top - 1 - a_i)` over the summands strictly below the top degree.
    pub fn indentation(&self) -> Result<i64> {
        let top = self
            .max_degree()
            .ok_or_else(|| Error::InvalidArgument("indentation of an empty sum".into()))?;
        Ok(self.degrees.iter().filter(|&&a| a < top).map(|a| top - 1 - a).sum())
    }

    /// `h^1(End E) = Σ_{i,j} max(0, a_i - a_j - 1)`.
    pub fn h1_end(&self) -> i64 {
        let mut total = 0;
        for a in &self.degrees {
            for b in &self.degrees {
                total += (a - b - 1).max(0);
            }
        }
        total
    }

    /// The unique balanced bundle of the given rank and degree.
    pub fn balanced(rank: usize, degree: i64) -> Result<BundleSum> {
        if rank == 0 {
            return Err(Error::InvalidArgument("a balanced bundle needs positive rank".into()));
        }
        let r = rank as i64;
        let lo = degree.div_euclid(r);
        let high_count = degree.rem_euclid(r) as usize;
        Ok(Self::from_blocks(&[(lo, rank - high_count), (lo + 1, high_count)]))
    }
}

impl fmt::Display for BundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.degrees.len() {
            let d = self.degrees[i];
            let run = self.degrees[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 { format!("O({d})") } else { format!("O({d})^{run}") });
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_of_small_sums() {
        let b = BundleSum::uniform(3, 4);
        assert!(b.is_balanced());
        assert_eq!((b.imbalance().unwrap(), b.indentation().unwrap(), b.h1_end()), (0, 0, 0));
        assert_eq!(BundleSum::new(vec![9, 7, 7]).h1_end(), 2);
        assert_eq!(BundleSum::new(vec![9, 7, 7]).degrees(), &[7, 7, 9]);
    }

    #[test]
    fn glued_shape_statistics() {
        for k in 3..8i64 {
            for e in (k + 3)..=(2 * k) {
                let b = BundleSum::from_blocks(&[
                    (1, (2 * k - e + 1) as usize),
                    (2, (e - k - 3) as usize),
                    (3, 1),
                ]);
                assert_eq!(b.imbalance().unwrap(), 2);
                assert_eq!(b.degrees().iter().filter(|&&a| a == 3).count(), 1);
                assert_eq!(b.indentation().unwrap(), 2 * k - e + 1);
            }
        }
    }

    #[test]
    fn balanced_constructor() {
        assert_eq!(BundleSum::balanced(4, 10).unwrap(), BundleSum::new(vec![2, 2, 3, 3]));
        assert_eq!(BundleSum::balanced(2, -3).unwrap(), BundleSum::new(vec![-2, -1]));
        assert!(BundleSum::balanced(0, 1).is_err());
    }

    #[test]
    fn empty_sum_errors() {
        assert!(BundleSum::default().imbalance().is_err());
        assert!(BundleSum::default().indentation().is_err());
    }

    #[test]
    fn display_and_serde() {
        let b = BundleSum::new(vec![4, 3, 3, 3]);
        assert_eq!(b.to_string(), "O(3)^3 + O(4)");
        assert_eq!(serde_json::to_string(&b).unwrap(), "[3,3,3,4]");
        let back: BundleSum = serde_json::from_str("[4,3]").unwrap();
        assert_eq!(back.degrees(), &[3, 4]);
    }
}
