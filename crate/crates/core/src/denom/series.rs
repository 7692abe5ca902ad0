use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Π-coordinates of an element of `Q⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn zero(rank: usize) -> Self {
        LatticePoint(vec![0; rank])
    }

    pub fn new(coords: Vec<u32>) -> Self {
        LatticePoint(coords)
    }

    /// `None` if any coordinate is negative.
    pub fn from_signed(coords: &[i64]) -> Option<Self> {
        coords
            .iter()
            .map(|&c| u32::try_from(c).ok())
            .collect::<Option<Vec<_>>>()
            .map(LatticePoint)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: u32) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&c| i64::from(c)).collect()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A power series `Σ c_η x^η` over `Q⁺`, truncated at a height bound.
/// The coefficient of `x^η` stands for the coefficient of `e^{-η}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    rank: usize,
    height_bound: u64,
    terms: BTreeMap<LatticePoint, i64>,
}

impl FormalSeries {
    pub fn zero(rank: usize, height_bound: u64) -> Self {
        FormalSeries {
            rank,
            height_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, height_bound: u64) -> Self {
        let mut s = Self::zero(rank, height_bound);
        s.add_term(LatticePoint::zero(rank), 1);
        s
    }

    /// `1 - x^α` (`sign = -1`) or `1 + x^α` (`sign = 1`).
    pub fn binomial(rank: usize, height_bound: u64, alpha: &LatticePoint, sign: i64) -> Self {
        let mut s = Self::one(rank, height_bound);
        s.add_term(alpha.clone(), sign);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn height_bound(&self) -> u64 {
        self.height_bound
    }

    pub fn coefficient(&self, p: &LatticePoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Nonzero terms in lattice order.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, i64)> + '_ {
        self.terms.iter().map(|(p, c)| (p, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·x^p`, dropping it if `p` is above the bound.
    pub fn add_term(&mut self, p: LatticePoint, c: i64) {
        debug_assert_eq!(p.rank(), self.rank);
        if c == 0 || p.height() > self.height_bound {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// Restriction to heights `≤ bound`.
    pub fn truncate(&self, bound: u64) -> Self {
        FormalSeries {
            rank: self.rank,
            height_bound: bound.min(self.height_bound),
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.height() <= bound)
                .map(|(p, c)| (p.clone(), *c))
                .collect(),
        }
    }

    /// Multiplies in place by `1 - x^α`.
    pub(crate) fn mul_one_minus(&mut self, alpha: &LatticePoint) {
        let shifted: Vec<(LatticePoint, i64)> = self
            .terms
            .iter()
            .map(|(p, c)| (p.add(alpha), -*c))
            .filter(|(p, _)| p.height() <= self.height_bound)
            .collect();
        for (p, c) in shifted {
            self.add_term(p, c);
        }
    }

    /// Multiplies in place by `(1 + x^α)^{-1} = Σ_j (-1)^j x^{jα}`.
    pub(crate) fn div_one_plus(&mut self, alpha: &LatticePoint) {
        let h = alpha.height();
        assert!(h > 0, "cannot invert 1 + x^0 as a geometric series");
        let base = std::mem::take(&mut self.terms);
        let mut out = FormalSeries::zero(self.rank, self.height_bound);
        for (p, c) in &base {
            let mut q = p.clone();
            let mut sign = 1;
            while q.height() <= self.height_bound {
                out.add_term(q.clone(), sign * c);
                q = q.add(alpha);
                sign = -sign;
            }
        }
        self.terms = out.terms;
    }
}

/// Product truncated at the common height bound.
pub fn series_mul(a: &FormalSeries, b: &FormalSeries) -> Result<FormalSeries> {
    if a.height_bound != b.height_bound || a.rank != b.rank {
        return Err(Error::Parameters(format!(
            "series bounds differ: (rank {}, height {}) vs (rank {}, height {})",
            a.rank, a.height_bound, b.rank, b.height_bound
        )));
    }
    let mut out = FormalSeries::zero(a.rank, a.height_bound);
    for (p, c) in &a.terms {
        for (q, d) in &b.terms {
            if p.height() + q.height() <= a.height_bound {
                out.add_term(p.add(q), c * d);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[u32]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = FormalSeries::binomial(2, 5, &lp(&[1, 2]), -1);
        assert_eq!(series_mul(&a, &FormalSeries::one(2, 5)).unwrap(), a);
    }

    #[test]
    fn geometric_series_inverts_binomial() {
        let beta = lp(&[1, 0]);
        let mut geo = FormalSeries::one(2, 7);
        geo.div_one_plus(&lp(&[1, 0]));
        // (1 + x^β)^{-1} has 8 terms up to height 7
        assert_eq!(geo.len(), 8);
        let prod = series_mul(&FormalSeries::binomial(2, 7, &beta, 1), &geo).unwrap();
        assert_eq!(prod, FormalSeries::one(2, 7));
    }

    #[test]
    fn cross_term() {
        let a = FormalSeries::binomial(2, 4, &lp(&[1, 0]), -1);
        let b = FormalSeries::binomial(2, 4, &lp(&[0, 1]), -1);
        let p = series_mul(&a, &b).unwrap();
        assert_eq!(p.coefficient(&lp(&[1, 1])), 1);
        assert_eq!(p.coefficient(&lp(&[1, 0])), -1);
        assert_eq!(p.len(), 4);
        let mut q = a.clone();
        q.mul_one_minus(&lp(&[0, 1]));
        assert_eq!(q, p);
    }

    #[test]
    fn bound_mismatch() {
        let a = FormalSeries::one(2, 4);
        let b = FormalSeries::one(2, 5);
        assert!(series_mul(&a, &b).is_err());
    }

    #[test]
    fn truncation_drops_high_terms() {
        let mut a = FormalSeries::one(1, 6);
        a.div_one_plus(&lp(&[2]));
        assert_eq!(a.len(), 4);
        assert_eq!(a.truncate(3).len(), 2);
        assert_eq!(a.coefficient(&lp(&[4])), 1);
    }
}
