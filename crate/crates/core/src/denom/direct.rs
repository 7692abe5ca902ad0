use std::sync::{Arc, RwLock};

use crate::denom::series::{FormalSeries, LatticePoint};
use crate::error::{Error, Result};
use crate::rootsys::SimpleRootSet;
use crate::scalar::Scalar;
use crate::weight::{Parity, Weight};

/// Default cap on the number of lattice points in one dense expansion.
pub const DEFAULT_EXPANSION_BUDGET: u128 = 4_000_000;

fn positive_points<S: Scalar>(pi: &SimpleRootSet<S>) -> Vec<(LatticePoint, Parity)> {
    pi.positive_roots()
        .iter()
        .map(|(r, c)| {
            let p =
                LatticePoint::from_signed(c).expect("positive root coordinates are nonnegative");
            (p, r.parity)
        })
        .collect()
}

/// `R = Π_{α∈Δ₀⁺}(1 - e^{-α}) / Π_{α∈Δ₁⁺}(1 + e^{-α})` up to height `height_bound`.
pub fn denominator_direct<S: Scalar>(pi: &SimpleRootSet<S>, height_bound: u64) -> FormalSeries {
    let mut r = FormalSeries::one(pi.rank(), height_bound);
    for (p, parity) in positive_points(pi) {
        if p.height() > height_bound {
            continue;
        }
        match parity {
            Parity::Even => r.mul_one_minus(&p),
            Parity::Odd => r.div_one_plus(&p),
        }
    }
    r
}

/// Coefficients of `R` at every lattice point `≤ corner` coordinatewise.
#[derive(Debug)]
struct DenseBox {
    corner: Vec<u32>,
    strides: Vec<usize>,
    values: Vec<i64>,
}

impl DenseBox {
    fn size(corner: &[u32]) -> u128 {
        corner.iter().map(|&c| u128::from(c) + 1).product()
    }

    fn compute(factors: &[(LatticePoint, Parity)], corner: &[u32]) -> Self {
        let rank = corner.len();
        let mut strides = vec![1usize; rank];
        for i in 1..rank {
            strides[i] = strides[i - 1] * (corner[i - 1] as usize + 1);
        }
        let total = Self::size(corner) as usize;
        let mut values = vec![0i64; total];
        values[0] = 1;
        let mut coords = vec![0u32; rank];
        for (p, parity) in factors {
            let c = p.coords();
            if c.iter().zip(corner).any(|(a, b)| a > b) {
                continue;
            }
            let offset: usize = c.iter().zip(&strides).map(|(&a, &s)| a as usize * s).sum();
            let fits = |x: &[u32]| x.iter().zip(c).all(|(a, b)| a >= b);
            match parity {
                // t = s - x^α s, reading old values: descending sweep
                Parity::Even => {
                    coords.clone_from_slice(corner);
                    for idx in (0..total).rev() {
                        if fits(&coords) {
                            values[idx] -= values[idx - offset];
                        }
                        odometer_down(&mut coords, corner);
                    }
                }
                // t = s - x^α t, reading new values: ascending sweep
                Parity::Odd => {
                    coords.iter_mut().for_each(|x| *x = 0);
                    for idx in 0..total {
                        if fits(&coords) {
                            values[idx] -= values[idx - offset];
                        }
                        odometer_up(&mut coords, corner);
                    }
                }
            }
        }
        DenseBox {
            corner: corner.to_vec(),
            strides,
            values,
        }
    }

    fn contains(&self, p: &[u32]) -> bool {
        p.iter().zip(&self.corner).all(|(a, b)| a <= b)
    }

    fn get(&self, p: &[u32]) -> i64 {
        let idx: usize = p
            .iter()
            .zip(&self.strides)
            .map(|(&a, &s)| a as usize * s)
            .sum();
        self.values[idx]
    }
}

fn odometer_up(x: &mut [u32], corner: &[u32]) {
    for (xi, &ci) in x.iter_mut().zip(corner) {
        if *xi < ci {
            *xi += 1;
            return;
        }
        *xi = 0;
    }
}

fn odometer_down(x: &mut [u32], corner: &[u32]) {
    for (xi, &ci) in x.iter_mut().zip(corner) {
        if *xi > 0 {
            *xi -= 1;
            return;
        }
        *xi = ci;
    }
}

/// Evaluator for `k_Π`, the coefficients of the Weyl denominator
/// `R = Σ_η k_Π(η) e^{-η}`, with a cache of dense expansions.
#[derive(Debug)]
pub struct KPi<S> {
    base: Arc<SimpleRootSet<S>>,
    factors: Vec<(LatticePoint, Parity)>,
    budget: u128,
    cache: Option<RwLock<Vec<Arc<DenseBox>>>>,
}

const MAX_CACHED_BOXES: usize = 32;

impl<S: Scalar> KPi<S> {
    pub fn new(base: Arc<SimpleRootSet<S>>) -> Self {
        let factors = positive_points(&base);
        KPi {
            base,
            factors,
            budget: DEFAULT_EXPANSION_BUDGET,
            cache: Some(RwLock::new(Vec::new())),
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    /// Disables memoization; every query recomputes its expansion.
    pub fn without_cache(mut self) -> Self {
        self.cache = None;
        self
    }

    pub fn base(&self) -> &SimpleRootSet<S> {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<SimpleRootSet<S>> {
        &self.base
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// `k_Π(η)`; zero for weights outside `Q⁺` or off the lattice.
    pub fn value(&self, eta: &Weight<S>) -> Result<i64> {
        self.base.system().check(eta)?;
        match self.base.lattice_coordinates(eta) {
            Some(c) => self.value_at(&c),
            None => Ok(0),
        }
    }

    /// `k_Π` at given Π-coordinates; zero if any coordinate is negative.
    pub fn value_at(&self, coords: &[i64]) -> Result<i64> {
        let Some(p) = LatticePoint::from_signed(coords) else {
            return Ok(0);
        };
        if let Some(v) = self.lookup(p.coords()) {
            return Ok(v);
        }
        let b = self.expand(p.coords())?;
        Ok(b.get(p.coords()))
    }

    /// Precomputes one expansion covering all listed points in `Q⁺`.
    pub fn prefetch(&self, points: &[Vec<i64>]) -> Result<()> {
        let rank = self.base.rank();
        let mut corner = vec![0u32; rank];
        let mut any = false;
        for p in points.iter().filter_map(|c| LatticePoint::from_signed(c)) {
            if self.lookup(p.coords()).is_some() {
                continue;
            }
            any = true;
            for (c, x) in corner.iter_mut().zip(p.coords()) {
                *c = (*c).max(*x);
            }
        }
        if any && DenseBox::size(&corner) <= self.budget {
            self.expand(&corner)?;
        }
        Ok(())
    }

    fn lookup(&self, p: &[u32]) -> Option<i64> {
        let cache = self.cache.as_ref()?.read().expect("k_pi cache poisoned");
        cache.iter().find(|b| b.contains(p)).map(|b| b.get(p))
    }

    fn expand(&self, corner: &[u32]) -> Result<Arc<DenseBox>> {
        let points = DenseBox::size(corner);
        if points > self.budget {
            return Err(Error::ExpansionBudget {
                points,
                budget: self.budget,
            });
        }
        let b = Arc::new(DenseBox::compute(&self.factors, corner));
        if let Some(cache) = &self.cache {
            let mut cache = cache.write().expect("k_pi cache poisoned");
            cache.retain(|old| !b.contains(&old.corner));
            if cache.len() >= MAX_CACHED_BOXES {
                cache.remove(0);
            }
            cache.push(b.clone());
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{custom_simple_roots, RootSystem, Superalgebra};
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn sl21() -> Arc<SimpleRootSet<Q>> {
        let rs = Arc::new(RootSystem::<Q>::new(Superalgebra::sl(2, 1).unwrap()));
        let roots = ["e1-d1", "d1-e2"]
            .iter()
            .map(|t| Weight::parse(t, 2, 1).unwrap())
            .collect();
        Arc::new(custom_simple_roots(rs, roots).unwrap())
    }

    #[test]
    fn sl_2_1_low_coefficients() {
        let pi = sl21();
        let r = denominator_direct(&pi, 4);
        let at = |a: u32, b: u32| r.coefficient(&LatticePoint::new(vec![a, b]));
        assert_eq!(at(0, 0), 1);
        assert_eq!(at(1, 0), -1);
        assert_eq!(at(0, 1), -1);
        assert_eq!(at(1, 1), 0);
        // R = (1 - x1 x2) / ((1 + x1)(1 + x2))
        for a in 0..=4u32 {
            for b in 0..=(4 - a) {
                let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                let expected = if a > 0 && b > 0 { 0 } else { sign };
                assert_eq!(at(a, b), expected, "({a},{b})");
            }
        }
    }

    #[test]
    fn k_pi_matches_series_and_cache_is_transparent() {
        let pi = sl21();
        let cached = KPi::new(pi.clone());
        let plain = KPi::new(pi.clone()).without_cache();
        let r = denominator_direct(&pi, 6);
        for a in 0..=6i64 {
            for b in 0..=(6 - a) {
                let expected = r.coefficient(&LatticePoint::new(vec![a as u32, b as u32]));
                assert_eq!(cached.value_at(&[a, b]).unwrap(), expected);
                assert_eq!(plain.value_at(&[a, b]).unwrap(), expected);
            }
        }
        assert_eq!(cached.value_at(&[-1, 3]).unwrap(), 0);
        let e1 = Weight::parse("e1", 2, 1).unwrap();
        assert_eq!(cached.value(&e1).unwrap(), 0);
        assert_eq!(cached.value(&pi.system().zero()).unwrap(), 1);
    }

    #[test]
    fn budget_is_reported() {
        let k = KPi::new(sl21()).with_budget(10);
        assert!(matches!(
            k.value_at(&[5, 5]),
            Err(Error::ExpansionBudget {
                points: 36,
                budget: 10
            })
        ));
    }
}
