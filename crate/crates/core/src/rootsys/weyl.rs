use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weight::Weight;

/// Largest ε-rank for which `W^#` is enumerated by default.
pub const DEFAULT_WEYL_RANK_LIMIT: usize = 8;

/// `εᵢ ↦ signs[i]·ε_{perm[i]}` (0-based), identity on the δ-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parameters(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.len() != m || signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parameters(format!("bad sign vector {signs:?}")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(m: usize) -> Self {
        SignedPermutation {
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    /// The reflection in a root of `Δ^#` (which only involves ε-coordinates).
    pub fn reflection<S: Scalar>(alpha: &Weight<S>) -> Result<Self> {
        let m = alpha.eps.len();
        if alpha.del.iter().any(|c| !c.is_zero()) {
            return Err(Error::Parameters(format!("{alpha} has δ-components")));
        }
        let support: Vec<usize> = (0..m).filter(|&i| !alpha.eps[i].is_zero()).collect();
        let mut w = Self::identity(m);
        match support[..] {
            [i] => w.signs[i] = -1,
            [i, j] if alpha.eps[i] == -alpha.eps[j].clone() => w.perm.swap(i, j),
            [i, j] if alpha.eps[i] == alpha.eps[j] => {
                w.perm.swap(i, j);
                w.signs[i] = -1;
                w.signs[j] = -1;
            }
            _ => return Err(Error::Parameters(format!("{alpha} is not a root of W^#"))),
        }
        Ok(w)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Unchecked action; `x` must have `rank()` ε-coordinates.
    pub fn act<S: Scalar>(&self, x: &Weight<S>) -> Weight<S> {
        let mut eps = vec![S::zero(); x.eps.len()];
        for (i, c) in x.eps.iter().enumerate() {
            eps[self.perm[i]] = if self.signs[i] < 0 {
                -c.clone()
            } else {
                c.clone()
            };
        }
        Weight {
            eps,
            del: x.del.clone(),
        }
    }

    pub fn apply<S: Scalar>(&self, x: &Weight<S>) -> Result<Weight<S>> {
        if x.eps.len() != self.rank() {
            return Err(Error::Dimension {
                expected_eps: self.rank(),
                expected_del: x.del.len(),
                got_eps: x.eps.len(),
                got_del: x.del.len(),
            });
        }
        Ok(self.act(x))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for i in 0..m {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPermutation { perm, signs }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(p, s)| format!("{}e{}", if *s < 0 { "-" } else { "" }, p + 1))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Enumerates `W^#` once per element, refusing ε-ranks above `limit`.
pub fn weyl_sharp_elements_with_limit<S: Scalar>(
    rs: &RootSystem<S>,
    limit: usize,
) -> Result<impl Iterator<Item = SignedPermutation>> {
    let alg = rs.algebra();
    let m = alg.eps_count();
    if m > limit {
        return Err(Error::EnumerationLimit { rank: m, limit });
    }
    let signed = alg.family() != crate::rootsys::Family::A;
    let even_only = alg.sharp_is_type_d();
    let masks: Vec<u32> = if signed {
        (0..1u32 << m)
            .filter(|mask| !even_only || mask.count_ones() % 2 == 0)
            .collect()
    } else {
        vec![0]
    };
    Ok((0..m).permutations(m).flat_map(move |perm| {
        masks
            .clone()
            .into_iter()
            .map(move |mask| SignedPermutation {
                perm: perm.clone(),
                signs: (0..m)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect(),
            })
    }))
}

pub fn weyl_sharp_elements<S: Scalar>(
    rs: &RootSystem<S>,
) -> Result<impl Iterator<Item = SignedPermutation>> {
    weyl_sharp_elements_with_limit(rs, DEFAULT_WEYL_RANK_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{table1_simple_roots, LevelSign, Superalgebra};
    use num_rational::Ratio;
    use std::collections::HashSet;

    type Q = Ratio<i64>;

    fn count(alg: Superalgebra) -> usize {
        let rs = RootSystem::<Q>::new(alg);
        let all: Vec<_> = weyl_sharp_elements(&rs).unwrap().collect();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), distinct.len());
        all.len()
    }

    #[test]
    fn group_orders() {
        assert_eq!(count(Superalgebra::sl(3, 1).unwrap()), 6);
        assert_eq!(count(Superalgebra::b(2, 1).unwrap()), 8);
        assert_eq!(count(Superalgebra::d(3, 1).unwrap()), 24);
        assert_eq!(count(Superalgebra::d_delta(1, 3).unwrap()), 48);
        assert_eq!(count(Superalgebra::b_delta(1, 2).unwrap()), 8);
    }

    #[test]
    fn budget_is_enforced() {
        let rs = RootSystem::<Q>::new(Superalgebra::sl(4, 2).unwrap());
        assert!(matches!(
            weyl_sharp_elements_with_limit(&rs, 3).map(|_| ()),
            Err(Error::EnumerationLimit { rank: 4, limit: 3 })
        ));
    }

    #[test]
    fn action_examples() {
        let w = |t: &str| Weight::<Q>::parse(t, 2, 1).unwrap();
        let swap = SignedPermutation::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(swap.act(&w("e1-d1")), w("e2-d1"));
        let flip = SignedPermutation::new(vec![0, 1], vec![-1, 1]).unwrap();
        assert_eq!(flip.act(&w("e1+e2")), w("-e1+e2"));
        assert_eq!(SignedPermutation::identity(2).act(&w("e1-d1")), w("e1-d1"));
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        let x = Weight::<Q>::parse("e1", 3, 1).unwrap();
        assert!(matches!(swap.apply(&x), Err(Error::Dimension { .. })));
    }

    #[test]
    fn lengths() {
        let pi =
            table1_simple_roots::<Q>(Superalgebra::sl(3, 2).unwrap(), LevelSign::Plus).unwrap();
        let rs = pi.system();
        assert_eq!(pi.length(&SignedPermutation::identity(3)), 0);
        let longest = SignedPermutation::new(vec![2, 1, 0], vec![1, 1, 1]).unwrap();
        assert_eq!(pi.length(&longest), 3);
        for a in pi.positive_sharp_roots() {
            let s = SignedPermutation::reflection(a).unwrap();
            assert!(pi.length(&s) >= 1);
        }
        // simple roots of Δ^# relative to the base give length one
        let e2e3 = Weight::<Q>::parse("e2-e3", 3, 2).unwrap();
        assert_eq!(pi.length(&SignedPermutation::reflection(&e2e3).unwrap()), 1);
        assert!(weyl_sharp_elements(rs).unwrap().all(|w| pi.length(&w) <= 3));
    }

    #[test]
    fn compose_matches_sequential_action() {
        let rs = RootSystem::<Q>::new(Superalgebra::b(3, 1).unwrap());
        let ws: Vec<_> = weyl_sharp_elements(&rs).unwrap().step_by(7).collect();
        let x = Weight::<Q>::parse("e1+2e2-3e3+d1", 3, 1).unwrap();
        for a in &ws {
            for b in &ws {
                assert_eq!(a.compose(b).act(&x), a.act(&b.act(&x)));
            }
        }
    }
}
