use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{RootSystem, SignedPermutation};
use crate::scalar::Scalar;
use crate::weight::{Parity, Root, Weight};

/// Change of basis from ε/δ coordinates to coordinates over an ordered base.
#[derive(Clone, Debug)]
struct CoordSolver<S> {
    basis: Vec<Weight<S>>,
    /// Ambient coordinates on which the basis restricts to an invertible matrix.
    pivots: Vec<usize>,
    /// Inverse of the restricted matrix; `coords = inverse · x[pivots]`.
    inverse: Vec<Vec<S>>,
}

impl<S: Scalar> CoordSolver<S> {
    fn new(basis: &[Weight<S>]) -> Option<Self> {
        let rows: Vec<Vec<S>> = basis
            .iter()
            .map(|b| b.coords().cloned().collect())
            .collect();
        let mut echelon = rows.clone();
        let pivots = linalg::rref(&mut echelon);
        if pivots.len() < basis.len() {
            return None;
        }
        // square[k][j] = coordinate pivots[k] of basis[j]
        let square: Vec<Vec<S>> = pivots
            .iter()
            .map(|&p| rows.iter().map(|r| r[p].clone()).collect())
            .collect();
        let inverse = linalg::invert(&square)?;
        Some(CoordSolver {
            basis: basis.to_vec(),
            pivots,
            inverse,
        })
    }

    fn coords_unchecked(&self, x: &Weight<S>) -> Vec<S> {
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.pivots)
                    .fold(S::zero(), |acc, (a, &p)| {
                        acc + a.clone() * x.coord(p).clone()
                    })
            })
            .collect()
    }

    fn coords(&self, x: &Weight<S>) -> Option<Vec<S>> {
        let c = self.coords_unchecked(x);
        let (m, n) = x.dims();
        let mut back = Weight::zero(m, n);
        for (b, cj) in self.basis.iter().zip(&c) {
            back.add_scaled(b, cj);
        }
        (&back == x).then_some(c)
    }

    /// Covector `g` with `ht(x) = Σ gᵢ xᵢ` for `x` in the span.
    fn height_functional(&self, dim: usize) -> Vec<S> {
        let mut g = vec![S::zero(); dim];
        for row in &self.inverse {
            for (a, &p) in row.iter().zip(&self.pivots) {
                g[p] = g[p].clone() + a.clone();
            }
        }
        g
    }
}

/// An ordered base `Π` of a root system with its derived data: the highest
/// root `θ`, a Weyl vector `ρ`, `b′` and, when present, a maximal isotropic
/// subset `S ⊆ Π`.
#[derive(Clone, Debug)]
pub struct SimpleRootSet<S> {
    system: Arc<RootSystem<S>>,
    roots: Vec<Root<S>>,
    theta: Weight<S>,
    theta_coords: Vec<i64>,
    rho: Weight<S>,
    b_prime: i64,
    isotropic_subset: Option<Vec<usize>>,
    solver: CoordSolver<S>,
    height_functional: Vec<S>,
    /// Positive roots with their Π-coordinates, by increasing height.
    positive: Vec<(Root<S>, Vec<i64>)>,
    positive_sharp: Vec<Weight<S>>,
    positive_index: HashMap<Weight<S>, usize>,
}

impl<S: Scalar> SimpleRootSet<S> {
    /// Validates `roots` as a base of `system` and derives `θ`, `ρ`, `b′`.
    /// A maximal isotropic subset contained in the base is detected
    /// automatically (first one in index order).
    pub fn new(system: Arc<RootSystem<S>>, roots: Vec<Weight<S>>) -> Result<Self> {
        let alg = system.algebra();
        let mut tagged = Vec::with_capacity(roots.len());
        for r in &roots {
            system.check(r)?;
            let parity = system
                .parity_of(r)
                .ok_or_else(|| Error::NotABase(format!("{r} is not a root")))?;
            tagged.push(Root {
                weight: r.clone(),
                parity,
            });
        }
        if roots.len() != alg.rank() {
            return Err(Error::NotABase(format!(
                "expected {} simple roots, got {}",
                alg.rank(),
                roots.len()
            )));
        }
        let solver = CoordSolver::new(&roots)
            .ok_or_else(|| Error::NotABase("simple roots are linearly dependent".into()))?;

        let mut positive = Vec::new();
        for root in system.roots() {
            let coords = solver
                .coords(&root.weight)
                .ok_or_else(|| Error::NotABase(format!("{} is outside the span", root.weight)))?;
            let ints: Option<Vec<i64>> = coords.iter().map(|c| c.integer_value()).collect();
            let ints = ints.ok_or_else(|| {
                Error::NotABase(format!("{} has non-integral coordinates", root.weight))
            })?;
            if ints.iter().all(|&c| c >= 0) {
                positive.push((root, ints));
            } else if !ints.iter().all(|&c| c <= 0) {
                return Err(Error::NotABase(format!(
                    "{} has mixed-sign coordinates {:?}",
                    root.weight, ints
                )));
            }
        }
        positive.sort_by_key(|(r, c)| (c.iter().sum::<i64>(), r.weight.clone()));

        let (theta, theta_coords) = positive
            .iter()
            .find(|(_, c)| {
                positive
                    .iter()
                    .all(|(_, d)| d.iter().zip(c).all(|(x, y)| x <= y))
            })
            .map(|(r, c)| (r.weight.clone(), c.clone()))
            .ok_or_else(|| Error::Internal("no unique highest root".into()))?;
        let b_prime = theta_coords.iter().copied().max().unwrap_or(0);

        // (ρ, αⱼ) = ½(αⱼ, αⱼ) with ρ = Σ xᵢ αᵢ
        let gram: Vec<Vec<S>> = roots
            .iter()
            .map(|a| roots.iter().map(|b| system.form(a, b)).collect())
            .collect();
        let rhs: Vec<S> = roots.iter().map(|a| system.norm(a) * S::half()).collect();
        let x = linalg::solve(&gram, &rhs)
            .ok_or_else(|| Error::Internal("inconsistent system for rho".into()))?;
        let mut rho = system.zero();
        for (a, xi) in roots.iter().zip(&x) {
            rho.add_scaled(a, xi);
        }

        let dim = alg.eps_count() + alg.del_count();
        let height_functional = solver.height_functional(dim);
        let positive_index = positive
            .iter()
            .enumerate()
            .map(|(i, (r, _))| (r.weight.clone(), i))
            .collect::<HashMap<_, _>>();
        let positive_sharp = system
            .sharp_roots()
            .iter()
            .filter(|r| positive_index.contains_key(*r))
            .cloned()
            .collect();

        let mut base = SimpleRootSet {
            system,
            roots: tagged,
            theta,
            theta_coords,
            rho,
            b_prime,
            isotropic_subset: None,
            solver,
            height_functional,
            positive,
            positive_sharp,
            positive_index,
        };
        base.isotropic_subset = base.detect_isotropic_subset();
        Ok(base)
    }

    /// Replaces the isotropic subset with the given simple roots after checking
    /// they are pairwise orthogonal, isotropic and of size `def g`.
    pub fn with_isotropic_subset(mut self, subset: &[Weight<S>]) -> Result<Self> {
        let mut idx = Vec::new();
        for s in subset {
            let i = self
                .roots
                .iter()
                .position(|r| &r.weight == s)
                .ok_or_else(|| Error::Parameters(format!("{s} is not a simple root")))?;
            idx.push(i);
        }
        let sys = &self.system;
        let pairwise = idx.iter().all(|&i| {
            idx.iter().all(|&j| {
                sys.form(&self.roots[i].weight, &self.roots[j].weight)
                    .is_zero()
            })
        });
        if !pairwise || idx.len() != sys.defect() {
            return Err(Error::Parameters("not a maximal isotropic subset".into()));
        }
        self.isotropic_subset = Some(idx);
        Ok(self)
    }

    fn detect_isotropic_subset(&self) -> Option<Vec<usize>> {
        let defect = self.system.defect();
        let iso: Vec<usize> = (0..self.roots.len())
            .filter(|&i| self.system.norm(&self.roots[i].weight).is_zero())
            .collect();
        fn extend<S: Scalar>(
            base: &SimpleRootSet<S>,
            iso: &[usize],
            start: usize,
            cur: &mut Vec<usize>,
            target: usize,
        ) -> bool {
            if cur.len() == target {
                return true;
            }
            for k in start..iso.len() {
                let i = iso[k];
                let wi = &base.roots[i].weight;
                if cur
                    .iter()
                    .all(|&j| base.system.form(wi, &base.roots[j].weight).is_zero())
                {
                    cur.push(i);
                    if extend(base, iso, k + 1, cur, target) {
                        return true;
                    }
                    cur.pop();
                }
            }
            false
        }
        let mut cur = Vec::new();
        (defect > 0 && extend(self, &iso, 0, &mut cur, defect)).then_some(cur)
    }

    pub fn system(&self) -> &RootSystem<S> {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<RootSystem<S>> {
        &self.system
    }

    pub fn roots(&self) -> &[Root<S>] {
        &self.roots
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight<S>> + '_ {
        self.roots.iter().map(|r| &r.weight)
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn theta(&self) -> &Weight<S> {
        &self.theta
    }

    pub fn theta_coords(&self) -> &[i64] {
        &self.theta_coords
    }

    pub fn rho(&self) -> &Weight<S> {
        &self.rho
    }

    pub fn b_prime(&self) -> i64 {
        self.b_prime
    }

    pub fn isotropic_indices(&self) -> Option<&[usize]> {
        self.isotropic_subset.as_deref()
    }

    pub fn isotropic_subset(&self) -> Option<Vec<Weight<S>>> {
        self.isotropic_subset
            .as_ref()
            .map(|idx| idx.iter().map(|&i| self.roots[i].weight.clone()).collect())
    }

    /// Positive roots with their Π-coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[(Root<S>, Vec<i64>)] {
        &self.positive
    }

    pub fn positive_sharp_roots(&self) -> &[Weight<S>] {
        &self.positive_sharp
    }

    pub fn is_positive_root(&self, w: &Weight<S>) -> bool {
        self.positive_index.contains_key(w)
    }

    /// Π-coordinates of a positive root, if `w` is one.
    pub fn positive_root_coords(&self, w: &Weight<S>) -> Option<&[i64]> {
        self.positive_index
            .get(w)
            .map(|&i| self.positive[i].1.as_slice())
    }

    /// Exact coordinates of `eta` over Π.
    pub fn pi_coordinates(&self, eta: &Weight<S>) -> Result<Vec<S>> {
        self.system.check(eta)?;
        self.solver
            .coords(eta)
            .ok_or_else(|| Error::NotInLattice(eta.to_string()))
    }

    /// Integral Π-coordinates, or `None` if `eta` is not in the root lattice.
    pub fn lattice_coordinates(&self, eta: &Weight<S>) -> Option<Vec<i64>> {
        let c = self.pi_coordinates(eta).ok()?;
        c.iter().map(|x| x.integer_value()).collect()
    }

    /// `Σ cⱼ αⱼ`.
    pub fn weight_from_coords(&self, coords: &[i64]) -> Weight<S> {
        let mut w = self.system.zero();
        for (r, &c) in self.roots.iter().zip(coords) {
            w.add_scaled(&r.weight, &S::from_int(c));
        }
        w
    }

    /// Height `Σ cⱼ` for `x` in the span of Π (not checked).
    pub fn height(&self, x: &Weight<S>) -> S {
        x.coords()
            .zip(&self.height_functional)
            .fold(S::zero(), |acc, (a, g)| acc + a.clone() * g.clone())
    }

    pub fn bilinear(&self, x: &Weight<S>, y: &Weight<S>) -> Result<S> {
        self.system.bilinear(x, y)
    }

    pub(crate) fn form(&self, x: &Weight<S>, y: &Weight<S>) -> S {
        self.system.form(x, y)
    }

    /// `(ρ,θ) + ½(θ,θ)`.
    pub fn dual_coxeter(&self) -> S {
        self.form(&self.rho, &self.theta) + self.form(&self.theta, &self.theta) * S::half()
    }

    /// Number of positive roots of `Δ^#` sent to negative roots by `w`.
    pub fn length(&self, w: &SignedPermutation) -> usize {
        self.positive_sharp
            .iter()
            .filter(|a| self.height(&w.act(a)).is_negative())
            .count()
    }

    /// The element from `Δ ∪ {0}` with the given parity semantics: `None` for non-roots.
    pub fn parity_of(&self, w: &Weight<S>) -> Option<Parity> {
        if w.is_zero() {
            Some(Parity::Even)
        } else {
            self.system.parity_of(w)
        }
    }
}

/// Validates `roots` as a base of `rs`; see [`SimpleRootSet::new`].
pub fn custom_simple_roots<S: Scalar>(
    rs: Arc<RootSystem<S>>,
    roots: Vec<Weight<S>>,
) -> Result<SimpleRootSet<S>> {
    SimpleRootSet::new(rs, roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Superalgebra;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn sys(alg: Superalgebra) -> Arc<RootSystem<Q>> {
        Arc::new(RootSystem::new(alg))
    }

    fn ws(rs: &RootSystem<Q>, texts: &[&str]) -> Vec<Weight<Q>> {
        let a = rs.algebra();
        texts
            .iter()
            .map(|t| Weight::parse(t, a.eps_count(), a.del_count()).unwrap())
            .collect()
    }

    #[test]
    fn sl_2_1_distinguished_odd_base() {
        let rs = sys(Superalgebra::sl(2, 1).unwrap());
        let pi = custom_simple_roots(rs.clone(), ws(&rs, &["e1-d1", "d1-e2"])).unwrap();
        assert_eq!(pi.theta().to_string(), "e1-e2");
        assert_eq!(pi.b_prime(), 1);
        assert_eq!(pi.positive_roots().len(), 3);
        let th = pi.theta().clone();
        assert_eq!(pi.pi_coordinates(&th).unwrap(), vec![Q::from_integer(1); 2]);
        // both simple roots isotropic: (ρ,β) = 0
        for b in pi.weights() {
            assert_eq!(pi.form(pi.rho(), b), Q::from_integer(0));
        }
        assert_eq!(pi.isotropic_subset().unwrap().len(), 1);
    }

    #[test]
    fn sl_2_1_rejects_non_base() {
        let rs = sys(Superalgebra::sl(2, 1).unwrap());
        let err = custom_simple_roots(rs.clone(), ws(&rs, &["e1-e2", "e1-d1"])).unwrap_err();
        assert!(matches!(err, Error::NotABase(_)), "{err}");
        let err = custom_simple_roots(rs.clone(), ws(&rs, &["e1-e2"])).unwrap_err();
        assert!(matches!(err, Error::NotABase(_)));
        let err = custom_simple_roots(rs.clone(), ws(&rs, &["e1-d1", "2e1"])).unwrap_err();
        assert!(matches!(err, Error::NotABase(_)));
    }

    #[test]
    fn base_with_itself_is_valid() {
        let rs = sys(Superalgebra::b(3, 2).unwrap());
        let roots = ws(&rs, &["d1-d2", "d2-e1", "e1-e2", "e2-e3", "e3"]);
        let pi = custom_simple_roots(rs.clone(), roots.clone()).unwrap();
        let again = custom_simple_roots(rs, pi.weights().cloned().collect()).unwrap();
        assert_eq!(again.theta(), pi.theta());
        assert_eq!(again.weights().cloned().collect::<Vec<_>>(), roots);
    }

    #[test]
    fn pi_coordinates_sl_3_2() {
        let rs = sys(Superalgebra::sl(3, 2).unwrap());
        let pi = custom_simple_roots(rs.clone(), ws(&rs, &["e1-d1", "d1-d2", "d2-e2", "e2-e3"]))
            .unwrap();
        let x = ws(&rs, &["e1-e2"]).pop().unwrap();
        let ints: Vec<i64> = pi.lattice_coordinates(&x).unwrap();
        assert_eq!(ints, vec![1, 1, 1, 0]);
        assert_eq!(pi.lattice_coordinates(&rs.zero()).unwrap(), vec![0; 4]);
        // e1 alone violates the trace condition of sl(m|n)
        let e1 = ws(&rs, &["e1"]).pop().unwrap();
        assert!(matches!(
            pi.pi_coordinates(&e1),
            Err(Error::NotInLattice(_))
        ));
    }

    #[test]
    fn rho_pairing_is_half_norm_on_simple_roots() {
        let rs = sys(Superalgebra::sl(2, 2).unwrap());
        let pi = custom_simple_roots(rs.clone(), ws(&rs, &["e1-d1", "d1-e2", "e2-d2"])).unwrap();
        for b in pi.weights() {
            assert_eq!(pi.form(pi.rho(), b), pi.form(b, b) * Q::new(1, 2));
        }
    }
}
