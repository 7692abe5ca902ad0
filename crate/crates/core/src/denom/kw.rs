//! The expansion `R = Σ_{w∈W^#} Σ_{μ∈NS} (-1)^{l(w)+ht μ} e^{φ(w) - |w|(μ) + w(ρ) - ρ}`
//! for a base containing a maximal isotropic set `S`.

use std::collections::{HashMap, HashSet};

use crate::denom::series::{FormalSeries, LatticePoint};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{weyl_sharp_elements, SignedPermutation, SimpleRootSet};
use crate::scalar::Scalar;
use crate::weight::Weight;

fn subset<S: Scalar>(pi: &SimpleRootSet<S>) -> Result<Vec<Weight<S>>> {
    pi.isotropic_subset().ok_or(Error::MissingIsotropicSubset)
}

/// `T_w = {β ∈ S | w(β) ∈ Δ⁻}`.
pub fn t_set<S: Scalar>(pi: &SimpleRootSet<S>, w: &SignedPermutation) -> Result<Vec<Weight<S>>> {
    Ok(subset(pi)?
        .into_iter()
        .filter(|b| pi.height(&w.act(b)).is_negative())
        .collect())
}

/// Sign and exponent `φ(w) - |w|(μ) + w(ρ) - ρ` of one term, with
/// `μ = Σ mu[i]·βᵢ` over the isotropic subset in base order.
pub fn kw_exponent<S: Scalar>(
    pi: &SimpleRootSet<S>,
    w: &SignedPermutation,
    mu: &[u32],
) -> Result<(i64, Weight<S>)> {
    let s = subset(pi)?;
    if mu.len() != s.len() {
        return Err(Error::Parameters(format!(
            "expected {} multiplicities",
            s.len()
        )));
    }
    let mut exponent = &w.apply(pi.rho())? - pi.rho();
    let mut parity = pi.length(w) as u64;
    for (beta, &b) in s.iter().zip(mu) {
        let image = w.act(beta);
        let negative = pi.height(&image).is_negative();
        if negative {
            exponent = &exponent + &image;
        }
        // |w|(β) = ±w(β), whichever is positive
        let abs = if negative { -&image } else { image };
        exponent.add_scaled(&abs, &-S::from_int(i64::from(b)));
        parity += u64::from(b);
    }
    Ok((if parity.is_multiple_of(2) { 1 } else { -1 }, exponent))
}

/// Per-element data in Π-coordinates: the `μ = 0` term sits at `base`
/// (as a point `η` of `e^{-η}`), and each `βᵢ` moves it by `dirs[i] ∈ Q⁺`.
#[derive(Clone, Debug)]
struct KwElement {
    w: SignedPermutation,
    length: usize,
    base: Vec<i64>,
    dirs: Vec<Vec<i64>>,
}

fn lattice<S: Scalar>(pi: &SimpleRootSet<S>, x: &Weight<S>) -> Result<Vec<i64>> {
    pi.lattice_coordinates(x)
        .ok_or_else(|| Error::Internal(format!("{x} is not in the root lattice")))
}

fn kw_elements<S: Scalar>(pi: &SimpleRootSet<S>) -> Result<Vec<KwElement>> {
    let s = subset(pi)?;
    let mut out = Vec::new();
    for w in weyl_sharp_elements(pi.system())? {
        let (_, e0) = kw_exponent(pi, &w, &vec![0; s.len()])?;
        let base: Vec<i64> = lattice(pi, &e0)?.into_iter().map(|c| -c).collect();
        let mut dirs = Vec::with_capacity(s.len());
        for beta in &s {
            let image = w.act(beta);
            let abs = if pi.height(&image).is_negative() {
                -&image
            } else {
                image
            };
            dirs.push(lattice(pi, &abs)?);
        }
        out.push(KwElement {
            length: pi.length(&w),
            w,
            base,
            dirs,
        });
    }
    Ok(out)
}

fn sign(parity: u64) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The expansion up to `height_bound`. Terms landing outside `Q⁺` must
/// cancel; a surviving one is reported as an internal error.
pub fn denominator_kw<S: Scalar>(pi: &SimpleRootSet<S>, height_bound: u64) -> Result<FormalSeries> {
    let elements = kw_elements(pi)?;
    let bound = height_bound as i64;
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    for el in &elements {
        let heights: Vec<i64> = el.dirs.iter().map(|d| d.iter().sum()).collect();
        let mut point = el.base.clone();
        let start: i64 = point.iter().sum();
        walk(
            &el.dirs,
            &heights,
            0,
            bound - start,
            el.length as u64,
            &mut point,
            &mut |p, parity| {
                *acc.entry(p.to_vec()).or_insert(0) += sign(parity);
            },
        );
    }
    let mut series = FormalSeries::zero(pi.rank(), height_bound);
    for (p, c) in acc {
        if c == 0 {
            continue;
        }
        match LatticePoint::from_signed(&p) {
            Some(lp) => series.add_term(lp, c),
            None => {
                return Err(Error::Internal(format!(
                    "uncancelled term {c} at {p:?} outside the positive cone"
                )))
            }
        }
    }
    Ok(series)
}

fn walk(
    dirs: &[Vec<i64>],
    heights: &[i64],
    i: usize,
    room: i64,
    parity: u64,
    point: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64], u64),
) {
    if room < 0 {
        return;
    }
    if i == dirs.len() {
        visit(point, parity);
        return;
    }
    let mut b = 0u64;
    let mut left = room;
    loop {
        walk(dirs, heights, i + 1, left, parity + b, point, visit);
        left -= heights[i];
        if left < 0 {
            break;
        }
        point.iter_mut().zip(&dirs[i]).for_each(|(p, d)| *p += d);
        b += 1;
    }
    point
        .iter_mut()
        .zip(&dirs[i])
        .for_each(|(p, d)| *p -= d * b as i64);
}

/// Every `η` of height at most `height_bound` hit by at least one term,
/// before cancellation.
pub fn kw_support<S: Scalar>(
    pi: &SimpleRootSet<S>,
    height_bound: u64,
) -> Result<HashSet<Vec<i64>>> {
    let mut hit = HashSet::new();
    for el in &kw_elements(pi)? {
        let heights: Vec<i64> = el.dirs.iter().map(|d| d.iter().sum()).collect();
        let mut point = el.base.clone();
        let start: i64 = point.iter().sum();
        walk(
            &el.dirs,
            &heights,
            0,
            height_bound as i64 - start,
            0,
            &mut point,
            &mut |p, _| {
                hit.insert(p.to_vec());
            },
        );
    }
    Ok(hit)
}

/// All `(w, μ)` whose term lands on `e^{-η}`, with `η` in Π-coordinates.
pub fn kw_representations<S: Scalar>(
    pi: &SimpleRootSet<S>,
    eta: &[i64],
) -> Result<Vec<(SignedPermutation, Vec<u32>)>> {
    let mut out = Vec::new();
    for el in kw_elements(pi)? {
        if let Some(mu) = solve_multiplicities::<S>(&el, eta) {
            out.push((el.w, mu));
        }
    }
    Ok(out)
}

/// `k_Π(η)` from the expansion, one coefficient at a time.
pub fn kw_coefficient<S: Scalar>(pi: &SimpleRootSet<S>, eta: &[i64]) -> Result<i64> {
    let mut total = 0;
    for el in kw_elements(pi)? {
        if let Some(mu) = solve_multiplicities::<S>(&el, eta) {
            let ht: u64 = mu.iter().map(|&b| u64::from(b)).sum();
            total += sign(el.length as u64 + ht);
        }
    }
    Ok(total)
}

fn solve_multiplicities<S: Scalar>(el: &KwElement, eta: &[i64]) -> Option<Vec<u32>> {
    let target: Vec<i64> = eta.iter().zip(&el.base).map(|(a, b)| a - b).collect();
    if el.dirs.is_empty() {
        return target.iter().all(|&c| c == 0).then(Vec::new);
    }
    // columns are the directions
    let rows: Vec<Vec<S>> = (0..target.len())
        .map(|r| el.dirs.iter().map(|d| S::from_int(d[r])).collect())
        .collect();
    let rhs: Vec<S> = target.iter().map(|&c| S::from_int(c)).collect();
    let b = linalg::solve(&rows, &rhs)?;
    let mu: Vec<u32> = b
        .iter()
        .map(|x| x.integer_value().and_then(|v| u32::try_from(v).ok()))
        .collect::<Option<_>>()?;
    let reconstructed = (0..target.len()).all(|r| {
        el.dirs
            .iter()
            .zip(&mu)
            .map(|(d, &m)| d[r] * i64::from(m))
            .sum::<i64>()
            == target[r]
    });
    reconstructed.then_some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::denom::denominator_direct;
    use crate::rootsys::{
        custom_simple_roots, table1_simple_roots, LevelSign, RootSystem, Superalgebra,
    };
    use num_rational::Ratio;
    use std::sync::Arc;

    type Q = Ratio<i64>;

    fn sl21() -> SimpleRootSet<Q> {
        let rs = Arc::new(RootSystem::<Q>::new(Superalgebra::sl(2, 1).unwrap()));
        let roots = ["e1-d1", "d1-e2"]
            .iter()
            .map(|t| Weight::parse(t, 2, 1).unwrap())
            .collect();
        custom_simple_roots(rs, roots)
            .unwrap()
            .with_isotropic_subset(&[Weight::parse("e1-d1", 2, 1).unwrap()])
            .unwrap()
    }

    #[test]
    fn t_set_examples() {
        let pi = sl21();
        assert!(t_set(&pi, &SignedPermutation::identity(2))
            .unwrap()
            .is_empty());
        // w(ε₁-δ₁) = ε₂-δ₁ = -(δ₁-ε₂) is negative
        let swap = SignedPermutation::new(vec![1, 0], vec![1, 1]).unwrap();
        let t = t_set(&pi, &swap).unwrap();
        assert_eq!(t, vec![Weight::parse("e1-d1", 2, 1).unwrap()]);
    }

    #[test]
    fn exponent_examples() {
        let pi = sl21();
        let id = SignedPermutation::identity(2);
        assert_eq!(
            kw_exponent(&pi, &id, &[0]).unwrap(),
            (1, pi.system().zero())
        );
        let beta = Weight::parse("e1-d1", 2, 1).unwrap();
        assert_eq!(kw_exponent(&pi, &id, &[1]).unwrap(), (-1, -&beta));
    }

    #[test]
    fn missing_subset_is_an_error() {
        let pi =
            table1_simple_roots::<Q>(Superalgebra::b(3, 2).unwrap(), LevelSign::Minus).unwrap();
        assert!(pi.isotropic_subset().is_none());
        assert!(matches!(
            denominator_kw(&pi, 2),
            Err(Error::MissingIsotropicSubset)
        ));
    }

    #[test]
    fn sl_2_1_agrees_with_product() {
        let pi = sl21();
        assert_eq!(denominator_kw(&pi, 8).unwrap(), denominator_direct(&pi, 8));
    }

    #[test]
    fn sl_3_2_agrees_with_product() {
        let pi =
            table1_simple_roots::<Q>(Superalgebra::sl(3, 2).unwrap(), LevelSign::Plus).unwrap();
        let direct = denominator_direct(&pi, 6);
        assert_eq!(denominator_kw(&pi, 6).unwrap(), direct);
        for (p, c) in direct.terms() {
            assert_eq!(kw_coefficient(&pi, &p.to_signed()).unwrap(), c);
        }
        assert_eq!(kw_coefficient(&pi, &[0, 0, 0, 0]).unwrap(), 1);
    }
}
