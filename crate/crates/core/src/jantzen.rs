//! Affine weights, the Casimir degeneracy set `C(kΛ₀)` and the Jantzen sum
//! coefficients `a_{m,ξ}`.

use std::fmt;

use num_integer::Integer;

use crate::denom::KPi;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, SimpleRootSet};
use crate::scalar::Scalar;
use crate::weight::{Parity, Weight};

/// `lambda0·Λ₀ + delta·δ + finite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight<S> {
    pub lambda0: S,
    pub delta: S,
    pub finite: Weight<S>,
}

impl<S: Scalar> AffineWeight<S> {
    pub fn lambda0(rs: &RootSystem<S>) -> Self {
        AffineWeight {
            lambda0: S::one(),
            delta: S::zero(),
            finite: rs.zero(),
        }
    }

    pub fn delta(rs: &RootSystem<S>) -> Self {
        AffineWeight {
            lambda0: S::zero(),
            delta: S::one(),
            finite: rs.zero(),
        }
    }

    /// `ρ̂ = ρ + h^∨Λ₀`.
    pub fn rho_hat(pi: &SimpleRootSet<S>) -> Self {
        AffineWeight {
            lambda0: pi.dual_coxeter(),
            delta: S::zero(),
            finite: pi.rho().clone(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        AffineWeight {
            lambda0: self.lambda0.clone() * c.clone(),
            delta: self.delta.clone() * c.clone(),
            finite: self.finite.scale(c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        AffineWeight {
            lambda0: self.lambda0.clone() + other.lambda0.clone(),
            delta: self.delta.clone() + other.delta.clone(),
            finite: &self.finite + &other.finite,
        }
    }
}

/// `(x, y)` with `(Λ₀, δ) = 1` and `Λ₀`, `δ` isotropic and orthogonal to the finite part.
pub fn affine_inner<S: Scalar>(
    rs: &RootSystem<S>,
    x: &AffineWeight<S>,
    y: &AffineWeight<S>,
) -> Result<S> {
    Ok(rs.bilinear(&x.finite, &y.finite)?
        + x.lambda0.clone() * y.delta.clone()
        + y.lambda0.clone() * x.delta.clone())
}

/// The positive affine root `lδ - α` with `α ∈ Δ ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot<S> {
    level: u64,
    finite: Weight<S>,
    parity: Parity,
}

impl<S: Scalar> AffineRoot<S> {
    pub fn new(rs: &RootSystem<S>, level: u64, alpha: Weight<S>) -> Result<Self> {
        rs.check(&alpha)?;
        if level == 0 {
            return Err(Error::Parameters(
                "affine root level must be positive".into(),
            ));
        }
        let parity = if alpha.is_zero() {
            Parity::Even
        } else {
            rs.parity_of(&alpha)
                .ok_or_else(|| Error::Parameters(format!("{alpha} is not a root")))?
        };
        Ok(AffineRoot {
            level,
            finite: alpha,
            parity,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// The `α` in `lδ - α`.
    pub fn finite(&self) -> &Weight<S> {
        &self.finite
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_imaginary(&self) -> bool {
        self.finite.is_zero()
    }

    pub fn to_affine_weight(&self) -> AffineWeight<S> {
        AffineWeight {
            lambda0: S::zero(),
            delta: S::from_int(self.level as i64),
            finite: -&self.finite,
        }
    }
}

impl<S: Scalar> fmt::Display for AffineRoot<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.level == 1 {
            String::new()
        } else {
            self.level.to_string()
        };
        if self.finite.is_zero() {
            write!(f, "{l}δ")
        } else {
            write!(f, "{l}δ-({})", self.finite)
        }
    }
}

/// A pair `(m, ξ) ∈ Z≥1 × Irr`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CandidatePair<S> {
    pub m: u64,
    pub xi: AffineRoot<S>,
}

/// `m·(l(k+h^∨) - (ρ,α) - (m/2)(α,α))` for `ξ = lδ - α`.
pub fn casimir_value<S: Scalar>(pi: &SimpleRootSet<S>, k: &S, m: u64, xi: &AffineRoot<S>) -> S {
    let m = S::from_int(m as i64);
    let l = S::from_int(xi.level as i64);
    let a = &xi.finite;
    let inner = l * (k.clone() + pi.dual_coxeter())
        - pi.form(pi.rho(), a)
        - m.clone() * S::half() * pi.form(a, a);
    m * inner
}

/// `(kΛ₀ + ρ̂, mξ) - ½(mξ, mξ)` evaluated with the affine form.
pub fn casimir_affine<S: Scalar>(
    pi: &SimpleRootSet<S>,
    k: &S,
    m: u64,
    xi: &AffineRoot<S>,
) -> Result<S> {
    let rs = pi.system();
    let lambda = AffineWeight::lambda0(rs)
        .scale(k)
        .add(&AffineWeight::rho_hat(pi));
    let mxi = xi.to_affine_weight().scale(&S::from_int(m as i64));
    Ok(affine_inner(rs, &lambda, &mxi)? - affine_inner(rs, &mxi, &mxi)? * S::half())
}

/// Affine simple-root coordinates of `lδ - α`: `(l, Π-coordinates of lθ - α)`.
pub fn affine_coordinates<S: Scalar>(
    pi: &SimpleRootSet<S>,
    xi: &AffineRoot<S>,
) -> Option<Vec<i64>> {
    let l = xi.level as i64;
    let finite = &pi.theta().scale_int(l) - &xi.finite;
    let mut coords = vec![l];
    coords.extend(pi.lattice_coordinates(&finite)?);
    Some(coords)
}

/// Whether `ξ` is a primitive element of `Q̂⁺ ∖ Q`.
pub fn is_irr<S: Scalar>(pi: &SimpleRootSet<S>, xi: &AffineRoot<S>) -> bool {
    match affine_coordinates(pi, xi) {
        Some(c) if xi.level >= 1 && c.iter().all(|&x| x >= 0) => {
            c.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
        }
        _ => false,
    }
}

/// `dim ĝ_γ`: one for real roots, `dim h` for `lδ`.
pub fn root_multiplicity<S: Scalar>(rs: &RootSystem<S>, gamma: &AffineRoot<S>) -> Result<u64> {
    if gamma.is_imaginary() {
        Ok(rs.algebra().cartan_dim() as u64)
    } else if rs.is_root(&gamma.finite) {
        Ok(1)
    } else {
        Err(Error::Parameters(format!("{gamma} is not an affine root")))
    }
}

/// `0` followed by the roots of `Δ` in their fixed order.
fn finite_parts<S: Scalar>(rs: &RootSystem<S>) -> impl Iterator<Item = Weight<S>> + '_ {
    std::iter::once(rs.zero()).chain(rs.roots().map(|r| r.weight))
}

/// All `(m, ξ)` in `C(kΛ₀)` with `1 ≤ l ≤ l_max`, `1 ≤ m ≤ m_max`, ordered by
/// `l`, then `m`, then `α` (zero first, then even and odd roots).
pub fn enumerate_c<S: Scalar>(
    pi: &SimpleRootSet<S>,
    k: &S,
    l_max: u64,
    m_max: u64,
) -> Vec<CandidatePair<S>> {
    let rs = pi.system();
    let mut out = Vec::new();
    for l in 1..=l_max {
        let xis: Vec<AffineRoot<S>> = finite_parts(rs)
            .map(|a| AffineRoot::new(rs, l, a).expect("roots of the system"))
            .filter(|xi| is_irr(pi, xi))
            .collect();
        for m in 1..=m_max {
            for xi in &xis {
                if casimir_value(pi, k, m, xi).is_zero() {
                    out.push(CandidatePair { m, xi: xi.clone() });
                }
            }
        }
    }
    out
}

/// `(-1)^{(r+1)p(γ)}`.
fn parity_sign(r: u64, parity: Parity) -> i64 {
    if parity.is_odd() && r.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// `a_{m,ξ} = Σ_γ Σ_r (-1)^{(r+1)p(γ)} dim ĝ_γ · k_Π(mξ - rγ)`, keeping only the
/// terms with `r·l_γ = m·l_ξ`, since `k_Π` vanishes off the finite lattice.
pub fn a_coeff<S: Scalar>(kpi: &KPi<S>, m: u64, xi: &AffineRoot<S>) -> Result<i64> {
    let pi = kpi.base();
    let rs = pi.system();
    rs.check(&xi.finite)?;
    let total = m * xi.level;
    let mut terms = Vec::new();
    for r in (1..=total).filter(|r| total.is_multiple_of(*r)) {
        let l_gamma = total / r;
        for alpha in finite_parts(rs) {
            // mξ - rγ has finite part rα_γ - mα_ξ
            let mut eta = alpha.scale_int(r as i64);
            eta.add_scaled(&xi.finite, &S::from_int(-(m as i64)));
            let Some(coords) = pi.lattice_coordinates(&eta) else {
                continue;
            };
            if coords.iter().any(|&c| c < 0) {
                continue;
            }
            let gamma = AffineRoot::new(rs, l_gamma, alpha)?;
            let weight = parity_sign(r, gamma.parity) * root_multiplicity(rs, &gamma)? as i64;
            terms.push((coords, weight));
        }
    }
    let points: Vec<Vec<i64>> = terms.iter().map(|(c, _)| c.clone()).collect();
    kpi.prefetch(&points)?;
    let mut sum = 0i64;
    for (coords, weight) in &terms {
        sum += weight * kpi.value_at(coords)?;
    }
    Ok(sum)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<S> {
    pub m: u64,
    pub xi: AffineRoot<S>,
    pub a: i64,
}

/// Outcome of a bounded search; `skipped` lists candidates whose coefficient
/// exceeded the expansion budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSearch<S> {
    pub witness: Option<Witness<S>>,
    pub examined: usize,
    pub skipped: Vec<CandidatePair<S>>,
}

/// The first `(m, ξ) ∈ C(kΛ₀)` in enumeration order with `a_{m,ξ} ≠ 0`.
/// Finding none proves nothing about simplicity.
pub fn find_nonzero_a<S: Scalar>(
    kpi: &KPi<S>,
    k: &S,
    l_max: u64,
    m_max: u64,
) -> Result<WitnessSearch<S>> {
    let mut search = WitnessSearch {
        witness: None,
        examined: 0,
        skipped: Vec::new(),
    };
    for cand in enumerate_c(kpi.base(), k, l_max, m_max) {
        search.examined += 1;
        match a_coeff(kpi, cand.m, &cand.xi) {
            Ok(0) => {}
            Ok(a) => {
                search.witness = Some(Witness {
                    m: cand.m,
                    xi: cand.xi,
                    a,
                });
                return Ok(search);
            }
            Err(Error::ExpansionBudget { .. }) => search.skipped.push(cand),
            Err(e) => return Err(e),
        }
    }
    Ok(search)
}
