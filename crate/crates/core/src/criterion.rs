//! Closed-form simplicity decisions for vacuum modules and minimal W-algebras.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::rootsys::{
    distinguished_simple_roots, table1_simple_roots, LevelSign, RootSystem, Superalgebra,
};
use crate::scalar::{parse_scalar, Scalar};
use crate::weight::Weight;

/// A level `k ∈ C`: either an exact rational or a token for `k ∉ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Level<S> {
    Rational(S),
    Irrational,
}

impl<S: Scalar> Level<S> {
    pub fn rational(&self) -> Option<&S> {
        match self {
            Level::Rational(k) => Some(k),
            Level::Irrational => None,
        }
    }
}

impl<S: Scalar> FromStr for Level<S> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("irrational") {
            return Ok(Level::Irrational);
        }
        parse_scalar(t)
            .map(Level::Rational)
            .ok_or_else(|| Error::Parameters(format!("cannot parse level {text:?}")))
    }
}

impl<S: Scalar> fmt::Display for Level<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Rational(k) => write!(f, "{k}"),
            Level::Irrational => f.write_str("irrational"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason<S> {
    /// `k ∉ Q`, so no ratio can be rational.
    Irrational,
    /// `k = -h^∨`; every even root gives ratio 0.
    CriticalLevel { root: Weight<S> },
    /// An even root with `(k+h^∨)/(α,α) ∈ Q≥0`.
    Witness { root: Weight<S>, ratio: S },
    /// Every even root gives a negative ratio.
    NoEvenRoot,
    /// Rational level for an algebra of defect at least two.
    RationalLevel { defect: usize },
    /// The ratio lies in the exceptional set `{1/(2m)}`.
    Exceptional { ratio: S, m: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision<S> {
    pub simple: bool,
    pub reason: Reason<S>,
}

impl<S: Scalar> Decision<S> {
    pub fn is_critical(&self) -> bool {
        matches!(self.reason, Reason::CriticalLevel { .. })
    }

    /// The even root and ratio backing a "not simple" answer, if any.
    pub fn witness(&self) -> Option<(&Weight<S>, S)> {
        match &self.reason {
            Reason::Witness { root, ratio } => Some((root, ratio.clone())),
            Reason::CriticalLevel { root } => Some((root, S::zero())),
            _ => None,
        }
    }
}

/// `h^∨ = (ρ,θ) + ½(θ,θ)` from a distinguished base; defined for `n = 1` too.
pub fn dual_coxeter_number<S: Scalar>(alg: Superalgebra) -> Result<S> {
    Ok(distinguished_simple_roots::<S>(alg)?.dual_coxeter())
}

/// First even root (in root-list order) with `(k+h)/B(α,α) ∈ Q≥0`, where `B = scale·(·,·)`.
fn ratio_decision<S: Scalar>(rs: &RootSystem<S>, shifted: &S, scale: &S) -> Decision<S> {
    for root in rs.even_roots() {
        let norm = rs.norm(root) * scale.clone();
        if norm.is_zero() {
            continue;
        }
        let ratio = shifted.clone() / norm;
        if !ratio.is_negative() {
            let root = root.clone();
            let reason = if shifted.is_zero() {
                Reason::CriticalLevel { root }
            } else {
                Reason::Witness { root, ratio }
            };
            return Decision {
                simple: false,
                reason,
            };
        }
    }
    Decision {
        simple: true,
        reason: Reason::NoEvenRoot,
    }
}

/// Per-algebra data behind the decisions: the root system, `h^∨` and the defect.
#[derive(Clone, Debug)]
pub struct Criterion<S> {
    alg: Superalgebra,
    rs: RootSystem<S>,
    h: S,
    defect: OnceLock<usize>,
}

impl<S: Scalar> Criterion<S> {
    pub fn new(alg: Superalgebra) -> Result<Self> {
        let h = dual_coxeter_number::<S>(alg)?;
        Ok(Criterion {
            alg,
            rs: RootSystem::new(alg),
            h,
            defect: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> Superalgebra {
        self.alg
    }

    pub fn dual_coxeter(&self) -> &S {
        &self.h
    }

    pub fn defect(&self) -> usize {
        *self.defect.get_or_init(|| self.rs.defect())
    }

    /// `V^k` is not simple iff `(k+h^∨)/(α,α) ∈ Q≥0` for some even root `α`.
    pub fn decide(&self, k: &Level<S>) -> Decision<S> {
        match k {
            Level::Irrational => Decision {
                simple: true,
                reason: Reason::Irrational,
            },
            Level::Rational(k) => {
                ratio_decision(&self.rs, &(k.clone() + self.h.clone()), &S::one())
            }
        }
    }

    /// For defect at least two, `V^k` is simple iff `k` is irrational.
    pub fn defect_two(&self, k: &Level<S>) -> Result<Decision<S>> {
        let defect = self.defect();
        if defect < 2 {
            return Err(Error::Parameters(format!(
                "{} has defect {defect} < 2",
                self.alg
            )));
        }
        Ok(match k {
            Level::Irrational => Decision {
                simple: true,
                reason: Reason::Irrational,
            },
            Level::Rational(_) => Decision {
                simple: false,
                reason: Reason::RationalLevel { defect },
            },
        })
    }
}

pub fn is_vacuum_simple<S: Scalar>(alg: Superalgebra, k: &Level<S>) -> Result<Decision<S>> {
    Ok(Criterion::new(alg)?.decide(k))
}

pub fn defect_two_reformulation<S: Scalar>(alg: Superalgebra, k: &Level<S>) -> Result<Decision<S>> {
    Criterion::new(alg)?.defect_two(k)
}

/// Factor `c` with `B = c·(·,·)` and `B(θ,θ) = 2`, `θ` the highest root of the
/// `+` base (or a long root of `Δ^#` when no such base is tabulated).
pub fn w_algebra_form_scale<S: Scalar>(alg: Superalgebra) -> Result<S> {
    let two = S::from_int(2);
    match table1_simple_roots::<S>(alg, LevelSign::Plus) {
        Ok(pi) => {
            let tt = pi.form(pi.theta(), pi.theta());
            if tt.is_zero() {
                return Err(Error::Internal(format!("{alg}: isotropic highest root")));
            }
            Ok(two / tt)
        }
        Err(Error::Unsupported(_)) => {
            let rs = RootSystem::<S>::new(alg);
            let long = rs
                .sharp_roots()
                .iter()
                .map(|r| rs.norm(r))
                .max()
                .ok_or_else(|| Error::Internal("empty root system".into()))?;
            Ok(two / long)
        }
        Err(e) => Err(e),
    }
}

/// Minimal W-algebra `W^k(g, f_θ)` for `k ∉ Z≥0`: not simple iff
/// `(k+h^∨)/B(α,α) ∈ Q≥0` for some even root, with `B(θ,θ) = 2`.
pub fn w_algebra_simple<S: Scalar>(alg: Superalgebra, k: &Level<S>) -> Result<Decision<S>> {
    if let Level::Rational(k) = k {
        if k.is_integral() && !k.is_negative() {
            return Err(Error::Undetermined(format!(
                "k = {k} is a nonnegative integer; simplicity depends on whether the maximal \
                 submodule of V^k is simple, which is open"
            )));
        }
    }
    let scale = w_algebra_form_scale::<S>(alg)?;
    let h = dual_coxeter_number::<S>(alg)? * scale.clone();
    match k {
        Level::Irrational => Ok(Decision {
            simple: true,
            reason: Reason::Irrational,
        }),
        Level::Rational(k) => {
            let rs = RootSystem::new(alg);
            Ok(ratio_decision(&rs, &(k.clone() + h), &scale))
        }
    }
}

/// Minimal W-algebra of `sl₂` (`h^∨ = 2`, long root norm 2): simple iff
/// `(k+2)/2` is irrational, negative, or equal to `1/(2m)` for some `m ≥ 1`.
pub fn sl2_w_simple<S: Scalar>(k: &Level<S>) -> Decision<S> {
    let Level::Rational(k) = k else {
        return Decision {
            simple: true,
            reason: Reason::Irrational,
        };
    };
    let ratio = (k.clone() + S::from_int(2)) / S::from_int(2);
    let root = Weight {
        eps: vec![S::one(), -S::one()],
        del: Vec::new(),
    };
    if ratio.is_negative() {
        return Decision {
            simple: true,
            reason: Reason::NoEvenRoot,
        };
    }
    if ratio.is_zero() {
        return Decision {
            simple: false,
            reason: Reason::CriticalLevel { root },
        };
    }
    // ratio = 1/(2m) iff 1/(2·ratio) is a positive integer
    let inv = S::one() / (ratio.clone() * S::from_int(2));
    match inv.integer_value() {
        Some(m) if m >= 1 => Decision {
            simple: true,
            reason: Reason::Exceptional { ratio, m },
        },
        _ => Decision {
            simple: false,
            reason: Reason::Witness { root, ratio },
        },
    }
}
