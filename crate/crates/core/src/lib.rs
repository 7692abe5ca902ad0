//! Exact computations for vacuum modules over non-twisted affine Lie
//! superalgebras: root systems in the ε/δ basis, truncated Weyl denominator
//! expansions, Jantzen sum coefficients and the rational-level simplicity
//! criterion.
//!
//! Everything is generic over an exact [`Scalar`]; the aliases below fix it
//! to [`Rational`].

pub mod criterion;
pub mod denom;
pub mod error;
pub mod jantzen;
mod linalg;
pub mod rootsys;
pub mod scalar;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use rootsys::{Family, LevelSign, Orientation, SignedPermutation, Superalgebra};
pub use scalar::{parse_scalar, Scalar};
pub use weight::Parity;

pub type Rational = num_rational::Ratio<i64>;
pub type Weight = weight::Weight<Rational>;
pub type Root = weight::Root<Rational>;
pub type RootSystem = rootsys::RootSystem<Rational>;
pub type SimpleRootSet = rootsys::SimpleRootSet<Rational>;
