//! Truncated expansions of the Weyl denominator over the positive root lattice.

mod direct;
mod kw;
mod series;

pub use direct::{denominator_direct, KPi, DEFAULT_EXPANSION_BUDGET};
pub use kw::{denominator_kw, kw_coefficient, kw_exponent, kw_representations, kw_support, t_set};
pub use series::{series_mul, FormalSeries, LatticePoint};
