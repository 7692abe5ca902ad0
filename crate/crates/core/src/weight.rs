//! Weights in the ε/δ coordinate basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

/// `Σ cᵢ εᵢ + Σ dⱼ δⱼ` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<S> {
    pub eps: Vec<S>,
    pub del: Vec<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root<S> {
    pub weight: Weight<S>,
    pub parity: Parity,
}

impl<S: Scalar> Weight<S> {
    pub fn zero(eps_count: usize, del_count: usize) -> Self {
        Weight {
            eps: vec![S::zero(); eps_count],
            del: vec![S::zero(); del_count],
        }
    }

    /// `εᵢ` with a 1-based index.
    pub fn eps_unit(eps_count: usize, del_count: usize, i: usize) -> Self {
        let mut w = Self::zero(eps_count, del_count);
        w.eps[i - 1] = S::one();
        w
    }

    /// `δⱼ` with a 1-based index.
    pub fn del_unit(eps_count: usize, del_count: usize, j: usize) -> Self {
        let mut w = Self::zero(eps_count, del_count);
        w.del[j - 1] = S::one();
        w
    }

    pub fn from_ints(eps: &[i64], del: &[i64]) -> Self {
        Weight {
            eps: eps.iter().map(|&c| S::from_int(c)).collect(),
            del: del.iter().map(|&c| S::from_int(c)).collect(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.eps.len(), self.del.len())
    }

    pub fn check_dims(&self, eps_count: usize, del_count: usize) -> Result<()> {
        if self.dims() == (eps_count, del_count) {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected_eps: eps_count,
                expected_del: del_count,
                got_eps: self.eps.len(),
                got_del: self.del.len(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().all(|c| c.is_zero())
    }

    /// All coordinates, ε first.
    pub fn coords(&self) -> impl Iterator<Item = &S> + '_ {
        self.eps.iter().chain(self.del.iter())
    }

    pub fn coord(&self, idx: usize) -> &S {
        if idx < self.eps.len() {
            &self.eps[idx]
        } else {
            &self.del[idx - self.eps.len()]
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Weight {
            eps: self.eps.iter().map(|x| x.clone() * c.clone()).collect(),
            del: self.del.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&S::from_int(c))
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        debug_assert_eq!(self.dims(), other.dims());
        for (a, b) in self.eps.iter_mut().zip(&other.eps) {
            *a = a.clone() + b.clone() * c.clone();
        }
        for (a, b) in self.del.iter_mut().zip(&other.del) {
            *a = a.clone() + b.clone() * c.clone();
        }
    }

    pub fn sum_of_coords(&self) -> S {
        self.coords().fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// Parses strings such as `"e1-e2"`, `"2d1"`, `"1/2e1+d2"` or `"0"`.
    pub fn parse(text: &str, eps_count: usize, del_count: usize) -> Result<Self> {
        let bad = |why: &str| Error::Parameters(format!("cannot parse weight {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero(eps_count, del_count);
        if compact == "0" {
            return Ok(out);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let pos = body
                .find(['e', 'd'])
                .ok_or_else(|| bad("term without e/d basis symbol"))?;
            let coef = if pos == 0 {
                S::one()
            } else {
                parse_scalar::<S>(&body[..pos]).ok_or_else(|| bad("bad coefficient"))?
            };
            let coef = if sign < 0 { -coef } else { coef };
            let index: usize = body[pos + 1..].parse().map_err(|_| bad("bad index"))?;
            let slot = match &body[pos..pos + 1] {
                "e" if (1..=eps_count).contains(&index) => &mut out.eps[index - 1],
                "d" if (1..=del_count).contains(&index) => &mut out.del[index - 1],
                _ => return Err(bad("index out of range")),
            };
            *slot = slot.clone() + coef;
        }
        Ok(out)
    }
}

impl<S: Scalar> Add for &Weight<S> {
    type Output = Weight<S>;

    fn add(self, rhs: &Weight<S>) -> Weight<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> Sub for &Weight<S> {
    type Output = Weight<S>;

    fn sub(self, rhs: &Weight<S>) -> Weight<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar> Add for Weight<S> {
    type Output = Weight<S>;

    fn add(self, rhs: Weight<S>) -> Weight<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Weight<S> {
    type Output = Weight<S>;

    fn sub(self, rhs: Weight<S>) -> Weight<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Weight<S> {
    type Output = Weight<S>;

    fn neg(self) -> Weight<S> {
        Weight {
            eps: self.eps.iter().map(|x| -x.clone()).collect(),
            del: self.del.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for Weight<S> {
    type Output = Weight<S>;

    fn neg(self) -> Weight<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let named = self
            .eps
            .iter()
            .enumerate()
            .map(|(i, c)| (c, 'e', i + 1))
            .chain(self.del.iter().enumerate().map(|(j, c)| (c, 'd', j + 1)));
        for (c, sym, idx) in named {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{sym}{idx}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
