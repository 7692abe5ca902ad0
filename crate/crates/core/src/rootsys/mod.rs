//! Root systems of the basic classical superalgebras `A(m-1|n-1)`,
//! `B(m|n)`, `B(n|m)`, `D(m|n)` and `D(n|m)` in the ε/δ basis.
//!
//! The form is normalized so that a long root of `Δ^#` has squared norm 2.
//! For the δ-dominant orientations `B(n|m) = osp(2n+1|2m)` and
//! `D(n|m) = osp(2n|2m)` with `m ≥ n`, the `m` ε-coordinates carry the
//! symplectic part and the form is `(εᵢ,εⱼ) = ½δᵢⱼ`, `(δᵢ,δⱼ) = -½δᵢⱼ`.

mod base;
mod table;
mod weyl;

pub use base::{custom_simple_roots, SimpleRootSet};
pub use table::{distinguished_simple_roots, table1_simple_roots, LevelSign};
pub use weyl::{
    weyl_sharp_elements, weyl_sharp_elements_with_limit, SignedPermutation, DEFAULT_WEYL_RANK_LIMIT,
};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::weight::{Parity, Root, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
}

/// Which side of the superalgebra the long roots of `Δ^#` live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `B(m|n)`, `D(m|n)` with `m ≥ n+1`, and all of type A.
    EpsDominant,
    /// `B(n|m)`, `D(n|m)` with `m ≥ n`.
    DeltaDominant,
}

/// A supported superalgebra: `eps_count` ε-coordinates, `del_count` δ-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Superalgebra {
    family: Family,
    eps_count: usize,
    del_count: usize,
    orientation: Orientation,
}

impl Superalgebra {
    pub fn new(
        family: Family,
        eps_count: usize,
        del_count: usize,
        orientation: Orientation,
    ) -> Result<Self> {
        let (m, n) = (eps_count, del_count);
        let ok = n >= 1
            && match (family, orientation) {
                (Family::A, Orientation::EpsDominant) => m >= n && m >= 2,
                (Family::A, Orientation::DeltaDominant) => false,
                (Family::B, Orientation::EpsDominant) => m > n,
                (Family::D, Orientation::EpsDominant) => m > n && m >= 2,
                (_, Orientation::DeltaDominant) => m >= n,
            };
        if !ok {
            return Err(Error::Parameters(format!(
                "{family:?} {orientation:?} with eps_count={m}, del_count={n}"
            )));
        }
        Ok(Superalgebra {
            family,
            eps_count,
            del_count,
            orientation,
        })
    }

    /// `A(m-1|n-1) = sl(m|n)`, `m ≥ n`.
    pub fn sl(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::A, m, n, Orientation::EpsDominant)
    }

    /// `B(m|n) = osp(2m+1|2n)`, `m ≥ n+1`.
    pub fn b(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::B, m, n, Orientation::EpsDominant)
    }

    /// `B(n|m) = osp(2n+1|2m)`, `m ≥ n`; `m` is the ε-count.
    pub fn b_delta(n: usize, m: usize) -> Result<Self> {
        Self::new(Family::B, m, n, Orientation::DeltaDominant)
    }

    /// `D(m|n) = osp(2m|2n)`, `m ≥ n+1`.
    pub fn d(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::D, m, n, Orientation::EpsDominant)
    }

    /// `D(n|m) = osp(2n|2m)`, `m ≥ n`; `m` is the ε-count.
    pub fn d_delta(n: usize, m: usize) -> Result<Self> {
        Self::new(Family::D, m, n, Orientation::DeltaDominant)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn eps_count(&self) -> usize {
        self.eps_count
    }

    pub fn del_count(&self) -> usize {
        self.del_count
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Dimension of the Cartan subalgebra.
    pub fn cartan_dim(&self) -> usize {
        match self.family {
            Family::A => self.eps_count + self.del_count - 1,
            _ => self.eps_count + self.del_count,
        }
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.cartan_dim()
    }

    /// Whether W^# is the even-sign-change subgroup of the signed permutations.
    pub(crate) fn sharp_is_type_d(&self) -> bool {
        self.family == Family::D && self.orientation == Orientation::EpsDominant
    }
}

impl fmt::Display for Superalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.eps_count, self.del_count);
        match (self.family, self.orientation) {
            (Family::A, _) => write!(f, "A({}|{})", m - 1, n - 1),
            (fam, Orientation::EpsDominant) => write!(f, "{fam:?}({m}|{n})"),
            (fam, Orientation::DeltaDominant) => write!(f, "{fam:?}({n}|{m})"),
        }
    }
}

impl FromStr for Superalgebra {
    type Err = Error;

    /// `"A(a|b)"` is `sl(a+1|b+1)` (swapped if `a < b`); `"B(a|b)"` and
    /// `"D(a|b)"` are ε-dominant when `a ≥ b+1`, otherwise δ-dominant with
    /// `a` δ-coordinates and `b` ε-coordinates.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parameters(format!("cannot parse algebra {text:?}"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = t.split_at(t.find('(').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once('|').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        match head {
            "A" => {
                let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
                Superalgebra::sl(hi + 1, lo + 1)
            }
            "B" if a > b => Superalgebra::b(a, b),
            "B" => Superalgebra::b_delta(a, b),
            "D" if a > b => Superalgebra::d(a, b),
            "D" => Superalgebra::d_delta(a, b),
            _ => Err(Error::Unsupported(format!("family {head:?}"))),
        }
    }
}

/// Even roots, odd roots and `Δ^#` with the diagonal form.
#[derive(Clone, Debug)]
pub struct RootSystem<S> {
    algebra: Superalgebra,
    even_roots: Vec<Weight<S>>,
    odd_roots: Vec<Weight<S>>,
    sharp_roots: Vec<Weight<S>>,
    gram_eps: S,
    gram_del: S,
    parity: HashMap<Weight<S>, Parity>,
}

#[derive(Clone, Copy)]
enum Axis {
    E,
    D,
}

struct RootLists<S> {
    m: usize,
    n: usize,
    out: Vec<Weight<S>>,
}

impl<S: Scalar> RootLists<S> {
    fn new(m: usize, n: usize) -> Self {
        RootLists {
            m,
            n,
            out: Vec::new(),
        }
    }

    fn unit(&self, axis: Axis, i: usize) -> Weight<S> {
        match axis {
            Axis::E => Weight::eps_unit(self.m, self.n, i),
            Axis::D => Weight::del_unit(self.m, self.n, i),
        }
    }

    fn count(&self, axis: Axis) -> usize {
        match axis {
            Axis::E => self.m,
            Axis::D => self.n,
        }
    }

    /// `±(xᵢ - xⱼ)` for i < j.
    fn differences(mut self, axis: Axis) -> Self {
        let k = self.count(axis);
        for i in 1..=k {
            for j in i + 1..=k {
                let r = &self.unit(axis, i) - &self.unit(axis, j);
                self.out.push(-&r);
                self.out.push(r);
            }
        }
        self
    }

    /// `±xᵢ ± xⱼ` for i < j.
    fn pm_pairs(mut self, axis: Axis) -> Self {
        let k = self.count(axis);
        for i in 1..=k {
            for j in i + 1..=k {
                let (a, b) = (self.unit(axis, i), self.unit(axis, j));
                for r in [&a - &b, &b - &a, &a + &b, -(&a + &b)] {
                    self.out.push(r);
                }
            }
        }
        self
    }

    /// `±c·xᵢ`.
    fn singles(mut self, axis: Axis, c: i64) -> Self {
        for i in 1..=self.count(axis) {
            let r = self.unit(axis, i).scale_int(c);
            self.out.push(r.clone());
            self.out.push(-r);
        }
        self
    }

    /// `±εᵢ ± δⱼ`, or only `±(εᵢ - δⱼ)` when `diff_only`.
    fn mixed(mut self, diff_only: bool) -> Self {
        for i in 1..=self.m {
            for j in 1..=self.n {
                let (e, d) = (self.unit(Axis::E, i), self.unit(Axis::D, j));
                let r = &e - &d;
                self.out.push(r.clone());
                self.out.push(-r);
                if !diff_only {
                    let s = &e + &d;
                    self.out.push(s.clone());
                    self.out.push(-s);
                }
            }
        }
        self
    }
}

pub fn build_root_system<S: Scalar>(alg: Superalgebra) -> RootSystem<S> {
    use Axis::{D, E};
    let (m, n) = (alg.eps_count, alg.del_count);
    let lists = || RootLists::<S>::new(m, n);
    let (even, odd, sharp) = match (alg.family, alg.orientation) {
        (Family::A, _) => (
            lists().differences(E).differences(D).out,
            lists().mixed(true).out,
            lists().differences(E).out,
        ),
        (Family::B, Orientation::EpsDominant) => (
            lists()
                .pm_pairs(E)
                .singles(E, 1)
                .pm_pairs(D)
                .singles(D, 2)
                .out,
            lists().mixed(false).singles(D, 1).out,
            lists().pm_pairs(E).singles(E, 1).out,
        ),
        (Family::B, Orientation::DeltaDominant) => (
            lists()
                .pm_pairs(E)
                .singles(E, 2)
                .pm_pairs(D)
                .singles(D, 1)
                .out,
            lists().mixed(false).singles(E, 1).out,
            lists().pm_pairs(E).singles(E, 2).out,
        ),
        (Family::D, Orientation::EpsDominant) => (
            lists().pm_pairs(E).pm_pairs(D).singles(D, 2).out,
            lists().mixed(false).out,
            lists().pm_pairs(E).out,
        ),
        (Family::D, Orientation::DeltaDominant) => (
            lists().pm_pairs(E).singles(E, 2).pm_pairs(D).out,
            lists().mixed(false).out,
            lists().pm_pairs(E).singles(E, 2).out,
        ),
    };
    let (gram_eps, gram_del) = match alg.orientation {
        Orientation::EpsDominant => (S::one(), -S::one()),
        Orientation::DeltaDominant => (S::half(), -S::half()),
    };
    let parity = even
        .iter()
        .map(|r| (r.clone(), Parity::Even))
        .chain(odd.iter().map(|r| (r.clone(), Parity::Odd)))
        .collect();
    RootSystem {
        algebra: alg,
        even_roots: even,
        odd_roots: odd,
        sharp_roots: sharp,
        gram_eps,
        gram_del,
        parity,
    }
}

impl<S: Scalar> RootSystem<S> {
    pub fn new(alg: Superalgebra) -> Self {
        build_root_system(alg)
    }

    pub fn algebra(&self) -> Superalgebra {
        self.algebra
    }

    pub fn even_roots(&self) -> &[Weight<S>] {
        &self.even_roots
    }

    pub fn odd_roots(&self) -> &[Weight<S>] {
        &self.odd_roots
    }

    pub fn sharp_roots(&self) -> &[Weight<S>] {
        &self.sharp_roots
    }

    pub fn gram_eps(&self) -> &S {
        &self.gram_eps
    }

    pub fn gram_del(&self) -> &S {
        &self.gram_del
    }

    /// Even roots followed by odd roots.
    pub fn roots(&self) -> impl Iterator<Item = Root<S>> + '_ {
        self.even_roots
            .iter()
            .map(|w| Root {
                weight: w.clone(),
                parity: Parity::Even,
            })
            .chain(self.odd_roots.iter().map(|w| Root {
                weight: w.clone(),
                parity: Parity::Odd,
            }))
    }

    pub fn root_count(&self) -> usize {
        self.even_roots.len() + self.odd_roots.len()
    }

    pub fn parity_of(&self, w: &Weight<S>) -> Option<Parity> {
        self.parity.get(w).copied()
    }

    pub fn is_root(&self, w: &Weight<S>) -> bool {
        self.parity.contains_key(w)
    }

    pub fn zero(&self) -> Weight<S> {
        Weight::zero(self.algebra.eps_count, self.algebra.del_count)
    }

    pub fn check(&self, x: &Weight<S>) -> Result<()> {
        x.check_dims(self.algebra.eps_count, self.algebra.del_count)
    }

    pub fn bilinear(&self, x: &Weight<S>, y: &Weight<S>) -> Result<S> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.form(x, y))
    }

    /// Unchecked form evaluation; dimensions must match.
    pub(crate) fn form(&self, x: &Weight<S>, y: &Weight<S>) -> S {
        let dot = |a: &[S], b: &[S]| {
            a.iter()
                .zip(b)
                .fold(S::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
        };
        self.gram_eps.clone() * dot(&x.eps, &y.eps) + self.gram_del.clone() * dot(&x.del, &y.del)
    }

    pub(crate) fn norm(&self, x: &Weight<S>) -> S {
        self.form(x, x)
    }

    /// Rank of the lattice spanned by the roots.
    pub fn lattice_rank(&self) -> usize {
        let rows: Vec<Vec<S>> = self
            .even_roots
            .iter()
            .chain(&self.odd_roots)
            .map(|w| w.coords().cloned().collect())
            .collect();
        linalg::rank(&rows)
    }

    /// Odd roots with zero norm whose first nonzero coordinate is positive.
    pub(crate) fn isotropic_representatives(&self) -> Vec<Weight<S>> {
        self.odd_roots
            .iter()
            .filter(|r| self.norm(r).is_zero())
            .filter(|r| {
                r.coords()
                    .find(|c| !c.is_zero())
                    .is_some_and(|c| c.is_positive())
            })
            .cloned()
            .collect()
    }

    /// Size of a largest set of linearly independent, pairwise orthogonal isotropic roots.
    pub fn defect(&self) -> usize {
        let iso = self.isotropic_representatives();
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.isotropic_search(&iso, 0, &mut current, &mut best);
        best.len()
    }

    /// One maximal pairwise orthogonal isotropic root set, found by exhaustive search.
    pub fn maximal_isotropic_set(&self) -> Vec<Weight<S>> {
        let iso = self.isotropic_representatives();
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.isotropic_search(&iso, 0, &mut current, &mut best);
        best.into_iter().map(|i| iso[i].clone()).collect()
    }

    fn isotropic_search(
        &self,
        iso: &[Weight<S>],
        start: usize,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for i in start..iso.len() {
            if current.len() + (iso.len() - i) <= best.len() {
                return;
            }
            if current
                .iter()
                .all(|&j| self.form(&iso[i], &iso[j]).is_zero())
            {
                current.push(i);
                let rows: Vec<Vec<S>> = current
                    .iter()
                    .map(|&j| iso[j].coords().cloned().collect())
                    .collect();
                if linalg::rank(&rows) == current.len() {
                    self.isotropic_search(iso, i + 1, current, best);
                }
                current.pop();
            }
        }
    }
}
