//! The ordered bases used for each sign of `k + h^∨`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{Family, Orientation, RootSystem, SimpleRootSet, Superalgebra};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// Sign of `k + h^∨` selecting a base; `PlusSpecial` is the alternative
/// base of `D(n+2|n)` used when `1/(k+h^∨)` is a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelSign {
    Plus,
    Minus,
    PlusSpecial,
}

impl fmt::Display for LevelSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LevelSign::Plus => "+",
            LevelSign::Minus => "-",
            LevelSign::PlusSpecial => "+special",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    E(usize),
    D(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tail {
    None,
    /// the last chain vector itself
    Short,
    /// `x_{k-1} + x_k`
    Fork,
    /// `2 x_k`
    Double,
}

fn node<S: Scalar>(alg: &Superalgebra, v: Node) -> Weight<S> {
    let (m, n) = (alg.eps_count(), alg.del_count());
    match v {
        Node::E(i) => Weight::eps_unit(m, n, i),
        Node::D(j) => Weight::del_unit(m, n, j),
    }
}

fn chain_roots<S: Scalar>(alg: &Superalgebra, chain: &[Node], tail: Tail) -> Vec<Weight<S>> {
    let vs: Vec<Weight<S>> = chain.iter().map(|&v| node(alg, v)).collect();
    let mut out: Vec<Weight<S>> = vs.windows(2).map(|p| &p[0] - &p[1]).collect();
    let k = vs.len();
    match tail {
        Tail::None => {}
        Tail::Short => out.push(vs[k - 1].clone()),
        Tail::Fork => out.push(&vs[k - 2] + &vs[k - 1]),
        Tail::Double => out.push(vs[k - 1].scale_int(2)),
    }
    out
}

fn eps_range(from: usize, to: usize) -> impl Iterator<Item = Node> {
    (from..=to).map(Node::E)
}

fn del_range(from: usize, to: usize) -> impl Iterator<Item = Node> {
    (from..=to).map(Node::D)
}

/// ε₁, δ₁, ε₂, δ₂, …, εₙ, δₙ
fn interleaved(n: usize) -> Vec<Node> {
    (1..=n).flat_map(|i| [Node::E(i), Node::D(i)]).collect()
}

fn table1_chain(alg: &Superalgebra, sign: LevelSign) -> Option<(Vec<Node>, Tail)> {
    use Node::{D, E};
    let (m, n) = (alg.eps_count(), alg.del_count());
    let mut c = Vec::new();
    let tail = match (alg.family(), alg.orientation(), sign) {
        (Family::A, _, LevelSign::Plus) => {
            c.extend([E(1), D(1)]);
            for j in 2..=n {
                c.extend([D(j), E(j)]);
            }
            c.extend(eps_range(n + 1, m));
            Tail::None
        }
        (Family::A, _, LevelSign::Minus) => {
            c.push(D(1));
            c.extend(eps_range(1, m - n + 2));
            for j in 2..=n {
                c.push(D(j));
                if j < n {
                    c.push(E(m - n + 1 + j));
                }
            }
            Tail::None
        }
        (Family::B, Orientation::EpsDominant, LevelSign::Plus) => {
            c.extend([E(1), E(2), D(1)]);
            for j in 2..=n {
                c.extend([E(j + 1), D(j)]);
            }
            c.extend(eps_range(n + 2, m));
            Tail::Short
        }
        (Family::B, _, LevelSign::Minus) => {
            c.extend(del_range(1, n));
            c.extend(eps_range(1, m));
            Tail::Short
        }
        (Family::B, Orientation::DeltaDominant, LevelSign::Plus) => {
            c.extend(interleaved(n));
            c.extend(eps_range(n + 1, m));
            Tail::Short
        }
        (Family::D, Orientation::EpsDominant, LevelSign::Plus) if m == n + 1 => {
            c.extend([E(1), E(2), D(1), D(2)]);
            for j in 3..=n {
                c.extend([E(j), D(j)]);
            }
            c.push(E(n + 1));
            Tail::Fork
        }
        (Family::D, Orientation::EpsDominant, LevelSign::Plus) => {
            c.extend([E(1), E(2)]);
            for j in 1..=n {
                c.extend([D(j), E(j + 2)]);
            }
            c.extend(eps_range(n + 3, m));
            Tail::Fork
        }
        (Family::D, Orientation::EpsDominant, LevelSign::PlusSpecial) if m == n + 2 => {
            c.extend(interleaved(n));
            c.extend([E(n + 1), E(n + 2)]);
            Tail::Fork
        }
        (Family::D, Orientation::EpsDominant, LevelSign::Minus) => {
            for j in 1..=n {
                c.extend([D(j), E(j)]);
            }
            c.extend(eps_range(n + 1, m));
            Tail::Fork
        }
        (Family::D, Orientation::DeltaDominant, LevelSign::Plus) if m == n => {
            c.extend(interleaved(n));
            Tail::Fork
        }
        (Family::D, Orientation::DeltaDominant, LevelSign::Plus) => {
            c.extend(interleaved(n));
            c.extend(eps_range(n + 1, m));
            Tail::Double
        }
        (Family::D, Orientation::DeltaDominant, LevelSign::Minus) => {
            c.extend(del_range(1, n));
            c.extend(eps_range(1, m));
            Tail::Double
        }
        _ => return None,
    };
    Some((c, tail))
}

/// The preferred maximal isotropic subset for the `+` bases, when it lies in the base.
fn preferred_isotropic<S: Scalar>(alg: &Superalgebra, sign: LevelSign) -> Vec<Weight<S>> {
    let n = alg.del_count();
    let pair = |e: usize, d: usize| &node::<S>(alg, Node::E(e)) - &node::<S>(alg, Node::D(d));
    match (alg.family(), alg.orientation(), sign) {
        (Family::A, _, LevelSign::Plus) => std::iter::once(pair(1, 1))
            .chain((2..=n).map(|i| -pair(i, i)))
            .collect(),
        (_, Orientation::EpsDominant, LevelSign::Plus) => (1..=n).map(|i| pair(i + 1, i)).collect(),
        (_, _, LevelSign::Plus | LevelSign::PlusSpecial) => (1..=n).map(|i| pair(i, i)).collect(),
        _ => Vec::new(),
    }
}

/// The base listed for `alg` and the sign of `k + h^∨`. Requires `n ≥ 2`.
pub fn table1_simple_roots<S: Scalar>(
    alg: Superalgebra,
    sign: LevelSign,
) -> Result<SimpleRootSet<S>> {
    if alg.del_count() < 2 {
        return Err(Error::Unsupported(format!(
            "{alg}: tabulated bases need n >= 2"
        )));
    }
    let (chain, tail) = table1_chain(&alg, sign).ok_or_else(|| {
        Error::Unsupported(format!("no tabulated base for {alg} with sign {sign}"))
    })?;
    let roots = chain_roots::<S>(&alg, &chain, tail);
    let base = SimpleRootSet::new(Arc::new(RootSystem::new(alg)), roots)?;
    let preferred = preferred_isotropic::<S>(&alg, sign);
    let contained =
        !preferred.is_empty() && preferred.iter().all(|p| base.weights().any(|w| w == p));
    if contained {
        base.with_isotropic_subset(&preferred)
    } else {
        Ok(base)
    }
}

/// A distinguished base (exactly one odd simple root), defined for every
/// supported algebra including `n = 1`.
pub fn distinguished_simple_roots<S: Scalar>(alg: Superalgebra) -> Result<SimpleRootSet<S>> {
    let (m, n) = (alg.eps_count(), alg.del_count());
    let (chain, tail): (Vec<Node>, Tail) = match (alg.family(), alg.orientation()) {
        (Family::A, _) => (eps_range(1, m).chain(del_range(1, n)).collect(), Tail::None),
        (Family::B, _) => (
            del_range(1, n).chain(eps_range(1, m)).collect(),
            Tail::Short,
        ),
        (Family::D, Orientation::EpsDominant) => {
            (del_range(1, n).chain(eps_range(1, m)).collect(), Tail::Fork)
        }
        (Family::D, Orientation::DeltaDominant) => (
            del_range(1, n).chain(eps_range(1, m)).collect(),
            Tail::Double,
        ),
    };
    let roots = chain_roots::<S>(&alg, &chain, tail);
    SimpleRootSet::new(Arc::new(RootSystem::new(alg)), roots)
}
