use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error(
        "dimension mismatch: expected ({expected_eps}|{expected_del}), got ({got_eps}|{got_del})"
    )]
    Dimension {
        expected_eps: usize,
        expected_del: usize,
        got_eps: usize,
        got_del: usize,
    },

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("not a base: {0}")]
    NotABase(String),

    #[error("weight {0} is not in the rational span of the simple roots")]
    NotInLattice(String),

    #[error("no maximal isotropic subset in the simple roots")]
    MissingIsotropicSubset,

    #[error("Weyl group enumeration limit exceeded: rank {rank} > limit {limit}")]
    EnumerationLimit { rank: usize, limit: usize },

    #[error("expansion budget exceeded: {points} lattice points > budget {budget}")]
    ExpansionBudget { points: u128, budget: u128 },

    #[error("undetermined: {0}")]
    Undetermined(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
