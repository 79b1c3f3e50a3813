//! Finite Coxeter groups: matrices, exact root systems, enumeration in
//! ShortLex order, descent sets and Bruhat order.

mod bruhat;
mod group;
mod matrix;
mod roots;

pub use bruhat::{bruhat_leq, BruhatIntervals};
pub(crate) use bruhat::iter_bits;
pub use group::{build_group, build_group_with_limit, ElementId, GroupTable, DEFAULT_MAX_ORDER};
pub use matrix::{CoxeterMatrix, INFINITE_LABEL, MAX_RANK};
pub use roots::{RootSystem, MAX_POSITIVE_ROOTS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("Coxeter group is infinite")]
    InfiniteType,
    #[error("rank {rank} exceeds the supported bound {limit}")]
    RankTooLarge { rank: usize, limit: usize },
    #[error("group order exceeds the configured limit {limit}")]
    GroupTooLarge { limit: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown group type {0:?}")]
    UnknownType(String),
    #[error("cannot parse Coxeter matrix: {0}")]
    Parse(String),
    #[error("generator {generator} out of range for rank {rank}")]
    BadGenerator { generator: usize, rank: usize },
}

/// The unique element of maximal length.
pub fn longest_element(g: &GroupTable) -> ElementId {
    g.longest()
}
