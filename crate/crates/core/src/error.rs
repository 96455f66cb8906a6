use thiserror::Error;

use crate::subset::SubsetJ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} {input:?}: {reason}")]
    Syntax {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("rank out of range for {name}{}", suggestion.as_ref().map(|s| format!(" (use {s} instead)")).unwrap_or_default())]
    RankOutOfRange {
        name: String,
        suggestion: Option<String>,
    },

    #[error("dihedral type {name} is only supported as a standalone diagram")]
    DihedralInProduct { name: String },

    #[error("node {label} is not in a diagram of rank {rank}")]
    InvalidNode { label: usize, rank: usize },

    #[error("diagrams of rank {0} or more are not supported")]
    RankTooLarge(usize),

    #[error("elements belong to different groups ({left} vs {right})")]
    DiagramMismatch { left: String, right: String },

    #[error("operation requires an irreducible diagram, got {0}")]
    Reducible(String),

    #[error("{0} has no root system here")]
    Unsupported(String),

    #[error("element with left descent set {descents} is not the longest element of a parabolic subgroup")]
    NotALongestElement { descents: SubsetJ },

    #[error("inductive computation of {j1} * {j2} gave {inductive}, direct computation gave {direct}")]
    InternalMismatch {
        j1: SubsetJ,
        j2: SubsetJ,
        inductive: SubsetJ,
        direct: SubsetJ,
    },

    #[error("rank {rank} exceeds the table rank bound {bound}")]
    RankBoundExceeded { rank: usize, bound: usize },

    #[error("group of order {order} exceeds the enumeration guard {guard}")]
    GuardExceeded { order: u128, guard: u128 },

    #[error("set of products has no unique maximal element")]
    NoUniqueMax,

    #[error("set of products has no unique minimal element")]
    NoUniqueMin,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
