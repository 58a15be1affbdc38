use std::io;

use thiserror::Error;

use crate::Family;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("rank {n} is below the minimum {min} for family {family}")]
    RankBelowMinimum { family: Family, n: usize, min: usize },

    #[error("family {0} has no Coxeter complex construction here (only C and D)")]
    UnsupportedFamily(Family),

    #[error("invalid vertex {label} for family {family} of rank {n}")]
    InvalidVertex {
        family: Family,
        n: usize,
        label: String,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("complex is not pure")]
    NotPure,

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("malformed cache file {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
