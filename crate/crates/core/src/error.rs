//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {gen} is not defined for {kind}")]
    InvalidGenerator { kind: String, gen: String },

    #[error("mode {mode} is not valid for {kind}/{sector}")]
    InvalidMode {
        kind: String,
        sector: String,
        mode: String,
    },

    #[error("generator {gen} is not in the zero-mode action set of this family")]
    NotZeroModeGenerator { gen: String },

    #[error("weight t = {t} lies outside the weight support of the family")]
    OutsideSupport { t: String },

    #[error("parity {parity} is inconsistent with the family parity assignment at t = {t}")]
    InconsistentParity { t: String, parity: u8 },

    #[error("casimir parameter kind does not match the algebra/sector")]
    ParamMismatch,

    #[error(
        "shapovalov precondition violated: nu = {nu} is not above the maximal solution {mu_max}"
    )]
    ShapovalovPrecondition { nu: String, mu_max: String },

    #[error("series inversion requires a nonzero leading coefficient")]
    NonInvertibleSeries,

    #[error("coefficient at exponent {exp} lies beyond the series truncation")]
    BeyondTruncation { exp: String },

    #[error("invalid admissible-level data: {0}")]
    InvalidLevel(String),

    #[error("invalid minimal-model label: {0}")]
    InvalidLabel(String),

    #[error("level is at the critical value; Sugawara data undefined")]
    CriticalLevel,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
