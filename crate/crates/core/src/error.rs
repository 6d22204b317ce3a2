//! Error type shared across the crate.

use crate::vanishing::FeasibilityWindow;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A discriminant needing ch1^2 was requested on a character without it.
    #[error("character carries no self-intersection ch1^2")]
    MissingSelfIntersection,

    /// Surface invariants are inconsistent (e.g. quasi-elliptic in characteristic zero).
    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    /// A slice parameter outside the open interval (0, 1).
    #[error("beta must satisfy 0 < beta < 1")]
    BetaOutOfRange,

    /// The feasibility window at the requested slice is empty.
    #[error("no certificate: feasibility window at beta = {} is empty", .0.beta)]
    NoCertificate(FeasibilityWindow),

    /// A wall was requested between classes that do not span one.
    #[error("degenerate input: zero class passed to wall computation")]
    DegenerateInput,

    /// A hypothesis of the chamber bound (positive rank, positive twisted degree) fails.
    #[error("hypothesis violated: positive rank and positive twisted degree required")]
    HypothesisViolated,

    /// A destabilizer search larger than the configured cap was requested.
    #[error("search space of {requested} classes exceeds cap of {cap}")]
    BoundsTooLarge { requested: u128, cap: u128 },

    /// A constructor argument breaks a type invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A string failed to parse as a rational number.
    #[error("cannot parse {0:?} as a rational p/q")]
    ParseRational(String),
}
