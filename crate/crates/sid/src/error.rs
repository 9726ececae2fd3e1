//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building tables or solving atoms.
///
/// Construction and lookup failures point at malformed input; the solver
/// variants (`SynergyInconsistent`, `SymmetryViolation`, `InconsistentZeros`,
/// `ZeroDenominator`) flag numerical or structural findings that must surface
/// instead of being clamped away.
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative or non-finite probability {p} for outcome ({outcome})")]
    NegativeProbability { outcome: String, p: f64 },

    #[error("probabilities sum to {sum}, expected 1 within tolerance")]
    SumNotOne { sum: f64 },

    #[error("outcome arity mismatch: expected {expected} symbols, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("no probability entries supplied")]
    EmptyPmf,

    #[error("sample set has no rows")]
    EmptySample,

    #[error("unknown variable {name:?}")]
    UnknownVariable { name: String },

    #[error("duplicate variable name {name:?}")]
    DuplicateVariable { name: String },

    #[error("duplicate symbol {symbol:?} in alphabet of {variable:?}")]
    DuplicateSymbol { variable: String, symbol: String },

    #[error("symbol {symbol:?} not in declared alphabet of {variable:?}")]
    SymbolNotInAlphabet { variable: String, symbol: String },

    #[error("no variables to keep")]
    EmptyKeepSet,

    #[error("conditioning event has zero probability: {variable}={value}")]
    ZeroProbabilityEvidence { variable: String, value: String },

    #[error("grouping blocks do not cover the table: {reason}")]
    NotAPartition { reason: String },

    #[error("composite {name:?} value {symbol:?} arises from distinct component tuples")]
    AmbiguousComposite { name: String, symbol: String },

    #[error("variable sets overlap where disjoint sets are required")]
    OverlappingSets,

    #[error("expected at least {needed} variables, table has {got}")]
    NotEnoughVariables { needed: usize, got: usize },

    #[error("expected exactly 3 variables, table has {got}")]
    NotThreeVariables { got: usize },

    #[error("redundancy {red} outside [0, {max}] (min pairwise mutual information)")]
    RedundancyOutOfRange { red: f64, max: f64 },

    #[error("six synergy evaluations disagree by {spread} bits: {values:?}")]
    SynergyInconsistent { spread: f64, values: Vec<f64> },

    #[error("zero-structure branches disagree: redundancy {a} vs {b}")]
    InconsistentZeros { a: f64, b: f64 },

    #[error("zero denominator in synergy formula at outcome ({outcome})")]
    ZeroDenominator { outcome: String },

    #[error("target variable {name:?} is listed among the sources")]
    TargetInSources { name: String },

    #[error("per-target redundancy values disagree by {spread} bits: {values:?}")]
    SymmetryViolation { spread: f64, values: Vec<f64> },

    #[error("case number must be 1..=4, got {got}")]
    InvalidCaseNumber { got: u32 },

    #[error("unknown fixture {name:?}")]
    UnknownFixture { name: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("direct method does not apply: no independent pair and no deterministic pair")]
    DirectNotApplicable,
}
