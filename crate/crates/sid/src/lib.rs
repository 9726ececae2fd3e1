//! System information decomposition for discrete three-variable systems.
//!
//! Classical information theory measures how much three variables share, but
//! not *how* they share it. This crate decomposes the joint entropy of a
//! three-variable system into nonnegative atoms with distinct operational
//! meanings:
//!
//! - **redundant** information, carried identically by all three variables;
//! - **unique** information, shared by one pair but absent from the third
//!   variable (one atom per unordered pair);
//! - **synergistic** information, visible only when variables are read
//!   jointly, as in the parity of two coins;
//! - **external** information, the residual entropy each variable keeps to
//!   itself (one atom per variable).
//!
//! The atoms satisfy exact accounting identities: they sum to the joint
//! entropy (synergy counted twice), reproduce the total correlation, and
//! their redundancy-minus-synergy difference equals the co-information.
//! Every solver in the crate checks those identities and reports residuals.
//!
//! Three routes produce the same atoms:
//!
//! - [`direct::try_direct`] reads atoms off independence and determinism
//!   structure when the table has some (zero pairwise information, or one
//!   variable a function of another);
//! - [`oracle::solve_atoms`] computes redundancy extensionally as the
//!   information the finest common deterministic coarsening of two variables
//!   carries about the third;
//! - [`blocks::synergy_formula`] evaluates synergy pointwise from the block
//!   structure of the table relative to an anchor variable.
//!
//! The [`cases`] module ships a family of XOR-based case studies whose atoms
//! are known exactly; they double as regression anchors for everything above.
//!
//! ```
//! use sid::{cases, oracle};
//!
//! let table = cases::generate_case(2).unwrap();
//! let atoms = oracle::solve_atoms(&table).unwrap();
//! assert!((atoms.red - 1.0).abs() < 1e-9);
//! assert!((atoms.syn - 1.0).abs() < 1e-9);
//! ```
//!
//! All quantities are in bits (`log2`), with the convention `0 log 0 = 0`.
//! Comparisons use [`DEFAULT_TOLERANCE`] unless a `_with_tolerance` variant
//! is called.

pub mod atoms;
pub mod blocks;
pub mod cases;
pub mod direct;
pub mod error;
pub mod oracle;
pub mod shannon;
pub mod table;

pub use atoms::{AtomSet, Method, PairMap, SymmetryAudit, Violation};
pub use blocks::{BlockReport, PositivityVerdict};
pub use error::{Error, Result};
pub use oracle::CommonPart;
pub use shannon::Bits;
pub use table::{JointTable, SampleSet, Variable};

/// Default absolute tolerance, in bits, for identity checks, nonnegativity
/// checks, and cross-method agreement.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
