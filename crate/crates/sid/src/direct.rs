//! Shortcut solver for tables with visible independence or determinism.
//!
//! Two structural facts pin the redundancy without any coarsening search:
//!
//! - a pair with zero mutual information pins `red = 0`, because redundancy
//!   is bounded by every pairwise mutual information;
//! - a deterministic pair, H(Xi | Xj) = 0, makes Xi itself the common part
//!   of (Xi, Xj), pinning `red = I(Xk; Xi)` for the remaining variable Xk.
//!
//! When several facts apply they must pin the same value; by the data
//! processing inequality they always do on exact tables, so a disagreement
//! beyond tolerance reports the conflicting pair instead of guessing.
//! A table with neither structure yields `Ok(None)` and the caller falls
//! back to a full solver.

use crate::atoms::{AtomSet, Method};
use crate::error::{Error, Result};
use crate::shannon;
use crate::table::JointTable;

/// Attempts the direct read-off with the default tolerance. See
/// [`try_direct_with_tolerance`].
pub fn try_direct(table: &JointTable) -> Result<Option<AtomSet>> {
    try_direct_with_tolerance(table, crate::DEFAULT_TOLERANCE)
}

/// Attempts to solve the atom set from independence and determinism
/// structure alone.
///
/// Returns `Ok(None)` when no pair has zero mutual information and no
/// variable is a function of another, within `tol`. Zero-information pins
/// take precedence for the reported value (the redundancy is then exactly 0
/// rather than carrying float dust from an entropy difference).
///
/// # Errors
/// `NotThreeVariables`, `InconsistentZeros` when two structural facts pin
/// redundancies further than `tol` apart, plus anything
/// [`crate::atoms::atoms_from_redundancy_with_tolerance`] raises.
pub fn try_direct_with_tolerance(table: &JointTable, tol: f64) -> Result<Option<AtomSet>> {
    let names = table.variable_names();
    if names.len() != 3 {
        return Err(Error::NotThreeVariables { got: names.len() });
    }
    let mut zero_mi_pin = false;
    let mut pins: Vec<f64> = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mi = shannon::mutual_information(table, &[names[i]], &[names[j]])?;
            if mi.abs() <= tol {
                zero_mi_pin = true;
                pins.push(0.0);
            }
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let ce = shannon::conditional_entropy(table, &[names[i]], &[names[j]])?;
            if ce.abs() <= tol {
                let k = (0..3).find(|&k| k != i && k != j).unwrap();
                pins.push(shannon::mutual_information(
                    table,
                    &[names[k]],
                    &[names[i]],
                )?);
            }
        }
    }
    if pins.is_empty() {
        return Ok(None);
    }
    for value in &pins[1..] {
        if (value - pins[0]).abs() > tol {
            return Err(Error::InconsistentZeros {
                a: pins[0],
                b: *value,
            });
        }
    }
    let red = if zero_mi_pin { 0.0 } else { pins[0] };
    let mut atoms = crate::atoms::atoms_from_redundancy_with_tolerance(table, red, tol)?;
    atoms.method = Method::Direct;
    Ok(Some(atoms))
}
