//! Shannon measures over variable sets of a [`JointTable`].
//!
//! Arguments are sets of variable names: duplicates within one argument are
//! collapsed, and marginals are always taken in the table's variable order,
//! so every measure is exactly invariant under argument reordering (not just
//! up to rounding).
//!
//! All results are in bits, with `0 log 0 = 0`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::table::JointTable;

/// An information quantity in bits.
pub type Bits = f64;

/// Sorted, deduplicated variable indices for one argument set.
fn index_set(table: &JointTable, names: &[&str]) -> Result<Vec<usize>> {
    let mut set = BTreeSet::new();
    for name in names {
        set.insert(table.index_of(name)?);
    }
    Ok(set.into_iter().collect())
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|i| !b.contains(i))
}

/// Entropy of the marginal over already-resolved indices (sorted, deduped).
fn entropy_of(table: &JointTable, indices: &[usize]) -> Bits {
    table
        .marginal(indices)
        .values()
        .map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 })
        .sum()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = a.iter().copied().collect();
    set.extend(b.iter().copied());
    set.into_iter().collect()
}

/// Joint entropy H(over) of a set of variables.
///
/// # Errors
/// `EmptyKeepSet` for an empty set, `UnknownVariable`.
pub fn entropy(table: &JointTable, over: &[&str]) -> Result<Bits> {
    let indices = index_set(table, over)?;
    if indices.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    Ok(entropy_of(table, &indices))
}

/// Conditional entropy H(of | given) = H(of, given) - H(given).
///
/// The two sets may overlap; shared variables contribute nothing, so in
/// particular H(X | X) = 0 exactly. An empty `given` reduces to [`entropy`].
pub fn conditional_entropy(table: &JointTable, of: &[&str], given: &[&str]) -> Result<Bits> {
    let of_set = index_set(table, of)?;
    if of_set.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let given_set = index_set(table, given)?;
    if given_set.is_empty() {
        return Ok(entropy_of(table, &of_set));
    }
    let joint = union(&of_set, &given_set);
    Ok(entropy_of(table, &joint) - entropy_of(table, &given_set))
}

/// Mutual information I(a; b) = H(a) + H(b) - H(a, b).
///
/// # Errors
/// `OverlappingSets` if the two sets share a variable, `EmptyKeepSet`,
/// `UnknownVariable`.
pub fn mutual_information(table: &JointTable, a: &[&str], b: &[&str]) -> Result<Bits> {
    let a_set = index_set(table, a)?;
    let b_set = index_set(table, b)?;
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    if !disjoint(&a_set, &b_set) {
        return Err(Error::OverlappingSets);
    }
    let joint = union(&a_set, &b_set);
    Ok(entropy_of(table, &a_set) + entropy_of(table, &b_set) - entropy_of(table, &joint))
}

/// Conditional mutual information
/// I(a; b | given) = H(a, given) + H(b, given) - H(a, b, given) - H(given).
///
/// `a`, `b`, and `given` must be pairwise disjoint; an empty `given` reduces
/// to [`mutual_information`].
pub fn conditional_mutual_information(
    table: &JointTable,
    a: &[&str],
    b: &[&str],
    given: &[&str],
) -> Result<Bits> {
    let a_set = index_set(table, a)?;
    let b_set = index_set(table, b)?;
    let g_set = index_set(table, given)?;
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    if !disjoint(&a_set, &b_set) || !disjoint(&a_set, &g_set) || !disjoint(&b_set, &g_set) {
        return Err(Error::OverlappingSets);
    }
    let ag = union(&a_set, &g_set);
    let bg = union(&b_set, &g_set);
    let abg = union(&ag, &b_set);
    Ok(entropy_of(table, &ag) + entropy_of(table, &bg)
        - entropy_of(table, &abg)
        - entropy_of(table, &g_set))
}

/// External information of one variable: H(target | all other variables),
/// the entropy the rest of the system cannot account for.
///
/// # Errors
/// `NotEnoughVariables` unless the table has at least two variables.
pub fn external_information(table: &JointTable, target: &str) -> Result<Bits> {
    if table.variables().len() < 2 {
        return Err(Error::NotEnoughVariables {
            needed: 2,
            got: table.variables().len(),
        });
    }
    let t = table.index_of(target)?;
    let rest: Vec<usize> = (0..table.variables().len()).filter(|&i| i != t).collect();
    let all: Vec<usize> = (0..table.variables().len()).collect();
    Ok(entropy_of(table, &all) - entropy_of(table, &rest))
}

/// Total correlation TC(over) = sum of marginal entropies - joint entropy.
///
/// Nonnegative; zero exactly when the variables are mutually independent.
///
/// # Errors
/// `NotEnoughVariables` unless the (deduplicated) set has at least two names.
pub fn total_correlation(table: &JointTable, over: &[&str]) -> Result<Bits> {
    let indices = index_set(table, over)?;
    if indices.len() < 2 {
        return Err(Error::NotEnoughVariables {
            needed: 2,
            got: indices.len(),
        });
    }
    let marginal_sum: Bits = indices.iter().map(|&i| entropy_of(table, &[i])).sum();
    Ok(marginal_sum - entropy_of(table, &indices))
}

/// Co-information of three variables:
/// CoI = H1 + H2 + H3 - H12 - H13 - H23 + H123.
///
/// Unlike total correlation it can be negative; parity-like tables drive it
/// below zero. Evaluated over sorted indices so it is exactly symmetric in
/// its arguments.
///
/// # Errors
/// `OverlappingSets` if the three names are not distinct, `UnknownVariable`.
pub fn co_information(table: &JointTable, x1: &str, x2: &str, x3: &str) -> Result<Bits> {
    let indices = index_set(table, &[x1, x2, x3])?;
    if indices.len() != 3 {
        return Err(Error::OverlappingSets);
    }
    let (i, j, k) = (indices[0], indices[1], indices[2]);
    let singles = entropy_of(table, &[i]) + entropy_of(table, &[j]) + entropy_of(table, &[k]);
    let pairs =
        entropy_of(table, &[i, j]) + entropy_of(table, &[i, k]) + entropy_of(table, &[j, k]);
    Ok(singles - pairs + entropy_of(table, &[i, j, k]))
}
