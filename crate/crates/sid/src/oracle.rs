//! Extensional redundancy: information every source carries about a target.
//!
//! The redundancy of a set of sources about a target is defined over
//! deterministic coarsenings: a variable Q is below a source X when
//! H(Q | X) = 0, i.e. Q is a function of X. The redundancy is the largest
//! information any variable below *every* source carries about the target.
//! That supremum is attained by the finest common coarsening Q*, computed
//! here as the connected components of a co-occurrence graph, so redundancy
//! reduces to one mutual information I(Q*; target).

use std::collections::{BTreeMap, BTreeSet};

use crate::atoms::{AtomSet, Method};
use crate::error::{Error, Result};
use crate::shannon::{self, Bits};
use crate::table::JointTable;

/// Disjoint-set forest with path halving and union by size.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// The finest common deterministic coarsening of a set of sources.
///
/// Every source maps its observed symbols onto the same label set, and the
/// maps agree on every outcome in the support: reading the label off any
/// source gives the same answer. Labels are dense integers `0..label_count`
/// in a canonical order, so equal inputs produce identical labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonPart {
    /// Per source variable: observed symbol to component label. Symbols with
    /// zero marginal probability are absent.
    pub labeling: BTreeMap<String, BTreeMap<String, usize>>,
    pub label_count: usize,
}

impl CommonPart {
    /// Label assigned to `symbol` of `source`, if observed.
    pub fn label(&self, source: &str, symbol: &str) -> Option<usize> {
        self.labeling.get(source)?.get(symbol).copied()
    }
}

struct RawCommonPart {
    /// Source variable indices, sorted ascending.
    source_indices: Vec<usize>,
    /// Per source position: label per symbol index, None if unobserved.
    labels: Vec<Vec<Option<usize>>>,
    label_count: usize,
}

fn raw_common_part(table: &JointTable, sources: &[&str]) -> Result<RawCommonPart> {
    let mut index_set = BTreeSet::new();
    for name in sources {
        index_set.insert(table.index_of(name)?);
    }
    if index_set.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let source_indices: Vec<usize> = index_set.into_iter().collect();
    let sizes: Vec<usize> = source_indices
        .iter()
        .map(|&i| table.variables()[i].alphabet.len())
        .collect();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut total = 0;
    for &size in &sizes {
        offsets.push(total);
        total += size;
    }
    // Nodes are (source position, symbol) pairs; an outcome links all the
    // symbols it exhibits, so components are the classes no single source
    // can split further without disagreeing with some other source.
    let mut uf = UnionFind::new(total);
    let mut observed: Vec<Vec<bool>> = sizes.iter().map(|&s| vec![false; s]).collect();
    for key in table.pmf().keys() {
        let first = offsets[0] + key[source_indices[0]] as usize;
        for (pos, &vi) in source_indices.iter().enumerate() {
            let symbol = key[vi] as usize;
            observed[pos][symbol] = true;
            if pos > 0 {
                uf.union(first, offsets[pos] + symbol);
            }
        }
    }
    let mut root_to_label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut labels: Vec<Vec<Option<usize>>> = sizes.iter().map(|&s| vec![None; s]).collect();
    for (pos, size) in sizes.iter().enumerate() {
        for symbol in 0..*size {
            if !observed[pos][symbol] {
                continue;
            }
            let root = uf.find(offsets[pos] + symbol);
            let next = root_to_label.len();
            let label = *root_to_label.entry(root).or_insert(next);
            labels[pos][symbol] = Some(label);
        }
    }
    Ok(RawCommonPart {
        source_indices,
        labels,
        label_count: root_to_label.len(),
    })
}

/// Computes the finest common deterministic coarsening of `sources`.
///
/// With a single source this is the identity relabeling of its observed
/// symbols. Duplicate source names collapse; the result is independent of
/// the order the sources are listed in.
///
/// # Errors
/// `EmptyKeepSet`, `UnknownVariable`.
///
/// ```
/// use sid::{cases, oracle};
/// let t = cases::fixture("partial_copy").unwrap();
/// // X1 = (a, b) and X2 = b agree exactly on b: two components.
/// let q = oracle::common_part(&t, &["X1", "X2"]).unwrap();
/// assert_eq!(q.label_count, 2);
/// assert_eq!(q.label("X1", "10"), q.label("X2", "0"));
/// ```
pub fn common_part(table: &JointTable, sources: &[&str]) -> Result<CommonPart> {
    let raw = raw_common_part(table, sources)?;
    let mut labeling = BTreeMap::new();
    for (pos, &vi) in raw.source_indices.iter().enumerate() {
        let variable = &table.variables()[vi];
        let mut symbol_labels = BTreeMap::new();
        for (symbol_index, label) in raw.labels[pos].iter().enumerate() {
            if let Some(label) = label {
                symbol_labels.insert(variable.alphabet[symbol_index].clone(), *label);
            }
        }
        labeling.insert(variable.name.clone(), symbol_labels);
    }
    Ok(CommonPart {
        labeling,
        label_count: raw.label_count,
    })
}

/// Redundant information the sources carry about the target, in bits.
///
/// With one source this is plain mutual information I(source; target).
/// With several it is I(Q*; target) for the common part Q* of the sources.
///
/// # Errors
/// `TargetInSources`, `EmptyKeepSet`, `UnknownVariable`.
pub fn redundancy(table: &JointTable, target: &str, sources: &[&str]) -> Result<Bits> {
    if sources.contains(&target) {
        return Err(Error::TargetInSources {
            name: target.to_string(),
        });
    }
    let unique: BTreeSet<&str> = sources.iter().copied().collect();
    if unique.len() == 1 {
        let source = unique.into_iter().next().unwrap();
        return shannon::mutual_information(table, &[source], &[target]);
    }
    let raw = raw_common_part(table, sources)?;
    let target_index = table.index_of(target)?;
    // Sup attainment: any variable that is a deterministic function of every
    // source must be constant on each co-occurrence component, so it is a
    // function of Q*. Applying a function to one argument of mutual
    // information cannot increase it, hence I(Q; target) <= I(Q*; target)
    // for every candidate Q and the finest coarsening attains the supremum.
    let mut joint: BTreeMap<(usize, u16), f64> = BTreeMap::new();
    let mut q_marginal: BTreeMap<usize, f64> = BTreeMap::new();
    let mut t_marginal: BTreeMap<u16, f64> = BTreeMap::new();
    let first_pos = 0;
    let first_index = raw.source_indices[first_pos];
    for (key, &p) in table.pmf() {
        let q = raw.labels[first_pos][key[first_index] as usize]
            .expect("observed symbol must be labeled");
        debug_assert!(raw
            .source_indices
            .iter()
            .enumerate()
            .all(|(pos, &vi)| raw.labels[pos][key[vi] as usize] == Some(q)));
        let t = key[target_index];
        *joint.entry((q, t)).or_insert(0.0) += p;
        *q_marginal.entry(q).or_insert(0.0) += p;
        *t_marginal.entry(t).or_insert(0.0) += p;
    }
    let hq = entropy_from_masses(q_marginal.values());
    let ht = entropy_from_masses(t_marginal.values());
    let hqt = entropy_from_masses(joint.values());
    Ok(hq + ht - hqt)
}

fn entropy_from_masses<'a>(values: impl Iterator<Item = &'a f64>) -> Bits {
    values
        .map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 })
        .sum()
}

/// Solves the full atom set with the default tolerance. See
/// [`solve_atoms_with_tolerance`].
pub fn solve_atoms(table: &JointTable) -> Result<AtomSet> {
    solve_atoms_with_tolerance(table, crate::DEFAULT_TOLERANCE)
}

/// Solves the full atom set of a three-variable table by computing the
/// redundancy once per target and deriving everything else.
///
/// The three per-target redundancies agree on well-behaved tables (the
/// built-in cases, and empirically the bulk of random tables); when they
/// disagree beyond `tol` this solver refuses rather than average away a real
/// asymmetry.
///
/// # Errors
/// `NotThreeVariables`, `SymmetryViolation`, plus anything
/// [`crate::atoms::atoms_from_redundancy_with_tolerance`] raises.
pub fn solve_atoms_with_tolerance(table: &JointTable, tol: f64) -> Result<AtomSet> {
    let names = table.variable_names();
    if names.len() != 3 {
        return Err(Error::NotThreeVariables { got: names.len() });
    }
    let mut values = Vec::with_capacity(3);
    for (t, target) in names.iter().enumerate() {
        let sources: Vec<&str> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != t)
            .map(|(_, name)| *name)
            .collect();
        values.push(redundancy(table, target, &sources)?);
    }
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    if max - min > tol {
        return Err(Error::SymmetryViolation {
            spread: max - min,
            values,
        });
    }
    let red = values.iter().sum::<Bits>() / values.len() as f64;
    let mut atoms = crate::atoms::atoms_from_redundancy_with_tolerance(table, red, tol)?;
    atoms.method = Method::Oracle;
    Ok(atoms)
}
