//! Information atoms of a three-variable system and their accounting
//! identities.
//!
//! Once a redundancy value is fixed, every other atom follows from Shannon
//! measures alone:
//!
//! - `un(Xi, Xj) = I(Xi; Xj) - red` for each unordered pair;
//! - `syn = I(Xk; Xi | Xj) - un(Xk, Xi)`, evaluable for all six ordered
//!   triples, which agree by the chain rule; disagreement beyond tolerance
//!   is a numerical bug, not a property of the table;
//! - `ext(Xi) = H(Xi | rest)`.
//!
//! The identities checked here hold exactly for any consistent atom set:
//!
//! - joint entropy = red + sum of un + 2 syn + sum of ext;
//! - total correlation = 2 red + sum of un + syn;
//! - co-information = red - syn.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::shannon::{self, Bits};
use crate::table::JointTable;

/// The six ordered (i, j, k) triples used for synergy evaluation.
const TRIPLES: [(usize, usize, usize); 6] = [
    (0, 1, 2),
    (0, 2, 1),
    (1, 0, 2),
    (1, 2, 0),
    (2, 0, 1),
    (2, 1, 0),
];

/// Values indexed by unordered pairs of the table's three variables.
///
/// Pairs are stored in table order, (v0, v1), (v0, v2), (v1, v2), and
/// lookups accept either orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct PairMap {
    pairs: Vec<((String, String), Bits)>,
}

impl PairMap {
    pub(crate) fn new(names: &[&str]) -> PairMap {
        let mut pairs = Vec::with_capacity(3);
        for i in 0..names.len() {
            for j in (i + 1)..names.len() {
                pairs.push(((names[i].to_string(), names[j].to_string()), 0.0));
            }
        }
        PairMap { pairs }
    }

    pub(crate) fn set(&mut self, a: &str, b: &str, value: Bits) {
        for ((x, y), slot) in &mut self.pairs {
            if (x == a && y == b) || (x == b && y == a) {
                *slot = value;
                return;
            }
        }
        panic!("pair ({a}, {b}) not present");
    }

    /// Value for an unordered pair; either orientation works.
    pub fn get(&self, a: &str, b: &str) -> Option<Bits> {
        self.pairs
            .iter()
            .find(|((x, y), _)| (x == a && y == b) || (x == b && y == a))
            .map(|(_, value)| *value)
    }

    /// Pairs in canonical (table) order.
    pub fn iter(&self) -> impl Iterator<Item = ((&str, &str), Bits)> {
        self.pairs
            .iter()
            .map(|((a, b), value)| ((a.as_str(), b.as_str()), *value))
    }
}

/// How an atom set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Read off independence or determinism structure.
    Direct,
    /// Pointwise synergy formula plus co-information.
    Blocks,
    /// Redundancy as information carried by the finest common coarsening.
    Oracle,
    /// Redundancy supplied by the caller.
    Supplied,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Blocks => "blocks",
            Method::Oracle => "oracle",
            Method::Supplied => "supplied",
        }
    }
}

/// A nonnegativity breach: an atom below `-tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Atom label: `red`, `syn`, `un:A|B`, or `ext:A`.
    pub atom: String,
    pub value: Bits,
}

/// A complete atom decomposition of one three-variable table.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomSet {
    pub red: Bits,
    pub un: PairMap,
    pub syn: Bits,
    pub ext: BTreeMap<String, Bits>,
    pub method: Method,
    /// Nonnegativity breaches found at construction; empty for a valid
    /// decomposition.
    pub violations: Vec<Violation>,
}

/// Signed residuals of the three accounting identities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub joint: Bits,
    pub tc: Bits,
    pub coi: Bits,
}

fn require_three(table: &JointTable) -> Result<[&str; 3]> {
    let names = table.variable_names();
    if names.len() != 3 {
        return Err(Error::NotThreeVariables { got: names.len() });
    }
    Ok([names[0], names[1], names[2]])
}

/// The six synergy evaluations `I(Xk; Xi | Xj) - (I(Xk; Xi) - red)`, one per
/// ordered triple in lexicographic order. They agree up to floating error
/// for any `red`.
pub fn synergy_evaluations(table: &JointTable, red: Bits) -> Result<Vec<Bits>> {
    let names = require_three(table)?;
    let mut values = Vec::with_capacity(6);
    for (i, j, k) in TRIPLES {
        let cmi =
            shannon::conditional_mutual_information(table, &[names[k]], &[names[i]], &[names[j]])?;
        let mi = shannon::mutual_information(table, &[names[k]], &[names[i]])?;
        values.push(cmi - (mi - red));
    }
    Ok(values)
}

/// Derives the full atom set implied by a redundancy value, with the default
/// tolerance.
pub fn atoms_from_redundancy(table: &JointTable, red: Bits) -> Result<AtomSet> {
    atoms_from_redundancy_with_tolerance(table, red, crate::DEFAULT_TOLERANCE)
}

/// Derives the full atom set implied by a redundancy value.
///
/// The redundancy is admissible when `-tol <= red <= min pairwise MI + tol`;
/// anything else would force a unique atom below zero by construction and is
/// rejected up front. The six synergy evaluations must agree within `tol`
/// (they are algebraically equal); their mean is the reported synergy.
/// Nonnegativity breaches below `-tol` are recorded as violations, not
/// errors, so callers can inspect a failed decomposition.
///
/// # Errors
/// `NotThreeVariables`, `RedundancyOutOfRange`, `SynergyInconsistent`.
pub fn atoms_from_redundancy_with_tolerance(
    table: &JointTable,
    red: Bits,
    tol: f64,
) -> Result<AtomSet> {
    let names = require_three(table)?;
    let mut un = PairMap::new(&names);
    let mut min_mi = f64::INFINITY;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mi = shannon::mutual_information(table, &[names[i]], &[names[j]])?;
            min_mi = min_mi.min(mi);
            un.set(names[i], names[j], mi - red);
        }
    }
    if red < -tol || red > min_mi + tol {
        return Err(Error::RedundancyOutOfRange { red, max: min_mi });
    }
    let evaluations = synergy_evaluations(table, red)?;
    let max = evaluations
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    let min = evaluations.iter().cloned().fold(f64::INFINITY, f64::min);
    let spread = max - min;
    if spread > tol {
        return Err(Error::SynergyInconsistent {
            spread,
            values: evaluations,
        });
    }
    let syn = evaluations.iter().sum::<Bits>() / evaluations.len() as f64;
    let mut ext = BTreeMap::new();
    for name in names {
        ext.insert(
            name.to_string(),
            shannon::external_information(table, name)?,
        );
    }
    let mut atoms = AtomSet {
        red,
        un,
        syn,
        ext,
        method: Method::Supplied,
        violations: Vec::new(),
    };
    atoms.violations = collect_violations(&atoms, tol);
    Ok(atoms)
}

fn collect_violations(atoms: &AtomSet, tol: f64) -> Vec<Violation> {
    let mut violations = Vec::new();
    if atoms.red < -tol {
        violations.push(Violation {
            atom: "red".to_string(),
            value: atoms.red,
        });
    }
    for ((a, b), value) in atoms.un.iter() {
        if value < -tol {
            violations.push(Violation {
                atom: format!("un:{a}|{b}"),
                value,
            });
        }
    }
    if atoms.syn < -tol {
        violations.push(Violation {
            atom: "syn".to_string(),
            value: atoms.syn,
        });
    }
    for (name, &value) in &atoms.ext {
        if value < -tol {
            violations.push(Violation {
                atom: format!("ext:{name}"),
                value,
            });
        }
    }
    violations
}

/// Signed residual of the joint-entropy identity:
/// `H(X1, X2, X3) - (red + sum un + 2 syn + sum ext)`.
pub fn check_joint_entropy_decomposition(table: &JointTable, atoms: &AtomSet) -> Result<Bits> {
    let names = require_three(table)?;
    let joint = shannon::entropy(table, &names)?;
    let un_sum: Bits = atoms.un.iter().map(|(_, v)| v).sum();
    let ext_sum: Bits = atoms.ext.values().sum();
    Ok(joint - (atoms.red + un_sum + 2.0 * atoms.syn + ext_sum))
}

/// Signed residual of the total-correlation identity:
/// `TC - (2 red + sum un + syn)`.
pub fn check_total_correlation_decomposition(table: &JointTable, atoms: &AtomSet) -> Result<Bits> {
    let names = require_three(table)?;
    let tc = shannon::total_correlation(table, &names)?;
    let un_sum: Bits = atoms.un.iter().map(|(_, v)| v).sum();
    Ok(tc - (2.0 * atoms.red + un_sum + atoms.syn))
}

/// Signed residual of the co-information identity: `CoI - (red - syn)`.
pub fn check_co_information(table: &JointTable, atoms: &AtomSet) -> Result<Bits> {
    let names = require_three(table)?;
    let coi = shannon::co_information(table, names[0], names[1], names[2])?;
    Ok(coi - (atoms.red - atoms.syn))
}

/// All three identity residuals at once.
pub fn residuals(table: &JointTable, atoms: &AtomSet) -> Result<Residuals> {
    Ok(Residuals {
        joint: check_joint_entropy_decomposition(table, atoms)?,
        tc: check_total_correlation_decomposition(table, atoms)?,
        coi: check_co_information(table, atoms)?,
    })
}

/// Result of exercising a per-target redundancy solver in all three roles.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryAudit {
    /// Redundancy with each variable in the target role.
    pub per_target_red: BTreeMap<String, Bits>,
    /// Max minus min of the per-target redundancies.
    pub red_discrepancy: Bits,
    /// The six synergy evaluations at the mean redundancy.
    pub syn_evaluations: Vec<Bits>,
    /// Max minus min of the synergy evaluations.
    pub syn_discrepancy: Bits,
}

/// Runs `red_solver` once per target variable and measures how far the
/// results are from the target-symmetric ideal.
///
/// A nonzero `red_discrepancy` is a property of the solver on this table,
/// not an arithmetic bug, so it is reported rather than raised.
pub fn audit_symmetry(
    table: &JointTable,
    mut red_solver: impl FnMut(&JointTable, &str) -> Result<Bits>,
) -> Result<SymmetryAudit> {
    let names = require_three(table)?;
    let mut per_target_red = BTreeMap::new();
    let mut values = Vec::with_capacity(3);
    for name in names {
        let red = red_solver(table, name)?;
        per_target_red.insert(name.to_string(), red);
        values.push(red);
    }
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = values.iter().sum::<Bits>() / values.len() as f64;
    let syn_evaluations = synergy_evaluations(table, mean)?;
    let syn_max = syn_evaluations
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    let syn_min = syn_evaluations
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    Ok(SymmetryAudit {
        per_target_red,
        red_discrepancy: max - min,
        syn_evaluations,
        syn_discrepancy: syn_max - syn_min,
    })
}

/// Canonical number rendering for reports: nine-decimal fixed point with
/// `-0` normalized to `0`. Nine decimals resolve well below the default
/// tolerance while keeping output byte-stable across runs.
pub fn format_bits(x: f64) -> String {
    fmt9(x)
}

/// Nine-decimal fixed-point rendering with `-0` normalized to `0`.
fn fmt9(x: f64) -> String {
    let value = if x == 0.0 { 0.0 } else { x };
    let s = format!("{value:.9}");
    if s == "-0.000000000" {
        "0.000000000".to_string()
    } else {
        s
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

/// Renders the canonical atom report:
///
/// ```json
/// {"red":...,"un":{"X1|X2":...},"syn":...,"ext":{"X1":...},
///  "method":"oracle","violations":[],"residuals":{"joint":...,"tc":...,"coi":...}}
/// ```
///
/// Keys follow table variable order and numbers are printed with nine
/// decimals, so the output is byte-stable for a given table and method.
pub fn to_report_json(table: &JointTable, atoms: &AtomSet) -> Result<String> {
    let names = require_three(table)?;
    let res = residuals(table, atoms)?;
    let mut out = String::new();
    out.push_str("{\"red\":");
    out.push_str(&fmt9(atoms.red));
    out.push_str(",\"un\":{");
    let mut first = true;
    for ((a, b), value) in atoms.un.iter() {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&json_string(&format!("{a}|{b}")));
        out.push(':');
        out.push_str(&fmt9(value));
    }
    out.push_str("},\"syn\":");
    out.push_str(&fmt9(atoms.syn));
    out.push_str(",\"ext\":{");
    let mut first = true;
    for name in names {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&json_string(name));
        out.push(':');
        out.push_str(&fmt9(atoms.ext[name]));
    }
    out.push_str("},\"method\":");
    out.push_str(&json_string(atoms.method.label()));
    out.push_str(",\"violations\":[");
    let mut first = true;
    for violation in &atoms.violations {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str("{\"atom\":");
        out.push_str(&json_string(&violation.atom));
        out.push_str(",\"value\":");
        out.push_str(&fmt9(violation.value));
        out.push('}');
    }
    out.push_str("],\"residuals\":{\"joint\":");
    out.push_str(&fmt9(res.joint));
    out.push_str(",\"tc\":");
    out.push_str(&fmt9(res.tc));
    out.push_str(",\"coi\":");
    out.push_str(&fmt9(res.coi));
    out.push_str("}}");
    Ok(out)
}

/// Renders the full decomposition report: the canonical atom report of
/// [`to_report_json`] extended with a symmetry audit and per-anchor
/// positivity verdicts.
///
/// Audit and positivity keys follow table variable order; numbers use the
/// same nine-decimal format, so the output stays byte-stable.
pub fn to_full_report_json(
    table: &JointTable,
    atoms: &AtomSet,
    audit: &SymmetryAudit,
    verdicts: &[crate::blocks::PositivityVerdict],
) -> Result<String> {
    let names = require_three(table)?;
    let mut out = to_report_json(table, atoms)?;
    out.pop();
    out.push_str(",\"audit\":{\"red_per_target\":{");
    let mut first = true;
    for name in names {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&json_string(name));
        out.push(':');
        out.push_str(&fmt9(audit.per_target_red[name]));
    }
    out.push_str("},\"red_discrepancy\":");
    out.push_str(&fmt9(audit.red_discrepancy));
    out.push_str(",\"syn_evaluations\":[");
    let mut first = true;
    for value in &audit.syn_evaluations {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&fmt9(*value));
    }
    out.push_str("],\"syn_discrepancy\":");
    out.push_str(&fmt9(audit.syn_discrepancy));
    out.push_str("},\"positivity\":{");
    let mut first = true;
    for name in names {
        let verdict = verdicts
            .iter()
            .find(|v| v.anchor == name)
            .expect("one verdict per anchor");
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&json_string(name));
        out.push_str(":{\"syn\":");
        out.push_str(if verdict.syn_positive {
            "true"
        } else {
            "false"
        });
        out.push_str(",\"un\":{");
        let mut inner_first = true;
        for other in names {
            if other == name {
                continue;
            }
            if !inner_first {
                out.push(',');
            }
            inner_first = false;
            out.push_str(&json_string(other));
            out.push(':');
            out.push_str(if verdict.un_positive[other] {
                "true"
            } else {
                "false"
            });
        }
        out.push_str("}}");
    }
    out.push_str("}}");
    Ok(out)
}
