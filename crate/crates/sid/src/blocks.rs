//! Support-block structure of a table relative to an anchor variable.
//!
//! Fix an anchor variable A and one of its values v, and write S_W(v) for
//! the values of another variable W that co-occur with v. Every support
//! point falls into exactly one class:
//!
//! - **yellow**: the anchor block itself, points with A = v;
//! - **syn**: both other coordinates individually co-occur with v but their
//!   pair never does; the pair is new evidence distinguishing this anchor
//!   value from v, visible only jointly;
//! - **unique**, keyed by the conforming variable: exactly one other
//!   coordinate co-occurs with v, so the deviating coordinate alone tells
//!   the anchor values apart;
//! - **plain**: everything else (both coordinates deviate, or the whole
//!   pair already occurs with v).
//!
//! Scanning all anchor values turns block presence into positivity
//! predictions: a syn block anywhere means positive synergy, and a block
//! where W deviates while the third variable conforms means positive
//! unique information on the (anchor, W) pair. The pointwise
//! [`synergy_formula`] evaluates synergy from the same co-occurrence
//! geometry without computing any other atom first.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shannon::{self, Bits};
use crate::table::JointTable;

/// One support outcome as symbols in table variable order.
pub type Outcome = Vec<String>;

/// Block classification of the full support for one anchor value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub anchor_variable: String,
    pub anchor_value: String,
    pub yellow: Vec<Outcome>,
    pub syn_blocks: Vec<Outcome>,
    /// Keyed by the conforming (non-deviating) variable.
    pub unique_blocks: BTreeMap<String, Vec<Outcome>>,
    pub plain: Vec<Outcome>,
}

#[derive(Serialize)]
struct BlockRow {
    outcome: Outcome,
    class: String,
}

#[derive(Serialize)]
struct BlockAnchor {
    variable: String,
    value: String,
}

#[derive(Serialize)]
struct BlockFile {
    anchor: BlockAnchor,
    rows: Vec<BlockRow>,
}

impl BlockReport {
    /// Rows tagged `yellow`, `syn`, `unique:<var>`, or `plain`, in support
    /// order within each class.
    pub fn to_json(&self) -> String {
        let mut rows = Vec::new();
        let tag = |outcomes: &[Outcome], class: &str, rows: &mut Vec<BlockRow>| {
            for outcome in outcomes {
                rows.push(BlockRow {
                    outcome: outcome.clone(),
                    class: class.to_string(),
                });
            }
        };
        tag(&self.yellow, "yellow", &mut rows);
        tag(&self.syn_blocks, "syn", &mut rows);
        for (variable, outcomes) in &self.unique_blocks {
            tag(outcomes, &format!("unique:{variable}"), &mut rows);
        }
        tag(&self.plain, "plain", &mut rows);
        let file = BlockFile {
            anchor: BlockAnchor {
                variable: self.anchor_variable.clone(),
                value: self.anchor_value.clone(),
            },
            rows,
        };
        serde_json::to_string(&file).expect("block serialization is infallible")
    }
}

struct AnchorGeometry {
    anchor: usize,
    others: [usize; 2],
}

fn geometry(table: &JointTable, anchor_var: &str) -> Result<AnchorGeometry> {
    if table.variables().len() != 3 {
        return Err(Error::NotThreeVariables {
            got: table.variables().len(),
        });
    }
    let anchor = table.index_of(anchor_var)?;
    let mut others = (0..3).filter(|&i| i != anchor);
    Ok(AnchorGeometry {
        anchor,
        others: [others.next().unwrap(), others.next().unwrap()],
    })
}

/// Values of variable `of` co-occurring with `anchor = value`, as symbol
/// indices.
fn support_set(table: &JointTable, anchor: usize, value: u16, of: usize) -> BTreeSet<u16> {
    table
        .pmf()
        .keys()
        .filter(|key| key[anchor] == value)
        .map(|key| key[of])
        .collect()
}

/// Classifies every support point relative to one anchor value.
///
/// # Errors
/// `NotThreeVariables`, `UnknownVariable`, `ZeroProbabilityEvidence` if the
/// anchor value has zero marginal probability.
pub fn classify_blocks(
    table: &JointTable,
    anchor_var: &str,
    anchor_value: &str,
) -> Result<BlockReport> {
    let geo = geometry(table, anchor_var)?;
    let value = table
        .symbol_index(geo.anchor, anchor_value)
        .ok_or_else(|| Error::ZeroProbabilityEvidence {
            variable: anchor_var.to_string(),
            value: anchor_value.to_string(),
        })?;
    let s1 = support_set(table, geo.anchor, value, geo.others[0]);
    let s2 = support_set(table, geo.anchor, value, geo.others[1]);
    if s1.is_empty() {
        return Err(Error::ZeroProbabilityEvidence {
            variable: anchor_var.to_string(),
            value: anchor_value.to_string(),
        });
    }
    let name = |i: usize| table.variables()[i].name.clone();
    let mut report = BlockReport {
        anchor_variable: name(geo.anchor),
        anchor_value: anchor_value.to_string(),
        yellow: Vec::new(),
        syn_blocks: Vec::new(),
        unique_blocks: BTreeMap::from([
            (name(geo.others[0]), Vec::new()),
            (name(geo.others[1]), Vec::new()),
        ]),
        plain: Vec::new(),
    };
    for key in table.pmf().keys() {
        let outcome: Outcome = key
            .iter()
            .enumerate()
            .map(|(vi, &si)| table.symbol(vi, si).to_string())
            .collect();
        if key[geo.anchor] == value {
            report.yellow.push(outcome);
            continue;
        }
        let conforms_1 = s1.contains(&key[geo.others[0]]);
        let conforms_2 = s2.contains(&key[geo.others[1]]);
        match (conforms_1, conforms_2) {
            (true, true) => {
                // The pair must be new evidence: if it already co-occurs
                // with the reference value, seeing it jointly distinguishes
                // nothing.
                let mut probe = key.clone();
                probe[geo.anchor] = value;
                if table.pmf().get(&probe).is_none() {
                    report.syn_blocks.push(outcome);
                } else {
                    report.plain.push(outcome);
                }
            }
            (true, false) => {
                let conforming = name(geo.others[0]);
                report
                    .unique_blocks
                    .get_mut(&conforming)
                    .unwrap()
                    .push(outcome);
            }
            (false, true) => {
                let conforming = name(geo.others[1]);
                report
                    .unique_blocks
                    .get_mut(&conforming)
                    .unwrap()
                    .push(outcome);
            }
            (false, false) => report.plain.push(outcome),
        }
    }
    Ok(report)
}

/// Block-derived positivity predictions for the atoms involving one anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityVerdict {
    pub anchor: String,
    /// Some anchor value sees a syn block.
    pub syn_positive: bool,
    /// Keyed by the other variable W: some anchor value sees a block where
    /// W deviates while the remaining variable conforms, predicting
    /// `un(anchor, W) > 0`.
    pub un_positive: BTreeMap<String, bool>,
}

/// Aggregates block classes over every observed anchor value into
/// positivity predictions.
///
/// Note the key inversion: a block listed under conforming variable T is a
/// block where the *other* variable W deviates, so it argues for
/// `un(anchor, W)`, not `un(anchor, T)`.
pub fn positivity(table: &JointTable, anchor_var: &str) -> Result<PositivityVerdict> {
    let geo = geometry(table, anchor_var)?;
    let name = |i: usize| table.variables()[i].name.clone();
    let mut verdict = PositivityVerdict {
        anchor: name(geo.anchor),
        syn_positive: false,
        un_positive: BTreeMap::from([(name(geo.others[0]), false), (name(geo.others[1]), false)]),
    };
    let observed: BTreeSet<u16> = table.pmf().keys().map(|key| key[geo.anchor]).collect();
    for value in observed {
        let symbol = table.symbol(geo.anchor, value).to_string();
        let report = classify_blocks(table, anchor_var, &symbol)?;
        if !report.syn_blocks.is_empty() {
            verdict.syn_positive = true;
        }
        // unique_blocks[T] non-empty means the other variable deviated.
        if !report.unique_blocks[&name(geo.others[1])].is_empty() {
            *verdict.un_positive.get_mut(&name(geo.others[0])).unwrap() = true;
        }
        if !report.unique_blocks[&name(geo.others[0])].is_empty() {
            *verdict.un_positive.get_mut(&name(geo.others[1])).unwrap() = true;
        }
    }
    Ok(verdict)
}

/// Pointwise synergy relative to an anchor variable A with others B and C:
///
/// ```text
/// syn = sum over support of p(a,b,c) * log2(
///           P(B=b, C in S_C(a)) / P(A=a, B=b)
///         * P(C=c, B in S_B(a)) / P(A=a, C=c)
///         * P(A=a)              / P(B in S_B(a), C in S_C(a))
///       ) - H(A | B, C)
/// ```
///
/// Each point is weighed against the co-occurrence sets of its own anchor
/// value. The result does not depend on which of B and C is listed first.
///
/// # Errors
/// `NotThreeVariables`, `UnknownVariable`, `ZeroDenominator` (defensive; no
/// support point can produce one).
pub fn synergy_formula(table: &JointTable, anchor_var: &str) -> Result<Bits> {
    let geo = geometry(table, anchor_var)?;
    let (a, b, c) = (geo.anchor, geo.others[0], geo.others[1]);
    let anchor_values: BTreeSet<u16> = table.pmf().keys().map(|key| key[a]).collect();
    // Per anchor value v: mass of (B=b, C in S_C(v)), of (C=c, B in S_B(v)),
    // and of the full rectangle S_B(v) x S_C(v).
    let mut b_and_sc: BTreeMap<(u16, u16), f64> = BTreeMap::new();
    let mut c_and_sb: BTreeMap<(u16, u16), f64> = BTreeMap::new();
    let mut rectangle: BTreeMap<u16, f64> = BTreeMap::new();
    let mut supports: BTreeMap<u16, (BTreeSet<u16>, BTreeSet<u16>)> = BTreeMap::new();
    for &v in &anchor_values {
        supports.insert(
            v,
            (support_set(table, a, v, b), support_set(table, a, v, c)),
        );
    }
    for (key, &p) in table.pmf() {
        for &v in &anchor_values {
            let (sb, sc) = &supports[&v];
            let b_in = sb.contains(&key[b]);
            let c_in = sc.contains(&key[c]);
            if c_in {
                *b_and_sc.entry((v, key[b])).or_insert(0.0) += p;
            }
            if b_in {
                *c_and_sb.entry((v, key[c])).or_insert(0.0) += p;
            }
            if b_in && c_in {
                *rectangle.entry(v).or_insert(0.0) += p;
            }
        }
    }
    let a_marginal = table.marginal(&[a]);
    let ab_marginal = table.marginal(&{
        let mut idx = [a, b];
        idx.sort();
        idx.to_vec()
    });
    let ac_marginal = table.marginal(&{
        let mut idx = [a, c];
        idx.sort();
        idx.to_vec()
    });
    let pair_key = |first: usize, fv: u16, second: usize, sv: u16| -> Vec<u16> {
        if first < second {
            vec![fv, sv]
        } else {
            vec![sv, fv]
        }
    };
    let outcome_string = |key: &[u16]| -> String {
        key.iter()
            .enumerate()
            .map(|(vi, &si)| table.symbol(vi, si))
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut sum: Bits = 0.0;
    for (key, &p) in table.pmf() {
        let v = key[a];
        let numerator_1 = b_and_sc[&(v, key[b])];
        let denominator_1 = ab_marginal[&pair_key(a, v, b, key[b])];
        let numerator_2 = c_and_sb[&(v, key[c])];
        let denominator_2 = ac_marginal[&pair_key(a, v, c, key[c])];
        let numerator_3 = a_marginal[&vec![v]];
        let denominator_3 = rectangle[&v];
        for denominator in [denominator_1, denominator_2, denominator_3] {
            if denominator <= 0.0 {
                return Err(Error::ZeroDenominator {
                    outcome: outcome_string(key),
                });
            }
        }
        sum += p
            * ((numerator_1 / denominator_1)
                * (numerator_2 / denominator_2)
                * (numerator_3 / denominator_3))
                .log2();
    }
    let names = table.variable_names();
    let residual_entropy = shannon::conditional_entropy(table, &[names[a]], &[names[b], names[c]])?;
    Ok(sum - residual_entropy)
}
