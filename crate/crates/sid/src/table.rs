//! Exact joint probability tables over named variables with finite alphabets.
//!
//! A [`JointTable`] is the universal input of the crate: every measure and
//! every solver consumes one. Tables are immutable after construction, so all
//! operations return fresh tables and are safe to share across threads.
//!
//! Representation invariants:
//! - outcomes are stored as per-variable symbol indices, keyed in a `BTreeMap`
//!   so iteration order is deterministic;
//! - zero-probability outcomes are never stored; the support is the key set;
//! - probabilities are positive and sum to 1 within `PROB_TOLERANCE`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for "probabilities sum to one" checks.
pub const PROB_TOLERANCE: f64 = 1e-9;

/// A named variable together with its ordered alphabet of symbols.
///
/// Symbols are opaque tokens; the built-in XOR case studies use 4-bit strings
/// such as `"1011"`. Alphabets inferred from data are sorted lexicographically;
/// explicitly declared alphabets keep their declared order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub alphabet: Vec<String>,
}

impl Variable {
    /// Builds a variable, rejecting duplicate symbols.
    pub fn new(name: &str, alphabet: Vec<String>) -> Result<Variable> {
        let mut seen = BTreeSet::new();
        for symbol in &alphabet {
            if !seen.insert(symbol.clone()) {
                return Err(Error::DuplicateSymbol {
                    variable: name.to_string(),
                    symbol: symbol.clone(),
                });
            }
        }
        Ok(Variable {
            name: name.to_string(),
            alphabet,
        })
    }
}

/// Raw observations: a header of variable names and one outcome per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    pub variables: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl SampleSet {
    /// Builds a sample set, checking that every row has one symbol per variable.
    pub fn new(variables: Vec<String>, rows: Vec<Vec<String>>) -> Result<SampleSet> {
        for row in &rows {
            if row.len() != variables.len() {
                return Err(Error::ArityMismatch {
                    expected: variables.len(),
                    got: row.len(),
                });
            }
        }
        Ok(SampleSet { variables, rows })
    }

    /// Parses the CSV sample format: header row of variable names, then one
    /// observation per row. Symbols are verbatim strings; no quoting.
    pub fn from_csv(text: &str) -> Result<SampleSet> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty CSV input".to_string()))?;
        let variables: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        let mut rows = Vec::new();
        for line in lines {
            let row: Vec<String> = line.split(',').map(|s| s.trim().to_string()).collect();
            if row.len() != variables.len() {
                return Err(Error::ArityMismatch {
                    expected: variables.len(),
                    got: row.len(),
                });
            }
            rows.push(row);
        }
        SampleSet::new(variables, rows)
    }

    /// Renders the CSV sample format. Symbols containing commas or line breaks
    /// are out of contract and rejected.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        let check = |s: &str| -> Result<()> {
            if s.contains(',') || s.contains('\n') || s.contains('\r') {
                return Err(Error::Parse(format!(
                    "symbol {s:?} contains a comma or line break; not representable in CSV"
                )));
            }
            Ok(())
        };
        for name in &self.variables {
            check(name)?;
        }
        out.push_str(&self.variables.join(","));
        out.push('\n');
        for row in &self.rows {
            for symbol in row {
                check(symbol)?;
            }
            out.push_str(&row.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct DistVar {
    name: String,
    alphabet: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct DistEntry {
    outcome: Vec<String>,
    p: f64,
}

#[derive(Serialize, Deserialize)]
struct DistFile {
    variables: Vec<DistVar>,
    pmf: Vec<DistEntry>,
}

/// An exact discrete joint distribution over named finite-alphabet variables.
#[derive(Debug, Clone, PartialEq)]
pub struct JointTable {
    variables: Vec<Variable>,
    pmf: BTreeMap<Vec<u16>, f64>,
}

impl JointTable {
    /// Builds a table from (outcome, probability) entries with inferred
    /// alphabets (the sorted set of observed symbols per variable).
    ///
    /// Duplicate outcomes accumulate. Zero-probability entries are dropped,
    /// matching the invariant that the support is exactly the stored key set.
    ///
    /// # Errors
    /// `NegativeProbability` for negative or non-finite masses, `SumNotOne`
    /// if the total deviates from 1 by more than [`PROB_TOLERANCE`],
    /// `ArityMismatch`, `EmptyPmf`, `DuplicateVariable`.
    ///
    /// # Example
    /// ```
    /// use sid::JointTable;
    /// let t = JointTable::from_pmf(
    ///     &["X", "Y"],
    ///     vec![
    ///         (vec!["0".into(), "0".into()], 0.5),
    ///         (vec!["1".into(), "1".into()], 0.5),
    ///     ],
    /// )
    /// .unwrap();
    /// assert_eq!(t.support_size(), 2);
    /// ```
    pub fn from_pmf(names: &[&str], entries: Vec<(Vec<String>, f64)>) -> Result<JointTable> {
        Self::build(names, None, entries, false)
    }

    /// Like [`JointTable::from_pmf`] but normalizes the entries by their total
    /// mass instead of requiring the sum to be 1 already.
    pub fn from_weights(names: &[&str], entries: Vec<(Vec<String>, f64)>) -> Result<JointTable> {
        Self::build(names, None, entries, true)
    }

    /// Builds a table against explicitly declared variables, so alphabets can
    /// carry symbols with no observed mass (structural zeros in reports).
    ///
    /// # Errors
    /// Everything [`JointTable::from_pmf`] raises, plus `SymbolNotInAlphabet`.
    pub fn from_pmf_with_variables(
        variables: Vec<Variable>,
        entries: Vec<(Vec<String>, f64)>,
    ) -> Result<JointTable> {
        let names: Vec<&str> = variables.iter().map(|v| v.name.as_str()).collect();
        Self::build(&names, Some(variables.clone()), entries, false)
    }

    /// Empirical table from raw observations: count / total per distinct row.
    pub fn from_samples(samples: &SampleSet) -> Result<JointTable> {
        if samples.rows.is_empty() {
            return Err(Error::EmptySample);
        }
        let names: Vec<&str> = samples.variables.iter().map(|s| s.as_str()).collect();
        let entries = samples.rows.iter().map(|row| (row.clone(), 1.0)).collect();
        Self::build(&names, None, entries, true)
    }

    fn build(
        names: &[&str],
        declared: Option<Vec<Variable>>,
        entries: Vec<(Vec<String>, f64)>,
        normalize: bool,
    ) -> Result<JointTable> {
        if entries.is_empty() {
            return Err(Error::EmptyPmf);
        }
        let mut seen = BTreeSet::new();
        for name in names {
            if !seen.insert(*name) {
                return Err(Error::DuplicateVariable {
                    name: name.to_string(),
                });
            }
        }
        for (outcome, p) in &entries {
            if outcome.len() != names.len() {
                return Err(Error::ArityMismatch {
                    expected: names.len(),
                    got: outcome.len(),
                });
            }
            if !p.is_finite() || *p < 0.0 {
                return Err(Error::NegativeProbability {
                    outcome: outcome.join(","),
                    p: *p,
                });
            }
        }
        let variables = match declared {
            Some(vars) => {
                for (vi, var) in vars.iter().enumerate() {
                    for (outcome, _) in &entries {
                        if !var.alphabet.contains(&outcome[vi]) {
                            return Err(Error::SymbolNotInAlphabet {
                                variable: var.name.clone(),
                                symbol: outcome[vi].clone(),
                            });
                        }
                    }
                }
                vars
            }
            None => {
                let mut alphabets: Vec<BTreeSet<String>> = vec![BTreeSet::new(); names.len()];
                for (outcome, _) in &entries {
                    for (vi, symbol) in outcome.iter().enumerate() {
                        alphabets[vi].insert(symbol.clone());
                    }
                }
                names
                    .iter()
                    .zip(alphabets)
                    .map(|(name, symbols)| Variable {
                        name: name.to_string(),
                        alphabet: symbols.into_iter().collect(),
                    })
                    .collect()
            }
        };
        let lookups: Vec<HashMap<&str, u16>> = variables
            .iter()
            .map(|v| {
                v.alphabet
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.as_str(), i as u16))
                    .collect()
            })
            .collect();
        let mut pmf: BTreeMap<Vec<u16>, f64> = BTreeMap::new();
        for (outcome, p) in &entries {
            if *p == 0.0 {
                continue;
            }
            let key: Vec<u16> = outcome
                .iter()
                .zip(&lookups)
                .map(|(s, lookup)| lookup[s.as_str()])
                .collect();
            *pmf.entry(key).or_insert(0.0) += p;
        }
        if pmf.is_empty() {
            return Err(Error::EmptyPmf);
        }
        let sum: f64 = pmf.values().sum();
        if normalize {
            if sum <= 0.0 {
                return Err(Error::SumNotOne { sum });
            }
            for p in pmf.values_mut() {
                *p /= sum;
            }
        } else if (sum - 1.0).abs() > PROB_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        Ok(JointTable { variables, pmf })
    }

    /// The table's variables, in storage order.
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    /// Variable names in storage order.
    pub fn variable_names(&self) -> Vec<&str> {
        self.variables.iter().map(|v| v.name.as_str()).collect()
    }

    /// Number of outcomes with positive probability.
    pub fn support_size(&self) -> usize {
        self.pmf.len()
    }

    /// Iterates the support in deterministic order as (symbols, probability).
    pub fn support(&self) -> impl Iterator<Item = (Vec<&str>, f64)> {
        self.pmf.iter().map(|(key, &p)| {
            let outcome = key
                .iter()
                .enumerate()
                .map(|(vi, &si)| self.variables[vi].alphabet[si as usize].as_str())
                .collect();
            (outcome, p)
        })
    }

    /// Probability of one fully specified outcome; 0 for anything off-support
    /// (including symbols outside the alphabets).
    pub fn probability(&self, outcome: &[&str]) -> Result<f64> {
        if outcome.len() != self.variables.len() {
            return Err(Error::ArityMismatch {
                expected: self.variables.len(),
                got: outcome.len(),
            });
        }
        let mut key = Vec::with_capacity(outcome.len());
        for (vi, symbol) in outcome.iter().enumerate() {
            match self.variables[vi].alphabet.iter().position(|s| s == symbol) {
                Some(si) => key.push(si as u16),
                None => return Ok(0.0),
            }
        }
        Ok(self.pmf.get(&key).copied().unwrap_or(0.0))
    }

    pub(crate) fn pmf(&self) -> &BTreeMap<Vec<u16>, f64> {
        &self.pmf
    }

    pub(crate) fn index_of(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
            })
    }

    /// Index of `symbol` in `var`'s alphabet, or None when out of alphabet.
    pub(crate) fn symbol_index(&self, var: usize, symbol: &str) -> Option<u16> {
        self.variables[var]
            .alphabet
            .iter()
            .position(|s| s == symbol)
            .map(|i| i as u16)
    }

    pub(crate) fn symbol(&self, var: usize, index: u16) -> &str {
        &self.variables[var].alphabet[index as usize]
    }

    /// Marginal pmf over the given variable indices, keyed in index order.
    pub(crate) fn marginal(&self, indices: &[usize]) -> BTreeMap<Vec<u16>, f64> {
        let mut out: BTreeMap<Vec<u16>, f64> = BTreeMap::new();
        for (key, &p) in &self.pmf {
            let projected: Vec<u16> = indices.iter().map(|&i| key[i]).collect();
            *out.entry(projected).or_insert(0.0) += p;
        }
        out
    }

    /// Marginal distribution over `keep`, in the table's variable order.
    ///
    /// # Errors
    /// `EmptyKeepSet`, `UnknownVariable`.
    pub fn marginalize(&self, keep: &[&str]) -> Result<JointTable> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let mut keep_set = BTreeSet::new();
        for name in keep {
            keep_set.insert(self.index_of(name)?);
        }
        let indices: Vec<usize> = keep_set.into_iter().collect();
        let variables = indices.iter().map(|&i| self.variables[i].clone()).collect();
        Ok(JointTable {
            variables,
            pmf: self.marginal(&indices),
        })
    }

    /// Renormalized distribution over the remaining variables given fixed
    /// values for the evidence variables.
    ///
    /// # Errors
    /// `UnknownVariable`, `ZeroProbabilityEvidence` (value off-support or out
    /// of alphabet), `EmptyKeepSet` if no variables would remain.
    pub fn condition(&self, evidence: &[(&str, &str)]) -> Result<JointTable> {
        let mut pinned: BTreeMap<usize, u16> = BTreeMap::new();
        for (name, value) in evidence {
            let vi = self.index_of(name)?;
            let si =
                self.symbol_index(vi, value)
                    .ok_or_else(|| Error::ZeroProbabilityEvidence {
                        variable: name.to_string(),
                        value: value.to_string(),
                    })?;
            pinned.insert(vi, si);
        }
        let remaining: Vec<usize> = (0..self.variables.len())
            .filter(|i| !pinned.contains_key(i))
            .collect();
        if remaining.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let mut pmf: BTreeMap<Vec<u16>, f64> = BTreeMap::new();
        let mut total = 0.0;
        for (key, &p) in &self.pmf {
            if pinned.iter().all(|(&vi, &si)| key[vi] == si) {
                let projected: Vec<u16> = remaining.iter().map(|&i| key[i]).collect();
                *pmf.entry(projected).or_insert(0.0) += p;
                total += p;
            }
        }
        if total <= 0.0 {
            let (name, value) = evidence[0];
            return Err(Error::ZeroProbabilityEvidence {
                variable: name.to_string(),
                value: value.to_string(),
            });
        }
        for p in pmf.values_mut() {
            *p /= total;
        }
        let variables = remaining
            .iter()
            .map(|&i| self.variables[i].clone())
            .collect();
        Ok(JointTable { variables, pmf })
    }

    /// Regroups variables into named composites by splicing: each composite's
    /// symbol is the concatenation of its component symbols in block order.
    ///
    /// Blocks must cover the variable set (every variable appears in at least
    /// one block); overlapping blocks are allowed. Covering makes the original
    /// outcome recoverable from the composite outcome, so probabilities, and
    /// hence the joint entropy, are unchanged.
    ///
    /// # Errors
    /// `NotAPartition` (uncovered variable, duplicate component, empty spec),
    /// `UnknownVariable`, `DuplicateVariable` (composite name clash),
    /// `AmbiguousComposite` if two distinct component tuples splice to the
    /// same string.
    pub fn group(&self, blocks: &[(&str, Vec<&str>)]) -> Result<JointTable> {
        if blocks.is_empty() {
            return Err(Error::NotAPartition {
                reason: "no blocks supplied".to_string(),
            });
        }
        let mut names = BTreeSet::new();
        let mut block_indices: Vec<Vec<usize>> = Vec::new();
        let mut covered = BTreeSet::new();
        for (name, components) in blocks {
            if !names.insert(*name) {
                return Err(Error::DuplicateVariable {
                    name: name.to_string(),
                });
            }
            if components.is_empty() {
                return Err(Error::NotAPartition {
                    reason: format!("block {name:?} has no components"),
                });
            }
            let mut indices = Vec::new();
            for component in components {
                let vi = self.index_of(component)?;
                if indices.contains(&vi) {
                    return Err(Error::NotAPartition {
                        reason: format!("duplicate component {component:?} in block {name:?}"),
                    });
                }
                indices.push(vi);
            }
            covered.extend(indices.iter().copied());
            block_indices.push(indices);
        }
        if let Some(missing) = (0..self.variables.len()).find(|i| !covered.contains(i)) {
            return Err(Error::NotAPartition {
                reason: format!(
                    "variable {:?} not covered by any block",
                    self.variables[missing].name
                ),
            });
        }
        // Splicing must stay injective per block or outcomes would merge.
        let mut spliced_to_tuple: Vec<HashMap<String, Vec<u16>>> =
            vec![HashMap::new(); blocks.len()];
        let mut entries: Vec<(Vec<String>, f64)> = Vec::new();
        for (key, &p) in &self.pmf {
            let mut outcome = Vec::with_capacity(blocks.len());
            for (bi, indices) in block_indices.iter().enumerate() {
                let tuple: Vec<u16> = indices.iter().map(|&i| key[i]).collect();
                let spliced: String = indices
                    .iter()
                    .map(|&i| self.symbol(i, key[i]))
                    .collect::<Vec<_>>()
                    .concat();
                match spliced_to_tuple[bi].get(&spliced) {
                    Some(prior) if *prior != tuple => {
                        return Err(Error::AmbiguousComposite {
                            name: blocks[bi].0.to_string(),
                            symbol: spliced,
                        });
                    }
                    Some(_) => {}
                    None => {
                        spliced_to_tuple[bi].insert(spliced.clone(), tuple);
                    }
                }
                outcome.push(spliced);
            }
            entries.push((outcome, p));
        }
        let names: Vec<&str> = blocks.iter().map(|(name, _)| *name).collect();
        Self::build(&names, None, entries, false)
    }

    /// The values of `of` that co-occur with `anchor_var = anchor_value`:
    /// S_of(anchor) = { v : P(of = v, anchor) > 0 }, sorted.
    ///
    /// # Errors
    /// `UnknownVariable`, `ZeroProbabilityEvidence` if the anchor value has
    /// zero marginal probability.
    pub fn conditional_support(
        &self,
        anchor_var: &str,
        anchor_value: &str,
        of: &str,
    ) -> Result<Vec<String>> {
        let anchor = self.index_of(anchor_var)?;
        let of_index = self.index_of(of)?;
        let value = self.symbol_index(anchor, anchor_value).ok_or_else(|| {
            Error::ZeroProbabilityEvidence {
                variable: anchor_var.to_string(),
                value: anchor_value.to_string(),
            }
        })?;
        let mut values = BTreeSet::new();
        for key in self.pmf.keys() {
            if key[anchor] == value {
                values.insert(key[of_index]);
            }
        }
        if values.is_empty() {
            return Err(Error::ZeroProbabilityEvidence {
                variable: anchor_var.to_string(),
                value: anchor_value.to_string(),
            });
        }
        Ok(values
            .into_iter()
            .map(|si| self.symbol(of_index, si).to_string())
            .collect())
    }

    /// One row per support outcome, in deterministic order. Proportional
    /// sampling only for equiprobable tables; used by the CLI sample export.
    pub fn support_rows(&self) -> SampleSet {
        let variables = self.variables.iter().map(|v| v.name.clone()).collect();
        let rows = self
            .support()
            .map(|(outcome, _)| outcome.into_iter().map(str::to_string).collect())
            .collect();
        SampleSet { variables, rows }
    }

    /// Serializes to the JSON distribution format:
    /// `{"variables":[{"name":...,"alphabet":[...]}], "pmf":[{"outcome":[...],"p":...}]}`.
    pub fn to_json(&self) -> String {
        let file = DistFile {
            variables: self
                .variables
                .iter()
                .map(|v| DistVar {
                    name: v.name.clone(),
                    alphabet: v.alphabet.clone(),
                })
                .collect(),
            pmf: self
                .support()
                .map(|(outcome, p)| DistEntry {
                    outcome: outcome.into_iter().map(str::to_string).collect(),
                    p,
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("distribution serialization is infallible")
    }

    /// Parses the JSON distribution format. Declared alphabets are kept, so
    /// zero-probability entries may declare structural zeros.
    pub fn from_json(text: &str) -> Result<JointTable> {
        let file: DistFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut variables = Vec::new();
        for v in file.variables {
            variables.push(Variable::new(&v.name, v.alphabet)?);
        }
        let entries = file.pmf.into_iter().map(|e| (e.outcome, e.p)).collect();
        Self::from_pmf_with_variables(variables, entries)
    }
}
