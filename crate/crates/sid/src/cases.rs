//! Built-in XOR case studies and small reference tables.
//!
//! The four case studies share one chassis: six independent fair coins
//! `a b c d e f`, optionally extended with parity bits, packed into 4-bit
//! macro variables. Every case keeps
//!
//! - `X1 = (a, b, c, d)` and
//! - `X2 = (a, b, e, f)`
//!
//! and swaps in a different third variable:
//!
//! - case 1: `X3 = (c, d, e, f)`: each pair shares two private coins, so
//!   everything is unique information;
//! - case 2: `X4 = (a, c, e, h)` with `h = d XOR f`: one coin redundant,
//!   one coin unique per pair, one parity bit synergistic;
//! - case 3: `X5 = (a, b, g, h)` with `g = c XOR e`, `h = d XOR f`: two
//!   coins redundant, two parity bits synergistic;
//! - case 4: `X6 = (a, b, i, j)` with `i = c XOR f`, `j = d XOR e`: the
//!   crossed-parity variant of case 3, same atom profile.
//!
//! Each case yields 64 equiprobable outcomes (mass exactly 1/64) and its
//! atoms are known in closed form; see [`golden_atoms`]. The [`fixture`]
//! tables are smaller single-purpose references (pure synergy, pure
//! redundancy, full independence, one unique channel).

use std::collections::BTreeMap;

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::shannon::Bits;
use crate::table::JointTable;

/// Parity bit: output coin name, then its two input coins.
type Parity = (&'static str, &'static str, &'static str);
/// Macro variable: name plus the four coins it packs, in symbol order.
type MacroVar = (&'static str, [&'static str; 4]);

/// Blueprint for one case study: coin columns, parity definitions, and the
/// packing of coins into macro variables.
#[derive(Debug, Clone)]
pub struct CaseSpec {
    pub number: u32,
    base: [&'static str; 6],
    derived: Vec<Parity>,
    macros: Vec<MacroVar>,
}

impl CaseSpec {
    /// Blueprint for case `n` (1 through 4).
    pub fn for_case(n: u32) -> Result<CaseSpec> {
        let (derived, third): (Vec<Parity>, MacroVar) = match n {
            1 => (vec![], ("X3", ["c", "d", "e", "f"])),
            2 => (vec![("h", "d", "f")], ("X4", ["a", "c", "e", "h"])),
            3 => (
                vec![("g", "c", "e"), ("h", "d", "f")],
                ("X5", ["a", "b", "g", "h"]),
            ),
            4 => (
                vec![("i", "c", "f"), ("j", "d", "e")],
                ("X6", ["a", "b", "i", "j"]),
            ),
            _ => return Err(Error::InvalidCaseNumber { got: n }),
        };
        Ok(CaseSpec {
            number: n,
            base: ["a", "b", "c", "d", "e", "f"],
            derived,
            macros: vec![
                ("X1", ["a", "b", "c", "d"]),
                ("X2", ["a", "b", "e", "f"]),
                third,
            ],
        })
    }

    /// Names of the three macro variables, e.g. `["X1", "X2", "X5"]`.
    pub fn macro_names(&self) -> Vec<&'static str> {
        self.macros.iter().map(|(name, _)| *name).collect()
    }

    /// The coin-level table: one column per coin and parity bit, 64
    /// equiprobable outcomes.
    pub fn micro_table(&self) -> JointTable {
        let mut columns: Vec<&str> = self.base.to_vec();
        columns.extend(self.derived.iter().map(|(name, _, _)| *name));
        let mut entries = Vec::with_capacity(64);
        for m in 0u32..64 {
            let mut values: BTreeMap<&str, u8> = BTreeMap::new();
            for (pos, name) in self.base.iter().enumerate() {
                values.insert(*name, ((m >> (5 - pos)) & 1) as u8);
            }
            for (name, lhs, rhs) in &self.derived {
                let parity = values[lhs] ^ values[rhs];
                values.insert(*name, parity);
            }
            let outcome = columns.iter().map(|c| values[c].to_string()).collect();
            entries.push((outcome, 1.0 / 64.0));
        }
        JointTable::from_pmf(&columns, entries).expect("coin table is well formed")
    }

    /// The macro-level table: coins grouped into the three 4-bit variables.
    ///
    /// Grouping preserves all probabilities, so the macro table has the same
    /// 64-outcome support and joint entropy as the coin table.
    pub fn macro_table(&self) -> Result<JointTable> {
        let blocks: Vec<(&str, Vec<&str>)> = self
            .macros
            .iter()
            .map(|(name, components)| (*name, components.to_vec()))
            .collect();
        self.micro_table().group(&blocks)
    }
}

/// The macro table for case `n`: three 4-bit variables, 64 equiprobable
/// outcomes, symbols like `"1011"`.
///
/// ```
/// use sid::cases::generate_case;
/// let t = generate_case(3).unwrap();
/// assert_eq!(t.variable_names(), vec!["X1", "X2", "X5"]);
/// assert_eq!(t.support_size(), 64);
/// ```
pub fn generate_case(n: u32) -> Result<JointTable> {
    CaseSpec::for_case(n)?.macro_table()
}

/// Closed-form atoms of a case study. The three unique atoms coincide, as do
/// the three external atoms, so one scalar each suffices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenAtoms {
    pub red: Bits,
    pub un: Bits,
    pub syn: Bits,
    pub ext: Bits,
}

impl GoldenAtoms {
    /// Largest absolute deviation of a computed atom set from these values,
    /// across redundancy, all unique atoms, synergy, and all external atoms.
    pub fn max_deviation(&self, atoms: &AtomSet) -> Bits {
        let mut worst = (atoms.red - self.red).abs();
        for (_, value) in atoms.un.iter() {
            worst = worst.max((value - self.un).abs());
        }
        worst = worst.max((atoms.syn - self.syn).abs());
        for value in atoms.ext.values() {
            worst = worst.max((value - self.ext).abs());
        }
        worst
    }
}

/// Known atoms for case `n`.
///
/// The joint entropy is 6 bits in every case, split as
/// `3 un + 2 syn + red = 6` with all external atoms zero.
pub fn golden_atoms(n: u32) -> Result<GoldenAtoms> {
    match n {
        1 => Ok(GoldenAtoms {
            red: 0.0,
            un: 2.0,
            syn: 0.0,
            ext: 0.0,
        }),
        2 => Ok(GoldenAtoms {
            red: 1.0,
            un: 1.0,
            syn: 1.0,
            ext: 0.0,
        }),
        3 | 4 => Ok(GoldenAtoms {
            red: 2.0,
            un: 0.0,
            syn: 2.0,
            ext: 0.0,
        }),
        _ => Err(Error::InvalidCaseNumber { got: n }),
    }
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 4] = [
    "xor_triple",
    "copy_triple",
    "independent_bits",
    "partial_copy",
];

/// Small reference tables with one dominant atom each:
///
/// - `xor_triple`: `X3 = X1 XOR X2` over fair coins; one bit of synergy and
///   nothing else.
/// - `copy_triple`: three copies of one fair coin; one bit of redundancy.
/// - `independent_bits`: three independent fair coins; one external bit per
///   variable.
/// - `partial_copy`: `X1 = (a, b)`, `X2 = b`, `X3 = c`; one unique bit on
///   the (X1, X2) pair, external bits on X1 and X3.
pub fn fixture(name: &str) -> Result<JointTable> {
    let names = ["X1", "X2", "X3"];
    let rows: Vec<[&str; 3]> = match name {
        "xor_triple" => vec![
            ["0", "0", "0"],
            ["0", "1", "1"],
            ["1", "0", "1"],
            ["1", "1", "0"],
        ],
        "copy_triple" => vec![["0", "0", "0"], ["1", "1", "1"]],
        "independent_bits" => {
            let mut rows = Vec::new();
            for m in 0u32..8 {
                let bits = [(m >> 2) & 1, (m >> 1) & 1, m & 1];
                rows.push(bits);
            }
            return JointTable::from_weights(
                &names,
                rows.into_iter()
                    .map(|bits| (bits.iter().map(|b| b.to_string()).collect(), 1.0))
                    .collect(),
            );
        }
        "partial_copy" => {
            let mut rows = Vec::new();
            for m in 0u32..8 {
                let (a, b, c) = ((m >> 2) & 1, (m >> 1) & 1, m & 1);
                rows.push((vec![format!("{a}{b}"), b.to_string(), c.to_string()], 1.0));
            }
            return JointTable::from_weights(&names, rows);
        }
        _ => {
            return Err(Error::UnknownFixture {
                name: name.to_string(),
            })
        }
    };
    JointTable::from_weights(
        &names,
        rows.into_iter()
            .map(|row| (row.iter().map(|s| s.to_string()).collect(), 1.0))
            .collect(),
    )
}
