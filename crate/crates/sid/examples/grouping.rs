//! Builds a coin-level table and groups the coins into macro variables.
//!
//! Grouping concatenates symbols and accumulates probabilities, so nothing
//! is lost: the grouped table carries the same joint distribution under new
//! variable boundaries. Blocks may overlap, which is exactly how the case
//! studies share coins between their macro variables.

use sid::cases::CaseSpec;
use sid::{oracle, shannon, Result};

fn main() -> Result<()> {
    let spec = CaseSpec::for_case(3)?;
    let micro = spec.micro_table();
    println!(
        "micro table: {} columns, {} outcomes, H = {} bits",
        micro.variable_names().len(),
        micro.support_size(),
        shannon::entropy(&micro, &micro.variable_names())?
    );

    let macro_table = micro.group(&[
        ("X1", vec!["a", "b", "c", "d"]),
        ("X2", vec!["a", "b", "e", "f"]),
        ("X5", vec!["a", "b", "g", "h"]),
    ])?;
    println!(
        "grouped: {:?}, {} outcomes, H = {} bits",
        macro_table.variable_names(),
        macro_table.support_size(),
        shannon::entropy(&macro_table, &macro_table.variable_names())?
    );

    assert_eq!(macro_table, spec.macro_table()?);

    let atoms = oracle::solve_atoms(&macro_table)?;
    println!("red {} syn {}", atoms.red, atoms.syn);
    Ok(())
}
