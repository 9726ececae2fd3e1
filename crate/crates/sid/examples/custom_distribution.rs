//! Decomposes a distribution built from scratch and prints the full report.

use sid::table::JointTable;
use sid::{atoms, oracle, Result};

fn row(a: &str, b: &str, c: &str, w: f64) -> (Vec<String>, f64) {
    (vec![a.to_string(), b.to_string(), c.to_string()], w)
}

fn main() -> Result<()> {
    // A lopsided AND gate: two biased inputs and their conjunction.
    // Weights normalize automatically.
    let table = JointTable::from_weights(
        &["in1", "in2", "out"],
        vec![
            row("0", "0", "0", 2.0),
            row("0", "1", "0", 2.0),
            row("1", "0", "0", 1.0),
            row("1", "1", "1", 3.0),
        ],
    )?;

    let atoms = oracle::solve_atoms(&table)?;
    println!("{}", atoms::to_report_json(&table, &atoms)?);

    let residuals = atoms::residuals(&table, &atoms)?;
    println!(
        "residuals: joint {:.3e}, tc {:.3e}, coi {:.3e}",
        residuals.joint, residuals.tc, residuals.coi
    );
    Ok(())
}
