//! Extracts the common part of two sources and uses it as the redundancy.
//!
//! The common part is the finest labeling both sources can compute from
//! their own value alone while agreeing on every outcome in the support.
//! Its information about the remaining variable is the redundancy atom.

use sid::atoms::format_bits;
use sid::{cases, oracle, shannon, Result};

fn main() -> Result<()> {
    let table = cases::generate_case(2)?;
    let cp = oracle::common_part(&table, &["X1", "X2"])?;

    println!("{} shared labels between X1 and X2", cp.label_count);
    for (source, labels) in &cp.labeling {
        print!("  {source}:");
        for (symbol, label) in labels {
            print!(" {symbol}->{label}");
        }
        println!();
    }

    let red = oracle::redundancy(&table, "X4", &["X1", "X2"])?;
    println!("I(common part; X4) = {}", format_bits(red));

    // With a single source the common part is the source itself, so the
    // redundancy collapses to plain mutual information.
    let single = oracle::redundancy(&table, "X4", &["X1"])?;
    let mi = shannon::mutual_information(&table, &["X1"], &["X4"])?;
    assert_eq!(single, mi);
    println!("single-source check: {} bits both ways", format_bits(mi));
    Ok(())
}
