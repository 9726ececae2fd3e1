//! Shows when the structural shortcut applies and when it declines.
//!
//! `try_direct` pins the redundancy without search if the table exhibits an
//! independent pair (redundancy 0) or a deterministic dependency (redundancy
//! equal to an entropy). Tables without such structure get `None` and must
//! go through the full solver.

use sid::atoms::format_bits;
use sid::{cases, direct, Result};

fn main() -> Result<()> {
    for name in [
        "independent_bits",
        "copy_triple",
        "xor_triple",
        "partial_copy",
    ] {
        let table = cases::fixture(name)?;
        match direct::try_direct(&table)? {
            Some(atoms) => println!(
                "{name}: red {} syn {}",
                format_bits(atoms.red),
                format_bits(atoms.syn)
            ),
            None => println!("{name}: no usable structure"),
        }
    }

    // The case studies are neither independent nor deterministic anywhere.
    let table = cases::generate_case(1)?;
    assert!(direct::try_direct(&table)?.is_none());
    println!("case 1: no usable structure, use oracle::solve_atoms");
    Ok(())
}
