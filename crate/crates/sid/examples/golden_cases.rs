//! Solves the four built-in XOR case studies and prints each atom next to
//! its known reference value.

use sid::atoms::format_bits;
use sid::{cases, oracle, Result};

fn main() -> Result<()> {
    for n in 1..=4 {
        let table = cases::generate_case(n)?;
        let atoms = oracle::solve_atoms(&table)?;
        let golden = cases::golden_atoms(n)?;
        println!("case {n}");
        println!(
            "  red {}   (expected {})",
            format_bits(atoms.red),
            format_bits(golden.red)
        );
        for (pair, value) in atoms.un.iter() {
            println!(
                "  un({},{}) {}   (expected {})",
                pair.0,
                pair.1,
                format_bits(value),
                format_bits(golden.un)
            );
        }
        println!(
            "  syn {}   (expected {})",
            format_bits(atoms.syn),
            format_bits(golden.syn)
        );
        println!("  max deviation {:.3e} bits", golden.max_deviation(&atoms));
    }
    Ok(())
}
