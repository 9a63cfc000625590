//! Invariants of the diagonal hypersurfaces x_1^d + … + x_n^d.
//!
//! The pair-ideal lct has the closed form min{(n+d−2)/(2d−2), n/d}; the raw
//! two-parameter lattice minimization over blow-up chart valuations is run
//! alongside and must agree exactly.

use singulct::harness::verify::family_row;
use singulct::harness::RunConfig;
use singulct::invariants::{raw_min_diagonal, FamilyDescriptor};

fn main() -> singulct::Result<()> {
    let cfg = RunConfig::default();
    println!(
        "{:<10} {:>8} {:>8} {:>8} {:>8} {:>6}",
        "family", "lct_pair", "lct_f", "min_exp", "milnor", "rs"
    );
    for n in 2..=6u32 {
        for d in 2..=6u32 {
            let fam = FamilyDescriptor::diagonal(n, d)?;
            let row = family_row(&fam, &cfg)?;
            println!(
                "{:<10} {:>8} {:>8} {:>8} {:>8} {:>6}",
                row.family, row.lct_pair, row.lct_f, row.min_exp, row.milnor, row.rs
            );
        }
    }

    // The raw (a, b) search reports its minimizer.
    let raw = raw_min_diagonal(4, 3, 6)?;
    println!(
        "\nraw search for (n,d) = (4,3): min = {} at (a,b) = {:?}",
        raw.value, raw.witness
    );
    Ok(())
}
