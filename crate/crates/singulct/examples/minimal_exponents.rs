//! Minimal exponents from Bernstein-Sato root data, and the induced lct.

use singulct::exact::rational::rat;
use singulct::invariants::{
    diagonal_bfunction_roots, lct_from_min_exp, min_exp_family, min_exp_from_roots, BFunctionRoots,
    FamilyDescriptor,
};

fn main() -> singulct::Result<()> {
    // Diagonal cubic in two variables: Yano's product formula.
    let roots = diagonal_bfunction_roots(2, 3)?;
    println!("b-function roots of x³ + y³ (root, multiplicity):");
    for (r, m) in roots.roots() {
        println!("  {}  ×{}", r, m);
    }
    let alpha = min_exp_from_roots(&roots);
    println!(
        "min exponent = {}   lct(f) = {}",
        alpha,
        lct_from_min_exp(&alpha)?
    );

    // The smooth convention: b_f(s) = s + 1 gives an infinite exponent.
    let smooth = BFunctionRoots::new(vec![(rat(-1, 1), 1)])?;
    let alpha = min_exp_from_roots(&smooth);
    println!(
        "\nsmooth hypersurface: min exponent = {}, lct = {}",
        alpha,
        lct_from_min_exp(&alpha)?
    );

    // Families.
    for fam in [
        FamilyDescriptor::diagonal(4, 3)?,
        FamilyDescriptor::diagonal(2, 2)?,
        FamilyDescriptor::determinantal(5)?,
    ] {
        println!(
            "min exponent of {} = {}",
            fam.label(),
            min_exp_family(&fam)?
        );
    }
    Ok(())
}
