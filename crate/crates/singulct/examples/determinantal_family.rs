//! The generic determinantal hypersurface det(x_ij) = 0.
//!
//! lct of the pair ideal is computed by minimizing orbit codimension over
//! orbit contact order across matrix-arc partitions; a symbolic coefficient
//! certificate bounds every ratio below by 2, so the search value is exact.

use singulct::invariants::{
    lct_determinantal_pair, min_exp_family, orbit_codimension, orbit_contact_order,
    FamilyDescriptor,
};

fn main() -> singulct::Result<()> {
    for n in 2..=4u32 {
        let got = lct_determinantal_pair(n, 4)?;
        let alpha = min_exp_family(&FamilyDescriptor::determinantal(n)?)?;
        println!(
            "n = {}: lct(det, J²) = {} at partition {:?}, min exponent = {}",
            n, got.value, got.witness, alpha
        );
    }

    // A few candidate partitions and their ratios for n = 2.
    println!("\npartition  codim  contact  ratio");
    for lambda in [vec![1i64, 1], vec![2, 1], vec![2, 2], vec![3, 1]] {
        let c = orbit_codimension(&lambda)?;
        let o = orbit_contact_order(&lambda)?;
        println!(
            "{:<10} {:>5} {:>8}  {}/{}",
            format!("{:?}", lambda),
            c,
            o,
            c,
            o
        );
    }
    Ok(())
}
