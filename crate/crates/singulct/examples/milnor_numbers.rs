//! Milnor numbers by exact colength stabilization.

use singulct::exact::parse::parse;
use singulct::invariants::{milnor_number, FamilyDescriptor, MilnorMode, MilnorOptions};

fn main() -> singulct::Result<()> {
    let opts = MilnorOptions::default();

    let node = parse("x^2 + y^2", &["x", "y"])?;
    println!("μ(x² + y²)  = {}", milnor_number(&node, &opts)?);

    let cusp = parse("x^3 - y^2", &["x", "y"])?;
    println!("μ(x³ − y²)  = {}", milnor_number(&cusp, &opts)?);

    let e8 = parse("x^3 + y^5", &["x", "y"])?;
    println!("μ(x³ + y⁵)  = {}", milnor_number(&e8, &opts)?);

    for (n, d) in [(2u32, 4u32), (3, 3), (4, 3)] {
        let f = FamilyDescriptor::diagonal(n, d)?.polynomial();
        println!(
            "μ(diag({}, {})) = {}   (expected (d−1)^n = {})",
            n,
            d,
            milnor_number(&f, &opts)?,
            (d as u64 - 1).pow(n)
        );
    }

    // The modular fast path must agree with exact arithmetic.
    let modular = MilnorOptions {
        mode: MilnorMode::Modular,
        ..MilnorOptions::default()
    };
    println!(
        "μ(x³ − y²) via two-prime modular elimination = {}",
        milnor_number(&cusp, &modular)?
    );

    // Non-isolated singularities fail loudly instead of stabilizing.
    let bad = parse("x^2*y^2", &["x", "y"])?;
    match milnor_number(&bad, &opts) {
        Err(e) => println!("μ(x²y²) rejected as expected: {}", e),
        Ok(v) => panic!("unexpected μ = {}", v),
    }
    Ok(())
}
