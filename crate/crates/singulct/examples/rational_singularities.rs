//! Rational-singularities classification: the verdict is lct(f, J_f²) > 1,
//! cross-checked against the minimal-exponent criterion α̃ > 1 whenever the
//! exponent is known.

use singulct::exact::parse::parse;
use singulct::invariants::{classify_family, classify_polynomial, FamilyDescriptor};

fn main() -> singulct::Result<()> {
    println!(
        "{:<12} {:>9} {:>6} {:>9} {:>7}",
        "input", "lct_pair", "rs", "min_exp", "saito"
    );
    for fam in [
        FamilyDescriptor::diagonal(3, 2)?, // rational singularities (d < n)
        FamilyDescriptor::diagonal(2, 2)?, // boundary case, lct = 1
        FamilyDescriptor::diagonal(2, 4)?, // no rational singularities (d ≥ n)
        FamilyDescriptor::determinantal(3)?,
    ] {
        let c = classify_family(&fam)?;
        println!(
            "{:<12} {:>9} {:>6} {:>9} {:>7}",
            fam.label(),
            c.lct_pair.to_string(),
            c.rational_singularities,
            c.min_exp
                .map(|a| a.to_string())
                .unwrap_or_else(|| "-".into()),
            c.saito_agrees
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
        );
    }

    // Explicit polynomials go through pathway resolution.
    for (text, vars) in [
        ("x^2", vec!["x"]),
        ("x", vec!["x"]),
        ("x1^3 + x2^3", vec!["x1", "x2"]),
    ] {
        let f = parse(text, &vars)?;
        let c = classify_polynomial(&f)?;
        println!(
            "{:<12} {:>9} {:>6} {:>9} {:>7}   [{}]",
            text,
            c.lct_pair.to_string(),
            c.rational_singularities,
            c.min_exp
                .map(|a| a.to_string())
                .unwrap_or_else(|| "-".into()),
            c.saito_agrees
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
            c.pathway.label(),
        );
    }
    Ok(())
}
