//! Sweep of the inequality α̃_f ≥ lct(f, J_f²) across both families.
//!
//! The inequality is an exact rational comparison on every member; it is
//! strict exactly for diagonal members with 3 ≤ d < n, and an equality for
//! d = 2, for d ≥ n, and for every determinantal member.

use singulct::harness::verify::verify_thm_b;
use singulct::harness::RunConfig;

fn main() -> singulct::Result<()> {
    let cfg = RunConfig::default();
    let report = verify_thm_b(&cfg.default_grid(), &cfg)?;
    println!(
        "{:<10} {:>8} {:>9} {:>10}",
        "family", "min_exp", "lct_pair", "relation"
    );
    for row in &report.families {
        println!(
            "{:<10} {:>8} {:>9} {:>10}",
            row.family,
            row.min_exp,
            row.lct_pair,
            match row.thm_b_strict {
                Some(true) => "strict >",
                Some(false) => "equality",
                None => "-",
            }
        );
    }
    for check in &report.checks {
        println!("\n{}: {:?} — {}", check.name, check.verdict, check.detail);
    }
    Ok(())
}
