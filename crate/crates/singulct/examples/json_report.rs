//! Build the full default suite and emit the canonical JSON report.
//!
//! Reports are deterministic byte-for-byte for a fixed configuration:
//! rationals are `num/den` strings, floats carry 17 significant digits, and
//! all iteration orders are fixed.

use singulct::harness::verify::full_suite;
use singulct::harness::RunConfig;

fn main() -> singulct::Result<()> {
    let cfg = RunConfig::from_env(); // honors SINGULCT_BUDGET
    let report = full_suite(&cfg)?;
    let json = report.to_json();
    let again = full_suite(&cfg)?.to_json();
    assert_eq!(json, again, "reports are byte-identical across runs");
    print!("{}", json);
    eprintln!(
        "-- {} families, {} checks, verdict {:?} --",
        report.families.len(),
        report.checks.len(),
        report.verdict
    );
    Ok(())
}
