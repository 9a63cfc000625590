//! Point counts N_j = #{x mod p^j : every pair-ideal generator ≡ 0} and the
//! volume slope −log_p(N_j/p^(jn))/j, which stays above lct(f, J_f²) − 0.15.

use singulct::exact::parse::parse;
use singulct::harness::verify::point_count_slopes;
use singulct::harness::RunConfig;

fn main() -> singulct::Result<()> {
    let cfg = RunConfig::default();
    let f = parse("x1^3 + x2^3", &["x1", "x2"])?;
    let (rows, check) = point_count_slopes(&f, 7, &cfg)?;
    println!("f = x₁³ + x₂³, p = 7, lct(f, J_f²) = 2/3");
    println!("{:>5} {:>12} {:>24}", "j", "N_j", "slope");
    for row in &rows {
        println!("{:>5} {:>12} {:>24}", row.level, row.count, row.slope);
    }
    println!("\n{} → {:?}", check.detail, check.verdict);
    Ok(())
}
