//! Normalized exponential sums E(p^m) from residue histograms.
//!
//! The histogram carries all the arithmetic content; this layer only attaches
//! the transcendental factor. Terms are accumulated in fixed increasing-r
//! order with compensated summation, so a given histogram always produces the
//! same bits; the accumulated float error on |E| is below p^m · 2^(−50).
//! Exact vanishing is certified separately in the cyclotomic integer
//! lattice, never inferred from a small float.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::expsum::cyclotomic;
use crate::expsum::histogram::ResidueHistogram;

/// E = p^(−mn) Σ_r c_r e^(2πi·a·r/p^m) for a unit twist a.
#[derive(Clone, Debug)]
pub struct ExpSumValue {
    pub p: u64,
    pub m: u32,
    pub n_vars: usize,
    pub twist: u64,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    /// Certified in ℤ[ζ]: the unnormalized sum is exactly zero.
    pub exact_zero: bool,
}

pub fn exp_sum_from_histogram(h: &ResidueHistogram, twist: u64) -> Result<ExpSumValue> {
    let p = h.modulus().p();
    let m_value = h.modulus().value();
    if twist.is_multiple_of(p) {
        return Err(Error::TwistNotUnit { twist, p });
    }
    let twist = twist % m_value;

    // Fixed r-ascending order + Kahan compensation: deterministic bits.
    let mut re = 0f64;
    let mut re_c = 0f64;
    let mut im = 0f64;
    let mut im_c = 0f64;
    let scale = 2.0 * PI / m_value as f64;
    for (r, &count) in h.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let t = (twist as u128 * r as u128 % m_value as u128) as u64;
        let angle = scale * t as f64;
        let c = count as f64;
        kahan_add(&mut re, &mut re_c, c * angle.cos());
        kahan_add(&mut im, &mut im_c, c * angle.sin());
    }
    let norm = (m_value as f64).powi(h.n_vars() as i32);
    let re = re / norm;
    let im = im / norm;

    let mut lattice = vec![0i128; m_value as usize];
    for (r, &count) in h.counts().iter().enumerate() {
        let t = (twist as u128 * r as u128 % m_value as u128) as usize;
        lattice[t] += count as i128;
    }
    let exact_zero = cyclotomic::vanishes(lattice, p, h.modulus().m());

    Ok(ExpSumValue {
        p,
        m: h.modulus().m(),
        n_vars: h.n_vars(),
        twist,
        re: if exact_zero { 0.0 } else { re },
        im: if exact_zero { 0.0 } else { im },
        abs: if exact_zero {
            0.0
        } else {
            (re * re + im * im).sqrt()
        },
        exact_zero,
    })
}

#[inline]
fn kahan_add(sum: &mut f64, comp: &mut f64, value: f64) {
    let y = value - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse;
    use crate::expsum::histogram::residue_histogram;
    use crate::expsum::modulus::PrimePowerModulus;
    use crate::expsum::subscheme::SubschemeSpec;

    fn sum_of(f: &str, vars: &[&str], p: u64, m: u32, twist: u64) -> ExpSumValue {
        let f = parse(f, vars).unwrap();
        let h = residue_histogram(
            &f,
            &PrimePowerModulus::new(p, m).unwrap(),
            &SubschemeSpec::full_space(f.n_vars()),
            1 << 22,
        )
        .unwrap();
        exp_sum_from_histogram(&h, twist).unwrap()
    }

    #[test]
    fn full_character_sum_cancels_exactly() {
        for (p, m) in [(3u64, 1u32), (5, 1), (7, 2), (5, 3)] {
            let e = sum_of("x", &["x"], p, m, 1);
            assert!(e.exact_zero, "p={}, m={}", p, m);
            assert_eq!(e.abs, 0.0);
        }
    }

    #[test]
    fn gauss_sum_magnitude() {
        // |E| = 1/3 for x² mod 9
        let e = sum_of("x^2", &["x"], 3, 2, 1);
        assert!(!e.exact_zero);
        assert!((e.abs - 1.0 / 3.0).abs() < 1e-12, "got {}", e.abs);
    }

    #[test]
    fn constant_has_unit_modulus() {
        let e = sum_of("2", &["x"], 5, 1, 1);
        assert!((e.abs - 1.0).abs() < 1e-12);
        assert!(!e.exact_zero);
    }

    #[test]
    fn twist_must_be_a_unit() {
        let f = parse("x", &["x"]).unwrap();
        let h = residue_histogram(
            &f,
            &PrimePowerModulus::new(5, 2).unwrap(),
            &SubschemeSpec::full_space(1),
            1 << 20,
        )
        .unwrap();
        assert!(matches!(
            exp_sum_from_histogram(&h, 5),
            Err(Error::TwistNotUnit { .. })
        ));
        assert!(exp_sum_from_histogram(&h, 26).is_ok()); // 26 ≡ 1 mod 25
    }

    #[test]
    fn twisting_permutes_the_histogram() {
        // E with twist a equals E of a·f with twist 1; at the histogram level
        // the counts permute exactly by r ↦ a·r.
        let fa = parse("3*x^2 + x", &["x"]).unwrap();
        let scaled = parse("9*x^2 + 3*x", &["x"]).unwrap(); // 3·f
        let modulus = PrimePowerModulus::new(7, 2).unwrap();
        let z = SubschemeSpec::full_space(1);
        let h = residue_histogram(&fa, &modulus, &z, 1 << 20).unwrap();
        let hs = residue_histogram(&scaled, &modulus, &z, 1 << 20).unwrap();
        for r in 0..49u64 {
            assert_eq!(h.counts()[r as usize], hs.counts()[(3 * r % 49) as usize]);
        }
        let via_twist = exp_sum_from_histogram(&h, 3).unwrap();
        let direct = exp_sum_from_histogram(&hs, 1).unwrap();
        assert!((via_twist.re - direct.re).abs() < 1e-12);
        assert!((via_twist.im - direct.im).abs() < 1e-12);
    }

    #[test]
    fn conjugate_twists_have_equal_magnitude() {
        let e1 = sum_of("x^3 + 2*x", &["x"], 7, 2, 1);
        let e2 = sum_of("x^3 + 2*x", &["x"], 7, 2, 48); // −1 mod 49
        assert!((e1.abs - e2.abs).abs() < 1e-12);
        assert!((e1.im + e2.im).abs() < 1e-12);
    }
}
