//! Localization identities at level m ≥ 2.
//!
//! The full sum, the sum restricted to points where f vanishes to order
//! ≥ m−1, and the sum restricted to points where every pair-ideal generator
//! vanishes to order ≥ m−1 all agree (for p large relative to f). The
//! complements are zero-tested exactly in the cyclotomic lattice, so
//! agreement is certified, not merely observed within float noise.

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;
use crate::expsum::cyclotomic;
use crate::expsum::histogram::{enumerate_histograms, Condition, ResidueHistogram};
use crate::expsum::modulus::PrimePowerModulus;
use crate::expsum::subscheme::SubschemeSpec;
use crate::expsum::sum::{exp_sum_from_histogram, ExpSumValue};
use crate::invariants::presentation::pair_ideal;

#[derive(Clone, Debug)]
pub struct LocalizationReport {
    pub p: u64,
    pub m: u32,
    pub twist: u64,
    pub full: ExpSumValue,
    pub restricted_f: ExpSumValue,
    pub restricted_pair: ExpSumValue,
    /// Largest pairwise |difference| between the three complex values.
    pub max_discrepancy: f64,
    /// The complement sums (full − restricted) are exactly zero in ℤ[ζ].
    pub complement_f_exact_zero: bool,
    pub complement_pair_exact_zero: bool,
    /// p exceeds the degree threshold below which the identities are not
    /// expected to hold.
    pub p_above_threshold: bool,
    pub degree_threshold: u64,
}

pub fn localization_check(
    f: &Polynomial,
    modulus: &PrimePowerModulus,
    z: &SubschemeSpec,
    twist: u64,
    budget: u64,
) -> Result<LocalizationReport> {
    if modulus.m() < 2 {
        return Err(Error::LevelTooSmall {
            m: modulus.m(),
            min: 2,
        });
    }
    let level = modulus.lower_level(modulus.m() - 1);
    let pair = pair_ideal(f)?;
    let conditions = [
        Condition {
            gens: vec![f.clone()],
            modulus: level,
        },
        Condition {
            gens: pair.generators().to_vec(),
            modulus: level,
        },
    ];
    let mut hists = enumerate_histograms(f, modulus, z, &conditions, budget)?.into_iter();
    let full_counts = hists.next().expect("full histogram");
    let f_counts = hists.next().expect("f-restricted histogram");
    let pair_counts = hists.next().expect("pair-restricted histogram");

    let complement_f_exact_zero = complement_vanishes(&full_counts, &f_counts, modulus, twist);
    let complement_pair_exact_zero =
        complement_vanishes(&full_counts, &pair_counts, modulus, twist);

    let n = f.n_vars();
    let full = exp_sum_from_histogram(
        &ResidueHistogram::from_counts(*modulus, n, full_counts),
        twist,
    )?;
    let restricted_f =
        exp_sum_from_histogram(&ResidueHistogram::from_counts(*modulus, n, f_counts), twist)?;
    let restricted_pair = exp_sum_from_histogram(
        &ResidueHistogram::from_counts(*modulus, n, pair_counts),
        twist,
    )?;

    let d = |a: &ExpSumValue, b: &ExpSumValue| {
        let re = a.re - b.re;
        let im = a.im - b.im;
        (re * re + im * im).sqrt()
    };
    let max_discrepancy = d(&full, &restricted_f)
        .max(d(&full, &restricted_pair))
        .max(d(&restricted_f, &restricted_pair));

    let degree_threshold = f.total_degree();
    Ok(LocalizationReport {
        p: modulus.p(),
        m: modulus.m(),
        twist,
        full,
        restricted_f,
        restricted_pair,
        max_discrepancy,
        complement_f_exact_zero,
        complement_pair_exact_zero,
        p_above_threshold: modulus.p() > degree_threshold,
        degree_threshold,
    })
}

/// Exact zero test of Σ (full − restricted)_r ζ^(twist·r).
fn complement_vanishes(
    full: &[u64],
    restricted: &[u64],
    modulus: &PrimePowerModulus,
    twist: u64,
) -> bool {
    let m_value = modulus.value();
    let mut lattice = vec![0i128; m_value as usize];
    for (r, (&a, &b)) in full.iter().zip(restricted).enumerate() {
        debug_assert!(a >= b, "restriction can only drop points");
        let diff = (a - b) as i128;
        if diff != 0 {
            let t = (twist as u128 * r as u128 % m_value as u128) as usize;
            lattice[t] += diff;
        }
    }
    cyclotomic::vanishes(lattice, modulus.p(), modulus.m())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse;

    fn check(f: &str, vars: &[&str], p: u64, m: u32) -> LocalizationReport {
        let f = parse(f, vars).unwrap();
        let z = SubschemeSpec::full_space(f.n_vars());
        localization_check(&f, &PrimePowerModulus::new(p, m).unwrap(), &z, 1, 1 << 24).unwrap()
    }

    #[test]
    fn square_at_p5_level2() {
        let r = check("x^2", &["x"], 5, 2);
        assert!(r.complement_f_exact_zero);
        assert!(r.complement_pair_exact_zero);
        assert!(r.max_discrepancy < 1e-12);
        assert!(r.p_above_threshold);
    }

    #[test]
    fn two_squares_at_p7_level3() {
        let r = check("x1^2 + x2^2", &["x1", "x2"], 7, 3);
        assert!(r.complement_f_exact_zero);
        assert!(r.complement_pair_exact_zero);
        assert!(r.max_discrepancy < 1e-9);
    }

    #[test]
    fn smooth_form_gives_three_zeros() {
        let r = check("x", &["x"], 5, 2);
        assert!(r.full.exact_zero);
        assert!(r.restricted_f.exact_zero);
        assert!(r.restricted_pair.exact_zero);
        assert_eq!(r.max_discrepancy, 0.0);
    }

    #[test]
    fn level_one_is_rejected() {
        let f = parse("x^2", &["x"]).unwrap();
        let z = SubschemeSpec::full_space(1);
        assert!(matches!(
            localization_check(&f, &PrimePowerModulus::new(5, 1).unwrap(), &z, 1, 1 << 20),
            Err(Error::LevelTooSmall { .. })
        ));
    }
}
