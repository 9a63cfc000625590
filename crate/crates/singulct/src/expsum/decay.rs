//! Empirical decay exponents over grids of prime-power levels.

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;
use crate::expsum::histogram::residue_histogram;
use crate::expsum::modulus::PrimePowerModulus;
use crate::expsum::subscheme::SubschemeSpec;
use crate::expsum::sum::exp_sum_from_histogram;

/// Which unit twists to sweep per (p, m) cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistSample {
    /// All units when p^m ≤ 256, otherwise {1, …, min(p−1, 8)}.
    Auto,
    /// Every unit in [1, p^m).
    All,
    /// The first k units.
    First(u32),
}

#[derive(Clone, Debug)]
pub struct DecayRecord {
    pub p: u64,
    pub m: u32,
    pub max_abs: f64,
    /// Every sampled twist was certified exactly zero.
    pub all_exact_zero: bool,
    /// s(p, m) = −log_p(max_abs)/m, clamped at 0; None encodes +∞.
    pub exponent: Option<f64>,
    pub twists_sampled: u64,
}

#[derive(Clone, Debug)]
pub struct DecayProfile {
    pub records: Vec<DecayRecord>,
    /// min of s(p, m) over m ≥ 2, per prime; None encodes +∞.
    pub sigma_hat_per_prime: Vec<(u64, Option<f64>)>,
    /// min over the sampled primes; None encodes +∞. An empirical estimate,
    /// not a certified supremum over all characters.
    pub sigma_hat: Option<f64>,
}

pub fn decay_profile(
    f: &Polynomial,
    z: &SubschemeSpec,
    primes: &[u64],
    m_max: u32,
    sample: TwistSample,
    budget: u64,
) -> Result<DecayProfile> {
    if primes.is_empty() {
        return Err(Error::EmptyInput("prime list".to_string()));
    }
    if m_max == 0 {
        return Err(Error::InvalidConfig("mMax must be positive".to_string()));
    }
    let mut records = Vec::new();
    let mut per_prime = Vec::new();
    for &p in primes {
        for m in 1..=m_max {
            let modulus = PrimePowerModulus::new(p, m)?;
            let h = residue_histogram(f, &modulus, z, budget)?;
            let twists = twist_set(sample, p, modulus.value());
            let mut max_abs = 0f64;
            let mut all_zero = true;
            for &a in &twists {
                let e = exp_sum_from_histogram(&h, a)?;
                if !e.exact_zero {
                    all_zero = false;
                    if e.abs > max_abs {
                        max_abs = e.abs;
                    }
                }
            }
            let exponent = if all_zero {
                None
            } else {
                Some((-max_abs.ln() / (m as f64 * (p as f64).ln())).max(0.0))
            };
            records.push(DecayRecord {
                p,
                m,
                max_abs,
                all_exact_zero: all_zero,
                exponent,
                twists_sampled: twists.len() as u64,
            });
        }
        // m = 1 rows are reported but never enter the summary.
        let s = min_exponent(records.iter().filter(|r| r.p == p && r.m >= 2));
        per_prime.push((p, s));
    }
    // A prime whose every m ≥ 2 level vanished contributes +∞ and drops out
    // of the min; if every prime vanishes the summary itself is +∞ (None).
    let sigma_hat = per_prime
        .iter()
        .filter_map(|(_, s)| *s)
        .fold(None::<f64>, |acc, s| Some(acc.map_or(s, |a| a.min(s))));
    Ok(DecayProfile {
        records,
        sigma_hat_per_prime: per_prime,
        sigma_hat,
    })
}

fn min_exponent<'a>(records: impl Iterator<Item = &'a DecayRecord>) -> Option<f64> {
    let mut out: Option<f64> = None;
    for r in records {
        if let Some(s) = r.exponent {
            out = Some(out.map_or(s, |a: f64| a.min(s)));
        }
    }
    out
}

fn twist_set(sample: TwistSample, p: u64, modulus: u64) -> Vec<u64> {
    let units = || (1..modulus).filter(|a| a % p != 0);
    match sample {
        TwistSample::Auto => {
            if modulus <= 256 {
                units().collect()
            } else {
                (1..=(p - 1).min(8)).collect()
            }
        }
        TwistSample::All => units().collect(),
        TwistSample::First(k) => units().take(k.max(1) as usize).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse;

    #[test]
    fn square_decays_at_one_half() {
        let f = parse("x^2", &["x"]).unwrap();
        let z = SubschemeSpec::full_space(1);
        let profile = decay_profile(&f, &z, &[3, 5], 4, TwistSample::Auto, 1 << 22).unwrap();
        for r in &profile.records {
            assert!(r.exponent.is_some());
            let s = r.exponent.unwrap();
            assert!((s - 0.5).abs() < 1e-9, "p={}, m={}: s={}", r.p, r.m, s);
        }
        let sigma = profile.sigma_hat.unwrap();
        assert!((sigma - 0.5).abs() < 1e-9);
    }

    #[test]
    fn smooth_linear_form_is_flagged_infinite() {
        let f = parse("x", &["x"]).unwrap();
        let z = SubschemeSpec::full_space(1);
        let profile = decay_profile(&f, &z, &[3, 5], 3, TwistSample::Auto, 1 << 22).unwrap();
        assert!(profile.records.iter().all(|r| r.all_exact_zero));
        assert!(profile.sigma_hat.is_none());
        assert!(profile.sigma_hat_per_prime.iter().all(|(_, s)| s.is_none()));
    }

    #[test]
    fn diagonal_cubic_sigma_hat() {
        let f = parse("x^3 + y^3", &["x", "y"]).unwrap();
        let z = SubschemeSpec::full_space(2);
        let profile = decay_profile(&f, &z, &[7], 3, TwistSample::Auto, 1 << 24).unwrap();
        let sigma = profile.sigma_hat.unwrap();
        assert!(
            (sigma - 2.0 / 3.0).abs() < 0.15,
            "sigma_hat {} outside 2/3 ± 0.15",
            sigma
        );
    }

    #[test]
    fn empty_prime_list_is_rejected() {
        let f = parse("x", &["x"]).unwrap();
        let z = SubschemeSpec::full_space(1);
        assert!(decay_profile(&f, &z, &[], 3, TwistSample::Auto, 1 << 20).is_err());
    }
}
