//! Run configuration with defaults for every knob.

use crate::arith;
use crate::error::{Error, Result};
use crate::expsum::{TwistSample, DEFAULT_POINT_BUDGET};
use crate::invariants::families::FamilyDescriptor;
use crate::invariants::milnor::MilnorOptions;

/// Environment variable overriding the enumeration point budget.
pub const BUDGET_ENV_VAR: &str = "SINGULCT_BUDGET";

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Hard cap on lattice points per enumeration.
    pub budget: u64,
    /// Tolerance for matching empirical sigma against exact lct values.
    pub sigma_tolerance: f64,
    /// ε in the decay bound |E|·p^(m(lct−ε)) ≤ c.
    pub epsilon: f64,
    pub primes: Vec<u64>,
    pub m_max: u32,
    pub twist_sample: TwistSample,
    pub milnor: MilnorOptions,
    /// Diagonal grid bounds (n, then d), inclusive.
    pub diagonal_n: (u32, u32),
    pub diagonal_d: (u32, u32),
    /// Determinantal grid bounds, inclusive.
    pub determinantal_n: (u32, u32),
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: DEFAULT_POINT_BUDGET,
            sigma_tolerance: 0.15,
            epsilon: 0.1,
            primes: vec![3, 5, 7],
            m_max: 4,
            twist_sample: TwistSample::Auto,
            milnor: MilnorOptions::default(),
            diagonal_n: (2, 6),
            diagonal_d: (2, 6),
            determinantal_n: (2, 4),
        }
    }
}

impl RunConfig {
    /// Defaults with the SINGULCT_BUDGET override applied when present.
    pub fn from_env() -> Self {
        let mut cfg = RunConfig::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV_VAR) {
            if let Ok(v) = raw.trim().parse::<u64>() {
                if v > 0 {
                    cfg.budget = v;
                }
            }
        }
        cfg
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::InvalidConfig("budget must be positive".to_string()));
        }
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !positive(self.sigma_tolerance) || !positive(self.epsilon) {
            return Err(Error::InvalidConfig(
                "tolerances must be positive".to_string(),
            ));
        }
        for &p in &self.primes {
            if !arith::is_prime(p) {
                return Err(Error::NotPrime { value: p });
            }
        }
        if self.m_max == 0 {
            return Err(Error::InvalidConfig("mMax must be positive".to_string()));
        }
        Ok(())
    }

    /// Default theorem-verification grid: all diagonal members then all
    /// determinantal members, in descriptor order.
    pub fn default_grid(&self) -> Vec<FamilyDescriptor> {
        let mut grid = Vec::new();
        for n in self.diagonal_n.0..=self.diagonal_n.1 {
            for d in self.diagonal_d.0..=self.diagonal_d.1 {
                grid.push(FamilyDescriptor::Diagonal { n, d });
            }
        }
        for n in self.determinantal_n.0..=self.determinantal_n.1 {
            grid.push(FamilyDescriptor::Determinantal { n });
        }
        grid
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
        assert_eq!(RunConfig::default().default_grid().len(), 25 + 3);
    }

    #[test]
    fn bad_configs_are_rejected() {
        let cfg = RunConfig {
            primes: vec![3, 4],
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            sigma_tolerance: 0.0,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
