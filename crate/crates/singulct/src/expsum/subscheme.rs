//! Closed subschemes Z ⊆ 𝔸ⁿ used to restrict enumeration.
//!
//! Membership is tested on the reduction mod p: a point x is admissible when
//! every generator vanishes at x̄ ∈ 𝔽_pⁿ.

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubschemePreset {
    FullSpace,
    HypersurfaceOfF,
    OriginOnly,
}

impl SubschemePreset {
    pub fn label(&self) -> &'static str {
        match self {
            SubschemePreset::FullSpace => "full",
            SubschemePreset::HypersurfaceOfF => "hyp",
            SubschemePreset::OriginOnly => "origin",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubschemeSpec {
    n_vars: usize,
    generators: Vec<Polynomial>,
}

impl SubschemeSpec {
    /// No restriction: all of 𝔸ⁿ.
    pub fn full_space(n_vars: usize) -> Self {
        SubschemeSpec {
            n_vars,
            generators: Vec::new(),
        }
    }

    /// The hypersurface f = 0.
    pub fn hypersurface_of(f: &Polynomial) -> Result<Self> {
        SubschemeSpec::from_generators(f.n_vars(), vec![f.clone()])
    }

    /// Only the origin: generated by the coordinates.
    pub fn origin_only(n_vars: usize) -> Self {
        SubschemeSpec {
            n_vars,
            generators: (0..n_vars)
                .map(|i| Polynomial::variable(n_vars, i))
                .collect(),
        }
    }

    pub fn from_preset(preset: SubschemePreset, f: &Polynomial) -> Result<Self> {
        Ok(match preset {
            SubschemePreset::FullSpace => SubschemeSpec::full_space(f.n_vars()),
            SubschemePreset::HypersurfaceOfF => SubschemeSpec::hypersurface_of(f)?,
            SubschemePreset::OriginOnly => SubschemeSpec::origin_only(f.n_vars()),
        })
    }

    pub fn from_generators(n_vars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.n_vars() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    got: g.n_vars(),
                });
            }
            if !g.has_integer_coefficients() {
                return Err(Error::NonIntegerCoefficient {
                    coeff: format!("{}", g),
                });
            }
        }
        Ok(SubschemeSpec { n_vars, generators })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_full(&self) -> bool {
        self.generators.is_empty()
    }
}
