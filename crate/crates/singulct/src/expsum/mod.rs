//! Exact p-adic exponential-sum engine: residue histograms, normalized
//! character sums with certified zeros, decay-exponent estimation, point
//! counts, and the level-(m−1) localization identities.
//!
//! Only K = ℚ with residue fields 𝔽_p is supported; unramified extensions
//! are out of scope and every report says so via its provenance fields.

pub mod cyclotomic;
pub mod decay;
pub mod histogram;
pub mod localization;
pub mod modulus;
pub mod subscheme;
pub mod sum;

pub use decay::{decay_profile, DecayProfile, DecayRecord, TwistSample};
pub use histogram::{count_common_zeros, residue_histogram, ResidueHistogram};
pub use localization::{localization_check, LocalizationReport};
pub use modulus::PrimePowerModulus;
pub use subscheme::{SubschemePreset, SubschemeSpec};
pub use sum::{exp_sum_from_histogram, ExpSumValue};

use crate::error::Result;
use crate::exact::poly::Polynomial;

/// Default enumeration budget: at most 10^8 lattice points per histogram.
pub const DEFAULT_POINT_BUDGET: u64 = 100_000_000;

/// One-call convenience: histogram then normalized sum for a single twist.
pub fn exp_sum(
    f: &Polynomial,
    modulus: &PrimePowerModulus,
    z: &SubschemeSpec,
    twist: u64,
    budget: u64,
) -> Result<ExpSumValue> {
    let h = residue_histogram(f, modulus, z, budget)?;
    exp_sum_from_histogram(&h, twist)
}
