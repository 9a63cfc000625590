//! Exact rational values and the extended line `Rat ∪ {+∞}`.
//!
//! Every invariant in this crate (lct, minimal exponent, search ratios) is an
//! exact rational; `ExtRat` adds the `+∞` that shows up for unit ideals and
//! smooth hypersurfaces. Comparisons against `+∞` are total.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Build a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    BigRational::from_integer(BigInt::from(num))
}

/// Render a rational as `num/den` (or plain `num` for integers).
/// This is the only serialization format for rationals in reports.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational extended with `+∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRat {
    Finite(Rat),
    Infinity,
}

impl ExtRat {
    pub fn finite(num: i64, den: i64) -> Self {
        ExtRat::Finite(rat(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinity => None,
        }
    }

    /// min{self, 1}; `+∞` caps to 1.
    pub fn min_with_one(&self) -> Rat {
        match self {
            ExtRat::Finite(r) if *r < Rat::one() => r.clone(),
            _ => Rat::one(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtRat::Finite(r) => r.is_positive(),
            ExtRat::Infinity => true,
        }
    }

    /// Approximate value for logging; `+∞` maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtRat::Finite(r) => {
                let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
                let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
                n / d
            }
            ExtRat::Infinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Infinity, ExtRat::Infinity) => Ordering::Equal,
            (ExtRat::Infinity, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Finite(_), ExtRat::Infinity) => Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{}", fmt_rat(r)),
            ExtRat::Infinity => write!(f, "inf"),
        }
    }
}
