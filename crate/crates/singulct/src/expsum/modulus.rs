//! Prime-power moduli p^m.

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePowerModulus {
    p: u64,
    m: u32,
    value: u64,
}

impl PrimePowerModulus {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime { value: p });
        }
        if m == 0 {
            return Err(Error::InvalidConfig(
                "exponent m must be positive".to_string(),
            ));
        }
        let value = p.checked_pow(m).ok_or_else(|| Error::ModulusOverflow {
            value: format!("{}^{}", p, m),
        })?;
        Ok(PrimePowerModulus { p, m, value })
    }

    pub fn from_value(value: u64) -> Result<Self> {
        let (p, m) = arith::prime_power_decompose(value).ok_or(Error::NotPrimePower { value })?;
        Ok(PrimePowerModulus { p, m, value })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// p^k for k ≤ m.
    pub fn lower_level(&self, k: u32) -> u64 {
        debug_assert!(k <= self.m);
        self.p.pow(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let m = PrimePowerModulus::new(3, 3).unwrap();
        assert_eq!(m.value(), 27);
        assert!(PrimePowerModulus::new(6, 2).is_err());
        assert!(PrimePowerModulus::new(3, 0).is_err());
        assert!(PrimePowerModulus::new(2, 64).is_err());
        let m = PrimePowerModulus::from_value(49).unwrap();
        assert_eq!((m.p(), m.m()), (7, 2));
        assert!(PrimePowerModulus::from_value(12).is_err());
    }
}
