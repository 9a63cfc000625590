//! Monomial ideals (minimal antichains of exponent vectors) and monomial
//! weight valuations.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::monomial::Monomial;

/// Monomial ideal stored as the minimal generating antichain under
/// componentwise ≤. The zero ideal is the empty generator list and is only
/// produced by [`MonomialIdeal::zero`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalize an arbitrary generator list: drop duplicates and any
    /// generator divisible by another, then sort graded-lex. Idempotent and
    /// insensitive to input order.
    pub fn new(n_vars: usize, generators: Vec<Monomial>) -> Self {
        assert!(n_vars > 0);
        for g in &generators {
            assert_eq!(g.n_vars(), n_vars, "generator arity mismatch");
        }
        let mut kept: Vec<Monomial> = Vec::new();
        for g in &generators {
            if generators
                .iter()
                .any(|h| h != g && h.divides(g) && !g.divides(h))
            {
                continue; // strictly dominated
            }
            if !kept.contains(g) {
                kept.push(g.clone());
            }
        }
        kept.sort();
        MonomialIdeal {
            n_vars,
            generators: kept,
        }
    }

    pub fn zero(n_vars: usize) -> Self {
        MonomialIdeal {
            n_vars,
            generators: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Unit ideal: generated by the constant monomial.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant())
    }

    /// Ideal membership for a single monomial.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Product ideal: pairwise products of generators, re-minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n_vars, other.n_vars);
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.n_vars);
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)))
            .collect();
        MonomialIdeal::new(self.n_vars, gens)
    }

    pub fn max_total_degree(&self) -> u64 {
        self.generators
            .iter()
            .map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                if g.is_constant() {
                    "1".to_string()
                } else {
                    g.0.iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| {
                            if e == 1 {
                                format!("x{}", i)
                            } else {
                                format!("x{}^{}", i, e)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Order of a monomial ideal or polynomial along a weight valuation:
/// a nonnegative integer, or +∞ for the zero ideal / zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrdValue {
    Finite(u64),
    Infinity,
}

impl OrdValue {
    pub fn as_finite(self) -> Option<u64> {
        match self {
            OrdValue::Finite(v) => Some(v),
            OrdValue::Infinity => None,
        }
    }
}

impl fmt::Display for OrdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdValue::Finite(v) => write!(f, "{}", v),
            OrdValue::Infinity => write!(f, "inf"),
        }
    }
}

/// Monomial weight vector: nonnegative integer weights, not all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() || weights.iter().all(|&w| w == 0) {
            return Err(Error::InvalidConfig(
                "weight vector must have a positive entry".to_string(),
            ));
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    /// Log discrepancy of the associated monomial valuation: Σ w_i.
    pub fn log_discrepancy(&self) -> u64 {
        self.0.iter().sum()
    }

    /// min over generators of ⟨w, exponent⟩; +∞ for the zero ideal.
    pub fn ord_ideal(&self, ideal: &MonomialIdeal) -> Result<OrdValue> {
        if ideal.n_vars() != self.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                got: ideal.n_vars(),
            });
        }
        Ok(ideal
            .generators()
            .iter()
            .map(|g| OrdValue::Finite(g.weighted_degree(&self.0)))
            .min()
            .unwrap_or(OrdValue::Infinity))
    }

    /// min over terms of ⟨w, exponent⟩; +∞ for the zero polynomial.
    pub fn ord_poly(&self, f: &crate::exact::poly::Polynomial) -> Result<OrdValue> {
        if f.n_vars() != self.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                got: f.n_vars(),
            });
        }
        Ok(f.terms()
            .map(|(m, _)| OrdValue::Finite(m.weighted_degree(&self.0)))
            .min()
            .unwrap_or(OrdValue::Infinity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse;
    use crate::exact::poly::Polynomial;
    use crate::exact::rational::rat_int;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial(e.to_vec())).collect())
    }

    #[test]
    fn canonicalization_removes_dominated_generators() {
        // (x^2, x^3, y, x*y) = (x^2, y)
        let i = ideal(2, &[&[2, 0], &[3, 0], &[0, 1], &[1, 1]]);
        assert_eq!(i, ideal(2, &[&[0, 1], &[2, 0]]));
        // idempotent and order-insensitive
        let j = ideal(2, &[&[0, 1], &[1, 1], &[3, 0], &[2, 0]]);
        assert_eq!(i, j);
        assert_eq!(MonomialIdeal::new(2, i.generators().to_vec()), i);
    }

    #[test]
    fn ord_w_examples() {
        let w = WeightVector::new(vec![1, 1]).unwrap();
        assert_eq!(
            w.ord_ideal(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(),
            OrdValue::Finite(2)
        );

        let w = WeightVector::new(vec![3, 2]).unwrap();
        let f = parse("x^2 + y^3", &["x", "y"]).unwrap();
        assert_eq!(w.ord_poly(&f).unwrap(), OrdValue::Finite(6));

        let w = WeightVector::new(vec![0, 1]).unwrap();
        assert_eq!(
            w.ord_ideal(&ideal(2, &[&[1, 0]])).unwrap(),
            OrdValue::Finite(0)
        );
    }

    #[test]
    fn zero_targets_give_infinity() {
        let w = WeightVector::new(vec![1, 1]).unwrap();
        assert_eq!(
            w.ord_ideal(&MonomialIdeal::zero(2)).unwrap(),
            OrdValue::Infinity
        );
        assert_eq!(
            w.ord_poly(&Polynomial::zero(2)).unwrap(),
            OrdValue::Infinity
        );
        assert!(OrdValue::Infinity > OrdValue::Finite(u64::MAX));
    }

    #[test]
    fn product_order_is_additive() {
        let w = WeightVector::new(vec![2, 5]).unwrap();
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let j = ideal(2, &[&[1, 1], &[0, 2]]);
        let of = |k: &MonomialIdeal| w.ord_ideal(k).unwrap().as_finite().unwrap();
        assert_eq!(of(&i.product(&j)), of(&i) + of(&j));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let w = WeightVector::new(vec![1]).unwrap();
        let i = ideal(2, &[&[1, 0]]);
        assert!(w.ord_ideal(&i).is_err());
        let _ = rat_int(0);
    }
}
