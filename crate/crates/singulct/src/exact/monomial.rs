//! Exponent vectors with the graded lexicographic order.
//!
//! Dense fixed-length tuples: the variable counts in play are small (at most
//! 9 for the 3×3 determinant), so a `Vec<u32>` per monomial is cheap and keeps
//! enumeration cache-friendly.

use std::cmp::Ordering;

/// Exponent vector of a monomial; length equals the ambient variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// x_i as a monomial.
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars, "variable index out of range");
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise ≤, i.e. `self` divides `other` as a monomial.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Product of monomials: componentwise sum of exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }

    /// ⟨w, e⟩ for a weight vector `w` of matching length.
    pub fn weighted_degree(&self, w: &[u64]) -> u64 {
        debug_assert_eq!(self.0.len(), w.len());
        self.0.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum()
    }
}

/// Graded lexicographic: total degree first, then lexicographic on exponents.
/// Ascending, so `BTreeMap<Monomial, _>` iterates low-degree terms first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_ordering() {
        let xy = Monomial(vec![1, 1]);
        let x2 = Monomial(vec![2, 0]);
        let y3 = Monomial(vec![0, 3]);
        assert!(xy < x2, "same degree ties break lexicographically");
        assert!(x2 < y3, "lower total degree sorts first");
    }

    #[test]
    fn divides_is_componentwise() {
        let a = Monomial(vec![1, 0]);
        let b = Monomial(vec![2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
    }
}
