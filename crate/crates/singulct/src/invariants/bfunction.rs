//! Minimal exponents from Bernstein-Sato root data.
//!
//! Roots are taken from the literature's product formulas for the two
//! supported families; nothing here computes a b-function from scratch.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::rational::{rat, rat_int, ExtRat, Rat};
use crate::invariants::families::FamilyDescriptor;

/// Root multiset of b_f(s): (root, multiplicity) pairs, all roots negative,
/// sorted descending, with −1 always present.
#[derive(Clone, Debug, PartialEq)]
pub struct BFunctionRoots {
    roots: Vec<(Rat, u32)>,
}

impl BFunctionRoots {
    pub fn new(mut roots: Vec<(Rat, u32)>) -> Result<Self> {
        roots.retain(|(_, m)| *m > 0);
        if roots.is_empty() {
            return Err(Error::InvalidBFunction("empty root list".to_string()));
        }
        if let Some((r, _)) = roots.iter().find(|(r, _)| !r.is_negative()) {
            return Err(Error::InvalidBFunction(format!("nonnegative root {}", r)));
        }
        // Merge duplicates, then sort descending.
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Rat, u32)> = Vec::with_capacity(roots.len());
        for (r, m) in roots {
            match merged.last_mut() {
                Some((prev, pm)) if *prev == r => *pm += m,
                _ => merged.push((r, m)),
            }
        }
        if !merged.iter().any(|(r, _)| *r == -Rat::one()) {
            return Err(Error::InvalidBFunction("-1 is not a root".to_string()));
        }
        Ok(BFunctionRoots { roots: merged })
    }

    /// Descending (root, multiplicity) pairs.
    pub fn roots(&self) -> &[(Rat, u32)] {
        &self.roots
    }
}

/// α̃ from the roots of b_f(s): drop one copy of −1 (the root of s+1) and
/// negate the largest root that remains; +∞ when nothing remains.
pub fn min_exp_from_roots(roots: &BFunctionRoots) -> ExtRat {
    let minus_one = -Rat::one();
    let mut largest: Option<Rat> = None;
    for (r, m) in roots.roots() {
        let mult = if *r == minus_one { m - 1 } else { *m };
        if mult > 0 {
            largest = Some(r.clone());
            break; // roots are sorted descending
        }
    }
    match largest {
        Some(r) => ExtRat::Finite(-r),
        None => ExtRat::Infinity,
    }
}

/// Root multiset of the diagonal family x_1^d + … + x_n^d:
/// b_f(s) = (s+1) · Π_{1 ≤ b_i ≤ d−1} (s + Σ b_i / d).
pub fn diagonal_bfunction_roots(n: u32, d: u32) -> Result<BFunctionRoots> {
    FamilyDescriptor::diagonal(n, d)?;
    // ways[k] = #tuples (b_1,…,b_n) ∈ [1, d−1]^n with Σ b_i = k.
    let max_sum = (n * (d - 1)) as usize;
    let mut ways = vec![0u64; max_sum + 1];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; max_sum + 1];
        for (k, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for b in 1..=(d - 1) as usize {
                if k + b <= max_sum {
                    next[k + b] += w;
                }
            }
        }
        ways = next;
    }
    let mut roots = vec![(-Rat::one(), 1u32)];
    for (k, &w) in ways.iter().enumerate() {
        if w > 0 {
            roots.push((-rat(k as i64, d as i64), w as u32));
        }
    }
    BFunctionRoots::new(roots)
}

/// Root multiset of the determinantal family: b_f(s) = Π_{i=1}^n (s + i).
pub fn determinantal_bfunction_roots(n: u32) -> Result<BFunctionRoots> {
    FamilyDescriptor::determinantal(n)?;
    BFunctionRoots::new((1..=n as i64).map(|i| (rat_int(-i), 1)).collect())
}

/// Minimal exponent of a family: diagonal → n/d, determinantal → 2, both via
/// the b-function product formulas.
pub fn min_exp_family(fam: &FamilyDescriptor) -> Result<ExtRat> {
    let roots = match *fam {
        FamilyDescriptor::Diagonal { n, d } => diagonal_bfunction_roots(n, d)?,
        FamilyDescriptor::Determinantal { n } => determinantal_bfunction_roots(n)?,
    };
    Ok(min_exp_from_roots(&roots))
}

/// lct(f) = min{α̃_f, 1}; α̃ = +∞ (smooth) caps to 1.
pub fn lct_from_min_exp(alpha: &ExtRat) -> Result<Rat> {
    if !alpha.is_positive() {
        return Err(Error::NonPositive(format!("minimal exponent {}", alpha)));
    }
    Ok(alpha.min_with_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinantal_min_exp_is_two() {
        // roots of (s+1)(s+2)(s+3): drop one −1, largest remaining is −2
        let roots = determinantal_bfunction_roots(3).unwrap();
        assert_eq!(min_exp_from_roots(&roots), ExtRat::finite(2, 1));
    }

    #[test]
    fn smooth_convention_is_infinite() {
        let roots = BFunctionRoots::new(vec![(rat_int(-1), 1)]).unwrap();
        assert_eq!(min_exp_from_roots(&roots), ExtRat::Infinity);
    }

    #[test]
    fn yano_roots_for_plane_cubic() {
        // (n,d) = (2,3): tuple sums k ∈ {2,3,4} with multiplicities 1,2,1
        let roots = diagonal_bfunction_roots(2, 3).unwrap();
        assert_eq!(
            roots.roots(),
            &[
                (rat(-2, 3), 1),
                (rat_int(-1), 3), // (s+1) plus the two tuples summing to 3
                (rat(-4, 3), 1),
            ]
        );
        assert_eq!(min_exp_from_roots(&roots), ExtRat::finite(2, 3));
    }

    #[test]
    fn family_min_exponents() {
        let diag = FamilyDescriptor::diagonal(4, 3).unwrap();
        assert_eq!(min_exp_family(&diag).unwrap(), ExtRat::finite(4, 3));
        let det = FamilyDescriptor::determinantal(5).unwrap();
        assert_eq!(min_exp_family(&det).unwrap(), ExtRat::finite(2, 1));
        let d22 = FamilyDescriptor::diagonal(2, 2).unwrap();
        assert_eq!(min_exp_family(&d22).unwrap(), ExtRat::finite(1, 1));
    }

    #[test]
    fn min_exp_equals_n_over_d_on_a_grid() {
        for n in 2..=6 {
            for d in 2..=6 {
                let fam = FamilyDescriptor::diagonal(n, d).unwrap();
                assert_eq!(
                    min_exp_family(&fam).unwrap(),
                    ExtRat::Finite(rat(n as i64, d as i64)),
                    "n={}, d={}",
                    n,
                    d
                );
            }
        }
    }

    #[test]
    fn lct_cap() {
        assert_eq!(lct_from_min_exp(&ExtRat::finite(4, 3)).unwrap(), rat_int(1));
        assert_eq!(lct_from_min_exp(&ExtRat::finite(2, 3)).unwrap(), rat(2, 3));
        assert_eq!(lct_from_min_exp(&ExtRat::Infinity).unwrap(), rat_int(1));
        assert!(lct_from_min_exp(&ExtRat::finite(-1, 2)).is_err());
    }

    #[test]
    fn validation_errors() {
        assert!(BFunctionRoots::new(vec![(rat_int(-2), 1)]).is_err()); // −1 absent
        assert!(BFunctionRoots::new(vec![(rat_int(-1), 1), (rat(1, 2), 1)]).is_err());
    }
}
