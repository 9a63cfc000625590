//! The two closed-form families: homogeneous diagonal hypersurfaces
//! x_1^d + … + x_n^d and generic n×n determinantal hypersurfaces.
//!
//! Diagonal: lct of the pair ideal comes from a two-ray toric minimization in
//! blow-up coordinates, with the raw bounded (a, b) search kept alongside as
//! a cross-check. Determinantal: a partition search over matrix orbits plus a
//! symbolic lower-bound certificate pins the value to exactly 2.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;
use crate::exact::rational::{rat, rat_int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyDescriptor {
    /// x_1^d + … + x_n^d in n ≥ 2 variables, d ≥ 2.
    Diagonal { n: u32, d: u32 },
    /// det(x_ij) for a generic n×n matrix, n ≥ 2.
    Determinantal { n: u32 },
}

impl FamilyDescriptor {
    pub fn diagonal(n: u32, d: u32) -> Result<Self> {
        if n < 2 || d < 2 {
            return Err(Error::InvalidFamily(format!(
                "diagonal requires n ≥ 2 and d ≥ 2, got n={}, d={}",
                n, d
            )));
        }
        Ok(FamilyDescriptor::Diagonal { n, d })
    }

    pub fn determinantal(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "determinantal requires n ≥ 2, got n={}",
                n
            )));
        }
        Ok(FamilyDescriptor::Determinantal { n })
    }

    /// The defining polynomial over explicit coordinates.
    pub fn polynomial(&self) -> Polynomial {
        match *self {
            FamilyDescriptor::Diagonal { n, d } => diagonal_polynomial(n, d),
            FamilyDescriptor::Determinantal { n } => determinantal_polynomial(n),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FamilyDescriptor::Diagonal { n, d } => format!("diag:{},{}", n, d),
            FamilyDescriptor::Determinantal { n } => format!("det:{}", n),
        }
    }
}

pub fn diagonal_polynomial(n: u32, d: u32) -> Polynomial {
    Polynomial::from_terms(
        n as usize,
        (0..n as usize).map(|i| {
            let mut e = vec![0u32; n as usize];
            e[i] = d;
            (e, rat_int(1))
        }),
    )
}

/// det of the generic n×n matrix, variables row-major: x_ij ↦ index i·n + j.
pub fn determinantal_polynomial(n: u32) -> Polynomial {
    let n = n as usize;
    let n_vars = n * n;
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    let mut cols: Vec<usize> = (0..n).collect();
    permute_with_sign(&mut cols, 0, 1, &mut |perm, sign| {
        let mut e = vec![0u32; n_vars];
        for (row, &col) in perm.iter().enumerate() {
            e[row * n + col] += 1;
        }
        terms.push((e, rat_int(sign)));
    });
    Polynomial::from_terms(n_vars, terms)
}

fn permute_with_sign(
    items: &mut Vec<usize>,
    k: usize,
    sign: i64,
    f: &mut impl FnMut(&[usize], i64),
) {
    if k == items.len() {
        f(items, sign);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        let s = if i == k { sign } else { -sign };
        permute_with_sign(items, k + 1, s, f);
        items.swap(k, i);
    }
}

/// Recognize a supported family shape from an explicit polynomial.
///
/// Diagonal terms may carry arbitrary nonzero coefficients: rescaling the
/// coordinates over ℂ maps such an f to the unit-coefficient model without
/// changing any of the invariants computed here.
pub fn recognize(f: &Polynomial) -> Option<FamilyDescriptor> {
    if let Some(desc) = recognize_diagonal(f) {
        return Some(desc);
    }
    recognize_determinantal(f)
}

fn recognize_diagonal(f: &Polynomial) -> Option<FamilyDescriptor> {
    let n = f.n_vars();
    if n < 2 || f.term_count() != n {
        return None;
    }
    let mut seen = vec![false; n];
    let mut degree: Option<u32> = None;
    for (m, _) in f.terms() {
        let support: Vec<usize> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
        if support.len() != 1 {
            return None;
        }
        let i = support[0];
        let d = m.0[i];
        if d < 2 || seen[i] {
            return None;
        }
        match degree {
            None => degree = Some(d),
            Some(prev) if prev == d => {}
            _ => return None,
        }
        seen[i] = true;
    }
    if !seen.iter().all(|&s| s) {
        return None;
    }
    FamilyDescriptor::diagonal(n as u32, degree?).ok()
}

fn recognize_determinantal(f: &Polynomial) -> Option<FamilyDescriptor> {
    let n_vars = f.n_vars();
    let n = (1..=8usize).find(|&k| k * k == n_vars)?;
    if n < 2 {
        return None;
    }
    let det = determinantal_polynomial(n as u32);
    if *f == det || *f == det.neg() {
        FamilyDescriptor::determinantal(n as u32).ok()
    } else {
        None
    }
}

/// Closed-form lct of the diagonal pair ideal:
/// min{(n+d−2)/(2d−2), n/d}, cross-checked against the raw lattice search.
pub fn lct_diagonal_pair(n: u32, d: u32) -> Result<Rat> {
    FamilyDescriptor::diagonal(n, d)?;
    let closed = diagonal_closed_form(n, d);
    let raw = raw_min_diagonal(n, d, (d + 2) as u64)?;
    if raw.value != closed {
        return Err(Error::Inconclusive(format!(
            "raw (a,b) minimum {} disagrees with closed form {} for n={}, d={}",
            raw.value, closed, n, d
        )));
    }
    Ok(closed)
}

fn diagonal_closed_form(n: u32, d: u32) -> Rat {
    let first = rat((n + d - 2) as i64, (2 * d - 2) as i64);
    let second = rat(n as i64, d as i64);
    first.min(second)
}

#[derive(Clone, Debug)]
pub struct RawMinDiagonal {
    pub value: Rat,
    /// Minimizing (a, b) pair, first in scan order (b outer, a inner).
    pub witness: (u64, u64),
}

/// Minimize (n·b + a) / min{d·b + a, (2d−2)·b} over 0 ≤ a, b ≤ bound with
/// b ≥ 1 (b = 0 has zero order against the ideal and is excluded). The true
/// minimum over the cone sits on the rays (0,1) and (d−2,1), so any
/// bound ≥ d suffices; a search minimum above the closed form is reported as
/// inconclusive, never returned as a value.
pub fn raw_min_diagonal(n: u32, d: u32, bound: u64) -> Result<RawMinDiagonal> {
    FamilyDescriptor::diagonal(n, d)?;
    let n = n as u64;
    let d = d as u64;
    let mut best: Option<(u64, u64, (u64, u64))> = None; // (num, den, witness)
    for b in 1..=bound {
        for a in 0..=bound {
            let num = n * b + a;
            let den = (d * b + a).min((2 * d - 2) * b);
            debug_assert!(den > 0);
            let better = match &best {
                None => true,
                Some((bn, bd, _)) => (num as u128) * (*bd as u128) < (*bn as u128) * (den as u128),
            };
            if better {
                best = Some((num, den, (a, b)));
            }
        }
    }
    let (num, den, witness) = best.expect("bound ≥ 1 yields candidates");
    let value = Rat::new(BigInt::from(num), BigInt::from(den));
    let closed = diagonal_closed_form(n as u32, d as u32);
    if value > closed {
        return Err(Error::Inconclusive(format!(
            "search bound {} too small: minimum {} exceeds {}",
            bound, value, closed
        )));
    }
    Ok(RawMinDiagonal { value, witness })
}

/// Codimension of the matrix-arc orbit labeled by a partition: Σ λ_i(2i−1).
pub fn orbit_codimension(lambda: &[i64]) -> Result<u64> {
    validate_partition(lambda)?;
    Ok(lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l as u64 * (2 * i as u64 + 1))
        .sum())
}

/// Order of an arc in the orbit along the pair ideal:
/// min{Σ λ_i, 2·Σ_{i≥2} λ_i}.
pub fn orbit_contact_order(lambda: &[i64]) -> Result<u64> {
    validate_partition(lambda)?;
    let total: u64 = lambda.iter().map(|&l| l as u64).sum();
    let tail: u64 = lambda.iter().skip(1).map(|&l| l as u64).sum();
    Ok(total.min(2 * tail))
}

fn validate_partition(lambda: &[i64]) -> Result<()> {
    if lambda.iter().any(|&l| l < 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition);
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct DeterminantalLct {
    pub value: Rat,
    /// Minimizing partition, padded with zeros to n parts.
    pub witness: Vec<u64>,
    /// The symbolic codimension ≥ 4·(tail mass) certificate held.
    pub certified: bool,
}

/// lct of the determinantal pair ideal by partition search.
///
/// Candidates are partitions λ_1 ≥ … ≥ λ_n ≥ 0 with λ_2 > 0 and total mass
/// ≤ bound·n; the ratio codim/contact is minimized exactly. The search value
/// is certified by the coefficient inequality codim(λ) ≥ 4 Σ_{i≥2} λ_i, valid
/// whenever λ_1 ≥ λ_2, which forces every ratio ≥ 2.
pub fn lct_determinantal_pair(n: u32, bound: u64) -> Result<DeterminantalLct> {
    FamilyDescriptor::determinantal(n)?;
    if bound < 2 {
        return Err(Error::InvalidFamily(format!(
            "bound must be ≥ 2, got {}",
            bound
        )));
    }
    let n = n as usize;
    let mass_cap = bound * n as u64;
    let mut best: Option<(u64, u64, Vec<u64>)> = None; // (codim, contact, λ)
    let mut lambda = vec![0u64; n];
    search_partitions(&mut lambda, 0, mass_cap, u64::MAX, &mut |l| {
        if l.len() < 2 || l.get(1).copied().unwrap_or(0) == 0 {
            return;
        }
        let as_i64: Vec<i64> = l.iter().map(|&x| x as i64).collect();
        let codim = orbit_codimension(&as_i64).expect("enumerated partitions are valid");
        let contact = orbit_contact_order(&as_i64).expect("enumerated partitions are valid");
        if contact == 0 {
            return;
        }
        let better = match &best {
            None => true,
            Some((bc, bo, _)) => {
                (codim as u128) * (*bo as u128) < (*bc as u128) * (contact as u128)
            }
        };
        if better {
            best = Some((codim, contact, l.to_vec()));
        }
    });
    let (codim, contact, witness) =
        best.ok_or_else(|| Error::Inconclusive("no partition with λ_2 > 0 in range".to_string()))?;
    let value = Rat::new(BigInt::from(codim), BigInt::from(contact));

    // Lower-bound certificate: in variables (λ_1−λ_2, λ_2, λ_3, …), all
    // nonnegative, the form Σ(2i−1)λ_i − 4Σ_{i≥2}λ_i must have nonnegative
    // coefficients.
    let coeff = |i: usize| -> i64 {
        let c = 2 * i as i64 + 1; // (2i−1) with 1-based i = index+1
        if i == 0 {
            c
        } else {
            c - 4
        }
    };
    let mut cert_coeffs = vec![coeff(0)]; // coefficient of λ_1−λ_2
    if n >= 2 {
        cert_coeffs.push(coeff(0) + coeff(1)); // coefficient of λ_2
        for i in 2..n {
            cert_coeffs.push(coeff(i));
        }
    }
    let certified = cert_coeffs.iter().all(|&c| c >= 0);

    if !certified {
        return Err(Error::Inconclusive(
            "lower-bound certificate coefficients failed".to_string(),
        ));
    }
    if value != rat_int(2) {
        return Err(Error::Inconclusive(format!(
            "partition search returned {} but the certificate pins 2",
            value
        )));
    }
    Ok(DeterminantalLct {
        value,
        witness,
        certified,
    })
}

/// Enumerate λ_pos..: weakly decreasing tails bounded by `prev`, total mass
/// ≤ remaining. Partitions come out in ascending-mass-friendly order: the
/// all-small candidates (like (1,1,0,…)) are visited before heavier ones at
/// each prefix.
fn search_partitions(
    lambda: &mut Vec<u64>,
    pos: usize,
    remaining: u64,
    prev: u64,
    visit: &mut impl FnMut(&[u64]),
) {
    if pos == lambda.len() {
        visit(lambda);
        return;
    }
    let cap = prev.min(remaining);
    for v in 0..=cap {
        lambda[pos] = v;
        search_partitions(lambda, pos + 1, remaining - v, v, visit);
    }
    lambda[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(lct_diagonal_pair(2, 2).unwrap(), rat_int(1));
        assert_eq!(lct_diagonal_pair(4, 3).unwrap(), rat(5, 4));
        assert_eq!(lct_diagonal_pair(2, 3).unwrap(), rat(2, 3));
        assert!(lct_diagonal_pair(1, 3).is_err());
    }

    #[test]
    fn raw_min_examples() {
        let r = raw_min_diagonal(3, 2, 4).unwrap();
        assert_eq!(r.value, rat(3, 2));
        assert_eq!(r.witness, (0, 1));

        let r = raw_min_diagonal(4, 3, 6).unwrap();
        assert_eq!(r.value, rat(5, 4));
        assert_eq!(r.witness, (1, 1));

        let r = raw_min_diagonal(2, 5, 8).unwrap();
        assert_eq!(r.value, rat(2, 5));
    }

    #[test]
    fn orbit_formulas() {
        assert_eq!(orbit_codimension(&[0, 0, 0]).unwrap(), 0);
        assert_eq!(orbit_codimension(&[1, 1]).unwrap(), 4);
        assert_eq!(orbit_codimension(&[2, 1, 1]).unwrap(), 10);
        assert_eq!(orbit_contact_order(&[1, 0]).unwrap(), 0);
        assert_eq!(orbit_contact_order(&[1, 1]).unwrap(), 2);
        assert_eq!(orbit_contact_order(&[3, 1]).unwrap(), 2);
        assert!(orbit_codimension(&[1, 2]).is_err());
        assert!(orbit_codimension(&[-1]).is_err());
    }

    #[test]
    fn determinantal_is_two_with_minimal_witness() {
        for n in 2..=4u32 {
            let got = lct_determinantal_pair(n, 4).unwrap();
            assert_eq!(got.value, rat_int(2));
            let mut expect = vec![0u64; n as usize];
            expect[0] = 1;
            expect[1] = 1;
            assert_eq!(got.witness, expect);
            assert!(got.certified);
        }
    }

    #[test]
    fn suboptimal_partition_ratio() {
        // λ = (2,1): ratio (2 + 3)/min{3, 2} = 5/2, not optimal.
        let codim = orbit_codimension(&[2, 1]).unwrap();
        let contact = orbit_contact_order(&[2, 1]).unwrap();
        assert_eq!(rat(codim as i64, contact as i64), rat(5, 2));
    }

    #[test]
    fn determinant_polynomial_shape() {
        let det2 = determinantal_polynomial(2);
        assert_eq!(det2.term_count(), 2);
        let det3 = determinantal_polynomial(3);
        assert_eq!(det3.term_count(), 6);
        // Every coefficient is ±1 and the permutation signs balance.
        let sum: Rat = det3.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(sum, rat_int(0));
    }

    #[test]
    fn recognizers() {
        let f = diagonal_polynomial(3, 4);
        assert_eq!(
            recognize(&f),
            Some(FamilyDescriptor::Diagonal { n: 3, d: 4 })
        );
        let det = determinantal_polynomial(2);
        assert_eq!(
            recognize(&det),
            Some(FamilyDescriptor::Determinantal { n: 2 })
        );
        assert_eq!(
            recognize(&det.neg()),
            Some(FamilyDescriptor::Determinantal { n: 2 })
        );
        let not = crate::exact::parse::parse("x^2 + y^3", &["x", "y"]).unwrap();
        assert_eq!(recognize(&not), None);
    }
}
