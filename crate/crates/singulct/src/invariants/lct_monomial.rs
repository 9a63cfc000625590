//! Log canonical threshold of a monomial ideal.
//!
//! Upper bound by bounded lattice search over integer weight vectors,
//! optimality certified exactly: the search value λ is the true lct iff the
//! all-ones vector lies in λ · (Newton polyhedron), an exact rational LP
//! feasibility question. A failed certificate doubles the search bound; the
//! result is therefore never wrong, only (past the bound cap) inconclusive.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::ideal::{MonomialIdeal, WeightVector};
use crate::exact::rational::{ExtRat, Rat};
use crate::invariants::simplex::{self, LpOutcome};

/// Hard cap for the doubling weight-search bound.
const BOUND_CAP: u64 = 4096;
/// Refuse lattice searches past this many weight vectors.
const SEARCH_CAP: u128 = 200_000_000;

#[derive(Clone, Debug)]
pub struct CertifiedLct {
    pub value: ExtRat,
    /// A weight vector attaining the minimum (finite case).
    pub witness: Option<WeightVector>,
    /// Search bound at which the certificate succeeded.
    pub search_bound: u64,
}

/// lct of a proper nonzero monomial ideal; +∞ (flagged, not an error) for the
/// unit ideal.
pub fn lct_monomial(a: &MonomialIdeal) -> Result<CertifiedLct> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a.is_unit() {
        return Ok(CertifiedLct {
            value: ExtRat::Infinity,
            witness: None,
            search_bound: 0,
        });
    }
    let mut bound = a.max_total_degree().max(1);
    loop {
        let (ratio, witness) = weight_search_min(a, bound)?.ok_or_else(|| {
            Error::Inconclusive(format!(
                "no weight vector of bound {} has positive order",
                bound
            ))
        })?;
        if newton_feasible(a, &ratio) {
            return Ok(CertifiedLct {
                value: ExtRat::Finite(ratio),
                witness: Some(witness),
                search_bound: bound,
            });
        }
        if bound >= BOUND_CAP {
            return Err(Error::Inconclusive(format!(
                "weight search bound cap {} reached without certificate",
                BOUND_CAP
            )));
        }
        bound = (bound * 2).min(BOUND_CAP);
    }
}

/// Raw bounded lattice search: min over weight vectors with entries ≤ bound
/// of (Σ w_i) / ord_w(a). Always an upper bound for the lct. `None` when no
/// weight vector in range has finite positive order.
pub fn weight_search_min(a: &MonomialIdeal, bound: u64) -> Result<Option<(Rat, WeightVector)>> {
    let n = a.n_vars();
    let total = (bound as u128 + 1).pow(n as u32);
    if total > SEARCH_CAP {
        return Err(Error::Inconclusive(format!(
            "weight lattice of size {} exceeds the search cap",
            total
        )));
    }
    let gens: Vec<&[u32]> = a.generators().iter().map(|g| g.0.as_slice()).collect();
    let mut best: Option<(u64, u64, Vec<u64>)> = None; // (Σw, ord, w)
    let mut w = vec![0u64; n];
    loop {
        // Odometer step first so the all-zero vector is skipped.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best.map(|(s, o, w)| {
                    (
                        Rat::new(BigInt::from(s), BigInt::from(o)),
                        WeightVector::new(w).expect("witness has a positive entry"),
                    )
                }));
            }
            if w[i] < bound {
                w[i] += 1;
                break;
            }
            w[i] = 0;
            i += 1;
        }
        // Scaling w leaves the ratio unchanged: only primitive vectors matter.
        if gcd_slice(&w) != 1 {
            continue;
        }
        let ord = gens
            .iter()
            .map(|g| g.iter().zip(&w).map(|(&e, &wi)| e as u64 * wi).sum::<u64>())
            .min()
            .expect("nonzero ideal has generators");
        if ord == 0 {
            continue;
        }
        let sum: u64 = w.iter().sum();
        let better = match &best {
            None => true,
            // sum/ord < s/o  ⟺  sum·o < s·ord (all positive)
            Some((s, o, _)) => (sum as u128) * (*o as u128) < (*s as u128) * (ord as u128),
        };
        if better {
            best = Some((sum, ord, w.clone()));
        }
    }
}

/// Exact certificate that (1,…,1) ∈ λ·(Newton polyhedron of `a`), i.e. that
/// some convex combination of generator exponents is ≤ (1/λ,…,1/λ).
pub fn newton_feasible(a: &MonomialIdeal, lambda: &Rat) -> bool {
    let n = a.n_vars();
    let cols: Vec<Vec<Rat>> = a
        .generators()
        .iter()
        .map(|g| {
            g.0.iter()
                .map(|&e| Rat::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let bound = vec![lambda.recip(); n];
    simplex::convex_combination_feasible(&cols, &bound)
}

/// Independent LP route: lct(a) = max Σ s over s ≥ 0 with Σ_i s_i·e_i ≤ 1
/// componentwise. Unbounded exactly for the unit ideal.
pub fn lct_monomial_lp(a: &MonomialIdeal) -> Result<ExtRat> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = a.n_vars();
    let k = a.generators().len();
    let c = vec![Rat::one(); k];
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            a.generators()
                .iter()
                .map(|g| Rat::from_integer(BigInt::from(g.0[j])))
                .collect()
        })
        .collect();
    let rhs = vec![Rat::one(); n];
    Ok(match simplex::maximize(&c, &rows, &rhs) {
        LpOutcome::Optimal(v) => ExtRat::Finite(v),
        LpOutcome::Unbounded => ExtRat::Infinity,
    })
}

fn gcd_slice(w: &[u64]) -> u64 {
    w.iter().fold(0u64, |acc, &x| gcd(acc, x))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::monomial::Monomial;
    use crate::exact::rational::rat;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial(e.to_vec())).collect())
    }

    #[test]
    fn single_generator_scales_out() {
        let got = lct_monomial(&ideal(1, &[&[2]])).unwrap();
        assert_eq!(got.value, ExtRat::Finite(rat(1, 2)));
    }

    #[test]
    fn cusp_jacobian_type_ideal() {
        // lct(x², y³) = 5/6, attained at weights (3, 2)
        let got = lct_monomial(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(got.value, ExtRat::Finite(rat(5, 6)));
        assert_eq!(got.witness.unwrap().weights(), &[3, 2]);
    }

    #[test]
    fn maximal_ideal_has_lct_n() {
        for n in 1..=4usize {
            let gens: Vec<Vec<u32>> = (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    e
                })
                .collect();
            let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
            let got = lct_monomial(&ideal(n, &refs)).unwrap();
            assert_eq!(got.value, ExtRat::Finite(rat(n as i64, 1)));
        }
    }

    #[test]
    fn unit_ideal_is_flagged_infinite() {
        let got = lct_monomial(&ideal(2, &[&[0, 0], &[1, 0]])).unwrap();
        assert_eq!(got.value, ExtRat::Infinity);
        assert!(lct_monomial(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn search_agrees_with_lp_route() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(2, &[&[2, 0], &[0, 3]]),
            ideal(2, &[&[4, 0], &[2, 1], &[0, 5]]),
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 6], &[1, 1, 1]]),
            ideal(1, &[&[7]]),
        ];
        for a in cases {
            let via_search = lct_monomial(&a).unwrap().value;
            let via_lp = lct_monomial_lp(&a).unwrap();
            assert_eq!(via_search, via_lp, "mismatch on {}", a);
        }
    }
}
