//! Polynomial ideal presentations: the Jacobian ideal and the pair ideal
//! (f) + J_f².

use crate::error::{Error, Result};
use crate::exact::ideal::MonomialIdeal;
use crate::exact::poly::Polynomial;

/// A finite generator list, deduplicated, with zero generators dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPresentation {
    n_vars: usize,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(n_vars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in generators {
            assert_eq!(g.n_vars(), n_vars, "generator arity mismatch");
            if g.is_zero() || kept.contains(&g) {
                continue;
            }
            kept.push(g);
        }
        if kept.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(IdealPresentation {
            n_vars,
            generators: kept,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// If every generator is a single term, the monomial ideal they generate
    /// (coefficients are units and drop out).
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if !g.is_monomial() {
                return None;
            }
            let (m, _) = g.terms().next()?;
            gens.push(m.clone());
        }
        Some(MonomialIdeal::new(self.n_vars, gens))
    }

    pub fn max_total_degree(&self) -> u64 {
        self.generators
            .iter()
            .map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }
}

/// Jacobian ideal J_f = (f, ∂f/∂x_1, …, ∂f/∂x_n); f itself is a generator.
pub fn jacobian_ideal(f: &Polynomial) -> Result<IdealPresentation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut gens = vec![f.clone()];
    for i in 0..f.n_vars() {
        gens.push(f.partial_derivative(i)?);
    }
    IdealPresentation::new(f.n_vars(), gens)
}

/// The partial derivatives alone, without f.
pub fn partials_ideal(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    (0..f.n_vars()).map(|i| f.partial_derivative(i)).collect()
}

/// Pair ideal (f) + J_f², presented as f together with all pairwise products
/// of partial derivatives. Mixed products f·∂f and f² are absorbed by (f),
/// so this generates the same ideal as {f} ∪ J_f·J_f.
pub fn pair_ideal(f: &Polynomial) -> Result<IdealPresentation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let partials = partials_ideal(f)?;
    let mut gens = vec![f.clone()];
    for i in 0..partials.len() {
        for j in i..partials.len() {
            gens.push(partials[i].mul(&partials[j]));
        }
    }
    IdealPresentation::new(f.n_vars(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::monomial::Monomial;
    use crate::exact::parse::parse;
    use crate::exact::rational::rat_int;

    #[test]
    fn jacobian_of_xy() {
        let f = parse("x*y", &["x", "y"]).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        let want = vec![
            f.clone(),
            parse("y", &["x", "y"]).unwrap(),
            parse("x", &["x", "y"]).unwrap(),
        ];
        assert_eq!(j.generators(), want.as_slice());
    }

    #[test]
    fn jacobian_of_sum_of_squares() {
        let f = parse("x1^2 + x2^2", &["x1", "x2"]).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        assert_eq!(j.generators()[0], f);
        assert_eq!(j.generators()[1], parse("2*x1", &["x1", "x2"]).unwrap());
        assert_eq!(j.generators()[2], parse("2*x2", &["x1", "x2"]).unwrap());
    }

    #[test]
    fn jacobian_partial_part_of_cubic_diagonal() {
        // f = x^3 + y^3: the partial generators are x², y² up to units
        let f = parse("x^3 + y^3", &["x", "y"]).unwrap();
        let j = jacobianideal_partial_exponents(&f);
        assert_eq!(j, vec![vec![2, 0], vec![0, 2]]);
    }

    fn jacobianideal_partial_exponents(f: &Polynomial) -> Vec<Vec<u32>> {
        partials_ideal(f)
            .unwrap()
            .iter()
            .map(|g| {
                assert!(g.is_monomial());
                g.terms().next().unwrap().0 .0.clone()
            })
            .collect()
    }

    #[test]
    fn pair_ideal_of_sum_of_squares_is_square_of_maximal() {
        let f = parse("x1^2 + x2^2", &["x1", "x2"]).unwrap();
        let p = pair_ideal(&f).unwrap();
        // Generators: f, 4x1², 4x1x2, 4x2². As an ideal this is (x1, x2)²:
        // the monomial parts of the partial products give exactly the three
        // degree-2 monomials, and f lies in their span.
        let square = MonomialIdeal::new(
            2,
            vec![
                Monomial(vec![2, 0]),
                Monomial(vec![1, 1]),
                Monomial(vec![0, 2]),
            ],
        );
        let product_part: Vec<&Polynomial> = p.generators()[1..].iter().collect();
        let monoms: Vec<Monomial> = product_part
            .iter()
            .map(|g| {
                assert!(g.is_monomial());
                g.terms().next().unwrap().0.clone()
            })
            .collect();
        assert_eq!(MonomialIdeal::new(2, monoms), square);
        for (m, _) in f.terms() {
            assert!(square.contains(m), "f term {:?} outside (x1,x2)^2", m);
        }
    }

    #[test]
    fn pair_ideal_of_smooth_line_contains_a_unit() {
        let f = parse("x", &["x"]).unwrap();
        let p = pair_ideal(&f).unwrap();
        assert!(p
            .generators()
            .iter()
            .any(|g| g.is_monomial() && g.term_count() == 1 && g.total_degree() == 0));
        let a = p.as_monomial_ideal().unwrap();
        assert!(a.is_unit());
    }

    #[test]
    fn pair_ideal_of_power_collapses_to_f() {
        // f = x^d: pair ideal is (x^d, d² x^(2d-2)) and 2d-2 ≥ d for d ≥ 2,
        // so as a monomial ideal it reduces to (x^d).
        for d in 2..=6u32 {
            let f = Polynomial::term(1, vec![d], rat_int(1));
            let p = pair_ideal(&f).unwrap();
            let a = p.as_monomial_ideal().unwrap();
            assert_eq!(a.generators(), &[Monomial(vec![d])]);
            assert!(2 * d - 2 >= d);
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let z = Polynomial::zero(2);
        assert!(jacobian_ideal(&z).is_err());
        assert!(pair_ideal(&z).is_err());
    }
}
