//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] in graded-lex order, so
//! iteration, printing, and hashing are all deterministic. The zero polynomial
//! is the empty map; no zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, mulmod, powmod};
use crate::error::{Error, Result};
use crate::exact::monomial::Monomial;
use crate::exact::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars > 0, "variable count must be positive");
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(n_vars), c);
        }
        p
    }

    /// The variable x_i.
    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(n_vars);
        p.terms.insert(Monomial::var(n_vars, i), Rat::one());
        p
    }

    /// Single term c·x^e.
    pub fn term(n_vars: usize, exponents: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exponents.len(), n_vars, "exponent vector length mismatch");
        let mut p = Polynomial::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exponents), c);
        }
        p
    }

    pub fn from_terms<I>(n_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Polynomial::zero(n_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), n_vars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&Monomial::constant(self.n_vars))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of x_i across all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// True when the polynomial is a single term (or zero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.n_vars, Rat::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact formal partial derivative ∂/∂x_i.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.n_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                n_vars: self.n_vars,
            });
        }
        let mut out = Polynomial::zero(self.n_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut lowered = m.clone();
            lowered.0[i] = e - 1;
            out.add_term(lowered, c.clone() * Rat::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Terms as (exponents, integer coefficient); errors on a fractional coefficient.
    pub fn integer_terms(&self) -> Result<Vec<(Vec<u32>, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.denom().is_one() {
                    Ok((m.0.clone(), c.numer().clone()))
                } else {
                    Err(Error::NonIntegerCoefficient {
                        coeff: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x.clone();
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// f(point) mod p^m without intermediate overflow.
    ///
    /// Requires integer coefficients and a prime-power modulus; point entries
    /// are reduced mod p^m.
    pub fn eval_mod(&self, point: &[u64], modulus: u64) -> Result<u64> {
        if arith::prime_power_decompose(modulus).is_none() {
            return Err(Error::NotPrimePower { value: modulus });
        }
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                got: point.len(),
            });
        }
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            if !c.denom().is_one() {
                return Err(Error::NonIntegerCoefficient {
                    coeff: c.to_string(),
                });
            }
            let coeff = bigint_mod_u64(c.numer(), modulus);
            let mut t = coeff;
            for (&x, &e) in point.iter().zip(&m.0) {
                t = mulmod(t, powmod(x % modulus, e as u64, modulus), modulus);
            }
            acc = (acc + t) % modulus;
        }
        Ok(acc)
    }
}

/// Reduce a big integer into [0, m).
pub fn bigint_mod_u64(v: &BigInt, m: u64) -> u64 {
    let mm = BigInt::from(m);
    let mut r = v % &mm;
    if r.is_negative() {
        r += &mm;
    }
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

impl Polynomial {
    fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(if mag.denom().is_one() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Like `Display` but with caller-supplied variable names.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.n_vars);
        self.render(&|i| names[i].to_string())
    }
}

/// Canonical rendering: descending graded-lex, `*` between factors, `^` for
/// powers, integer coefficients printed bare. Reparses to the same polynomial
/// whenever all coefficients are integers.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("x{}", i)))
    }
}
