//! Milnor numbers by exact colength stabilization.
//!
//! μ = colength of the ideal of partial derivatives. We compute the colength
//! of J'_f + (x_1^K, …, x_n^K) on the monomial box basis {x^α : α_i < K} by
//! exact row reduction and raise K until two consecutive values agree. The
//! stabilized value equals the local colength at the origin whenever the
//! origin is the only zero of J'_f (caller-asserted).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith;
use crate::error::{Error, Result};
use crate::exact::poly::{bigint_mod_u64, Polynomial};
use crate::exact::rational::Rat;
use crate::invariants::presentation::partials_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MilnorMode {
    /// Exact rational elimination (default).
    Exact,
    /// Row reduction modulo two deterministic 31-bit primes; their colengths
    /// must agree, otherwise we fall back to exact arithmetic. Rank over a
    /// finite field can only drop, so a modular colength is never too small.
    Modular,
}

#[derive(Clone, Copy, Debug)]
pub struct MilnorOptions {
    pub mode: MilnorMode,
    /// Stop (non-isolated singularity) if K reaches this without stabilizing.
    pub k_ceiling: u32,
    /// Refuse monomial boxes larger than this many cells.
    pub max_box: usize,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        MilnorOptions {
            mode: MilnorMode::Exact,
            k_ceiling: 16,
            max_box: 200_000,
        }
    }
}

pub fn milnor_number(f: &Polynomial, opts: &MilnorOptions) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::SmoothAtOrigin);
    }
    let partials = partials_ideal(f)?;
    if partials.iter().any(|g| !g.constant_term().is_zero()) {
        return Err(Error::SmoothAtOrigin);
    }
    let gens: Vec<&Polynomial> = partials.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::SmoothAtOrigin);
    }
    let n = f.n_vars();

    let mut prev: Option<u64> = None;
    for k in 2..=opts.k_ceiling {
        let cells = (k as usize)
            .checked_pow(n as u32)
            .filter(|&c| c <= opts.max_box);
        let Some(_) = cells else {
            return Err(Error::Inconclusive(format!(
                "monomial box {}^{} exceeds the {} cell budget",
                k, n, opts.max_box
            )));
        };
        let colength = match opts.mode {
            MilnorMode::Exact => colength_exact(&gens, n, k),
            MilnorMode::Modular => {
                colength_modular(&gens, n, k).unwrap_or_else(|| colength_exact(&gens, n, k))
            }
        };
        if prev == Some(colength) {
            return Ok(colength);
        }
        prev = Some(colength);
    }
    Err(Error::NonIsolatedSingularity {
        ceiling: opts.k_ceiling,
    })
}

/// Colength of (gens) + (x_1^K, …, x_n^K) on the box basis, exactly.
fn colength_exact(gens: &[&Polynomial], n: usize, k: u32) -> u64 {
    let box_cells = (k as u64).pow(n as u32);
    let mut rref = RatEchelon::default();
    let mut rank = 0u64;
    let mut shift = vec![0u32; n];
    loop {
        for g in gens {
            let mut row: Vec<(usize, Rat)> = Vec::new();
            for (m, c) in g.terms() {
                if let Some(col) = box_index(&shift, &m.0, k) {
                    row.push((col, c.clone()));
                }
            }
            row.sort_by_key(|(col, _)| *col);
            if !row.is_empty() && rref.insert(row) {
                rank += 1;
            }
        }
        if !step_odometer(&mut shift, k) {
            break;
        }
    }
    box_cells - rank
}

fn colength_modular(gens: &[&Polynomial], n: usize, k: u32) -> Option<u64> {
    let primes = modular_primes();
    let mut results = [0u64; 2];
    for (idx, &p) in primes.iter().enumerate() {
        let box_cells = (k as u64).pow(n as u32);
        let mut rref: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
        let mut rank = 0u64;
        let mut shift = vec![0u32; n];
        loop {
            for g in gens {
                let mut row: Vec<(usize, u64)> = Vec::new();
                for (m, c) in g.terms() {
                    if let Some(col) = box_index(&shift, &m.0, k) {
                        let den = bigint_mod_u64(c.denom(), p);
                        if den == 0 {
                            return None; // p divides a denominator; use exact
                        }
                        let num = bigint_mod_u64(c.numer(), p);
                        let v = arith::mulmod(num, arith::powmod(den, p - 2, p), p);
                        if v != 0 {
                            row.push((col, v));
                        }
                    }
                }
                row.sort_by_key(|(col, _)| *col);
                if insert_mod_row(&mut rref, row, p) {
                    rank += 1;
                }
            }
            if !step_odometer(&mut shift, k) {
                break;
            }
        }
        results[idx] = box_cells - rank;
    }
    (results[0] == results[1]).then_some(results[0])
}

/// Two fixed 31-bit primes drawn from a little multiplicative generator, so
/// modular runs are reproducible.
fn modular_primes() -> [u64; 2] {
    let mut state = 0x243F_6A88_85A3_08D3u64; // seed
    let mut out = [0u64; 2];
    let mut found = 0;
    while found < 2 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let candidate = (state >> 33) | (1 << 30) | 1; // odd, 31-bit
        if arith::is_prime(candidate) && (found == 0 || out[0] != candidate) {
            out[found] = candidate;
            found += 1;
        }
    }
    out
}

/// Column index of x^(shift + e) in the K-box, or None if it falls outside.
fn box_index(shift: &[u32], e: &[u32], k: u32) -> Option<usize> {
    let mut idx = 0usize;
    for (s, &ei) in shift.iter().zip(e) {
        let a = s + ei;
        if a >= k {
            return None;
        }
        idx = idx * k as usize + a as usize;
    }
    Some(idx)
}

fn step_odometer(shift: &mut [u32], k: u32) -> bool {
    for s in shift.iter_mut() {
        *s += 1;
        if *s < k {
            return true;
        }
        *s = 0;
    }
    false
}

/// Sparse row echelon over ℚ: rows keyed by leading column, leading
/// coefficient normalized to 1.
#[derive(Default)]
struct RatEchelon {
    pivots: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl RatEchelon {
    /// Returns true when the row was independent (rank grew).
    fn insert(&mut self, mut row: Vec<(usize, Rat)>) -> bool {
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    for (_, c) in row.iter_mut() {
                        *c /= coeff.clone();
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    row = subtract_scaled(&row, pivot, &coeff);
                }
            }
        }
    }
}

/// row − factor · pivot, both sorted by column.
fn subtract_scaled(
    row: &[(usize, Rat)],
    pivot: &[(usize, Rat)],
    factor: &Rat,
) -> Vec<(usize, Rat)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            let v = -factor.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = row[i].1.clone() - factor.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn insert_mod_row(
    pivots: &mut BTreeMap<usize, Vec<(usize, u64)>>,
    mut row: Vec<(usize, u64)>,
    p: u64,
) -> bool {
    loop {
        let Some(&(lead, coeff)) = row.first() else {
            return false;
        };
        match pivots.get(&lead) {
            None => {
                let inv = arith::powmod(coeff, p - 2, p);
                for (_, c) in row.iter_mut() {
                    *c = arith::mulmod(*c, inv, p);
                }
                pivots.insert(lead, row);
                return true;
            }
            Some(pivot) => {
                let mut out = Vec::with_capacity(row.len() + pivot.len());
                let mut i = 0;
                let mut j = 0;
                while i < row.len() || j < pivot.len() {
                    if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                        out.push(row[i]);
                        i += 1;
                    } else if i == row.len() || pivot[j].0 < row[i].0 {
                        let v = (p - arith::mulmod(coeff, pivot[j].1, p)) % p;
                        if v != 0 {
                            out.push((pivot[j].0, v));
                        }
                        j += 1;
                    } else {
                        let v = (row[i].1 + p - arith::mulmod(coeff, pivot[j].1, p)) % p;
                        if v != 0 {
                            out.push((row[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                row = out;
            }
        }
    }
}
