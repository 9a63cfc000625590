//! Exact residue histograms by odometer enumeration.
//!
//! A point x ∈ (ℤ/p^mℤ)^n is visited once; f is collapsed to a univariate
//! polynomial in the last coordinate per prefix and evaluated by Horner
//! updates along it. Workers own disjoint leading-coordinate ranges and
//! private count arrays; the merge is elementwise integer addition, so the
//! result is independent of scheduling and bitwise reproducible.

use rayon::prelude::*;

use crate::arith::{mulmod, powmod};
use crate::error::{Error, Result};
use crate::exact::poly::{bigint_mod_u64, Polynomial};
use crate::expsum::modulus::PrimePowerModulus;
use crate::expsum::subscheme::SubschemeSpec;

/// Exact counts c_r = #{x admissible : f(x) ≡ r mod p^m}.
#[derive(Clone, Debug)]
pub struct ResidueHistogram {
    modulus: PrimePowerModulus,
    n_vars: usize,
    counts: Vec<u64>,
}

impl ResidueHistogram {
    pub(crate) fn from_counts(modulus: PrimePowerModulus, n_vars: usize, counts: Vec<u64>) -> Self {
        debug_assert_eq!(counts.len() as u64, modulus.value());
        ResidueHistogram {
            modulus,
            n_vars,
            counts,
        }
    }

    pub fn modulus(&self) -> &PrimePowerModulus {
        &self.modulus
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of admissible points, Σ_r c_r.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Histogram arrays may not exceed this length (memory guard).
pub const MAX_HISTOGRAM_LEN: u64 = 1 << 24;

/// A conjunction of vanishing conditions: every generator ≡ 0 mod `modulus`.
#[derive(Clone, Debug)]
pub(crate) struct Condition {
    pub gens: Vec<Polynomial>,
    pub modulus: u64,
}

pub fn residue_histogram(
    f: &Polynomial,
    modulus: &PrimePowerModulus,
    z: &SubschemeSpec,
    budget: u64,
) -> Result<ResidueHistogram> {
    let histograms = enumerate_histograms(f, modulus, z, &[], budget)?;
    Ok(ResidueHistogram {
        modulus: *modulus,
        n_vars: f.n_vars(),
        counts: histograms.into_iter().next().expect("full histogram"),
    })
}

/// Count of points mod p^j where every generator vanishes mod p^j, subject to
/// the Z restriction mod p. This is the N_j of the volume comparison.
pub fn count_common_zeros(
    gens: &[Polynomial],
    modulus: &PrimePowerModulus,
    z: &SubschemeSpec,
    budget: u64,
) -> Result<u64> {
    if gens.is_empty() {
        return Err(Error::EmptyInput("no generators to intersect".to_string()));
    }
    let n = gens[0].n_vars();
    check_budget(modulus.value(), n, budget)?;
    let m = modulus.value();
    let p = modulus.p();
    let compiled: Vec<CompiledPoly> = gens
        .iter()
        .map(|g| CompiledPoly::compile(g, m))
        .collect::<Result<_>>()?;
    let z_compiled: Vec<CompiledPoly> = z
        .generators()
        .iter()
        .map(|g| CompiledPoly::compile(g, p))
        .collect::<Result<_>>()?;

    let count = split_first_coordinate(m)
        .par_iter()
        .map(|range| {
            let mut count = 0u64;
            let mut walker = PrefixWalker::new(n, m, range.clone());
            let mut uni: Vec<Vec<u64>> = vec![Vec::new(); compiled.len()];
            let mut z_adm = vec![true; p as usize];
            while let Some(prefix) = walker.next_prefix() {
                for (c, u) in compiled.iter().zip(&mut uni) {
                    c.collapse(prefix, m, u);
                }
                admissible_residues(&z_compiled, prefix, p, &mut z_adm);
                let (lo, hi) = walker.inner_range();
                for x in lo..hi {
                    if !z_adm[(x % p) as usize] {
                        continue;
                    }
                    if uni.iter().all(|u| horner(u, x, m) == 0) {
                        count += 1;
                    }
                }
            }
            count
        })
        .sum();
    Ok(count)
}

/// Shared enumeration core: returns the unrestricted histogram followed by
/// one histogram per extra condition (points satisfying it), all exact.
pub(crate) fn enumerate_histograms(
    f: &Polynomial,
    modulus: &PrimePowerModulus,
    z: &SubschemeSpec,
    conditions: &[Condition],
    budget: u64,
) -> Result<Vec<Vec<u64>>> {
    let n = f.n_vars();
    if z.n_vars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.n_vars(),
        });
    }
    let m = modulus.value();
    check_budget(m, n, budget)?;
    let p = modulus.p();
    let f_compiled = CompiledPoly::compile(f, m)?;
    let z_compiled: Vec<CompiledPoly> = z
        .generators()
        .iter()
        .map(|g| CompiledPoly::compile(g, p))
        .collect::<Result<_>>()?;
    let conds: Vec<(Vec<CompiledPoly>, u64)> = conditions
        .iter()
        .map(|c| {
            let gens: Result<Vec<CompiledPoly>> = c
                .gens
                .iter()
                .map(|g| CompiledPoly::compile(g, c.modulus))
                .collect();
            Ok((gens?, c.modulus))
        })
        .collect::<Result<_>>()?;

    let blocks: Vec<Vec<Vec<u64>>> = split_first_coordinate(m)
        .par_iter()
        .map(|range| {
            let mut hists: Vec<Vec<u64>> = vec![vec![0u64; m as usize]; 1 + conds.len()];
            let mut walker = PrefixWalker::new(n, m, range.clone());
            let mut f_uni: Vec<u64> = Vec::new();
            let mut cond_uni: Vec<Vec<Vec<u64>>> = conds
                .iter()
                .map(|(gens, _)| vec![Vec::new(); gens.len()])
                .collect();
            let mut z_adm = vec![true; p as usize];
            while let Some(prefix) = walker.next_prefix() {
                f_compiled.collapse(prefix, m, &mut f_uni);
                for ((gens, q), unis) in conds.iter().zip(&mut cond_uni) {
                    for (g, u) in gens.iter().zip(unis.iter_mut()) {
                        g.collapse(prefix, *q, u);
                    }
                }
                admissible_residues(&z_compiled, prefix, p, &mut z_adm);
                let (lo, hi) = walker.inner_range();
                for x in lo..hi {
                    if !z_adm[(x % p) as usize] {
                        continue;
                    }
                    let r = horner(&f_uni, x, m);
                    hists[0][r as usize] += 1;
                    for (ci, ((_, q), unis)) in conds.iter().zip(&cond_uni).enumerate() {
                        if unis.iter().all(|u| horner(u, x, *q) == 0) {
                            hists[1 + ci][r as usize] += 1;
                        }
                    }
                }
            }
            hists
        })
        .collect();

    // Associative, commutative integer merge.
    let mut merged: Vec<Vec<u64>> = vec![vec![0u64; m as usize]; 1 + conds.len()];
    for block in blocks {
        for (acc, h) in merged.iter_mut().zip(block) {
            for (a, v) in acc.iter_mut().zip(h) {
                *a += v;
            }
        }
    }
    Ok(merged)
}

fn check_budget(m: u64, n: usize, budget: u64) -> Result<()> {
    let points = (m as u128).checked_pow(n as u32);
    match points {
        Some(pts) if pts <= budget as u128 && m <= MAX_HISTOGRAM_LEN => Ok(()),
        Some(pts) if pts <= budget as u128 => Err(Error::HistogramTooLong {
            len: m,
            cap: MAX_HISTOGRAM_LEN,
        }),
        Some(pts) => Err(Error::BudgetExceeded {
            needed: pts,
            budget,
        }),
        None => Err(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        }),
    }
}

/// Split [0, M) into disjoint leading-coordinate ranges for the worker pool.
fn split_first_coordinate(m: u64) -> Vec<std::ops::Range<u64>> {
    let chunks = (rayon::current_num_threads() as u64 * 4).clamp(1, m);
    let base = m / chunks;
    let extra = m % chunks;
    let mut out = Vec::with_capacity(chunks as usize);
    let mut lo = 0u64;
    for i in 0..chunks {
        let len = base + u64::from(i < extra);
        out.push(lo..lo + len);
        lo += len;
    }
    debug_assert_eq!(lo, m);
    out
}

/// Integer-coefficient polynomial with coefficients reduced mod a fixed
/// modulus, ready for prefix collapse.
struct CompiledPoly {
    n: usize,
    terms: Vec<(u64, Vec<u32>)>,
    deg_last: u32,
}

impl CompiledPoly {
    fn compile(f: &Polynomial, modulus: u64) -> Result<Self> {
        let mut terms = Vec::new();
        let mut deg_last = 0u32;
        for (exps, coeff) in f.integer_terms()? {
            let c = bigint_mod_u64(&coeff, modulus);
            let last = *exps.last().expect("positive arity");
            deg_last = deg_last.max(last);
            if c != 0 {
                terms.push((c, exps));
            }
        }
        Ok(CompiledPoly {
            n: f.n_vars(),
            terms,
            deg_last,
        })
    }

    /// Univariate coefficients in the last coordinate at the given prefix
    /// (first n−1 coordinate values).
    fn collapse(&self, prefix: &[u64], modulus: u64, out: &mut Vec<u64>) {
        out.clear();
        out.resize(self.deg_last as usize + 1, 0);
        for (c, exps) in &self.terms {
            let mut factor = *c;
            for (i, &x) in prefix.iter().enumerate().take(self.n - 1) {
                let e = exps[i];
                if e > 0 {
                    factor = mulmod(factor, powmod(x % modulus, e as u64, modulus), modulus);
                }
            }
            let slot = exps[self.n - 1] as usize;
            out[slot] = (out[slot] + factor) % modulus;
        }
    }
}

#[inline]
fn horner(uni: &[u64], x: u64, modulus: u64) -> u64 {
    let x = x % modulus;
    let mut acc = 0u64;
    for &c in uni.iter().rev() {
        acc = (mulmod(acc, x, modulus) + c) % modulus;
    }
    acc
}

/// Membership of each residue s ∈ 𝔽_p: all Z generators vanish at the point
/// whose last coordinate is s (other coordinates fixed by the prefix).
fn admissible_residues(z: &[CompiledPoly], prefix: &[u64], p: u64, out: &mut [bool]) {
    if z.is_empty() {
        out.iter_mut().for_each(|b| *b = true);
        return;
    }
    let mut uni = Vec::new();
    out.iter_mut().for_each(|b| *b = true);
    for g in z {
        g.collapse(prefix, p, &mut uni);
        for (s, b) in out.iter_mut().enumerate() {
            if *b && horner(&uni, s as u64, p) != 0 {
                *b = false;
            }
        }
    }
}

/// Iterates prefixes (all coordinates except the last), with the first
/// coordinate confined to a worker's range. For n = 1 the single coordinate
/// is the inner one and the walker yields one empty prefix whose inner range
/// is the worker's range.
struct PrefixWalker {
    n: usize,
    modulus: u64,
    first: std::ops::Range<u64>,
    state: Vec<u64>,
    started: bool,
    done: bool,
}

impl PrefixWalker {
    fn new(n: usize, modulus: u64, first: std::ops::Range<u64>) -> Self {
        PrefixWalker {
            n,
            modulus,
            state: if n >= 2 {
                let mut s = vec![0u64; n - 1];
                s[0] = first.start;
                s
            } else {
                Vec::new()
            },
            first,
            started: false,
            done: false,
        }
    }

    fn inner_range(&self) -> (u64, u64) {
        if self.n == 1 {
            (self.first.start, self.first.end)
        } else {
            (0, self.modulus)
        }
    }

    fn next_prefix(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n >= 2 && self.first.is_empty() {
                self.done = true;
                return None;
            }
            return Some(&self.state);
        }
        if self.n == 1 {
            self.done = true;
            return None;
        }
        // Odometer: last prefix coordinate fastest, first confined to range.
        for i in (0..self.state.len()).rev() {
            self.state[i] += 1;
            let limit = if i == 0 { self.first.end } else { self.modulus };
            if self.state[i] < limit {
                return Some(&self.state);
            }
            self.state[i] = if i == 0 { self.first.end } else { 0 };
        }
        self.done = true;
        None
    }
}
