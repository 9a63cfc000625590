//! Small dense simplex over exact rationals.
//!
//! Two clients: the feasibility certificate behind `lct_monomial` (is the
//! all-ones point inside a scaled Newton polyhedron?) and the LP route that
//! the oracle tests compare the weight search against. Bland's rule, so
//! termination is unconditional; everything is `BigRational`, so there is no
//! rounding to reason about.

use num_traits::{One, Signed, Zero};

use crate::exact::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(Rat),
    Unbounded,
}

/// max c·x subject to rows·x ≤ rhs, x ≥ 0, with rhs ≥ 0 (slack basis start).
pub fn maximize(c: &[Rat], rows: &[Vec<Rat>], rhs: &[Rat]) -> LpOutcome {
    let m = rows.len();
    let n = c.len();
    debug_assert!(
        rhs.iter().all(|b| !b.is_negative()),
        "rhs must be nonnegative"
    );
    // Columns: n structural + m slacks, then the rhs.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.len(), n);
        let mut r = vec![Rat::zero(); width];
        r[..n].clone_from_slice(row);
        r[n + i] = Rat::one();
        r[width - 1] = rhs[i].clone();
        t.push(r);
    }
    let mut cost = vec![Rat::zero(); width];
    cost[..n].clone_from_slice(c);
    let mut basis: Vec<usize> = (n..n + m).collect();
    match run_simplex(&mut t, &mut cost, &mut basis) {
        Some(()) => LpOutcome::Optimal(-cost[width - 1].clone()),
        None => LpOutcome::Unbounded,
    }
}

/// Feasibility of { t ≥ 0 : Σ t_i = 1, cols·t ≤ bound } via a phase-1
/// artificial variable on the convexity row. `bound` must be ≥ 0.
pub fn convex_combination_feasible(cols: &[Vec<Rat>], bound: &[Rat]) -> bool {
    let k = cols.len();
    let m = bound.len();
    debug_assert!(bound.iter().all(|b| !b.is_negative()));
    // Variables: t_0..t_{k-1}, slacks s_0..s_{m-1}, artificial a.
    let width = k + m + 1 + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for j in 0..m {
        let mut r = vec![Rat::zero(); width];
        for (i, col) in cols.iter().enumerate() {
            debug_assert_eq!(col.len(), m);
            r[i] = col[j].clone();
        }
        r[k + j] = Rat::one();
        r[width - 1] = bound[j].clone();
        t.push(r);
    }
    let mut convexity = vec![Rat::zero(); width];
    for cell in convexity.iter_mut().take(k) {
        *cell = Rat::one();
    }
    convexity[k + m] = Rat::one(); // artificial
    convexity[width - 1] = Rat::one();
    t.push(convexity);

    // Maximize -a; price out the artificial, which starts basic at value 1.
    let mut cost = vec![Rat::zero(); width];
    cost[k + m] = -Rat::one();
    let mut basis: Vec<usize> = (k..k + m).collect();
    basis.push(k + m);
    // cost := cost + (row of the artificial) so the basic column reads zero.
    for j in 0..width {
        let add = t[m][j].clone();
        cost[j] += add;
    }
    match run_simplex(&mut t, &mut cost, &mut basis) {
        Some(()) => {
            let value = -cost[width - 1].clone();
            value.is_zero()
        }
        None => unreachable!("phase-1 objective is bounded above by zero"),
    }
}

/// Bland-rule simplex on a priced-out tableau. Returns `None` on unbounded.
fn run_simplex(t: &mut [Vec<Rat>], cost: &mut [Rat], basis: &mut [usize]) -> Option<()> {
    let width = cost.len();
    let rhs_col = width - 1;
    loop {
        // Entering: smallest index with positive reduced cost.
        let Some(enter) = (0..rhs_col).find(|&j| cost[j].is_positive()) else {
            return Some(());
        };
        // Leaving: min ratio; ties broken by smallest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = row[rhs_col].clone() / row[enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            return None; // unbounded
        };
        // Pivot on (r, enter).
        let piv = t[r][enter].clone();
        for cell in t[r].iter_mut() {
            *cell /= piv.clone();
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (cell, pv) in row.iter_mut().zip(&pivot_row) {
                let sub = factor.clone() * pv.clone();
                *cell -= sub;
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (cell, pv) in cost.iter_mut().zip(&pivot_row) {
                let sub = factor.clone() * pv.clone();
                *cell -= sub;
            }
        }
        basis[r] = enter;
    }
}
