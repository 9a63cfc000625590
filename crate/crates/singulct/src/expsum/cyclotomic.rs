//! Exact vanishing test for sums of p^m-th roots of unity.
//!
//! A vector v of integers encodes Σ_r v[r]·ζ^r with ζ = e^(2πi/p^m). The
//! minimal polynomial of ζ is Φ_{p^m}(x) = Σ_{k=0}^{p−1} x^{k·p^(m−1)}, so
//! every power x^e with e ≥ φ(p^m) rewrites as −Σ_{k=0}^{p−2} x^(j+k·p^(m−1))
//! with j = e − (p−1)·p^(m−1). After reduction the sum vanishes iff all
//! φ(p^m) remaining coefficients are zero.

/// Exact zero test in ℤ[ζ_{p^m}]; consumes the coefficient vector.
pub fn vanishes(mut v: Vec<i128>, p: u64, m: u32) -> bool {
    let pm = p.pow(m) as usize;
    debug_assert_eq!(v.len(), pm);
    let step = p.pow(m - 1) as usize;
    let phi = step * (p as usize - 1);
    for e in (phi..pm).rev() {
        let c = v[e];
        if c == 0 {
            continue;
        }
        let j = e - phi;
        for k in 0..(p as usize - 1) {
            v[j + k * step] -= c;
        }
        v[e] = 0;
    }
    v[..phi].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_cycle_vanishes() {
        // Σ_{r<p^m} ζ^r = 0
        for (p, m) in [(3u64, 1u32), (3, 2), (5, 2), (7, 3), (2, 4)] {
            let v = vec![1i128; p.pow(m) as usize];
            assert!(vanishes(v, p, m), "p={}, m={}", p, m);
        }
    }

    #[test]
    fn single_root_does_not_vanish() {
        let mut v = vec![0i128; 9];
        v[4] = 2;
        assert!(!vanishes(v, 3, 2));
    }

    #[test]
    fn subgroup_coset_vanishes() {
        // ζ^j (1 + ζ^(p^(m−1)) + … + ζ^((p−1)p^(m−1))) = 0 for each j
        let (p, m) = (5u64, 2u32);
        let pm = p.pow(m) as usize;
        let step = p.pow(m - 1) as usize;
        for j in 0..step {
            let mut v = vec![0i128; pm];
            for k in 0..p as usize {
                v[(j + k * step) % pm] += 3;
            }
            assert!(vanishes(v, p, m), "coset at {}", j);
        }
    }

    #[test]
    fn nonvanishing_mixed_sum() {
        // 1 + ζ over p^m = 9 is nonzero
        let mut v = vec![0i128; 9];
        v[0] = 1;
        v[1] = 1;
        assert!(!vanishes(v, 3, 2));
    }
}
