//! Machine-word modular arithmetic and deterministic primality.

/// (a * b) mod m without overflow.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square-and-multiply.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Decompose `v = p^m` with `p` prime, `m ≥ 1`; `None` if `v` is not a prime power.
pub fn prime_power_decompose(v: u64) -> Option<(u64, u32)> {
    if v < 2 {
        return None;
    }
    // The smallest prime factor of a prime power is its base.
    let mut p = v;
    if v.is_multiple_of(2) {
        p = 2;
    } else {
        let mut d = 3u64;
        while d.saturating_mul(d) <= v {
            if v.is_multiple_of(d) {
                p = d;
                break;
            }
            d += 2;
        }
    }
    if !is_prime(p) {
        return None;
    }
    let mut rest = v;
    let mut m = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p, m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_cases() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power_decompose(27), Some((3, 3)));
        assert_eq!(prime_power_decompose(7), Some((7, 1)));
        assert_eq!(prime_power_decompose(1024), Some((2, 10)));
        assert_eq!(prime_power_decompose(12), None);
        assert_eq!(prime_power_decompose(1), None);
        assert_eq!(prime_power_decompose(0), None);
    }

    #[test]
    fn powmod_agrees_with_naive() {
        for a in 0..20u64 {
            for e in 0..10u64 {
                let naive = (0..e).fold(1u64, |acc, _| acc * a) % 1000;
                assert_eq!(powmod(a, e, 1000), naive);
            }
        }
    }
}
