//! Exact integer arithmetic: symbols, square roots, small factorizations and
//! complete solution sets of quadratic congruences.

mod factor;
mod sqrt;

pub use factor::{factorize, Factorization};
pub use sqrt::{
    all_sqrts_mod, sqrt_mod_prime, sqrts_mod_power_of_two, sqrts_mod_prime_power, SqrtSolutionSet,
};

use crate::error::{Error, Result};

/// Kronecker (Jacobi) symbol `(a/n)` for odd positive `n`.
///
/// Coincides with the Legendre symbol when `n` is prime.
pub fn kronecker(a: i64, n: u64) -> Result<i8> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidModulus(n as i64));
    }
    Ok(jacobi_i128(a as i128, n))
}

/// Jacobi symbol for `0 <= a` and odd `n >= 1`. No argument checking.
pub(crate) fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Jacobi symbol of a signed 128-bit value modulo an odd `n`.
pub(crate) fn jacobi_i128(a: i128, n: u64) -> i8 {
    jacobi(a.rem_euclid(n as i128) as u64, n)
}

/// `floor(sqrt(n))`, exact for the whole `u128` range.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u128;
    // the float estimate is within a few units; walk to the exact floor
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Returns `r` with `r * r == n` when `n` is a non-negative perfect square.
pub fn as_perfect_square(n: i128) -> Option<u128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n as u128);
    (r * r == n as u128).then_some(r)
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for all 64-bit integers.
///
/// Miller-Rabin with the first twelve prime bases is exact below 3.3e24.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &b in &MR_BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &MR_BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n.max(2);
    while !is_prime(c) {
        c += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(a: i64, q: u64) -> i8 {
        let r = pow_mod(a.rem_euclid(q as i64) as u64, (q - 1) / 2, q);
        match r {
            0 => 0,
            1 => 1,
            _ => {
                assert_eq!(r, q - 1);
                -1
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(1, 3), Ok(1));
        assert_eq!(kronecker(-4, 7), Ok(-1));
        assert_eq!(kronecker(2, 29), Ok(-1));
        assert_eq!(kronecker(5, 1), Ok(1));
    }

    #[test]
    fn kronecker_rejects_even_modulus() {
        assert!(kronecker(3, 8).is_err());
        assert!(kronecker(3, 0).is_err());
    }

    #[test]
    fn kronecker_matches_euler_criterion() {
        for q in (3u64..200).filter(|&q| is_prime(q)) {
            for a in -(2 * q as i64)..=(2 * q as i64) {
                assert_eq!(kronecker(a, q).unwrap(), euler(a, q), "a={a} q={q}");
            }
        }
    }

    #[test]
    fn jacobi_is_zero_iff_not_coprime() {
        for n in (1u64..300).step_by(2) {
            for a in 0..n {
                let g = num_integer::gcd(a, n);
                assert_eq!(jacobi(a, n) == 0, g > 1, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(17), 4);
        assert_eq!(isqrt(u128::MAX), u64::MAX as u128);
        assert_eq!(isqrt((1u128 << 100) - 1), (1u128 << 50) - 1);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(as_perfect_square(16), Some(4));
        assert_eq!(as_perfect_square(15), None);
        assert_eq!(as_perfect_square(0), Some(0));
        assert_eq!(as_perfect_square(-4), None);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(is_prime(100_000_000_283));
        assert!(is_prime(1_000_000_000_547));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(18_446_744_073_709_551_557));
        assert_eq!(next_prime(100_000_000_000), 100_000_000_003);
    }

    proptest::proptest! {
        #[test]
        fn isqrt_brackets(n in proptest::num::u128::ANY) {
            let r = isqrt(n);
            proptest::prop_assert!(r * r <= n);
            proptest::prop_assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > n));
        }

        #[test]
        fn perfect_square_agrees_with_isqrt(n in 0i128..(1i128 << 90)) {
            let r = isqrt(n as u128);
            proptest::prop_assert_eq!(as_perfect_square(n).is_some(), r * r == n as u128);
        }
    }
}
