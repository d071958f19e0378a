//! Dense polynomials over `F_p` and extraction of their roots in `F_p`.

use std::collections::BTreeSet;

use crate::arith::{inv_mod, mul_mod};

/// Coefficients in increasing degree; the zero polynomial is empty.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &Poly) -> usize {
    a.len().saturating_sub(1)
}

fn monic(a: Poly, p: u64) -> Poly {
    let Some(&lead) = a.last() else {
        return a;
    };
    let inv = inv_mod(lead, p).expect("nonzero leading coefficient");
    a.into_iter().map(|c| mul_mod(c, inv, p)).collect()
}

fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by a nonzero `b`.
fn divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let inv = inv_mod(*b.last().unwrap(), p).unwrap();
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let c = mul_mod(rem[shift + b.len() - 1], inv, p);
        quot[shift] = c;
        if c == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = mul_mod(c, y, p);
            rem[shift + j] = (rem[shift + j] + p - t) % p;
        }
    }
    (trim(quot), trim(rem))
}

fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    divrem(a, b, p).1
}

fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

fn powmod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut acc = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

fn eval(a: &Poly, x: u64, p: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Distinct roots in `F_p` of a polynomial given by its coefficients mod `p`.
///
/// Takes `gcd(f, X^p - X)` and splits it with `gcd(g, (X + k)^((p-1)/2) - 1)`
/// for `k = 0, 1, 2, ...` until every factor is linear.
pub fn roots_of(coeffs: &[u64], p: u64) -> BTreeSet<u64> {
    let f = monic(trim(coeffs.iter().map(|c| c % p).collect()), p);
    let mut roots = BTreeSet::new();
    if degree(&f) == 0 {
        return roots;
    }
    let x = vec![0, 1];
    let xp = powmod(&x, p, &f, p);
    let g = gcd(&f, &sub(&xp, &x, p), p);
    split(g, p, &mut roots);
    roots
}

fn split(g: Poly, p: u64, roots: &mut BTreeSet<u64>) {
    let mut g = g;
    let mut k = 0u64;
    loop {
        match degree(&g) {
            0 => return,
            1 => {
                roots.insert((p - g[0]) % p);
                return;
            }
            _ => {}
        }
        debug_assert!(k < p, "split ran out of shifts");
        let root = (p - k % p) % p;
        if eval(&g, root, p) == 0 {
            roots.insert(root);
            g = divrem(&g, &vec![k % p, 1], p).0;
            k += 1;
            continue;
        }
        let w = powmod(&vec![k % p, 1], (p - 1) / 2, &g, p);
        let h = gcd(&g, &sub(&w, &vec![1], p), p);
        if degree(&h) > 0 && degree(&h) < degree(&g) {
            let other = divrem(&g, &h, p).0;
            split(h, p, roots);
            split(monic(other, p), p, roots);
            return;
        }
        k += 1;
    }
}

/// Evaluates by scanning all of `F_p`; used as a cross-check on small primes.
pub fn roots_by_scan(coeffs: &[u64], p: u64) -> BTreeSet<u64> {
    let f: Poly = coeffs.iter().map(|c| c % p).collect();
    (0..p).filter(|&x| eval(&f, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_quadratic() {
        // X - 1728 mod 7
        assert_eq!(roots_of(&[7 - 1728 % 7, 1], 7), BTreeSet::from([6]));
        assert_eq!(roots_of(&[0, 1], 11), BTreeSet::from([0]));
        // (X - 2)(X - 5) = X^2 - 7X + 10 over F_13
        assert_eq!(roots_of(&[10, 13 - 7, 1], 13), BTreeSet::from([2, 5]));
        // X^2 + 1 has no roots mod 7
        assert!(roots_of(&[1, 0, 1], 7).is_empty());
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        // (X + 1)^2 over F_7
        assert_eq!(roots_of(&[1, 2, 1], 7), BTreeSet::from([6]));
    }

    #[test]
    fn matches_scan_on_products_of_linears() {
        for p in [7u64, 11, 13, 101, 997] {
            for seed in 0..20u64 {
                let mut f = vec![1u64];
                let count = 1 + seed % 6;
                for i in 0..count {
                    let r = (seed * 31 + i * 17 + 3) % p;
                    f = mul(&f, &vec![(p - r) % p, 1], p);
                }
                // an irreducible-ish extra factor
                f = mul(&f, &vec![seed % p + 2, 1, 1], p);
                assert_eq!(roots_of(&f, p), roots_by_scan(&f, p), "p={p} seed={seed}");
            }
        }
    }
}
