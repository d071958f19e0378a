use serde::{Deserialize, Serialize};

use super::{inv_mod, jacobi, mul_mod, pow_mod, Factorization};

/// Every residue `s` in `[0, modulus)` with `s^2 = target (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqrtSolutionSet {
    pub modulus: u64,
    pub target: u64,
    pub solutions: Vec<u64>,
}

/// Square roots of `c` modulo an odd prime `q`: `{}`, `{0}` or `{r, q - r}`.
///
/// Tonelli-Shanks; the non-residue is the first one found scanning 2, 3, 4, ...
pub fn sqrt_mod_prime(c: u64, q: u64) -> Vec<u64> {
    debug_assert!(q % 2 == 1);
    let c = c % q;
    if c == 0 {
        return vec![0];
    }
    if jacobi(c, q) != 1 {
        return vec![];
    }
    let r = tonelli_shanks(c, q);
    let mut out = vec![r, q - r];
    out.sort_unstable();
    out
}

fn tonelli_shanks(c: u64, q: u64) -> u64 {
    if q % 4 == 3 {
        return pow_mod(c, (q + 1) / 4, q);
    }
    let s = (q - 1).trailing_zeros();
    let odd = (q - 1) >> s;
    let z = (2..).find(|&z| jacobi(z, q) == -1).unwrap();
    let mut m = s;
    let mut cz = pow_mod(z, odd, q);
    let mut t = pow_mod(c, odd, q);
    let mut r = pow_mod(c, odd.div_ceil(2), q);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, q);
            i += 1;
        }
        let b = pow_mod(cz, 1 << (m - i - 1), q);
        m = i;
        cz = mul_mod(b, b, q);
        t = mul_mod(t, cz, q);
        r = mul_mod(r, b, q);
    }
    r
}

/// Square roots of a unit `u` modulo `q^g`, `g >= 1`.
fn unit_sqrts(u: u64, q: u64, g: u32) -> Vec<u64> {
    let m = q.pow(g);
    if q == 2 {
        return unit_sqrts_two(u % m, g);
    }
    let Some(&r0) = sqrt_mod_prime(u, q).first() else {
        return vec![];
    };
    // Hensel: r <- r - (r^2 - u) / (2r), one power of q at a time
    let mut r = r0;
    let mut mk = q;
    for _ in 1..g {
        mk *= q;
        let f = (mul_mod(r, r, mk) + mk - u % mk) % mk;
        let inv = inv_mod(2 * r % mk, mk).expect("2r is a unit");
        r = (r + mk - mul_mod(f, inv, mk)) % mk;
    }
    let mut out = vec![r, m - r];
    out.sort_unstable();
    out
}

fn unit_sqrts_two(u: u64, g: u32) -> Vec<u64> {
    match g {
        1 => vec![1],
        2 => {
            if u % 4 == 1 {
                vec![1, 3]
            } else {
                vec![]
            }
        }
        _ => {
            if u % 8 != 1 {
                return vec![];
            }
            let m = 1u64 << g;
            let mut r = 1u64;
            for i in 3..g {
                let next = 1u64 << (i + 1);
                if mul_mod(r, r, next) != u % next {
                    r += 1 << (i - 1);
                }
            }
            let half = m >> 1;
            let mut out = vec![r, m - r, (r + half) % m, (m - r + half) % m];
            out.sort_unstable();
            out.dedup();
            out
        }
    }
}

/// All residues modulo `q^e` whose square is `c`, for any prime `q`.
fn sqrts_mod_any_prime_power(c: u64, q: u64, e: u32) -> Vec<u64> {
    let m = q.pow(e);
    let c = c % m;
    if c == 0 {
        let step = q.pow(e.div_ceil(2));
        return (0..m).step_by(step as usize).collect();
    }
    let mut k = 0;
    let mut u = c;
    while u.is_multiple_of(q) {
        u /= q;
        k += 1;
    }
    if k % 2 == 1 {
        return vec![];
    }
    let half = k / 2;
    let g = e - k;
    let scale = q.pow(half);
    let base_mod = q.pow(g);
    let mut out = Vec::new();
    // x = q^half * y with y^2 = u (mod q^g), y taken modulo q^(e - half)
    for y0 in unit_sqrts(u, q, g) {
        for i in 0..scale {
            let y = y0 + i * base_mod;
            out.push(y * scale % m);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All residues modulo `q^e` (`q` an odd prime) whose square is `c`.
pub fn sqrts_mod_prime_power(c: u64, q: u64, e: u32) -> Vec<u64> {
    assert!(q % 2 == 1 && e >= 1, "odd prime power required");
    sqrts_mod_any_prime_power(c, q, e)
}

/// All residues modulo `2^e` whose square is `c`.
pub fn sqrts_mod_power_of_two(c: u64, e: u32) -> Vec<u64> {
    assert!(e >= 1);
    sqrts_mod_any_prime_power(c, 2, e)
}

/// The complete sorted solution set of `x^2 = c (mod n)`.
///
/// Solves modulo each prime power of `f` and glues the pieces with the CRT.
pub fn all_sqrts_mod(c: i128, n: u64, f: &Factorization) -> SqrtSolutionSet {
    debug_assert_eq!(f.value, n);
    let target = c.rem_euclid(n as i128) as u64;
    let mut modulus = 1u64;
    let mut acc = vec![0u64];
    for &(q, e) in &f.factors {
        let qe = q.pow(e);
        let local = sqrts_mod_any_prime_power(target % qe, q, e);
        if local.is_empty() {
            acc.clear();
            break;
        }
        let inv = inv_mod(modulus % qe, qe).expect("coprime moduli");
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &a in &acc {
            for &b in &local {
                // x = a + modulus * ((b - a) / modulus mod qe)
                let diff = (b + qe - a % qe) % qe;
                let t = mul_mod(diff, inv, qe);
                next.push(a + modulus * t);
            }
        }
        modulus *= qe;
        acc = next;
    }
    acc.sort_unstable();
    SqrtSolutionSet {
        modulus: n,
        target,
        solutions: acc,
    }
}
