//! Genus invariants of an imaginary quadratic discriminant.
//!
//! [`classify`] computes the 2-rank data (`t`, `m`, `mu`) and
//! [`real_genus_generators`] the radicands of `E`, the maximal real subfield of
//! the genus field. `E` is multiquadratic of degree `2^(mu-1)`, so a prime
//! splits completely in it exactly when every radicand is a square mod p.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, kronecker, Factorization};
use crate::error::{Error, Result};

/// Returns true when `d < 0` and `d = 0, 1 (mod 4)`.
pub fn is_discriminant(d: i64) -> bool {
    d < 0 && matches!(d.rem_euclid(4), 0 | 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantRecord {
    pub d: i64,
    pub abs_factorization: Factorization,
    /// `n` with `d = -4n`, present only when `4 | d`.
    pub n: Option<u64>,
    /// Number of distinct odd primes dividing `d`.
    pub t_odd: u32,
    /// Number of those odd primes that are `1 (mod 4)`.
    pub m: u32,
    /// `C(d)` has exactly `2^(mu-1)` elements of order at most 2.
    pub mu: u32,
}

impl DiscriminantRecord {
    pub fn two_torsion(&self) -> u64 {
        1 << (self.mu - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealGenusField {
    /// Squarefree radicands, independent modulo squares.
    pub radicands: Vec<u64>,
    pub degree_log2: usize,
}

pub fn classify(d: i64) -> Result<DiscriminantRecord> {
    if !is_discriminant(d) {
        return Err(Error::InvalidDiscriminant(d));
    }
    let f = factorize(d.unsigned_abs())?;
    Ok(classify_factored(d, f))
}

/// Same as [`classify`] for a discriminant already checked and factored.
pub(crate) fn classify_factored(d: i64, abs_factorization: Factorization) -> DiscriminantRecord {
    debug_assert!(is_discriminant(d));
    let t_odd = abs_factorization.odd_primes().count() as u32;
    let m = abs_factorization
        .odd_primes()
        .filter(|q| q % 4 == 1)
        .count() as u32;
    let n = (d % 4 == 0).then(|| d.unsigned_abs() / 4);
    let mu = match n {
        None => t_odd,
        Some(n) if n % 4 == 3 => t_odd,
        Some(n) if matches!(n % 4, 1 | 2) => t_odd + 1,
        Some(n) if n % 8 == 4 => t_odd + 1,
        Some(_) => t_odd + 2,
    };
    DiscriminantRecord {
        d,
        abs_factorization,
        n,
        t_odd,
        m,
        mu,
    }
}

/// Builds the radicands of `E` from the five-way case split on `d`.
///
/// Radicands are reduced to squarefree kernels and filtered to a basis of
/// their span modulo squares; the basis size must equal `mu - 1`.
pub fn real_genus_generators(rec: &DiscriminantRecord) -> Result<RealGenusField> {
    // index 0 is the prime 2, then the odd primes of |d| in increasing order
    let odd: Vec<u64> = rec.abs_factorization.odd_primes().collect();
    let bit_of = |q: u64| -> u64 {
        if q == 2 {
            1
        } else {
            1 << (1 + odd.iter().position(|&r| r == q).expect("prime of d"))
        }
    };
    let two = bit_of(2);
    let split_primes = odd.iter().filter(|&&q| q % 4 == 1).map(|&q| bit_of(q));
    let all_odd = odd.iter().map(|&q| bit_of(q));
    let inert = odd.iter().filter(|&&q| q % 4 == 3).copied();

    // kernel of d / q_j = |d| / q for q = 3 (mod 4)
    let quotient = |q: u64| -> u64 {
        rec.abs_factorization
            .factors
            .iter()
            .map(|&(r, e)| if r == q { (r, e - 1) } else { (r, e) })
            .filter(|&(_, e)| e % 2 == 1)
            .fold(0, |acc, (r, _)| acc | bit_of(r))
    };
    let case_a = || -> Vec<u64> {
        split_primes
            .clone()
            .chain(inert.clone().map(quotient))
            .collect()
    };

    let raw: Vec<u64> = match rec.n {
        None => case_a(),
        Some(n) => match n % 8 {
            3 | 7 => case_a(),
            1 | 4 | 5 => all_odd.collect(),
            2 => split_primes
                .clone()
                .chain(inert.clone().map(|q| two | bit_of(q)))
                .collect(),
            6 => std::iter::once(two).chain(case_a()).collect(),
            _ => std::iter::once(two).chain(all_odd).collect(),
        },
    };

    let basis = independent_subset(&raw);
    let expected = rec.mu as usize - 1;
    if basis.len() != expected {
        return Err(Error::GenusDegreeMismatch {
            d: rec.d,
            found: basis.len(),
            expected,
        });
    }
    let primes: Vec<u64> = std::iter::once(2).chain(odd.iter().copied()).collect();
    let radicands = basis
        .iter()
        .map(|&mask| {
            primes
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q)
                .product()
        })
        .collect();
    Ok(RealGenusField {
        radicands,
        degree_log2: expected,
    })
}

/// Keeps each vector over GF(2) that is independent of those kept before it.
fn independent_subset(vectors: &[u64]) -> Vec<u64> {
    // echelon rows keyed by leading bit
    let mut echelon: Vec<u64> = Vec::new();
    let mut kept = Vec::new();
    for &v in vectors {
        let mut r = v;
        for &row in &echelon {
            let lead = 63 - row.leading_zeros();
            if r >> lead & 1 == 1 {
                r ^= row;
            }
        }
        if r != 0 {
            echelon.push(r);
            echelon.sort_unstable_by(|a, b| b.cmp(a));
            kept.push(v);
        }
    }
    kept
}

/// Whether the odd prime `p` (not dividing `d`) splits completely in `E`.
pub fn splits_completely(rec: &DiscriminantRecord, gens: &RealGenusField, p: u64) -> Result<bool> {
    if rec.d.unsigned_abs().is_multiple_of(p) {
        return Err(Error::PrimeDividesDiscriminant { p, d: rec.d });
    }
    for &r in &gens.radicands {
        if kronecker(r as i64, p)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
