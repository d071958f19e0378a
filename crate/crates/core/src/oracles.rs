//! Brute-force ground truth, independent of the supersingular counting
//! pipeline: class numbers by enumerating reduced forms, and supersingular
//! j-invariants by exhaustive character sums.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::genus::is_discriminant;

/// Largest prime accepted by [`supersingular_set`].
pub const DEFAULT_SUPERSINGULAR_BOUND: u64 = 5000;

/// A primitive reduced positive definite form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ReducedForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Forms whose class is its own inverse.
    pub fn is_ambiguous(&self) -> bool {
        self.b == 0 || self.a == self.b || self.a == self.c
    }
}

/// All primitive reduced forms of discriminant `d`, ordered by `(a, b)`.
pub fn reduced_forms(d: i64) -> Result<Vec<ReducedForm>> {
    if !is_discriminant(d) {
        return Err(Error::InvalidDiscriminant(d));
    }
    let abs = d.unsigned_abs() as i64;
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= abs {
        let start = if (-a + 1 - d).rem_euclid(2) == 0 {
            -a + 1
        } else {
            -a + 2
        };
        for b in (start..=a).step_by(2) {
            let num = b * b + abs;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                forms.push(ReducedForm { a, b, c });
            }
        }
        a += 1;
    }
    Ok(forms)
}

/// `h(d)`, the number of primitive reduced forms of discriminant `d`.
pub fn forms_class_number(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}

/// Number of classes of order at most 2 in the form class group.
pub fn ambiguous_class_count(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?
        .iter()
        .filter(|f| f.is_ambiguous())
        .count() as u64)
}

/// Discriminant of the maximal order of `Q(sqrt(-p))`.
pub fn field_discriminant(p: u64) -> i64 {
    if p % 4 == 3 {
        -(p as i64)
    } else {
        -4 * p as i64
    }
}

/// Class number of `Q(sqrt(-p))` by form enumeration. Cost `O(p)`.
pub fn forms_field_class_number(p: u64) -> Result<u64> {
    forms_class_number(field_discriminant(p))
}

fn char_table(p: u64) -> Vec<i8> {
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for x in 1..p {
        chi[(x * x % p) as usize] = 1;
    }
    chi
}

/// `sum_x chi(x^3 + a x + b)`, i.e. minus the Frobenius trace.
fn character_sum(chi: &[i8], p: u64, a: u64, b: u64) -> i64 {
    let mut s = 0i64;
    for x in 0..p {
        let v = (x * x % p * x + a * x + b) % p;
        s += chi[v as usize] as i64;
    }
    s
}

/// Short Weierstrass coefficients of a curve with j-invariant `j`.
fn curve_with_j(j: u64, p: u64) -> (u64, u64) {
    let k = 1728 % p;
    if j == 0 {
        (0, 1)
    } else if j == k {
        (1, 0)
    } else {
        let w = j * ((k + p - j) % p) % p;
        (3 * w % p, 2 * w % p * ((k + p - j) % p) % p)
    }
}

/// Supersingular j-invariants in `F_p`, found by point counting every `j`.
pub fn supersingular_set(p: u64) -> Result<BTreeSet<u64>> {
    supersingular_set_bounded(p, DEFAULT_SUPERSINGULAR_BOUND)
}

pub fn supersingular_set_bounded(p: u64, bound: u64) -> Result<BTreeSet<u64>> {
    if p <= 5 || !is_prime(p) {
        return Err(if is_prime(p) {
            Error::PrimeTooSmall(p)
        } else {
            Error::NotPrime(p)
        });
    }
    if p > bound {
        return Err(Error::PrimeTooLarge { p, bound });
    }
    let chi = char_table(p);
    let set: BTreeSet<u64> = (0..p)
        .into_par_iter()
        .filter(|&j| {
            let (a, b) = curve_with_j(j, p);
            character_sum(&chi, p, a, b) == 0
        })
        .collect();
    // the quadratic twist of a supersingular curve is supersingular too
    let g = (2..p)
        .find(|&g| chi[g as usize] == -1)
        .expect("non-residue");
    for &j in &set {
        let (a, b) = curve_with_j(j, p);
        let (ta, tb) = (a * g % p * g % p, b * g % p * g % p * g % p);
        if character_sum(&chi, p, ta, tb) != 0 {
            return Err(Error::OracleMismatch {
                p,
                detail: format!("twist of j = {j} has nonzero trace"),
            });
        }
    }
    Ok(set)
}

/// `#S_p`, checked against the class number of `Q(sqrt(-p))`.
pub fn supersingular_count(p: u64) -> Result<u64> {
    let count = supersingular_set(p)?.len() as u64;
    let h = forms_field_class_number(p)?;
    let ok = match p % 8 {
        1 | 5 => 2 * count == h,
        7 => count == h,
        _ => count == 2 * h,
    };
    if !ok {
        return Err(Error::OracleMismatch {
            p,
            detail: format!("#S_p = {count} is inconsistent with h = {h}"),
        });
    }
    Ok(count)
}
