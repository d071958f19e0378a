//! Hilbert class polynomials by the complex-analytic method.
//!
//! `H_D` is the product of `X - j(tau)` over the CM points of the reduced
//! forms of discriminant `D`. The product is expanded in fixed-point complex
//! arithmetic and each coefficient rounded to the nearest integer; the result
//! is accepted only when every coefficient lies within 1/4 of an integer,
//! otherwise the precision is doubled and the expansion redone.

mod cache;
mod fixed;
mod fp;
mod jfunc;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

pub use cache::{ClassPolyCache, CACHE_ENV_VAR};
pub use fixed::FixedComplex;
pub use fp::{roots_by_scan, roots_of};

use crate::error::{Error, Result};
use crate::oracles::{self, ReducedForm};
use jfunc::{q_bits, series_terms, JEvaluator};

/// Largest `|D|` handled by default: the whole window for `p <= 10^6`.
pub const DEFAULT_MAX_ABS_DISCRIMINANT: u64 = 2310;

/// Coefficients farther than this from an integer trigger a retry.
pub const ROUNDING_TOLERANCE: f64 = 0.25;

const MAX_ATTEMPTS: u32 = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct ClassPolynomial {
    pub d: i64,
    /// Exact integer coefficients, constant term first; the last one is 1.
    pub coefficients: Vec<BigInt>,
    /// Fractional bits of the accepted expansion (0 for cache-loaded entries).
    pub precision_bits: u32,
    /// Largest distance of a computed coefficient from its rounded value.
    pub max_rounding_error: f64,
}

impl ClassPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let m = BigInt::from(p);
        self.coefficients
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().unwrap())
            .collect()
    }
}

/// The primitive reduced forms of `d`, one per ideal class.
pub fn reduced_forms(d: i64) -> Result<Vec<ReducedForm>> {
    oracles::reduced_forms(d)
}

/// `j` at the CM point of `form`, accurate to about `2^-(precision_bits - 8)`.
pub fn j_at_form(form: &ReducedForm, d: i64, precision_bits: u32) -> Result<FixedComplex> {
    if precision_bits < 64 {
        return Err(Error::PrecisionTooLow(precision_bits));
    }
    if form.discriminant() != d {
        return Err(Error::InvalidDiscriminant(d));
    }
    let abs_d = d.unsigned_abs();
    let bits = q_bits(form, abs_d);
    let work = precision_bits + bits.ceil() as u32 + 32;
    let eval = JEvaluator::new(work, series_terms(work, bits, bits));
    let j = eval.j(form, abs_d);
    let rescale = |v: &BigInt| v >> (work - precision_bits);
    Ok(FixedComplex::new(
        rescale(&j.re),
        rescale(&j.im),
        precision_bits,
    ))
}

/// Starting precision: bits of the largest coefficient plus a margin.
pub fn initial_precision(d: i64, forms: &[ReducedForm]) -> u32 {
    let abs_d = d.unsigned_abs() as f64;
    let inv_a: f64 = forms.iter().map(|f| 1.0 / f.a as f64).sum();
    let bits = std::f64::consts::PI * abs_d.sqrt() * inv_a / std::f64::consts::LN_2;
    bits.ceil() as u32 + 10 * forms.len() as u32 + 64
}

pub fn class_polynomial(d: i64) -> Result<ClassPolynomial> {
    class_polynomial_bounded(d, DEFAULT_MAX_ABS_DISCRIMINANT)
}

pub fn class_polynomial_bounded(d: i64, max_abs: u64) -> Result<ClassPolynomial> {
    if d.unsigned_abs() > max_abs {
        return Err(Error::DiscriminantTooLarge {
            abs: d.unsigned_abs(),
            bound: max_abs,
        });
    }
    let forms = reduced_forms(d)?;
    let mut prec = initial_precision(d, &forms);
    let mut last_error = f64::NAN;
    for _ in 0..MAX_ATTEMPTS {
        let (coefficients, err) = expand(d, &forms, prec);
        if err < ROUNDING_TOLERANCE {
            return Ok(ClassPolynomial {
                d,
                coefficients,
                precision_bits: prec,
                max_rounding_error: err,
            });
        }
        last_error = err;
        prec *= 2;
    }
    Err(Error::PrecisionExhausted {
        d,
        attempts: MAX_ATTEMPTS,
        last_error: format!("{last_error}"),
    })
}

/// Expands `prod (X - j_i)` at `prec` fractional bits and rounds.
fn expand(d: i64, forms: &[ReducedForm], prec: u32) -> (Vec<BigInt>, f64) {
    let abs_d = d.unsigned_abs();
    let (min_bits, max_bits) = forms
        .iter()
        .map(|f| q_bits(f, abs_d))
        .fold((f64::INFINITY, 0f64), |(lo, hi), b| (lo.min(b), hi.max(b)));
    let work = prec + 32;
    let eval = JEvaluator::new(work, series_terms(work, min_bits, max_bits));
    let roots: Vec<FixedComplex> = {
        use rayon::prelude::*;
        forms.par_iter().map(|f| eval.j(f, abs_d)).collect()
    };

    // poly[k] is the coefficient of X^k
    let mut poly = vec![FixedComplex::from_int(1, work)];
    for r in &roots {
        let mut next = vec![FixedComplex::zero(work); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(r));
        }
        poly = next;
    }

    let mut worst = 0f64;
    let coefficients = poly
        .iter()
        .map(|c| {
            let (n, frac) = c.round_re();
            worst = worst.max(frac).max(c.im_f64().abs());
            n
        })
        .collect::<Vec<_>>();
    debug_assert!(coefficients.last().is_some_and(|c| c.is_one()));
    (coefficients, worst)
}

/// Distinct roots of `H mod p` in `F_p`.
pub fn roots_mod_p(h: &ClassPolynomial, p: u64) -> BTreeSet<u64> {
    roots_of(&h.reduce_mod(p), p)
}
