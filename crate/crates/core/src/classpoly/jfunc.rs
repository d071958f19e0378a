//! The modular j-function at CM points, `j = E4^3 / Delta`.
//!
//! With `q = exp(2 pi i tau)`, `E4 = 1 + 240 sum sigma_3(n) q^n` and
//! `Delta = q prod (1 - q^n)^24`, where the product is summed through Euler's
//! pentagonal number series.

use num_bigint::BigInt;

use super::fixed::{Fixed, FixedComplex};
use crate::oracles::ReducedForm;

pub(crate) struct JEvaluator {
    fixed: Fixed,
    pi: BigInt,
    sigma3: Vec<u64>,
}

/// `log2(1 / |q|)` at the CM point of `form`.
pub(crate) fn q_bits(form: &ReducedForm, abs_d: u64) -> f64 {
    std::f64::consts::PI * (abs_d as f64).sqrt() / form.a as f64 / std::f64::consts::LN_2
}

/// Series length making the tail negligible at `prec` bits for every form
/// with `log2(1/|q|) >= min_q_bits` and `log2|1/q| <= max_q_bits`.
pub(crate) fn series_terms(prec: u32, min_q_bits: f64, max_q_bits: f64) -> usize {
    // E4 coefficients grow like 240 n^3, under 2^40 for every length we use
    let needed = prec as f64 + max_q_bits + 16.0 + 40.0;
    (needed / min_q_bits).ceil() as usize + 1
}

impl JEvaluator {
    pub fn new(prec: u32, terms: usize) -> Self {
        let mut sigma3 = vec![0u64; terms + 1];
        for d in 1..=terms {
            let cube = (d as u64).pow(3);
            for m in (d..=terms).step_by(d) {
                sigma3[m] += cube;
            }
        }
        let fixed = Fixed::new(prec);
        Self {
            pi: fixed.pi(),
            fixed,
            sigma3,
        }
    }

    /// `j((-b + sqrt(d)) / 2a)`.
    pub fn j(&self, form: &ReducedForm, abs_d: u64) -> FixedComplex {
        let f = &self.fixed;
        let prec = f.prec;
        let terms = self.sigma3.len() - 1;

        // 2 pi i tau = -pi sqrt|d| / a - i pi b / a
        let decay = f.mul(&self.pi, &f.sqrt_int(abs_d)) / BigInt::from(form.a);
        let small = f.exp(&-&decay);
        let large = f.exp(&decay);
        let theta = &self.pi * BigInt::from(form.b) / BigInt::from(form.a);
        let (cos, sin) = f.cos_sin(&theta);
        let q = FixedComplex::new(f.mul(&small, &cos), -f.mul(&small, &sin), prec);
        let q_inv = FixedComplex::new(f.mul(&large, &cos), f.mul(&large, &sin), prec);

        let mut powers = Vec::with_capacity(terms + 1);
        powers.push(FixedComplex::from_int(1, prec));
        for n in 1..=terms {
            let next = powers[n - 1].mul(&q);
            powers.push(next);
        }

        let mut e4 = FixedComplex::zero(prec);
        for (power, &s3) in powers.iter().zip(&self.sigma3).skip(1) {
            e4 = e4.add(&power.scale(&BigInt::from(s3)));
        }
        let e4 = e4.scale(&BigInt::from(240)).add(&powers[0]);

        let mut eta = powers[0].clone();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > terms {
                break;
            }
            let mut pair = powers[g1].clone();
            let g2 = g1 + k;
            if g2 <= terms {
                pair = pair.add(&powers[g2]);
            }
            eta = if k % 2 == 1 {
                eta.sub(&pair)
            } else {
                eta.add(&pair)
            };
        }
        let e2 = eta.mul(&eta);
        let e4_ = e2.mul(&e2);
        let e8 = e4_.mul(&e4_);
        let e16 = e8.mul(&e8);
        let eta24 = e16.mul(&e8);

        let e4_cubed = e4.mul(&e4).mul(&e4);
        e4_cubed.mul(&q_inv).div(&eta24)
    }
}
