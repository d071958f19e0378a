//! Binary fixed-point reals and complexes over `BigInt`.
//!
//! A value `v` at precision `prec` represents `v / 2^prec`. All operations
//! truncate toward negative infinity, so each contributes at most one unit in
//! the last place of error.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fixed {
    pub prec: u32,
}

impl Fixed {
    pub fn new(prec: u32) -> Self {
        Self { prec }
    }

    pub fn one(&self) -> BigInt {
        BigInt::one() << self.prec
    }

    #[cfg(test)]
    pub fn int(&self, n: i64) -> BigInt {
        BigInt::from(n) << self.prec
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.prec
    }

    pub fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.prec) / b
    }

    pub fn sqrt_int(&self, n: u64) -> BigInt {
        (BigInt::from(n) << (2 * self.prec)).sqrt()
    }

    /// Moves a value to another precision.
    pub fn rescale(&self, v: &BigInt, to: u32) -> BigInt {
        if to >= self.prec {
            v << (to - self.prec)
        } else {
            v >> (self.prec - to)
        }
    }

    /// `arctan(1/n)` by its alternating series.
    fn arctan_inv(&self, n: u64) -> BigInt {
        let n2 = BigInt::from(n * n);
        let mut power = self.one() / BigInt::from(n);
        let mut sum = power.clone();
        let mut k = 1u64;
        while !power.is_zero() {
            power /= &n2;
            let term = &power / BigInt::from(2 * k + 1);
            if k % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            k += 1;
        }
        sum
    }

    /// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(&self) -> BigInt {
        let guard = Fixed::new(self.prec + 16);
        let pi = guard.arctan_inv(5) * 16 - guard.arctan_inv(239) * 4;
        guard.rescale(&pi, self.prec)
    }

    /// `e^x` by halving until the argument is tiny, a Taylor series, then
    /// repeated squaring with enough guard bits to absorb the error growth.
    pub fn exp(&self, x: &BigInt) -> BigInt {
        let int_bits = (x.abs() >> self.prec).bits() as u32;
        let halvings = int_bits + 8;
        let work = Fixed::new(self.prec + halvings + 32);
        let y = self.rescale(x, work.prec) >> halvings;
        let mut sum = work.one();
        let mut term = work.one();
        let mut k = 1i64;
        loop {
            term = work.mul(&term, &y) / BigInt::from(k);
            if term.is_zero() {
                break;
            }
            sum += &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = work.mul(&sum, &sum);
        }
        work.rescale(&sum, self.prec)
    }

    /// `(cos x, sin x)` by Taylor series, for `|x|` at most a few units.
    pub fn cos_sin(&self, x: &BigInt) -> (BigInt, BigInt) {
        let work = Fixed::new(self.prec + 32);
        let x = self.rescale(x, work.prec);
        let x2 = work.mul(&x, &x);
        let mut cos = work.one();
        let mut sin = x.clone();
        let mut term = work.one();
        let mut k = 1i64;
        // term_k = (-1)^k x^(2k) / (2k)! ; the sine term is term_k * x / (2k + 1)
        loop {
            term = -work.mul(&term, &x2) / BigInt::from((2 * k - 1) * (2 * k));
            if term.is_zero() {
                break;
            }
            cos += &term;
            sin += work.mul(&term, &x) / BigInt::from(2 * k + 1);
            k += 1;
        }
        (work.rescale(&cos, self.prec), work.rescale(&sin, self.prec))
    }

    pub fn to_f64(self, v: &BigInt) -> f64 {
        let shift = v.bits().saturating_sub(60);
        let mut m = (v >> shift).to_f64().unwrap_or(f64::NAN);
        let mut e = shift as i64 - self.prec as i64;
        while e > 1000 {
            m *= 2f64.powi(1000);
            e -= 1000;
        }
        while e < -1000 {
            m *= 2f64.powi(-1000);
            e += 1000;
        }
        m * 2f64.powi(e as i32)
    }
}

/// Complex fixed-point value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
    /// Number of fractional bits.
    pub prec: u32,
}

impl FixedComplex {
    pub(crate) fn new(re: BigInt, im: BigInt, prec: u32) -> Self {
        Self { re, im, prec }
    }

    pub(crate) fn from_int(n: i64, prec: u32) -> Self {
        Self::new(BigInt::from(n) << prec, BigInt::zero(), prec)
    }

    pub(crate) fn zero(prec: u32) -> Self {
        Self::new(BigInt::zero(), BigInt::zero(), prec)
    }

    fn ctx(&self) -> Fixed {
        Fixed::new(self.prec)
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im, self.prec)
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im, self.prec)
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        let f = self.ctx();
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Self::new(re >> f.prec, im >> f.prec, f.prec)
    }

    pub(crate) fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.re * k, &self.im * k, self.prec)
    }

    pub(crate) fn div(&self, o: &Self) -> Self {
        let f = self.ctx();
        let norm = f.mul(&o.re, &o.re) + f.mul(&o.im, &o.im);
        let conj = Self::new(o.re.clone(), -&o.im, self.prec);
        let num = self.mul(&conj);
        Self::new(f.div(&num.re, &norm), f.div(&num.im, &norm), self.prec)
    }

    pub fn re_f64(&self) -> f64 {
        self.ctx().to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        self.ctx().to_f64(&self.im)
    }

    /// Nearest integer to the real part, and the distance to it in units.
    pub fn round_re(&self) -> (BigInt, f64) {
        let half = BigInt::one() << (self.prec - 1);
        let n = (&self.re + half) >> self.prec;
        let frac = &self.re - (&n << self.prec);
        (n, self.ctx().to_f64(&frac).abs())
    }
}
