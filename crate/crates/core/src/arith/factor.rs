use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    pub fn odd_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes().filter(|&q| q != 2)
    }

    /// Exponent of `q` in the value (0 when `q` does not divide it).
    pub fn exponent_of(&self, q: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(r, _)| r == q)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of the primes that occur to an odd power.
    pub fn squarefree_kernel(&self) -> u64 {
        self.factors
            .iter()
            .filter(|&&(_, e)| e % 2 == 1)
            .map(|&(q, _)| q)
            .product()
    }

    pub fn reassemble(&self) -> u64 {
        self.factors.iter().map(|&(q, e)| q.pow(e)).product()
    }
}

// gaps between successive integers coprime to 30, starting from 7
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Deterministic trial division over a 2-3-5 wheel.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |rest: &mut u64, q: u64| {
        if (*rest).is_multiple_of(q) {
            let mut e = 0;
            while (*rest).is_multiple_of(q) {
                *rest /= q;
                e += 1;
            }
            factors.push((q, e));
        }
    };
    for q in [2, 3, 5] {
        take(&mut rest, q);
    }
    let mut q = 7u64;
    let mut i = 0;
    while q.saturating_mul(q) <= rest {
        take(&mut rest, q);
        q += WHEEL[i];
        i = (i + 1) % WHEEL.len();
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: n, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn examples() {
        assert_eq!(factorize(12).unwrap().factors, [(2, 2), (3, 1)]);
        assert_eq!(factorize(116).unwrap().factors, [(2, 2), (29, 1)]);
        assert_eq!(factorize(97).unwrap().factors, [(97, 1)]);
        assert_eq!(factorize(1).unwrap().factors, []);
        assert_eq!(factorize(0), Err(Error::FactorZero));
    }

    #[test]
    fn kernel() {
        assert_eq!(factorize(72).unwrap().squarefree_kernel(), 2);
        assert_eq!(factorize(60).unwrap().squarefree_kernel(), 15);
        assert_eq!(factorize(49).unwrap().squarefree_kernel(), 1);
    }

    #[test]
    fn reassembles_up_to_a_million() {
        for n in 1..=1_000_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.reassemble(), n);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.primes().all(is_prime), "n = {n}");
        }
    }
}
