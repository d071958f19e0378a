//! Common roots of two class polynomials modulo p.
//!
//! Two members `D1, D2` of `T` (non-residues mod p, p split completely in both
//! genus fields, `3p < D^2 < 16p/3`) share exactly one root in `F_p` iff
//! `D1 D2 - x^2 = 4p` for some integer `x`. This module finds every such
//! pair, either by solving `x^2 = -4p (mod |D2|)` for each `D2` or by the
//! quadratic scan over `T x T`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{all_sqrts_mod, as_perfect_square, factorize};
use crate::error::{Error, Result};
use crate::genus::{is_discriminant, DiscriminantRecord};

/// Certificate `d1 * d2 - x^2 = 4p` for a shared root of `H_d1` and `H_d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairWitness {
    pub d1: i64,
    pub d2: i64,
    pub x: u64,
}

impl PairWitness {
    /// Checks every structural invariant of a witness for the prime `p`.
    pub fn new(d1: i64, d2: i64, x: u64, p: u64) -> Result<Self> {
        let bad = |reason| Error::BadWitness {
            d1,
            d2,
            x,
            p,
            reason,
        };
        if !is_discriminant(d1) || !is_discriminant(d2) {
            return Err(bad("not a pair of discriminants"));
        }
        let (a1, a2) = (d1.unsigned_abs() as u128, d2.unsigned_abs() as u128);
        let p128 = p as u128;
        if a1 * a2 != (x as u128) * (x as u128) + 4 * p128 {
            return Err(bad("d1 d2 - x^2 != 4p"));
        }
        if x == 0 {
            return Err(bad("x = 0"));
        }
        if !(3 * p128 < a1 * a1 && a1 < a2 && 3 * a2 * a2 < 16 * p128) {
            return Err(bad("discriminants outside the window"));
        }
        let kernel = |a: u128| factorize(a as u64).map(|f| f.squarefree_kernel());
        if kernel(a1)? == kernel(a2)? {
            return Err(bad("d1 and d2 define the same quadratic field"));
        }
        Ok(Self { d1, d2, x })
    }
}

/// Bitset over `|D|` recording membership in `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipTable {
    words: Vec<u64>,
}

impl MembershipTable {
    pub fn new(max_abs: u64) -> Self {
        Self {
            words: vec![0; (max_abs as usize >> 6) + 1],
        }
    }

    pub fn from_members(members: &[i64]) -> Self {
        let max = members.iter().map(|d| d.unsigned_abs()).max().unwrap_or(0);
        let mut table = Self::new(max);
        for &d in members {
            table.insert(d);
        }
        table
    }

    pub fn insert(&mut self, d: i64) {
        let a = d.unsigned_abs() as usize;
        self.words[a >> 6] |= 1 << (a & 63);
    }

    pub fn contains(&self, d: i64) -> bool {
        let a = d.unsigned_abs() as usize;
        self.words
            .get(a >> 6)
            .is_some_and(|w| w >> (a & 63) & 1 == 1)
    }
}

/// Outcome of a pair search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairScan {
    pub witnesses: Vec<PairWitness>,
    /// Candidates that passed the congruence, range and discriminant tests
    /// but whose partner is not in `T`. Expected to stay zero.
    pub non_member_candidates: u64,
}

impl PairScan {
    pub fn count(&self) -> u64 {
        self.witnesses.len() as u64
    }
}

/// Partners `D1` of `d2` with `D1 d2 - x^2 = 4p`, `|D1| < |d2|`, `D1` in `T`.
pub fn pair_count_for(
    d2: &DiscriminantRecord,
    p: u64,
    membership: &MembershipTable,
) -> Result<PairScan> {
    let a2 = d2.d.unsigned_abs();
    let four_p = 4 * p as u128;
    let sols = all_sqrts_mod(-(four_p as i128), a2, &d2.abs_factorization);
    let mut scan = PairScan::default();
    for x in sols.solutions {
        let num = (x as u128) * (x as u128) + four_p;
        if !num.is_multiple_of(a2 as u128) {
            continue;
        }
        let c = num / a2 as u128;
        if !(c * c > 3 * p as u128 && c < a2 as u128) || !matches!(c % 4, 0 | 3) {
            continue;
        }
        let d1 = -(c as i64);
        if !membership.contains(d1) {
            scan.non_member_candidates += 1;
            continue;
        }
        scan.witnesses.push(PairWitness::new(d1, d2.d, x, p)?);
    }
    Ok(scan)
}

/// Pairs within `T`, counted once each.
///
/// `t_members` is `T` itself; only members with `D^2 > 4p` can be the larger
/// element of a pair, so only those are solved for.
pub fn total_pair_count(t_members: &[i64], p: u64) -> Result<PairScan> {
    let membership = MembershipTable::from_members(t_members);
    let four_p = 4 * p as u128;
    let partial: Vec<PairScan> = t_members
        .par_iter()
        .filter(|d| (d.unsigned_abs() as u128).pow(2) > four_p)
        .map(|&d| {
            let rec = crate::genus::classify(d)?;
            pair_count_for(&rec, p, &membership)
        })
        .collect::<Result<_>>()?;
    let mut scan = PairScan::default();
    for part in partial {
        scan.witnesses.extend(part.witnesses);
        scan.non_member_candidates += part.non_member_candidates;
    }
    scan.witnesses
        .sort_by_key(|w| (w.d2.unsigned_abs(), w.d1.unsigned_abs()));
    Ok(scan)
}

/// The `O(|T|^2)` search: every pair with `D1 D2 - 4p` a perfect square.
pub fn quadratic_pair_scan(t_members: &[i64], p: u64) -> Result<PairScan> {
    let mut sorted = t_members.to_vec();
    sorted.sort_by_key(|d| d.unsigned_abs());
    let four_p = 4 * p as i128;
    let mut scan = PairScan::default();
    for (j, &d2) in sorted.iter().enumerate() {
        for &d1 in &sorted[..j] {
            if let Some(x) = as_perfect_square(d1 as i128 * d2 as i128 - four_p) {
                scan.witnesses.push(PairWitness::new(d1, d2, x as u64, p)?);
            }
        }
    }
    scan.witnesses
        .sort_by_key(|w| (w.d2.unsigned_abs(), w.d1.unsigned_abs()));
    Ok(scan)
}
