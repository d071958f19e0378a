//! Class number of `Q(sqrt(-p))` from the count of supersingular
//! j-invariants in `F_p`.
//!
//! Every discriminant `D` in the window `3 D^2 < 16 p` with `(D/p) = -1`
//! contributes `2^(mu-1)` roots of `H_D mod p` when p splits completely in
//! the real genus field of `D`, and none otherwise. Summing gives `s_p`; roots
//! shared by two polynomials are counted by the pair search and subtracted,
//! leaving `#S_p`, from which `h` follows by the residue of p mod 8.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::arith::{factorize, is_prime, isqrt, jacobi};
use crate::classpoly::{roots_mod_p, ClassPolyCache};
use crate::error::{Error, Result};
use crate::genus::{
    classify_factored, real_genus_generators, splits_completely, DiscriminantRecord,
};
use crate::oracles;
use crate::pairing::{quadratic_pair_scan, total_pair_count, PairScan, PairWitness};

/// Primes up to this bound are accepted; keeps `x^2 + 4p` and `D1 D2` in range.
pub const MAX_PRIME: u64 = 1 << 62;

/// Default bound on p for the class-polynomial route.
pub const DEFAULT_ALGORITHM1_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberReport {
    pub p: u64,
    pub s_p: u64,
    /// Number of pairs of class polynomials sharing a root in `F_p`.
    pub pair_count: u64,
    /// `p mod 8`.
    pub branch: u64,
    /// `#S_p = s_p - pair_count`.
    pub supersingular_count: u64,
    pub h: u64,
    pub members_of_t: Vec<i64>,
    pub witnesses: Vec<PairWitness>,
    pub elapsed: Duration,
}

/// Counters that do not belong in the report but are worth surfacing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Discriminants in the window with `(D/p) = -1`.
    pub qualifying: u64,
    /// Of those, the ones whose genus field p splits completely in.
    pub split: u64,
    /// Pair candidates rejected only because the partner is not in `T`.
    pub non_member_candidates: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub parallel: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self { parallel: true }
    }
}

/// Which pair search to run after the per-discriminant stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSearch {
    /// Solve `x^2 = -4p (mod |D|)` for each `D` with `D^2 > 4p`.
    Congruence,
    /// Test `D1 D2 - 4p` for squareness over all pairs in `T`.
    Quadratic,
}

/// Rejects anything but a prime in `(5, MAX_PRIME]`.
pub fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 5 {
        return Err(Error::PrimeTooSmall(p));
    }
    if p > MAX_PRIME {
        return Err(Error::PrimeTooLarge {
            p,
            bound: MAX_PRIME,
        });
    }
    Ok(())
}

/// Largest `|D|` with `3 D^2 < 16 p`.
pub fn window_bound(p: u64) -> u64 {
    isqrt((16 * p as u128 - 1) / 3) as u64
}

/// Discriminants `D` with `3 D^2 < 16p` and `(D/p) = -1`, by increasing `|D|`.
pub struct QualifyingDiscriminants {
    p: u64,
    next: u64,
    end: u64,
}

impl QualifyingDiscriminants {
    fn between(p: u64, lo: u64, hi: u64) -> Self {
        Self {
            p,
            next: lo.max(3),
            end: hi,
        }
    }
}

impl Iterator for QualifyingDiscriminants {
    type Item = DiscriminantRecord;

    fn next(&mut self) -> Option<DiscriminantRecord> {
        while self.next < self.end {
            let a = self.next;
            self.next += 1;
            if !matches!(a % 4, 0 | 3) || jacobi(self.p - a % self.p, self.p) != -1 {
                continue;
            }
            let f = factorize(a).expect("a >= 3");
            return Some(classify_factored(-(a as i64), f));
        }
        None
    }
}

pub fn qualifying_discriminants(p: u64) -> Result<QualifyingDiscriminants> {
    check_prime(p)?;
    Ok(QualifyingDiscriminants::between(p, 3, window_bound(p) + 1))
}

/// Whether `rec` contributes roots: p splits completely in its genus field.
fn contributes(rec: &DiscriminantRecord, p: u64) -> Result<bool> {
    let gens = real_genus_generators(rec)?;
    splits_completely(rec, &gens, p)
}

#[derive(Default)]
struct Stage {
    s_p: u64,
    members: Vec<i64>,
    diagnostics: Diagnostics,
}

impl Stage {
    fn merge(mut self, other: Stage) -> Stage {
        self.s_p += other.s_p;
        self.members.extend(other.members);
        self.diagnostics.qualifying += other.diagnostics.qualifying;
        self.diagnostics.split += other.diagnostics.split;
        self
    }
}

fn scan_range(p: u64, lo: u64, hi: u64) -> Result<Stage> {
    let mut stage = Stage::default();
    for rec in QualifyingDiscriminants::between(p, lo, hi) {
        stage.diagnostics.qualifying += 1;
        if !contributes(&rec, p)? {
            continue;
        }
        stage.diagnostics.split += 1;
        stage.s_p += rec.two_torsion();
        let a = rec.d.unsigned_abs() as u128;
        if a * a > 3 * p as u128 {
            stage.members.push(rec.d);
        }
    }
    Ok(stage)
}

const CHUNK: u64 = 1 << 14;

fn scan(p: u64, opts: &PipelineOptions) -> Result<Stage> {
    let end = window_bound(p) + 1;
    if !opts.parallel {
        return scan_range(p, 3, end);
    }
    let chunks = end.div_ceil(CHUNK);
    let parts: Vec<Stage> = (0..chunks)
        .into_par_iter()
        .map(|i| scan_range(p, i * CHUNK, ((i + 1) * CHUNK).min(end)))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().fold(Stage::default(), Stage::merge))
}

/// `h` from `#S_p`: `#S_p/2` for `p = 3 (8)`, `#S_p` for `p = 7 (8)`,
/// `2 #S_p` for `p = 1 (4)`.
pub fn class_number_from_count(p: u64, count: i64) -> Result<u64> {
    let bad = || Error::InconsistentCount {
        p,
        value: count,
        branch: p % 8,
    };
    if count <= 0 {
        return Err(bad());
    }
    let count = count as u64;
    match p % 8 {
        3 if count % 2 == 1 => Err(bad()),
        3 => Ok(count / 2),
        7 => Ok(count),
        _ => Ok(2 * count),
    }
}

/// Runs the per-discriminant stage and the chosen pair search.
pub fn run(
    p: u64,
    search: PairSearch,
    opts: &PipelineOptions,
) -> Result<(ClassNumberReport, Diagnostics)> {
    let start = Instant::now();
    check_prime(p)?;
    let stage = scan(p, opts)?;
    let four_p = 4 * p as u128;
    let (pairs, members_of_t): (PairScan, Vec<i64>) = match search {
        PairSearch::Congruence => {
            let scan = if opts.parallel {
                total_pair_count(&stage.members, p)?
            } else {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(1)
                    .build()
                    .expect("single-thread pool")
                    .install(|| total_pair_count(&stage.members, p))?
            };
            let triggers = stage
                .members
                .iter()
                .copied()
                .filter(|d| (d.unsigned_abs() as u128).pow(2) > four_p)
                .collect();
            (scan, triggers)
        }
        PairSearch::Quadratic => (
            quadratic_pair_scan(&stage.members, p)?,
            stage.members.clone(),
        ),
    };
    let pair_count = pairs.count();
    let ss = stage.s_p as i64 - pair_count as i64;
    let h = class_number_from_count(p, ss)?;
    let mut diagnostics = stage.diagnostics;
    diagnostics.non_member_candidates = pairs.non_member_candidates;
    let report = ClassNumberReport {
        p,
        s_p: stage.s_p,
        pair_count,
        branch: p % 8,
        supersingular_count: ss as u64,
        h,
        members_of_t,
        witnesses: pairs.witnesses,
        elapsed: start.elapsed(),
    };
    Ok((report, diagnostics))
}

/// Genus-field counting with pairs found from `x^2 = -4p (mod |D|)`.
pub fn algorithm3(p: u64) -> Result<ClassNumberReport> {
    Ok(run(p, PairSearch::Congruence, &PipelineOptions::default())?.0)
}

/// Genus-field counting with the quadratic pair scan.
pub fn algorithm2(p: u64) -> Result<ClassNumberReport> {
    Ok(run(p, PairSearch::Quadratic, &PipelineOptions::default())?.0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algorithm1Report {
    pub p: u64,
    pub h: u64,
    pub supersingular: BTreeSet<u64>,
    pub elapsed: Duration,
}

/// Class number from the explicit roots of every qualifying class polynomial.
pub fn algorithm1(p: u64) -> Result<Algorithm1Report> {
    algorithm1_with(p, &ClassPolyCache::in_memory(), DEFAULT_ALGORITHM1_BOUND)
}

pub fn algorithm1_with(p: u64, cache: &ClassPolyCache, bound: u64) -> Result<Algorithm1Report> {
    let start = Instant::now();
    check_prime(p)?;
    if p > bound {
        return Err(Error::PrimeTooLarge { p, bound });
    }
    let mut supersingular = BTreeSet::new();
    for rec in qualifying_discriminants(p)? {
        let poly = cache.get_or_compute(rec.d)?;
        supersingular.extend(roots_mod_p(&poly, p));
    }
    let h = class_number_from_count(p, supersingular.len() as i64)?;
    Ok(Algorithm1Report {
        p,
        h,
        supersingular,
        elapsed: start.elapsed(),
    })
}

/// Report for the form-counting oracle; `s_p` holds the implied `#S_p`.
pub fn forms_report(p: u64) -> Result<ClassNumberReport> {
    let start = Instant::now();
    check_prime(p)?;
    let h = oracles::forms_field_class_number(p)?;
    let count = match p % 8 {
        3 => 2 * h,
        7 => h,
        _ => h / 2,
    };
    Ok(ClassNumberReport {
        p,
        s_p: count,
        pair_count: 0,
        branch: p % 8,
        supersingular_count: count,
        h,
        members_of_t: vec![],
        witnesses: vec![],
        elapsed: start.elapsed(),
    })
}
