//! Cross-checks of the counting pipeline against the independent oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::arith::is_prime;
use crate::classpoly::{roots_mod_p, ClassPolyCache};
use crate::error::{Error, Result};
use crate::genus::{real_genus_generators, splits_completely};
use crate::oracles::{forms_field_class_number, supersingular_set};
use crate::pipeline::{algorithm2, algorithm3, qualifying_discriminants};

pub const SUPERSINGULAR_SUITE_BOUND: u64 = 3000;
pub const CLASSPOLY_SUITE_BOUND: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub failures: u64,
    /// Failure at the smallest p, if any.
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{:<16} {:>8} checked  {:>4} failed  {status}",
            self.name, self.checked, self.failures
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "\n    first failure: {first}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestSummary {
    pub max_p: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Primes `7 <= p <= max_p`.
pub fn primes_up_to(max_p: u64) -> Vec<u64> {
    (7..=max_p).filter(|&p| is_prime(p)).collect()
}

/// Runs `check` on every prime; each call returns the number of comparisons
/// made or a description of the first discrepancy.
fn suite<F>(name: &'static str, primes: &[u64], check: F) -> SuiteResult
where
    F: Fn(u64) -> std::result::Result<u64, String> + Sync,
{
    let outcomes: Vec<(u64, std::result::Result<u64, String>)> =
        primes.par_iter().map(|&p| (p, check(p))).collect();
    let mut result = SuiteResult {
        name,
        checked: 0,
        failures: 0,
        first_failure: None,
    };
    for (p, outcome) in outcomes {
        match outcome {
            Ok(n) => result.checked += n,
            Err(msg) => {
                result.checked += 1;
                result.failures += 1;
                result
                    .first_failure
                    .get_or_insert_with(|| format!("p = {p}: {msg}"));
            }
        }
    }
    result
}

pub fn forms_suite(max_p: u64) -> SuiteResult {
    suite("alg3 vs forms", &primes_up_to(max_p), |p| {
        let got = algorithm3(p).map_err(|e| e.to_string())?.h;
        let want = forms_field_class_number(p).map_err(|e| e.to_string())?;
        if got == want {
            Ok(1)
        } else {
            Err(format!("algorithm3 gives h = {got}, forms give {want}"))
        }
    })
}

pub fn algorithm2_suite(max_p: u64) -> SuiteResult {
    suite("alg3 vs alg2", &primes_up_to(max_p), |p| {
        let a = algorithm3(p).map_err(|e| e.to_string())?;
        let b = algorithm2(p).map_err(|e| e.to_string())?;
        let key = |r: &crate::pipeline::ClassNumberReport| {
            (r.h, r.s_p, r.pair_count, r.witnesses.clone())
        };
        if key(&a) == key(&b) {
            Ok(1)
        } else {
            Err(format!(
                "alg3 (h, s_p, t) = ({}, {}, {}), alg2 = ({}, {}, {})",
                a.h, a.s_p, a.pair_count, b.h, b.s_p, b.pair_count
            ))
        }
    })
}

pub fn supersingular_suite(max_p: u64) -> SuiteResult {
    let bound = max_p.min(SUPERSINGULAR_SUITE_BOUND);
    suite("supersingular", &primes_up_to(bound), |p| {
        let r = algorithm3(p).map_err(|e| e.to_string())?;
        let set = supersingular_set(p).map_err(|e| e.to_string())?;
        if r.supersingular_count == set.len() as u64 {
            Ok(1)
        } else {
            Err(format!(
                "s_p - t = {}, point counting finds {}",
                r.supersingular_count,
                set.len()
            ))
        }
    })
}

/// Roots in `F_p` of every qualifying class polynomial, keyed by `D`.
pub type RootTable = BTreeMap<i64, BTreeSet<u64>>;

/// Checks that each qualifying `H_D` has `2^(mu-1)` roots mod p when p splits
/// completely in the genus field of `D`, and none otherwise.
pub fn check_root_counts(p: u64, cache: &ClassPolyCache) -> std::result::Result<RootTable, String> {
    let err = |e: Error| e.to_string();
    let mut roots = RootTable::new();
    for rec in qualifying_discriminants(p).map_err(err)? {
        let poly = cache.get_or_compute(rec.d).map_err(err)?;
        let r = roots_mod_p(&poly, p);
        let gens = real_genus_generators(&rec).map_err(err)?;
        let expected = if splits_completely(&rec, &gens, p).map_err(err)? {
            rec.two_torsion()
        } else {
            0
        };
        if r.len() as u64 != expected {
            return Err(format!(
                "H_{} has {} roots, expected {expected}",
                rec.d,
                r.len()
            ));
        }
        roots.insert(rec.d, r);
    }
    Ok(roots)
}

/// Checks that every witness found by the pipeline marks exactly one shared
/// root, that every shared root has a witness, and that no root is shared
/// by three polynomials. Returns the number of witnesses.
pub fn check_sharpness(p: u64, roots: &RootTable) -> std::result::Result<u64, String> {
    let mut owners: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    for (&d, r) in roots {
        for &j in r {
            owners.entry(j).or_default().push(d);
        }
    }
    if let Some((j, ds)) = owners.iter().find(|(_, ds)| ds.len() > 2) {
        return Err(format!("j = {j} is a root of {ds:?}"));
    }
    let report = algorithm3(p).map_err(|e| e.to_string())?;
    let mut witnessed = BTreeSet::new();
    for w in &report.witnesses {
        let (Some(r1), Some(r2)) = (roots.get(&w.d1), roots.get(&w.d2)) else {
            return Err(format!(
                "witness ({}, {}, {}) names a non-qualifying D",
                w.d1, w.d2, w.x
            ));
        };
        let shared = r1.intersection(r2).count();
        if shared != 1 {
            return Err(format!(
                "witness ({}, {}, {}) shares {shared} roots",
                w.d1, w.d2, w.x
            ));
        }
        witnessed.insert((w.d1, w.d2));
    }
    for ds in owners.values().filter(|ds| ds.len() == 2) {
        let (a, b) = (ds[0], ds[1]);
        if !witnessed.contains(&(a, b)) && !witnessed.contains(&(b, a)) {
            return Err(format!("H_{a} and H_{b} share a root with no witness"));
        }
    }
    Ok(report.witnesses.len() as u64)
}

/// Root counts, sharpness, and the union of all roots against the
/// supersingular set from point counting.
pub fn check_class_polynomials(p: u64, cache: &ClassPolyCache) -> std::result::Result<u64, String> {
    let roots = check_root_counts(p, cache)?;
    let witnesses = check_sharpness(p, &roots)?;
    let union: BTreeSet<u64> = roots.values().flatten().copied().collect();
    let oracle = supersingular_set(p).map_err(|e| e.to_string())?;
    if union != oracle {
        return Err(format!(
            "roots {union:?} differ from supersingular set {oracle:?}"
        ));
    }
    Ok(roots.len() as u64 + witnesses + 1)
}

pub fn classpoly_suite(max_p: u64, cache: &ClassPolyCache) -> SuiteResult {
    let bound = max_p.min(CLASSPOLY_SUITE_BOUND);
    suite("class polys", &primes_up_to(bound), |p| {
        check_class_polynomials(p, cache)
    })
}

pub fn run_selftest(max_p: u64, cache: &ClassPolyCache) -> Result<SelftestSummary> {
    if max_p < 7 {
        return Err(Error::MaxPTooSmall(max_p));
    }
    Ok(SelftestSummary {
        max_p,
        suites: vec![
            forms_suite(max_p),
            algorithm2_suite(max_p),
            supersingular_suite(max_p),
            classpoly_suite(max_p, cache),
        ],
    })
}
