//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Run with `cargo test --test acceptance`. Set `CLASSNUM_SKIP_OPTIONAL=1`
//! to skip the 10^12 row of criterion 1.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use classnum::arith::{all_sqrts_mod, factorize, is_prime, kronecker, next_prime, Factorization};
use classnum::bench::{loglog_slope, time_algorithm3};
use classnum::classpoly::ClassPolyCache;
use classnum::oracles::{forms_field_class_number, supersingular_set};
use classnum::pipeline::{algorithm2, algorithm3, PipelineOptions};
use classnum::selftest::{check_root_counts, check_sharpness, primes_up_to};
use classnum::PairWitness;

const TABLE_BUDGET: Duration = Duration::from_secs(15 * 60);
const TABLE_OPTIONAL_BUDGET: Duration = Duration::from_secs(2 * 60 * 60);
const FORMS_BUDGET: Duration = Duration::from_secs(2 * 60);
const ALG2_BUDGET: Duration = Duration::from_secs(5 * 60);
const SUPERSINGULAR_BUDGET: Duration = Duration::from_secs(10 * 60);
const CLASSPOLY_BUDGET: Duration = Duration::from_secs(10 * 60);
const ARITH_BUDGET: Duration = Duration::from_secs(2 * 60);
const MAX_SLOPE: f64 = 0.80;
const BENCH_REPEATS: u32 = 5;

type Outcome = Result<String, String>;

fn within(budget: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    if took <= budget {
        Ok(format!(
            "{detail} ({:.1} s, budget {} s)",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    } else {
        Err(format!(
            "{detail} but took {:.1} s, budget {} s",
            took.as_secs_f64(),
            budget.as_secs()
        ))
    }
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let h = algorithm3(100_000_000_283).map_err(|e| e.to_string())?.h;
    if h != 88847 {
        return Err(format!("h(10^11+283) = {h}, expected 88847"));
    }
    let mut detail = within(TABLE_BUDGET, start, "h(10^11+283) = 88847".into())?;
    if std::env::var_os("CLASSNUM_SKIP_OPTIONAL").is_none() {
        let start = Instant::now();
        let h = algorithm3(1_000_000_000_547).map_err(|e| e.to_string())?.h;
        if h != 240171 {
            return Err(format!("h(10^12+547) = {h}, expected 240171"));
        }
        detail += "; ";
        detail += &within(TABLE_OPTIONAL_BUDGET, start, "h(10^12+547) = 240171".into())?;
    }
    Ok(detail)
}

fn forms_sweep() -> Outcome {
    let start = Instant::now();
    let primes = primes_up_to(9999);
    for &p in &primes {
        let got = algorithm3(p).map_err(|e| format!("p = {p}: {e}"))?.h;
        let want = forms_field_class_number(p).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!(
                "p = {p}: algorithm3 gives {got}, forms give {want}"
            ));
        }
    }
    within(
        FORMS_BUDGET,
        start,
        format!("{} primes agree", primes.len()),
    )
}

fn algorithm_agreement() -> Outcome {
    let start = Instant::now();
    let primes = primes_up_to(9999);
    let mut witnesses = 0;
    for &p in &primes {
        let a = algorithm3(p).map_err(|e| format!("p = {p}: {e}"))?;
        let b = algorithm2(p).map_err(|e| format!("p = {p}: {e}"))?;
        let wa: BTreeSet<PairWitness> = a.witnesses.iter().copied().collect();
        let wb: BTreeSet<PairWitness> = b.witnesses.iter().copied().collect();
        if (a.h, a.s_p, a.pair_count) != (b.h, b.s_p, b.pair_count) || wa != wb {
            return Err(format!(
                "p = {p}: alg3 (h, s_p, t) = ({}, {}, {}), alg2 = ({}, {}, {})",
                a.h, a.s_p, a.pair_count, b.h, b.s_p, b.pair_count
            ));
        }
        witnesses += wa.len();
    }
    within(
        ALG2_BUDGET,
        start,
        format!("{} primes, {witnesses} witnesses identical", primes.len()),
    )
}

fn supersingular_identity() -> Outcome {
    let start = Instant::now();
    let primes = primes_up_to(2999);
    for &p in &primes {
        let r = algorithm3(p).map_err(|e| format!("p = {p}: {e}"))?;
        let n = supersingular_set(p).map_err(|e| e.to_string())?.len() as u64;
        if r.s_p - r.pair_count != n {
            return Err(format!(
                "p = {p}: s_p - t = {}, point counting finds {n}",
                r.s_p - r.pair_count
            ));
        }
    }
    within(
        SUPERSINGULAR_BUDGET,
        start,
        format!("{} primes agree", primes.len()),
    )
}

fn classpoly_checks() -> (Outcome, Outcome) {
    let start = Instant::now();
    let cache = ClassPolyCache::in_memory();
    let primes = primes_up_to(999);
    let mut tables = Vec::new();
    let mut pairs = 0;
    for &p in &primes {
        match check_root_counts(p, &cache) {
            Ok(t) => {
                pairs += t.len();
                tables.push((p, t));
            }
            Err(e) => return (Err(format!("p = {p}: {e}")), Err("not run".into())),
        }
    }
    let roots = within(
        CLASSPOLY_BUDGET,
        start,
        format!("{pairs} (D, p) root counts over {} primes", primes.len()),
    );
    let mut witnesses = 0;
    for (p, t) in &tables {
        match check_sharpness(*p, t) {
            Ok(n) => witnesses += n,
            Err(e) => return (roots, Err(format!("p = {p}: {e}"))),
        }
    }
    let sharp = within(
        CLASSPOLY_BUDGET,
        start,
        format!("{witnesses} witnesses each share exactly one root; no triple roots"),
    );
    (roots, sharp)
}

fn micro_cases() -> Outcome {
    let h = |p| algorithm3(p).map(|r| r.h).map_err(|e| e.to_string());
    let (h7, h11) = (h(7)?, h(11)?);
    let r29 = algorithm3(29).map_err(|e| e.to_string())?;
    let want = [PairWitness {
        d1: -11,
        d2: -12,
        x: 4,
    }];
    if (h7, h11, r29.h) != (1, 1, 6) || r29.witnesses != want {
        return Err(format!(
            "h(7), h(11), h(29) = {h7}, {h11}, {}; witnesses {:?}",
            r29.h, r29.witnesses
        ));
    }
    Ok("h(7) = 1, h(11) = 1, h(29) = 6 with witness (-11, -12, 4)".into())
}

fn euler(a: i64, q: u64) -> i8 {
    let a = a.rem_euclid(q as i64) as u64;
    let mut r = 1u64;
    let mut b = a;
    let mut e = (q - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    match r {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn arithmetic_substrate() -> Outcome {
    let start = Instant::now();
    let mut symbols = 0;
    for q in (3..200u64).filter(|&q| is_prime(q)) {
        let q_i = q as i64;
        for a in -2 * q_i..=2 * q_i {
            let got = kronecker(a, q).map_err(|e| e.to_string())?;
            if got != euler(a, q) {
                return Err(format!("kronecker({a}, {q}) = {got}"));
            }
            symbols += 1;
        }
    }
    let mut congruences = 0u64;
    let mut roots: Vec<Vec<u64>> = Vec::new();
    for n in 1..=10_000u64 {
        roots.clear();
        roots.resize(n as usize, Vec::new());
        for x in 0..n {
            roots[(x * x % n) as usize].push(x);
        }
        let f: Factorization = factorize(n).map_err(|e| e.to_string())?;
        for c in 0..n {
            let got = all_sqrts_mod(c as i128, n, &f);
            if got.solutions != roots[c as usize] {
                return Err(format!("x^2 = {c} (mod {n}): got {:?}", got.solutions));
            }
            congruences += 1;
        }
    }
    within(
        ARITH_BUDGET,
        start,
        format!("{symbols} symbols and {congruences} congruences match brute force"),
    )
}

fn scaling() -> Outcome {
    let opts = PipelineOptions { parallel: false };
    let mut rows = Vec::new();
    for k in 7..=10 {
        let p = next_prime(10u64.pow(k));
        rows.push(time_algorithm3(p, &opts, BENCH_REPEATS).map_err(|e| e.to_string())?);
    }
    let slope = loglog_slope(&rows).ok_or("slope undefined")?;
    let times: Vec<String> = rows.iter().map(|r| format!("{:.4}", r.seconds)).collect();
    let detail = format!(
        "slope {slope:.3} (limit {MAX_SLOPE}); times {} s",
        times.join(", ")
    );
    if slope <= MAX_SLOPE {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: u32, name: &str, outcome: Outcome| match &outcome {
        Ok(d) => println!("criterion {n} PASS  {name}: {d}"),
        Err(d) => {
            failed += 1;
            println!("criterion {n} FAIL  {name}: {d}");
        }
    };
    report(1, "table reproduction", table_reproduction());
    report(2, "forms oracle sweep p < 10^4", forms_sweep());
    report(3, "alg2/alg3 agreement p < 10^4", algorithm_agreement());
    report(4, "supersingular count p < 3000", supersingular_identity());
    let (roots, sharp) = classpoly_checks();
    report(5, "class polynomial root counts p < 1000", roots);
    report(6, "pair witness sharpness p < 1000", sharp);
    report(7, "micro cases", micro_cases());
    report(8, "arithmetic substrate", arithmetic_substrate());
    report(9, "log-log slope 10^7..10^10", scaling());
    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
