//! Runs every oracle cross-check for primes up to a bound.

use classnum::classpoly::ClassPolyCache;
use classnum::selftest::run_selftest;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_p: u64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("1000")
        .parse()?;
    let summary = run_selftest(max_p, &ClassPolyCache::in_memory())?;
    for suite in &summary.suites {
        println!("{suite}");
    }
    println!(
        "{}",
        if summary.passed() {
            "all checks passed"
        } else {
            "FAILED"
        }
    );
    Ok(())
}
