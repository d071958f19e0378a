//! Reproduces the table of class numbers for the primes just above 10^11
//! and 10^12. Pass `--all` to add 10^13 + 99.

use std::time::Instant;

use classnum::algorithm3;

fn main() -> classnum::Result<()> {
    let mut primes = vec![100_000_000_283u64, 1_000_000_000_547];
    if std::env::args().any(|a| a == "--all") {
        primes.push(10_000_000_000_099);
    }
    println!("{:>16} {:>10} {:>10}", "p", "h", "time (s)");
    for p in primes {
        let start = Instant::now();
        let h = algorithm3(p)?.h;
        println!("{p:>16} {h:>10} {:>10.2}", start.elapsed().as_secs_f64());
    }
    Ok(())
}
