//! Times the pipeline on one thread at primes near 10^7 .. 10^11 and fits
//! the exponent of p in the running time.

use classnum::arith::next_prime;
use classnum::bench::{loglog_slope, time_algorithm3};
use classnum::PipelineOptions;

fn main() -> classnum::Result<()> {
    let opts = PipelineOptions { parallel: false };
    let mut rows = Vec::new();
    for k in 7..=11 {
        let row = time_algorithm3(next_prime(10u64.pow(k)), &opts, 3)?;
        println!("{:>14} {:>8} {:>9.4} s", row.p, row.h, row.seconds);
        rows.push(row);
    }
    if let Some(s) = loglog_slope(&rows) {
        println!("log-log slope {s:.3}");
    }
    Ok(())
}
