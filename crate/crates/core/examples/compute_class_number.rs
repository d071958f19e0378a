//! Class number of Q(sqrt(-p)) for a prime given on the command line.
//!
//!     cargo run --example compute_class_number -- 100000000283

use classnum::algorithm3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("1000003")
        .parse()?;
    let r = algorithm3(p)?;
    println!("p = {p}  (p mod 8 = {})", r.branch);
    println!(
        "s_p = {}, t = {}, #S_p = {}",
        r.s_p, r.pair_count, r.supersingular_count
    );
    println!("h = {}", r.h);
    println!("{:.3} s", r.elapsed.as_secs_f64());
    Ok(())
}
