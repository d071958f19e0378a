//! Lists the pairs (D1, D2, x) with D1 D2 - x^2 = 4p found for a prime, and
//! the members of T that triggered the search.

use classnum::algorithm3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("10007")
        .parse()?;
    let r = algorithm3(p)?;
    println!("p = {p}: |T| with D^2 > 4p: {}", r.members_of_t.len());
    for w in &r.witnesses {
        println!(
            "  ({}, {}, {})  {} * {} - {}^2 = {}",
            w.d1,
            w.d2,
            w.x,
            w.d1,
            w.d2,
            w.x,
            4 * p
        );
    }
    println!("t = {}, h = {}", r.pair_count, r.h);
    Ok(())
}
