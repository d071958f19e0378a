//! Genus data for a discriminant: mu, the radicands of the real genus field,
//! and which small primes split completely in it.
//!
//!     cargo run --example genus_field -- -420

use classnum::arith::is_prime;
use classnum::genus::{classify, real_genus_generators, splits_completely};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: i64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("-420")
        .parse()?;
    let rec = classify(d)?;
    let gens = real_genus_generators(&rec)?;
    println!("D = {d} = -{:?}", rec.abs_factorization.factors);
    println!("t_odd = {}, m = {}, mu = {}", rec.t_odd, rec.m, rec.mu);
    println!("2-torsion of the class group: {}", rec.two_torsion());
    println!(
        "E = Q(sqrt of {:?}), degree 2^{}",
        gens.radicands, gens.degree_log2
    );
    let split: Vec<u64> = (3..200)
        .filter(|&p| is_prime(p) && !d.unsigned_abs().is_multiple_of(p))
        .filter(|&p| splits_completely(&rec, &gens, p).unwrap())
        .collect();
    println!("primes < 200 splitting completely in E: {split:?}");
    Ok(())
}
