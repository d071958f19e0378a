//! Hilbert class polynomial of a discriminant and its roots modulo a prime.
//!
//!     cargo run --example class_polynomial -- -23 37

use classnum::classpoly::{class_polynomial, roots_mod_p};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let d: i64 = args.next().as_deref().unwrap_or("-23").parse()?;
    let p: u64 = args.next().as_deref().unwrap_or("37").parse()?;
    let h = class_polynomial(d)?;
    let terms: Vec<String> = h
        .coefficients
        .iter()
        .enumerate()
        .rev()
        .map(|(k, c)| format!("({c}) X^{k}"))
        .collect();
    println!("H_{d} = {}", terms.join(" + "));
    println!(
        "degree {}, {} bits, rounding error {:.2e}",
        h.degree(),
        h.precision_bits,
        h.max_rounding_error
    );
    println!("roots mod {p}: {:?}", roots_mod_p(&h, p));
    Ok(())
}
