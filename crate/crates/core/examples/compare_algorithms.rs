//! Runs all three counting variants and the form-counting oracle on a few
//! primes and prints the results side by side.

use classnum::oracles::forms_field_class_number;
use classnum::{algorithm1, algorithm2, algorithm3};

fn main() -> classnum::Result<()> {
    println!(
        "{:>8} {:>6} {:>6} {:>6} {:>6}",
        "p", "alg1", "alg2", "alg3", "forms"
    );
    for p in [7, 11, 29, 101, 1009, 7919, 65537, 999983] {
        let a1 = algorithm1(p)?.h;
        let a2 = algorithm2(p)?.h;
        let a3 = algorithm3(p)?.h;
        let f = forms_field_class_number(p)?;
        assert!(a1 == a3 && a2 == a3 && f == a3);
        println!("{p:>8} {a1:>6} {a2:>6} {a3:>6} {f:>6}");
    }
    Ok(())
}
