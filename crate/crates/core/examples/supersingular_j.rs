//! Supersingular j-invariants in F_p two ways: as roots of class
//! polynomials, and by counting points on curves.

use classnum::algorithm1;
use classnum::oracles::supersingular_set;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("1009")
        .parse()?;
    let from_polys = algorithm1(p)?;
    let from_points = supersingular_set(p)?;
    println!("p = {p}");
    println!("class polynomials: {:?}", from_polys.supersingular);
    println!("point counting:    {from_points:?}");
    assert_eq!(from_polys.supersingular, from_points);
    println!("h = {}", from_polys.h);
    Ok(())
}
