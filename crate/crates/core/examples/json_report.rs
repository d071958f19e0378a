//! Writes a report as JSON and reads it back.

use classnum::{algorithm3, ClassNumberReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("1009")
        .parse()?;
    let report = algorithm3(p)?;
    let json = report.to_json();
    println!("{json}");
    let back = ClassNumberReport::from_json(&json)?;
    assert_eq!(back.h, report.h);
    assert_eq!(back.witnesses, report.witnesses);
    Ok(())
}
