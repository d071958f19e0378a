//! Versioned JSON form of a [`ClassNumberReport`].
//!
//! Large integers (`p`, `h`, discriminants, `x`) are written as decimal
//! strings so that consumers without 64-bit integers read them exactly.
//! `elapsed` is stored in whole milliseconds.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairing::PairWitness;
use crate::pipeline::ClassNumberReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Document {
    schema: u32,
    p: String,
    h: String,
    s_p: u64,
    t: u64,
    branch_mod8: u64,
    #[serde(rename = "T")]
    members_of_t: Vec<String>,
    witnesses: Vec<WitnessDocument>,
    elapsed_ms: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct WitnessDocument {
    d1: String,
    d2: String,
    x: String,
}

fn parse<T: std::str::FromStr>(field: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Report(format!("field {field}: cannot parse {s:?}")))
}

impl ClassNumberReport {
    pub fn to_json(&self) -> String {
        let doc = Document {
            schema: SCHEMA_VERSION,
            p: self.p.to_string(),
            h: self.h.to_string(),
            s_p: self.s_p,
            t: self.pair_count,
            branch_mod8: self.branch,
            members_of_t: self.members_of_t.iter().map(i64::to_string).collect(),
            witnesses: self
                .witnesses
                .iter()
                .map(|w| WitnessDocument {
                    d1: w.d1.to_string(),
                    d2: w.d2.to_string(),
                    x: w.x.to_string(),
                })
                .collect(),
            elapsed_ms: self.elapsed.as_millis() as u64,
        };
        serde_json::to_string(&doc).expect("report serializes")
    }

    /// Parses and re-validates a report; witnesses are checked against `p`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Report(format!("unsupported schema {}", doc.schema)));
        }
        let p: u64 = parse("p", &doc.p)?;
        if doc.branch_mod8 != p % 8 {
            return Err(Error::Report(format!(
                "branch_mod8 {} but p = {} (mod 8)",
                doc.branch_mod8,
                p % 8
            )));
        }
        let supersingular_count = doc
            .s_p
            .checked_sub(doc.t)
            .ok_or_else(|| Error::Report("t exceeds s_p".into()))?;
        let members_of_t = doc
            .members_of_t
            .iter()
            .map(|d| parse("T", d))
            .collect::<Result<_>>()?;
        let witnesses = doc
            .witnesses
            .iter()
            .map(|w| {
                PairWitness::new(
                    parse("d1", &w.d1)?,
                    parse("d2", &w.d2)?,
                    parse("x", &w.x)?,
                    p,
                )
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            p,
            s_p: doc.s_p,
            pair_count: doc.t,
            branch: doc.branch_mod8,
            supersingular_count,
            h: parse("h", &doc.h)?,
            members_of_t,
            witnesses,
            elapsed: Duration::from_millis(doc.elapsed_ms),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::algorithm3;

    fn truncated(mut r: ClassNumberReport) -> ClassNumberReport {
        r.elapsed = Duration::from_millis(r.elapsed.as_millis() as u64);
        r
    }

    #[test]
    fn round_trip() {
        for p in [7u64, 29, 1009, 1_000_003] {
            let r = algorithm3(p).unwrap();
            let back = ClassNumberReport::from_json(&r.to_json()).unwrap();
            assert_eq!(back, truncated(r));
        }
    }

    #[test]
    fn layout() {
        let r = algorithm3(29).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["p"], "29");
        assert_eq!(v["h"], "6");
        assert_eq!(v["s_p"], 4);
        assert_eq!(v["t"], 1);
        assert_eq!(v["branch_mod8"], 5);
        assert_eq!(v["witnesses"][0]["d1"], "-11");
        assert_eq!(v["witnesses"][0]["d2"], "-12");
        assert_eq!(v["witnesses"][0]["x"], "4");
    }

    #[test]
    fn rejects_tampering() {
        let r = algorithm3(29).unwrap().to_json();
        assert!(ClassNumberReport::from_json(&r.replace("\"x\":\"4\"", "\"x\":\"5\"")).is_err());
        assert!(ClassNumberReport::from_json(&r.replace("\"schema\":1", "\"schema\":2")).is_err());
        assert!(ClassNumberReport::from_json("{").is_err());
    }
}
