//! Append-only store of computed class polynomials.
//!
//! One record per line: `D degree c_h c_(h-1) ... c_0`, decimal, separated by
//! single spaces, constant term last. Records are never rewritten; a `D`
//! already present is not appended again.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use super::{class_polynomial_bounded, ClassPolynomial, DEFAULT_MAX_ABS_DISCRIMINANT};
use crate::error::{Error, Result};

/// Environment variable naming the cache file used by [`ClassPolyCache::from_env`].
pub const CACHE_ENV_VAR: &str = "CLASSNUM_CLASSPOLY_CACHE";

#[derive(Debug)]
pub struct ClassPolyCache {
    path: Option<PathBuf>,
    max_abs: u64,
    memo: Mutex<HashMap<i64, Arc<ClassPolynomial>>>,
}

impl Default for ClassPolyCache {
    fn default() -> Self {
        Self::in_memory()
    }
}

impl ClassPolyCache {
    pub fn in_memory() -> Self {
        Self {
            path: None,
            max_abs: DEFAULT_MAX_ABS_DISCRIMINANT,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Opens (and loads, if it exists) the cache file at `path`.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut memo = HashMap::new();
        if path.exists() {
            let file = File::open(&path).map_err(|e| Error::Cache(e.to_string()))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| Error::Cache(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let poly = parse_record(&line)
                    .map_err(|e| Error::Cache(format!("{}:{}: {e}", path.display(), i + 1)))?;
                memo.entry(poly.d).or_insert_with(|| Arc::new(poly));
            }
        }
        Ok(Self {
            path: Some(path),
            max_abs: DEFAULT_MAX_ABS_DISCRIMINANT,
            memo: Mutex::new(memo),
        })
    }

    /// File-backed when [`CACHE_ENV_VAR`] is set, in-memory otherwise.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_ENV_VAR) {
            Some(path) if !path.is_empty() => Self::open(path),
            _ => Ok(Self::in_memory()),
        }
    }

    pub fn with_max_abs_discriminant(mut self, max_abs: u64) -> Self {
        self.max_abs = max_abs;
        self
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, d: i64) -> Option<Arc<ClassPolynomial>> {
        self.memo.lock().unwrap().get(&d).cloned()
    }

    pub fn get_or_compute(&self, d: i64) -> Result<Arc<ClassPolynomial>> {
        if let Some(hit) = self.get(d) {
            return Ok(hit);
        }
        let poly = Arc::new(class_polynomial_bounded(d, self.max_abs)?);
        let mut memo = self.memo.lock().unwrap();
        if let Some(raced) = memo.get(&d) {
            return Ok(raced.clone());
        }
        if let Some(path) = &self.path {
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Cache(e.to_string()))?;
            writeln!(file, "{}", format_record(&poly)).map_err(|e| Error::Cache(e.to_string()))?;
        }
        memo.insert(d, poly.clone());
        Ok(poly)
    }
}

pub(crate) fn format_record(poly: &ClassPolynomial) -> String {
    let mut out = format!("{} {}", poly.d, poly.degree());
    for c in poly.coefficients.iter().rev() {
        out.push(' ');
        out.push_str(&c.to_string());
    }
    out
}

pub(crate) fn parse_record(line: &str) -> std::result::Result<ClassPolynomial, String> {
    let mut fields = line.split_whitespace();
    let d: i64 = fields
        .next()
        .ok_or("missing D")?
        .parse()
        .map_err(|e| format!("bad D: {e}"))?;
    let degree: usize = fields
        .next()
        .ok_or("missing degree")?
        .parse()
        .map_err(|e| format!("bad degree: {e}"))?;
    let mut coefficients = fields
        .map(|f| {
            f.parse::<BigInt>()
                .map_err(|e| format!("bad coefficient {f:?}: {e}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if coefficients.len() != degree + 1 {
        return Err(format!(
            "expected {} coefficients, found {}",
            degree + 1,
            coefficients.len()
        ));
    }
    if !coefficients[0].is_one() {
        return Err("polynomial is not monic".into());
    }
    coefficients.reverse();
    Ok(ClassPolynomial {
        d,
        coefficients,
        precision_bits: 0,
        max_rounding_error: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_format() {
        let poly = super::super::class_polynomial(-15).unwrap();
        assert_eq!(format_record(&poly), "-15 2 1 191025 -121287375");
        let back = parse_record("-15 2 1 191025 -121287375").unwrap();
        assert_eq!(back.coefficients, poly.coefficients);
    }

    #[test]
    fn malformed_records() {
        assert!(parse_record("-15 3 1 191025 -121287375").is_err());
        assert!(parse_record("-15 2 2 191025 -121287375").is_err());
        assert!(parse_record("x").is_err());
    }

    #[test]
    fn file_is_append_only_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("classpoly.txt");
        let cache = ClassPolyCache::open(&path).unwrap();
        cache.get_or_compute(-23).unwrap();
        cache.get_or_compute(-23).unwrap();
        cache.get_or_compute(-4).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("-23 3 1 3491750 -5151296875 12771880859375\n"));

        let reloaded = ClassPolyCache::open(&path).unwrap();
        assert_eq!(reloaded.len(), 2);
        assert_eq!(
            reloaded.get(-23).unwrap().coefficients,
            cache.get(-23).unwrap().coefficients
        );
    }
}
