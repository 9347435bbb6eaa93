//! Memo table of normalized discrepancies and its on-disk cache format.

use std::collections::HashMap;
use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::packed::PackedElement;
use crate::skein::SkeinElement;

pub const CACHE_HEADER: &str = "SKEINTORUS-CACHE v1";
const HEADER_PREFIX: &str = "SKEINTORUS-CACHE ";

/// `D(p,q;r,s)` in the engine's normalized form: `r = 0`, `p > 0`,
/// `0 <= q <= p/2`, `s >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DiscrepancyKey {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl DiscrepancyKey {
    /// Key for `D(p,q;0,s)`; panics unless already normalized.
    pub fn new(p: i64, q: i64, s: i64) -> Self {
        let key = Self { p, q, r: 0, s };
        assert!(key.is_normalized(), "D({p},{q};0,{s}) is not a normalized key");
        key
    }

    pub fn is_normalized(&self) -> bool {
        self.r == 0 && self.p > 0 && 0 <= self.q && 2 * self.q <= self.p && self.s >= 1
    }
}

impl std::fmt::Display for DiscrepancyKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D({},{};{},{})", self.p, self.q, self.r, self.s)
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access cache {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("cache has version {found:?}, this build reads {CACHE_HEADER:?}")]
    Version { found: String },
    #[error("corrupt cache at line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
}

/// Insert-only map from normalized keys to discrepancies.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct MemoTable {
    entries: HashMap<DiscrepancyKey, PackedElement>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &DiscrepancyKey) -> Option<SkeinElement> {
        self.entries.get(key).map(PackedElement::to_element)
    }

    pub(crate) fn get_packed(&self, key: &DiscrepancyKey) -> Option<&PackedElement> {
        self.entries.get(key)
    }

    pub fn contains(&self, key: &DiscrepancyKey) -> bool {
        self.entries.contains_key(key)
    }

    /// Stores `value` unless the key is already present; existing entries are
    /// never replaced.
    pub fn insert(&mut self, key: DiscrepancyKey, value: SkeinElement) {
        self.insert_packed(key, PackedElement::from_element(&value));
    }

    pub(crate) fn insert_packed(&mut self, key: DiscrepancyKey, value: PackedElement) {
        debug_assert!(key.is_normalized());
        self.entries.entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in key order.
    pub fn sorted(&self) -> Vec<(DiscrepancyKey, SkeinElement)> {
        self.sorted_keys().into_iter().map(|k| (k, self.entries[&k].to_element())).collect()
    }

    pub fn sorted_keys(&self) -> Vec<DiscrepancyKey> {
        let mut v: Vec<_> = self.entries.keys().copied().collect();
        v.sort();
        v
    }

    /// Total number of monomials stored.
    pub fn monomial_count(&self) -> usize {
        self.entries.values().map(PackedElement::monomial_count).sum()
    }

    /// Largest number of basis terms in any entry.
    pub fn peak_terms(&self) -> usize {
        self.entries.values().map(PackedElement::len).max().unwrap_or(0)
    }

    /// Adds every entry of `other` not already present.
    pub fn merge(&mut self, other: MemoTable) {
        for (k, v) in other.entries {
            self.insert_packed(k, v);
        }
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{CACHE_HEADER}")?;
        for k in self.sorted_keys() {
            let v = self.entries[&k].to_element();
            writeln!(w, "{} {} {} {} {}", k.p, k.q, k.r, k.s, v.to_json())?;
        }
        writeln!(w, "END {}", self.len())?;
        w.flush()
    }

    pub fn read_from<R: BufRead>(r: R) -> Result<Self, CacheError> {
        let io_err = |e: io::Error| CacheError::Io { path: PathBuf::from("<reader>"), source: e };
        let mut lines = r.lines().enumerate();
        let header = match lines.next() {
            Some((_, line)) => line.map_err(io_err)?,
            None => return Err(corrupt(1, "empty file")),
        };
        if header != CACHE_HEADER {
            return Err(match header.strip_prefix(HEADER_PREFIX) {
                Some(v) => CacheError::Version { found: v.to_string() },
                None => corrupt(1, "missing header"),
            });
        }
        let mut table = MemoTable::new();
        let mut declared = None;
        for (i, line) in lines {
            let line = line.map_err(io_err)?;
            let lineno = i + 1;
            if declared.is_some() {
                return Err(corrupt(lineno, "data after end marker"));
            }
            if let Some(n) = line.strip_prefix("END ") {
                declared = Some(n.trim().parse::<usize>().map_err(|_| corrupt(lineno, "bad end marker"))?);
                continue;
            }
            let (key, value) = parse_record(&line).map_err(|reason| corrupt(lineno, reason))?;
            if table.contains(&key) {
                return Err(corrupt(lineno, format!("duplicate entry {key}")));
            }
            table.insert(key, value);
        }
        match declared {
            None => Err(corrupt(table.len() + 2, "truncated (no end marker)")),
            Some(n) if n != table.len() => {
                Err(corrupt(table.len() + 2, format!("end marker says {n} entries, found {}", table.len())))
            }
            Some(_) => {
                table.validate_sample()?;
                Ok(table)
            }
        }
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let io_err = |e| CacheError::Io { path: path.to_path_buf(), source: e };
        let tmp = path.with_extension("tmp");
        let file = fs::File::create(&tmp).map_err(io_err)?;
        self.write_to(BufWriter::new(file)).map_err(io_err)?;
        fs::rename(&tmp, path).map_err(io_err)
    }

    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let file = fs::File::open(path).map_err(|e| CacheError::Io { path: path.to_path_buf(), source: e })?;
        Self::read_from(BufReader::new(file)).map_err(|e| match e {
            CacheError::Io { source, .. } => CacheError::Io { path: path.to_path_buf(), source },
            other => other,
        })
    }

    /// Checks the term bound on up to 64 evenly spaced `s = 1` entries.
    fn validate_sample(&self) -> Result<(), CacheError> {
        let keys = self.sorted_keys();
        let step = (keys.len() / 64).max(1);
        for (i, k) in keys.iter().enumerate().step_by(step) {
            if k.s == 1 {
                if let Some(bad) = term_bound_violation(k, &self.entries[k].to_element()) {
                    return Err(corrupt(i + 2, format!("{k} has out-of-range term {bad}")));
                }
            }
        }
        Ok(())
    }
}

fn corrupt(line: usize, reason: impl Into<String>) -> CacheError {
    CacheError::Corrupt { line, reason: reason.into() }
}

fn parse_record(line: &str) -> Result<(DiscrepancyKey, SkeinElement), String> {
    let mut parts = line.splitn(5, ' ');
    let mut int = || -> Result<i64, String> {
        parts
            .next()
            .ok_or("short record")?
            .parse::<i64>()
            .map_err(|e| format!("bad key: {e}"))
    };
    let key = DiscrepancyKey { p: int()?, q: int()?, r: int()?, s: int()? };
    if !key.is_normalized() {
        return Err(format!("{key} is not normalized"));
    }
    let json = parts.next().ok_or("missing value")?;
    let value = SkeinElement::from_json(json).map_err(|e| format!("bad value: {e}"))?;
    Ok((key, value))
}

/// First term of `D(p,q;0,1)` outside `0 <= i <= p-2`, `0 <= j <= q-1`.
pub fn term_bound_violation(k: &DiscrepancyKey, v: &SkeinElement) -> Option<String> {
    term_outside(k, v, k.q - 1)
}

/// Like [`term_bound_violation`] with the tighter `j <= q-2`.
pub fn strict_term_bound_violation(k: &DiscrepancyKey, v: &SkeinElement) -> Option<String> {
    term_outside(k, v, k.q - 2)
}

fn term_outside(k: &DiscrepancyKey, v: &SkeinElement, j_max: i64) -> Option<String> {
    v.keys()
        .find(|t| {
            let (i, j) = (t.curve.p(), t.curve.q());
            !(0..=k.p - 2).contains(&i) || !(0..=j_max).contains(&j)
        })
        .map(|t| format!("eta^{} T{}", t.eta, t.curve))
}
