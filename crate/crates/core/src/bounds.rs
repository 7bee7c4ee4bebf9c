//! Known counting sequences and recursive max-product lower bounds.
//!
//! For any super-multiplicative sequence `g` with `g(n + m) ≥ g(n) g(m)`,
//! `g(n) ≥ max_{1 ≤ k < n} g(k) g(n − k)`. Past the last known index the
//! factors are themselves such bounds, computed recursively and memoized.
//! All arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::RwLock;

use serde::Serialize;
use thiserror::Error;

use crate::count::{decimal, decimal_opt, decimal_pair, Count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BfileError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: expected index {expected}, found {found}")]
    Gap {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: index {index} appears again")]
    DuplicateIndex { line: usize, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bounds need n ≥ 2, got {0}")]
    OutOfRange(usize),
    #[error("the seed table is empty")]
    EmptyTable,
    #[error("no known or derivable value at n={0}")]
    MissingBase(usize),
    #[error("product overflows the count type at n={0}")]
    Overflow(usize),
    #[error("empty range {from}..={to}")]
    InvalidRange { from: usize, to: usize },
}

/// Exact values of a sequence on a contiguous index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedTable<C> {
    sequence_id: String,
    first_n: usize,
    values: Vec<C>,
}

impl<C: Count> SeedTable<C> {
    /// Values for `first_n, first_n + 1, …`. Panics on a value below 1.
    pub fn from_values(sequence_id: impl Into<String>, first_n: usize, values: Vec<C>) -> Self {
        assert!(
            values.iter().all(|v| *v >= C::one()),
            "seed values must be ≥ 1"
        );
        SeedTable {
            sequence_id: sequence_id.into(),
            first_n,
            values,
        }
    }

    pub fn sequence_id(&self) -> &str {
        &self.sequence_id
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first_n(&self) -> usize {
        self.first_n
    }

    pub fn max_known_n(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.first_n + self.values.len() - 1)
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        n.checked_sub(self.first_n).and_then(|i| self.values.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &C)> {
        (self.first_n..).zip(&self.values)
    }

    /// The same sequence, keeping only indices `≤ max_n`.
    pub fn truncated(&self, max_n: usize) -> Self {
        let keep = (max_n + 1)
            .saturating_sub(self.first_n)
            .min(self.values.len());
        SeedTable {
            sequence_id: self.sequence_id.clone(),
            first_n: self.first_n,
            values: self.values[..keep].to_vec(),
        }
    }
}

/// Parses b-file text: `#` comment lines and `<n> <value>` data lines
/// separated by a single space, indices consecutive.
pub fn ingest_bfile<C: Count>(text: &str, sequence_id: &str) -> Result<SeedTable<C>, BfileError> {
    let mut first_n = None;
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw);
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let parse_err = |reason: &str| BfileError::Parse {
            line,
            reason: reason.to_string(),
        };
        let (index, value) = content
            .split_once(' ')
            .ok_or_else(|| parse_err("expected `<n> <value>`"))?;
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(index) || !digits(value) {
            return Err(parse_err("index and value must be unsigned decimals"));
        }
        let index: usize = index.parse().map_err(|_| parse_err("index too large"))?;
        let value: C = value
            .parse()
            .map_err(|_| parse_err("value does not fit the count type"))?;
        if value < C::one() {
            return Err(parse_err("values must be at least 1"));
        }
        let start = *first_n.get_or_insert(index);
        let expected = start + values.len();
        if index < expected {
            return Err(BfileError::DuplicateIndex { line, index });
        }
        if index > expected {
            return Err(BfileError::Gap {
                line,
                expected,
                found: index,
            });
        }
        values.push(value);
    }
    Ok(SeedTable {
        sequence_id: sequence_id.to_string(),
        first_n: first_n.unwrap_or(0),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    /// `n` lies inside the known range; the exact value is attached.
    #[serde(rename = "exact")]
    Exact,
    /// `n` lies past the known range.
    #[serde(rename = "derived-bound")]
    DerivedBound,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::Exact => "exact",
            BoundSource::DerivedBound => "derived-bound",
        })
    }
}

/// The best split bound for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: fmt::Display"))]
pub struct BoundReport<C> {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub bound: C,
    pub split: (usize, usize),
    #[serde(serialize_with = "decimal_pair")]
    pub factors: (C, C),
    pub source: BoundSource,
    #[serde(serialize_with = "decimal_opt")]
    pub exact: Option<C>,
}

/// Max-product bounds over one table, memoizing derived values. Safe to
/// share between threads; readers only contend when a new value is added.
pub struct BoundEngine<'a, C> {
    table: &'a SeedTable<C>,
    derived: RwLock<BTreeMap<usize, C>>,
}

impl<'a, C: Count> BoundEngine<'a, C> {
    pub fn new(table: &'a SeedTable<C>) -> Self {
        BoundEngine {
            table,
            derived: RwLock::new(BTreeMap::new()),
        }
    }

    /// Exact value when known, otherwise the recursive bound.
    pub fn value(&self, n: usize) -> Result<C, BoundsError> {
        if let Some(v) = self.table.get(n) {
            return Ok(v.clone());
        }
        let past_end = self.table.max_known_n().is_some_and(|max| n > max);
        if !past_end || n < 2 {
            return Err(BoundsError::MissingBase(n));
        }
        if let Some(v) = self.derived.read().expect("memo lock").get(&n) {
            return Ok(v.clone());
        }
        let (_, bound, _) = self.best_split(n)?;
        self.derived
            .write()
            .expect("memo lock")
            .insert(n, bound.clone());
        Ok(bound)
    }

    /// Smallest `k` maximizing `value(k) · value(n − k)`.
    fn best_split(&self, n: usize) -> Result<(usize, C, (C, C)), BoundsError> {
        let mut best: Option<(usize, C, (C, C))> = None;
        for k in 1..n {
            let a = self.value(k)?;
            let b = self.value(n - k)?;
            let product = a.checked_mul(&b).ok_or(BoundsError::Overflow(n))?;
            if best.as_ref().is_none_or(|(_, top, _)| product > *top) {
                best = Some((k, product, (a, b)));
            }
        }
        Ok(best.expect("n ≥ 2 has a split"))
    }

    pub fn report(&self, n: usize) -> Result<BoundReport<C>, BoundsError> {
        if self.table.is_empty() {
            return Err(BoundsError::EmptyTable);
        }
        if n < 2 {
            return Err(BoundsError::OutOfRange(n));
        }
        let (k, bound, factors) = self.best_split(n)?;
        let exact = self.table.get(n).cloned();
        let source = if self.table.max_known_n().is_some_and(|max| n <= max) {
            BoundSource::Exact
        } else {
            BoundSource::DerivedBound
        };
        Ok(BoundReport {
            n,
            bound,
            split: (k, n - k),
            factors,
            source,
            exact,
        })
    }
}

pub fn max_product_bound<C: Count>(
    table: &SeedTable<C>,
    n: usize,
) -> Result<BoundReport<C>, BoundsError> {
    BoundEngine::new(table).report(n)
}

/// One report for every `n` in `from..=to`, sharing one memo.
pub fn bound_range<C: Count>(
    table: &SeedTable<C>,
    from: usize,
    to: usize,
) -> Result<Vec<BoundReport<C>>, BoundsError> {
    if from > to {
        return Err(BoundsError::InvalidRange { from, to });
    }
    let engine = BoundEngine::new(table);
    (from..=to).map(|n| engine.report(n)).collect()
}

/// An index where the max-product bound exceeds the known exact value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: fmt::Display"))]
pub struct Violation<C> {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub bound: C,
    #[serde(serialize_with = "decimal")]
    pub exact: C,
}

/// Every known `n ≥ 2` whose exact value is below the product bound. Empty
/// for a super-multiplicative table. Indices whose bound cannot be formed
/// (a missing low value) are skipped.
pub fn consistency_check<C: Count>(table: &SeedTable<C>) -> Vec<Violation<C>> {
    let engine = BoundEngine::new(table);
    table
        .iter()
        .filter(|(n, _)| *n >= 2)
        .filter_map(|(n, exact)| {
            let report = engine.report(n).ok()?;
            (report.bound > *exact).then(|| Violation {
                n,
                bound: report.bound,
                exact: exact.clone(),
            })
        })
        .collect()
}

/// CSV with columns `n,bound,split_k,factor_a,factor_b,source`.
pub fn reports_to_csv<C: Count>(reports: &[BoundReport<C>]) -> String {
    let mut out = String::from("n,bound,split_k,factor_a,factor_b,source\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n, r.bound, r.split.0, r.factors.0, r.factors.1, r.source
        );
    }
    out
}
