//! Homeomorphism classes on `n` points, optionally backed by a cache file of
//! representatives (`# topocount reps n=<n> count=<c>`, then one topology
//! text line per class, sorted by canonical key).

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use topocount::{
    census, count_automorphisms, BigCountRecord, CountRecord, EnumerateOptions, Topology,
};

use crate::CliError;

/// Representatives and the four counts for one `n`.
pub struct Classes {
    pub reps: Vec<Topology>,
    pub record: BigCountRecord,
}

impl Classes {
    pub fn t0_reps(&self) -> Vec<Topology> {
        self.reps.iter().filter(|t| t.is_t0()).cloned().collect()
    }

    /// Counts from representatives alone: each class holds `n!/|Aut|`
    /// labeled topologies.
    fn from_reps(n: usize, reps: Vec<Topology>) -> Self {
        let factorial: u64 = (1..=n as u64).product();
        let (mut labeled, mut labeled_t0, mut unlabeled_t0) = (0u64, 0u64, 0u64);
        for t in &reps {
            let size = factorial / count_automorphisms(t);
            labeled += size;
            if t.is_t0() {
                labeled_t0 += size;
                unlabeled_t0 += 1;
            }
        }
        let record = CountRecord {
            n,
            labeled: BigUint::from(labeled),
            unlabeled: BigUint::from(reps.len()),
            labeled_t0: BigUint::from(labeled_t0),
            unlabeled_t0: BigUint::from(unlabeled_t0),
        };
        Classes { reps, record }
    }
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("reps-n{n}.txt"))
}

fn header(n: usize, count: usize) -> String {
    format!("# topocount reps n={n} count={count}")
}

/// Parses a cache file; `None` unless the header matches `n` and the line
/// count and every line is a topology on `n` points.
fn parse_cache(text: &str, n: usize) -> Option<Vec<Topology>> {
    let mut lines = text.lines();
    let count: usize = lines
        .next()?
        .strip_prefix(&format!("# topocount reps n={n} count="))?
        .parse()
        .ok()?;
    let reps = lines
        .map(|line| line.parse::<Topology>().ok().filter(|t| t.n() == n))
        .collect::<Option<Vec<_>>>()?;
    (reps.len() == count).then_some(reps)
}

fn write_cache(path: &Path, n: usize, reps: &[Topology]) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut text = header(n, reps.len());
    text.push('\n');
    for t in reps {
        text.push_str(&t.to_string());
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// Classes on `n` points from the cache when valid, otherwise from a fresh
/// census (which then refreshes the cache).
pub fn load(
    n: usize,
    cache_dir: Option<&Path>,
    opts: EnumerateOptions,
) -> Result<Classes, CliError> {
    let path = cache_dir.map(|dir| cache_path(dir, n));
    if let Some(path) = &path {
        if let Some(reps) = fs::read_to_string(path)
            .ok()
            .and_then(|text| parse_cache(&text, n))
        {
            return Ok(Classes::from_reps(n, reps));
        }
    }
    let c = census(n, opts)?;
    let classes = Classes {
        reps: c.representatives(),
        record: c.record(),
    };
    if let Some(path) = &path {
        write_cache(path, n, &classes.reps)?;
    }
    Ok(classes)
}
