//! Exhaustive enumeration of finite topologies at small `n`.
//!
//! Labeled topologies on `0..n` are in bijection with preorders on `0..n`
//! (the specialization order). Preorders are generated by backtracking
//! over the relation matrix with transitive propagation; each one is then
//! turned into its topology. A literal axiom filter over all families of
//! subsets is kept alongside as an independent oracle for `n ≤ 4`.
//!
//! Orientation: `i ≤ j` iff every open containing `j` also contains `i`.
//! Row `i` of a [`PreorderMatrix`] is the set `{ j : i ≤ j }`, and the opens
//! are exactly the down-sets of `≤`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_key, CanonicalKey};
use crate::count::{Count, CountRecord};
use crate::point_set::PointSet;
use crate::topology::Topology;

/// Largest `n` accepted by the preorder enumeration.
pub const MAX_ENUMERATION_N: usize = 6;
/// Largest `n` accepted by the naive axiom-filter oracle.
pub const MAX_NAIVE_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n={n} exceeds the enumeration limit of {max}; use ingested counts for larger n")]
    TooLarge { n: usize, max: usize },
    #[error("time budget exhausted")]
    BudgetExceeded,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreorderError {
    #[error("row {0} is not reflexive")]
    NotReflexive(usize),
    #[error("rows {0} and {1} break transitivity")]
    NotTransitive(usize, usize),
    #[error("row {0} points outside 0..n")]
    OutOfRange(usize),
}

fn check_n(n: usize, max: usize) -> Result<(), EnumerateError> {
    if n > max {
        Err(EnumerateError::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// A preorder on `0..n` stored as one bit row per point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreorderMatrix {
    rows: Vec<PointSet>,
}

impl PreorderMatrix {
    pub fn new(rows: Vec<PointSet>) -> Result<Self, PreorderError> {
        let all = PointSet::prefix(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(PreorderError::OutOfRange(i));
            }
            if !row.contains(i as u32) {
                return Err(PreorderError::NotReflexive(i));
            }
            for j in row.iter() {
                if !rows[j as usize].is_subset(*row) {
                    return Err(PreorderError::NotTransitive(i, j as usize));
                }
            }
        }
        Ok(PreorderMatrix { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn leq(&self, i: u32, j: u32) -> bool {
        self.rows[i as usize].contains(j)
    }

    /// A partial order: `i ≤ j` and `j ≤ i` only when `i = j`.
    pub fn is_antisymmetric(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .all(|j| j as usize == i || !self.rows[j as usize].contains(i as u32))
        })
    }

    /// `{ i : i ≤ j }`, the smallest open containing `j`.
    pub fn down_set(&self, j: u32) -> PointSet {
        (0..self.n() as u32).filter(|&i| self.leq(i, j)).collect()
    }

    /// The topology whose opens are the down-sets of this preorder.
    pub fn to_topology(&self) -> Topology {
        let mut opens = vec![PointSet::EMPTY];
        for j in 0..self.n() as u32 {
            let minimal = self.down_set(j);
            let joined: Vec<PointSet> = opens.iter().map(|&o| o | minimal).collect();
            opens.extend(joined);
            opens.sort_unstable();
            opens.dedup();
        }
        Topology::from_family_unchecked(PointSet::prefix(self.n()), opens)
    }

    /// Specialization preorder of a topology; the topology is normalized first.
    pub fn from_topology(t: &Topology) -> Self {
        let t = t.normalize();
        let n = t.n() as u32;
        let minimal: Vec<PointSet> = (0..n).map(|j| t.minimal_open(j)).collect();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| minimal[j as usize].contains(i))
                    .collect()
            })
            .collect();
        PreorderMatrix { rows }
    }
}

#[derive(Clone)]
struct Frame {
    pos: usize,
    rows: [u32; MAX_ENUMERATION_N],
    forbidden: [u32; MAX_ENUMERATION_N],
    stage: u8,
}

impl Frame {
    /// Adds `i ≤ j` and closes transitively; `false` if a pair already
    /// decided as unrelated becomes related.
    fn relate(&mut self, n: usize, i: usize, j: usize) -> bool {
        let above_j = self.rows[j];
        for a in 0..n {
            if self.rows[a] & (1 << i) != 0 {
                self.rows[a] |= above_j;
                if self.rows[a] & self.forbidden[a] != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Streaming enumeration of all preorders on `0..n`.
///
/// Pairs `(i, j)`, `i ≠ j`, are decided in row-major order, "unrelated"
/// before "related"; pairs already forced by transitivity are not branched
/// on, so every preorder is produced exactly once.
pub struct Preorders {
    n: usize,
    pairs: Vec<(usize, usize)>,
    stack: Vec<Frame>,
}

impl Preorders {
    pub fn new(n: usize) -> Result<Self, EnumerateError> {
        check_n(n, MAX_ENUMERATION_N)?;
        let mut root = Frame {
            pos: 0,
            rows: [0; MAX_ENUMERATION_N],
            forbidden: [0; MAX_ENUMERATION_N],
            stage: 0,
        };
        for (i, row) in root.rows.iter_mut().enumerate().take(n) {
            *row = 1 << i;
        }
        let pairs = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        Ok(Preorders {
            n,
            pairs,
            stack: vec![root],
        })
    }

    /// Splits the enumeration by the first row. The parts are disjoint and
    /// together yield every preorder once.
    pub fn partitions(n: usize) -> Result<Vec<Preorders>, EnumerateError> {
        let whole = Preorders::new(n)?;
        if n <= 1 {
            return Ok(vec![whole]);
        }
        let root = whole.stack[0].clone();
        let parts = (0u32..1 << (n - 1))
            .map(|choice| {
                let mut frame = root.clone();
                for j in 1..n {
                    if choice & (1 << (j - 1)) != 0 {
                        // nothing lies below 0 yet, so this cannot conflict
                        frame.relate(n, 0, j);
                    } else {
                        frame.forbidden[0] |= 1 << j;
                    }
                }
                frame.pos = n - 1;
                Preorders {
                    n,
                    pairs: whole.pairs.clone(),
                    stack: vec![frame],
                }
            })
            .collect();
        Ok(parts)
    }
}

impl Iterator for Preorders {
    type Item = PreorderMatrix;

    fn next(&mut self) -> Option<PreorderMatrix> {
        let n = self.n;
        loop {
            let top = self.stack.last_mut()?;
            if top.pos == self.pairs.len() {
                let rows = top.rows[..n]
                    .iter()
                    .map(|&r| PointSet::from_mask(r))
                    .collect();
                self.stack.pop();
                return Some(PreorderMatrix { rows });
            }
            let (i, j) = self.pairs[top.pos];
            if top.stage == 0 && top.rows[i] & (1 << j) != 0 {
                top.pos += 1;
                continue;
            }
            match top.stage {
                0 => {
                    top.stage = 1;
                    let mut child = top.clone();
                    child.forbidden[i] |= 1 << j;
                    child.pos += 1;
                    child.stage = 0;
                    self.stack.push(child);
                }
                1 => {
                    top.stage = 2;
                    let mut child = top.clone();
                    if child.relate(n, i, j) {
                        child.pos += 1;
                        child.stage = 0;
                        self.stack.push(child);
                    }
                }
                _ => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// Every labeled topology on `0..n`, each exactly once, in preorder
/// enumeration order. Nothing is materialized up front.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Topology>, EnumerateError> {
    Ok(Preorders::new(n)?.map(|p| p.to_topology()))
}

/// Every family of subsets of `0..n` that passes [`Topology::validate`].
/// Doubly exponential; only for cross-checking.
pub fn naive_enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Topology>, EnumerateError> {
    check_n(n, MAX_NAIVE_N)?;
    let ground = PointSet::prefix(n);
    let subsets = 1u32 << n;
    Ok((0u64..1 << subsets).filter_map(move |family| {
        let members = (0..subsets)
            .filter(|s| family & (1 << s) != 0)
            .map(PointSet::from_mask);
        Topology::validate(members, ground).ok()
    }))
}

/// Knobs for the parallel aggregations.
#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    pub jobs: usize,
    pub deadline: Option<Instant>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
            deadline: None,
        }
    }
}

/// One homeomorphism class seen during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassEntry {
    /// How many labeled topologies fall into the class.
    pub labeled: u64,
    pub t0: bool,
}

/// All homeomorphism classes on `n` points with their labeled multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub n: usize,
    pub classes: BTreeMap<CanonicalKey, ClassEntry>,
}

impl ClassCensus {
    fn empty(n: usize) -> Self {
        ClassCensus {
            n,
            classes: BTreeMap::new(),
        }
    }

    fn add(&mut self, t: &Topology) {
        let entry = self
            .classes
            .entry(canonical_key(t))
            .or_insert_with(|| ClassEntry {
                labeled: 0,
                t0: t.is_t0(),
            });
        entry.labeled += 1;
    }

    /// Order-insensitive merge of two partial censuses.
    pub fn merge(mut self, other: ClassCensus) -> ClassCensus {
        for (key, entry) in other.classes {
            self.classes
                .entry(key)
                .and_modify(|e| e.labeled += entry.labeled)
                .or_insert(entry);
        }
        self
    }

    pub fn labeled(&self) -> u64 {
        self.classes.values().map(|e| e.labeled).sum()
    }

    pub fn labeled_t0(&self) -> u64 {
        self.classes
            .values()
            .filter(|e| e.t0)
            .map(|e| e.labeled)
            .sum()
    }

    pub fn unlabeled(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn unlabeled_t0(&self) -> u64 {
        self.classes.values().filter(|e| e.t0).count() as u64
    }

    pub fn record<C: Count>(&self) -> CountRecord<C> {
        let c = |v: u64| C::from_u64(v).expect("count fits the target type");
        CountRecord {
            n: self.n,
            labeled: c(self.labeled()),
            unlabeled: c(self.unlabeled()),
            labeled_t0: c(self.labeled_t0()),
            unlabeled_t0: c(self.unlabeled_t0()),
        }
    }

    /// Minimal representatives, sorted by canonical key.
    pub fn representatives(&self) -> Vec<Topology> {
        self.classes
            .keys()
            .map(CanonicalKey::representative)
            .collect()
    }
}

/// Classifies every labeled topology on `n` points, partitioned by the first
/// preorder row and run on `opts.jobs` threads.
pub fn census(n: usize, opts: EnumerateOptions) -> Result<ClassCensus, EnumerateError> {
    let parts = Preorders::partitions(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| EnumerateError::ThreadPool(e.to_string()))?;
    pool.install(|| {
        parts
            .into_par_iter()
            .map(|part| {
                let mut partial = ClassCensus::empty(n);
                for (i, p) in part.enumerate() {
                    if i % 1024 == 0 && opts.deadline.is_some_and(|d| Instant::now() > d) {
                        return Err(EnumerateError::BudgetExceeded);
                    }
                    partial.add(&p.to_topology());
                }
                Ok(partial)
            })
            .try_reduce(|| ClassCensus::empty(n), |a, b| Ok(a.merge(b)))
    })
}

/// One representative per homeomorphism class on `n` points, sorted by key.
pub fn unlabeled_representatives(n: usize) -> Result<Vec<Topology>, EnumerateError> {
    Ok(census(n, EnumerateOptions::default())?.representatives())
}

/// `T(n)`, `f(n)`, `T0(n)` and `f0(n)` from a single enumeration pass.
pub fn count_all<C: Count>(n: usize) -> Result<CountRecord<C>, EnumerateError> {
    Ok(census(n, EnumerateOptions::default())?.record())
}
