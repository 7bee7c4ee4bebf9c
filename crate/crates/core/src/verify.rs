//! Exhaustive checks of the class map `φ(τ1, τ2) = τ1 ⊕w τ2` and of the
//! super-multiplicative inequalities it implies, plus the direct-sum
//! comparison that shows why a commutative composition is not enough.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_key, is_homeomorphic, CanonicalKey};
use crate::count::{decimal, Count, CountRecord, CountSequence};
use crate::enumerate::{enumerate_labeled, unlabeled_representatives, EnumerateError};
use crate::fixtures::ReferenceCounts;
use crate::point_set::{PointSet, UNIVERSE_WIDTH};
use crate::topology::{PointMap, Topology, TopologyError};

/// Largest `n + m` for the unlabeled checks.
pub const MAX_SPLIT_TOTAL: usize = 6;
/// Largest `n + m` for the labeled injectivity check.
pub const MAX_LABELED_TOTAL: usize = 5;
/// Collision pairs kept per report.
pub const MAX_REPORTED_COLLISIONS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n + m = {total} exceeds the limit of {max}")]
    TooLarge { total: usize, max: usize },
    #[error("{0} points exceed the {UNIVERSE_WIDTH}-point universe")]
    WidthExceeded(usize),
    #[error("counts for n={0} are unavailable")]
    MissingCounts(usize),
    #[error("product overflows the count type at n={0}")]
    Overflow(usize),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

fn check_total(n: usize, m: usize, max: usize) -> Result<(), VerifyError> {
    let total = n + m;
    if total > max {
        Err(VerifyError::TooLarge { total, max })
    } else {
        Ok(())
    }
}

/// `t2` moved onto the points right after those of `t1`.
fn shifted_after(t1: &Topology, t2: &Topology) -> Result<(Topology, Topology), VerifyError> {
    let (a, b) = (t1.normalize(), t2.normalize());
    let total = a.n() + b.n();
    if total > UNIVERSE_WIDTH as usize {
        return Err(VerifyError::WidthExceeded(total));
    }
    let b = b.relabel(&PointMap::shift(b.ground(), a.n() as u32))?;
    Ok((a, b))
}

/// `φ(t1, t2)`: normalize both, move `t2` onto `n..n+m`, take the w-sum.
pub fn phi(t1: &Topology, t2: &Topology) -> Result<Topology, VerifyError> {
    let (a, b) = shifted_after(t1, t2)?;
    Ok(a.w_sum(&b)?)
}

/// Direct sum of `t1` and `t2` with the same relabeling as [`phi`].
pub fn direct_sum_shifted(t1: &Topology, t2: &Topology) -> Result<Topology, VerifyError> {
    let (a, b) = shifted_after(t1, t2)?;
    Ok(a.direct_sum(&b)?)
}

/// Two input pairs whose images are homeomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: (CanonicalKey, CanonicalKey),
    pub second: (CanonicalKey, CanonicalKey),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub n: usize,
    pub m: usize,
    /// Whether only T₀ classes were paired.
    pub t0_only: bool,
    pub pairs_tested: usize,
    pub distinct_images: usize,
    pub collisions: Vec<Collision>,
}

impl InjectivityReport {
    pub fn holds(&self) -> bool {
        self.collisions.is_empty() && self.distinct_images == self.pairs_tested
    }
}

/// Runs `φ` over every pair from the two class lists and looks for two
/// pairs landing in the same class.
pub fn injectivity_over(
    n: usize,
    m: usize,
    t0_only: bool,
    left: &[Topology],
    right: &[Topology],
) -> Result<InjectivityReport, VerifyError> {
    let grid: Vec<(usize, usize)> = (0..left.len())
        .flat_map(|i| (0..right.len()).map(move |j| (i, j)))
        .collect();
    let images = grid
        .par_iter()
        .map(|&(i, j)| phi(&left[i], &right[j]).map(|t| canonical_key(&t)))
        .collect::<Result<Vec<_>, _>>()?;
    let key_pair = |(i, j): (usize, usize)| (canonical_key(&left[i]), canonical_key(&right[j]));
    let mut seen: HashMap<&CanonicalKey, (usize, usize)> = HashMap::new();
    let mut collisions = Vec::new();
    for (&pair, image) in grid.iter().zip(&images) {
        if let Some(&earlier) = seen.get(image) {
            if collisions.len() < MAX_REPORTED_COLLISIONS {
                collisions.push(Collision {
                    first: key_pair(earlier),
                    second: key_pair(pair),
                });
            }
        } else {
            seen.insert(image, pair);
        }
    }
    Ok(InjectivityReport {
        n,
        m,
        t0_only,
        pairs_tested: grid.len(),
        distinct_images: seen.len(),
        collisions,
    })
}

/// Injectivity of `φ` on all classes on `n` and `m` points.
pub fn verify_injectivity(n: usize, m: usize) -> Result<InjectivityReport, VerifyError> {
    check_total(n, m, MAX_SPLIT_TOTAL)?;
    let left = unlabeled_representatives(n)?;
    let right = unlabeled_representatives(m)?;
    injectivity_over(n, m, false, &left, &right)
}

/// Same, restricted to T₀ classes.
pub fn verify_injectivity_t0(n: usize, m: usize) -> Result<InjectivityReport, VerifyError> {
    check_total(n, m, MAX_SPLIT_TOTAL)?;
    let t0 = |k| -> Result<Vec<Topology>, VerifyError> {
        Ok(unlabeled_representatives(k)?
            .into_iter()
            .filter(Topology::is_t0)
            .collect())
    };
    injectivity_over(n, m, true, &t0(n)?, &t0(m)?)
}

/// Outcome of the labeled w-sum check on concrete labeled pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledInjectivity {
    pub n: usize,
    pub m: usize,
    pub pairs_tested: usize,
    pub distinct_images: usize,
    pub t0_pairs_tested: usize,
    pub t0_distinct_images: usize,
}

impl LabeledInjectivity {
    pub fn holds(&self) -> bool {
        self.pairs_tested == self.distinct_images && self.t0_pairs_tested == self.t0_distinct_images
    }
}

/// w-sums of all labeled pairs on `0..n` and `n..n+m` are pairwise distinct.
pub fn verify_labeled_injectivity(n: usize, m: usize) -> Result<LabeledInjectivity, VerifyError> {
    check_total(n, m, MAX_LABELED_TOTAL)?;
    let left: Vec<Topology> = enumerate_labeled(n)?.collect();
    let shift = PointMap::shift(PointSet::prefix(m), n as u32);
    let right = enumerate_labeled(m)?
        .map(|t| t.relabel(&shift))
        .collect::<Result<Vec<_>, _>>()?;
    let mut images = HashSet::new();
    let mut t0_images = HashSet::new();
    let (mut pairs, mut t0_pairs) = (0, 0);
    for a in &left {
        for b in &right {
            let image = a.w_sum(b)?;
            pairs += 1;
            if a.is_t0() && b.is_t0() {
                t0_pairs += 1;
                t0_images.insert(image.clone());
            }
            images.insert(image);
        }
    }
    Ok(LabeledInjectivity {
        n,
        m,
        pairs_tested: pairs,
        distinct_images: images.len(),
        t0_pairs_tested: t0_pairs,
        t0_distinct_images: t0_images.len(),
    })
}

/// Anything that can hand out the four counts for a given `n`.
pub trait CountSource<C> {
    fn record(&self, n: usize) -> Option<CountRecord<C>>;
}

impl<C: Count> CountSource<C> for std::collections::BTreeMap<usize, CountRecord<C>> {
    fn record(&self, n: usize) -> Option<CountRecord<C>> {
        self.get(&n).cloned()
    }
}

impl<C: Count> CountSource<C> for [CountRecord<C>] {
    fn record(&self, n: usize) -> Option<CountRecord<C>> {
        self.iter().find(|r| r.n == n).cloned()
    }
}

impl<C: Count> CountSource<C> for ReferenceCounts<C> {
    fn record(&self, n: usize) -> Option<CountRecord<C>> {
        ReferenceCounts::record(self, n)
    }
}

/// One sequence's two inequalities at `n + m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: fmt::Display"))]
pub struct InequalityCheck<C> {
    pub sequence: CountSequence,
    #[serde(serialize_with = "decimal")]
    pub total: C,
    /// `g(n) · g(m)`.
    #[serde(serialize_with = "decimal")]
    pub product: C,
    pub product_holds: bool,
    /// `max_{1 ≤ i < n+m} g(i) · g(n + m − i)`, or 1 when `n + m < 2`.
    #[serde(serialize_with = "decimal")]
    pub max_split_product: C,
    pub max_split_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: fmt::Display"))]
pub struct InequalityReport<C> {
    pub n: usize,
    pub m: usize,
    pub checks: Vec<InequalityCheck<C>>,
}

impl<C> InequalityReport<C> {
    pub fn holds(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.product_holds && c.max_split_holds)
    }
}

/// Evaluates `g(n + m) ≥ g(n) g(m)` and the max-over-splits form for
/// `T`, `f`, `T0` and `f0`.
pub fn verify_inequalities<C: Count, S: CountSource<C> + ?Sized>(
    source: &S,
    n: usize,
    m: usize,
) -> Result<InequalityReport<C>, VerifyError> {
    let total = n + m;
    let records = (0..=total)
        .map(|k| source.record(k).ok_or(VerifyError::MissingCounts(k)))
        .collect::<Result<Vec<_>, _>>()?;
    let mul = |a: &C, b: &C| a.checked_mul(b).ok_or(VerifyError::Overflow(total));
    let checks = CountSequence::ALL
        .into_iter()
        .map(|seq| {
            let g = |k: usize| records[k].get(seq);
            let product = mul(g(n), g(m))?;
            let mut max_split = C::one();
            for i in 1..total {
                let p = mul(g(i), g(total - i))?;
                if p > max_split {
                    max_split = p;
                }
            }
            let value = g(total).clone();
            Ok(InequalityCheck {
                sequence: seq,
                product_holds: value >= product,
                max_split_holds: value >= max_split,
                total: value,
                product,
                max_split_product: max_split,
            })
        })
        .collect::<Result<Vec<_>, VerifyError>>()?;
    Ok(InequalityReport { n, m, checks })
}

/// Number of classes hit by direct sums of class pairs on `n` and `n` points.
pub fn direct_sum_image_count(n: usize) -> Result<usize, VerifyError> {
    check_total(n, n, MAX_SPLIT_TOTAL)?;
    let reps = unlabeled_representatives(n)?;
    let mut images = BTreeSet::new();
    for a in &reps {
        for b in &reps {
            images.insert(canonical_key(&direct_sum_shifted(a, b)?));
        }
    }
    Ok(images.len())
}

/// First class pair, in key order, whose two w-sum orders are not
/// homeomorphic.
pub fn noncommutativity_witness(
    n: usize,
    m: usize,
) -> Result<Option<(Topology, Topology)>, VerifyError> {
    check_total(n, m, MAX_SPLIT_TOTAL)?;
    let left = unlabeled_representatives(n)?;
    let right = unlabeled_representatives(m)?;
    for a in &left {
        for b in &right {
            if !is_homeomorphic(&phi(a, b)?, &phi(b, a)?) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}
