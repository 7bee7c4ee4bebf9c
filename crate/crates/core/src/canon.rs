//! Homeomorphism classes: canonical keys, witnesses and automorphism counts.
//!
//! All three share one search: points are grouped by their
//! [`PointSignature`], and only bijections that keep every point inside
//! its signature class are explored. A homeomorphism can never move a point
//! to one with a different signature, so nothing is lost.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::point_set::PointSet;
use crate::topology::{PointMap, Topology};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("cannot compare topologies on {0} and {1} points")]
    SizeMismatch(usize, usize),
}

/// Sorted population counts of the opens that contain a point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSignature(Vec<u32>);

impl PointSignature {
    pub fn of(t: &Topology, point: u32) -> Self {
        let mut sizes: Vec<u32> = t
            .opens()
            .iter()
            .filter(|o| o.contains(point))
            .map(|o| o.len() as u32)
            .collect();
        sizes.sort_unstable();
        PointSignature(sizes)
    }

    pub fn open_sizes(&self) -> &[u32] {
        &self.0
    }
}

/// Fingerprint of a homeomorphism class: the smallest open-set sequence
/// reachable by relabeling the normalized topology.
///
/// Keys order by point count, then open count, then the ascending mask
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    n: usize,
    opens: Vec<PointSet>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// The minimal representative of the class, on points `0..n`.
    pub fn representative(&self) -> Topology {
        Topology::from_family_unchecked(PointSet::prefix(self.n), self.opens.clone())
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.opens.len().cmp(&other.opens.len()))
            .then_with(|| self.opens.cmp(&other.opens))
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serializes as the text form of the minimal representative.
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative().fmt(f)
    }
}

impl serde::Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Signature classes of a normalized topology: `order` lists the points
/// sorted by signature, `blocks` are the runs of equal signature in it.
struct Classes {
    order: Vec<u32>,
    blocks: Vec<(usize, usize)>,
}

impl Classes {
    fn of(t: &Topology) -> Classes {
        let n = t.n() as u32;
        let sigs: Vec<PointSignature> = (0..n).map(|p| PointSignature::of(t, p)).collect();
        let mut order: Vec<u32> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a as usize].cmp(&sigs[b as usize]).then(a.cmp(&b)));
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..=order.len() {
            if i == order.len() || sigs[order[i] as usize] != sigs[order[start] as usize] {
                blocks.push((start, i));
                start = i;
            }
        }
        Classes { order, blocks }
    }

    /// Calls `visit` with every labeling `label[p]` that sends the points
    /// of each class onto that class's block of positions.
    fn for_each_labeling(&self, mut visit: impl FnMut(&[u32])) {
        let n = self.order.len();
        let mut label = vec![0u32; n];
        if n == 0 {
            visit(&label);
            return;
        }
        let arrangements = self
            .blocks
            .iter()
            .map(|&(s, e)| self.order[s..e].iter().copied().permutations(e - s))
            .multi_cartesian_product();
        for choice in arrangements {
            for (&(start, _), arrangement) in self.blocks.iter().zip(&choice) {
                for (k, &p) in arrangement.iter().enumerate() {
                    label[p as usize] = (start + k) as u32;
                }
            }
            visit(&label);
        }
    }
}

fn apply(set: PointSet, label: &[u32]) -> PointSet {
    set.iter().map(|p| label[p as usize]).collect()
}

fn relabeled_opens(t: &Topology, label: &[u32]) -> Vec<PointSet> {
    let mut opens: Vec<PointSet> = t.opens().iter().map(|&o| apply(o, label)).collect();
    opens.sort_unstable();
    opens
}

/// Canonical key of `t` together with a labeling of the normalized points
/// that attains it.
fn canonize(t: &Topology) -> (CanonicalKey, Vec<u32>) {
    let t = t.normalize();
    let classes = Classes::of(&t);
    let mut best: Option<(Vec<PointSet>, Vec<u32>)> = None;
    classes.for_each_labeling(|label| {
        let opens = relabeled_opens(&t, label);
        if best.as_ref().is_none_or(|(b, _)| opens < *b) {
            best = Some((opens, label.to_vec()));
        }
    });
    let (opens, label) = best.expect("at least one labeling exists");
    (CanonicalKey { n: t.n(), opens }, label)
}

pub fn canonical_key(t: &Topology) -> CanonicalKey {
    canonize(t).0
}

pub fn is_homeomorphic(a: &Topology, b: &Topology) -> bool {
    a.n() == b.n() && a.open_count() == b.open_count() && canonical_key(a) == canonical_key(b)
}

/// A bijection `φ` from the points of `a` to the points of `b` with
/// `a.relabel(φ) == b`, if one exists.
pub fn find_homeomorphism(a: &Topology, b: &Topology) -> Result<Option<PointMap>, CanonError> {
    if a.n() != b.n() {
        return Err(CanonError::SizeMismatch(a.n(), b.n()));
    }
    if a.open_count() != b.open_count() {
        return Ok(None);
    }
    let (key_a, label_a) = canonize(a);
    let (key_b, label_b) = canonize(b);
    if key_a != key_b {
        return Ok(None);
    }
    // a-point -> compact index -> canonical label -> compact index of b -> b-point
    let a_points: Vec<u32> = a.ground().iter().collect();
    let b_points: Vec<u32> = b.ground().iter().collect();
    let mut from_canonical = vec![0u32; label_b.len()];
    for (i, &l) in label_b.iter().enumerate() {
        from_canonical[l as usize] = b_points[i];
    }
    let map = PointMap::from_pairs(
        a_points
            .iter()
            .zip(&label_a)
            .map(|(&p, &l)| (p, from_canonical[l as usize])),
    );
    debug_assert_eq!(a.relabel(&map).as_ref(), Ok(b));
    Ok(Some(map))
}

/// Number of point permutations fixing the (normalized) topology.
pub fn count_automorphisms(t: &Topology) -> u64 {
    let t = t.normalize();
    let classes = Classes::of(&t);
    let mut count = 0;
    classes.for_each_labeling(|label| {
        // position -> point turns the labeling into a signature-preserving permutation
        let perm: Vec<u32> = (0..label.len())
            .map(|p| classes.order[label[p] as usize])
            .collect();
        if t.opens().iter().all(|&o| t.is_open(apply(o, &perm))) {
            count += 1;
        }
    });
    count
}
