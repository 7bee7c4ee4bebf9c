//! Finite topologies on labeled points and the pointwise operations on them:
//! traces on an open set, shifts, co-topologies, direct sums and w-sums.
//!
//! A [`Topology`] carries its ground set explicitly, so sub-topologies and
//! shifts keep the labels of the space they came from. Use
//! [`Topology::normalize`] to compact labels to `0..n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::point_set::{PointSet, UNIVERSE_WIDTH};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("required open set {0:?} is missing")]
    W1Missing(PointSet),
    #[error("union of {0:?} and {1:?} is not open")]
    W2Violation(PointSet, PointSet),
    #[error("intersection of {0:?} and {1:?} is not open")]
    W3Violation(PointSet, PointSet),
    #[error("{set:?} is not a subset of the ground set {ground:?}")]
    NotSubset { set: PointSet, ground: PointSet },
    #[error("{0:?} is not an open set")]
    NotOpen(PointSet),
    #[error("point sets {0:?} and {1:?} are not disjoint")]
    NotDisjoint(PointSet, PointSet),
    #[error("points {0} and {1} share the image {2}")]
    NotInjective(u32, u32, u32),
    #[error("point {0} has no image")]
    Unmapped(u32),
    #[error("image {0} lies outside the {UNIVERSE_WIDTH}-point universe")]
    WidthExceeded(u32),
}

/// A topology: a ground set plus an ascending, duplicate-free family of
/// open sets that contains the empty set and the ground set and is closed
/// under pairwise union and intersection.
///
/// Equality is representation equality. Homeomorphism is decided in
/// [`crate::canon`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Topology {
    ground: PointSet,
    opens: Vec<PointSet>,
}

/// A union- and intersection-closed family with a least and a greatest
/// member. This is what an inverse shift produces: its floor is the
/// adjoined set, so in general it is not a topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFamily {
    floor: PointSet,
    ceiling: PointSet,
    members: Vec<PointSet>,
}

impl ClosedFamily {
    pub fn floor(&self) -> PointSet {
        self.floor
    }

    pub fn ceiling(&self) -> PointSet {
        self.ceiling
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn contains(&self, set: PointSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Re-checks the closure invariants; used by tests.
    pub fn is_closed(&self) -> bool {
        let bounded = self.contains(self.floor)
            && self.contains(self.ceiling)
            && self
                .members
                .iter()
                .all(|m| self.floor.is_subset(*m) && m.is_subset(self.ceiling));
        bounded
            && self.members.iter().all(|&a| {
                self.members
                    .iter()
                    .all(|&b| self.contains(a | b) && self.contains(a & b))
            })
    }
}

/// A map from points to points, used to relabel topologies.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointMap(BTreeMap<u32, u32>);

impl PointMap {
    pub fn identity(ground: PointSet) -> Self {
        PointMap(ground.iter().map(|p| (p, p)).collect())
    }

    /// Point `i` maps to `images[i]`.
    pub fn from_images(images: &[u32]) -> Self {
        PointMap((0u32..).zip(images.iter().copied()).collect())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        PointMap(pairs.into_iter().collect())
    }

    /// Moves every point of `ground` up by `offset`.
    pub fn shift(ground: PointSet, offset: u32) -> Self {
        PointMap(ground.iter().map(|p| (p, p + offset)).collect())
    }

    pub fn get(&self, point: u32) -> Option<u32> {
        self.0.get(&point).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|(k, v)| k == v)
    }

    /// Image of a set of points; `None` if some point is unmapped.
    pub fn image(&self, set: PointSet) -> Option<PointSet> {
        let mut out = PointSet::EMPTY;
        for p in set {
            let q = self.get(p)?;
            if q >= UNIVERSE_WIDTH {
                return None;
            }
            out = out.with(q);
        }
        Some(out)
    }
}

impl Topology {
    /// Checks the axioms on an arbitrary family and returns the normalized
    /// (sorted, deduplicated) topology.
    ///
    /// Violations are reported in a fixed order: non-subsets first, then the
    /// first failing pair for unions, then for intersections (pairs taken in
    /// ascending mask order), then a missing empty or ground set.
    pub fn validate(
        family: impl IntoIterator<Item = PointSet>,
        ground: PointSet,
    ) -> Result<Topology, TopologyError> {
        let mut opens: Vec<PointSet> = family.into_iter().collect();
        opens.sort_unstable();
        opens.dedup();
        if let Some(&set) = opens.iter().find(|o| !o.is_subset(ground)) {
            return Err(TopologyError::NotSubset { set, ground });
        }
        let t = Topology { ground, opens };
        for (i, &a) in t.opens.iter().enumerate() {
            for &b in &t.opens[i + 1..] {
                if !t.is_open(a | b) {
                    return Err(TopologyError::W2Violation(a, b));
                }
            }
        }
        for (i, &a) in t.opens.iter().enumerate() {
            for &b in &t.opens[i + 1..] {
                if !t.is_open(a & b) {
                    return Err(TopologyError::W3Violation(a, b));
                }
            }
        }
        for required in [PointSet::EMPTY, ground] {
            if !t.is_open(required) {
                return Err(TopologyError::W1Missing(required));
            }
        }
        Ok(t)
    }

    /// Builds a topology from a family already known to satisfy the axioms.
    pub(crate) fn from_family_unchecked(ground: PointSet, mut opens: Vec<PointSet>) -> Topology {
        opens.sort_unstable();
        opens.dedup();
        debug_assert!(Topology::validate(opens.iter().copied(), ground).is_ok());
        Topology { ground, opens }
    }

    /// The only topology on the empty ground set, `{∅}`.
    pub fn empty() -> Topology {
        Topology {
            ground: PointSet::EMPTY,
            opens: vec![PointSet::EMPTY],
        }
    }

    pub fn indiscrete(ground: PointSet) -> Topology {
        Topology::from_family_unchecked(ground, vec![PointSet::EMPTY, ground])
    }

    /// Every subset of `ground` is open.
    pub fn discrete(ground: PointSet) -> Topology {
        let points: Vec<u32> = ground.iter().collect();
        let opens = (0u64..1 << points.len())
            .map(|bits| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect()
            })
            .collect();
        Topology::from_family_unchecked(ground, opens)
    }

    pub fn ground(&self) -> PointSet {
        self.ground
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Number of points (the cardinality of the ground set).
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Number of open sets.
    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    fn require_open(&self, x: PointSet) -> Result<(), TopologyError> {
        if self.is_open(x) {
            Ok(())
        } else {
            Err(TopologyError::NotOpen(x))
        }
    }

    /// `τ ∩ X`: the trace of every open on the open set `x`, a topology on `x`.
    pub fn intersection_topology(&self, x: PointSet) -> Result<Topology, TopologyError> {
        self.require_open(x)?;
        let opens = self.opens.iter().map(|&o| o & x).collect();
        Ok(Topology::from_family_unchecked(x, opens))
    }

    /// `τ − X`: every open with the open set `x` removed, a topology on
    /// `ground \ x`.
    pub fn shift(&self, x: PointSet) -> Result<Topology, TopologyError> {
        self.require_open(x)?;
        let opens = self.opens.iter().map(|&o| o - x).collect();
        Ok(Topology::from_family_unchecked(self.ground - x, opens))
    }

    /// `τ + Y`: every open joined with a set `y` disjoint from the ground.
    pub fn inverse_shift(&self, y: PointSet) -> Result<ClosedFamily, TopologyError> {
        if !y.is_disjoint(self.ground) {
            return Err(TopologyError::NotDisjoint(self.ground, y));
        }
        // `o | y` is strictly monotone in `o` here, so the order is kept.
        let members = self.opens.iter().map(|&o| o | y).collect();
        Ok(ClosedFamily {
            floor: y,
            ceiling: self.ground | y,
            members,
        })
    }

    /// The family of complements of the opens, again a topology on the
    /// same ground set.
    pub fn co_topology(&self) -> Topology {
        let opens = self.opens.iter().map(|&o| self.ground - o).collect();
        Topology::from_family_unchecked(self.ground, opens)
    }

    /// Whether every pair of distinct points is told apart by some open
    /// containing exactly one of them.
    pub fn is_t0(&self) -> bool {
        // Two points are inseparable iff their minimal open neighbourhoods agree.
        let mut neighbourhoods: Vec<PointSet> =
            self.ground.iter().map(|p| self.minimal_open(p)).collect();
        neighbourhoods.sort_unstable();
        neighbourhoods.windows(2).all(|w| w[0] != w[1])
    }

    /// Intersection of all opens containing `point`.
    pub fn minimal_open(&self, point: u32) -> PointSet {
        self.opens
            .iter()
            .filter(|o| o.contains(point))
            .fold(self.ground, |acc, &o| acc & o)
    }

    /// Direct sum: all unions `O1 ∪ O2`. Commutative.
    pub fn direct_sum(&self, other: &Topology) -> Result<Topology, TopologyError> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(TopologyError::NotDisjoint(self.ground, other.ground));
        }
        let opens = self
            .opens
            .iter()
            .flat_map(|&a| other.opens.iter().map(move |&b| a | b))
            .collect();
        Ok(Topology::from_family_unchecked(
            self.ground | other.ground,
            opens,
        ))
    }

    /// The w-sum `τ1 ∪ (τ2 + E1)`: the opens of `self`, plus every open of
    /// `other` joined with the whole ground of `self`. Not commutative.
    pub fn w_sum(&self, other: &Topology) -> Result<Topology, TopologyError> {
        let lifted = other.inverse_shift(self.ground)?;
        let mut opens = self.opens.clone();
        opens.extend_from_slice(lifted.members());
        Ok(Topology::from_family_unchecked(
            self.ground | other.ground,
            opens,
        ))
    }

    /// Splits `τ` along the open set `e1` into `(τ ∩ E1, τ − E1)`. For a
    /// w-sum with `e1` the ground of the first summand this returns both
    /// summands unchanged.
    pub fn recover_components(&self, e1: PointSet) -> Result<(Topology, Topology), TopologyError> {
        Ok((self.intersection_topology(e1)?, self.shift(e1)?))
    }

    pub fn relabel(&self, map: &PointMap) -> Result<Topology, TopologyError> {
        let mut owner: BTreeMap<u32, u32> = BTreeMap::new();
        for p in self.ground {
            let q = map.get(p).ok_or(TopologyError::Unmapped(p))?;
            if q >= UNIVERSE_WIDTH {
                return Err(TopologyError::WidthExceeded(q));
            }
            if let Some(&prev) = owner.get(&q) {
                return Err(TopologyError::NotInjective(prev, p, q));
            }
            owner.insert(q, p);
        }
        let image = |s: PointSet| map.image(s).expect("every ground point is mapped");
        let opens = self.opens.iter().map(|&o| image(o)).collect();
        Ok(Topology::from_family_unchecked(image(self.ground), opens))
    }

    /// Relabels the ground points to `0..n`, keeping their numeric order.
    pub fn normalize(&self) -> Topology {
        if self.ground == PointSet::prefix(self.n()) {
            return self.clone();
        }
        let map = PointMap::from_pairs(self.ground.iter().zip(0u32..));
        self.relabel(&map).expect("compaction is injective")
    }

    pub fn is_normalized(&self) -> bool {
        self.ground == PointSet::prefix(self.n())
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology({self})")
    }
}

/// Text form: `n=<int>;ground=<hex>;opens=<hex>,<hex>,...`, lowercase hex,
/// opens ascending.
impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};ground={:x};opens=", self.n(), self.ground)?;
        for (i, o) in self.opens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o:x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseTopologyError {
    #[error("malformed topology line: {0}")]
    Malformed(String),
    #[error("declared n={declared} but the ground set has {actual} points")]
    CountMismatch { declared: usize, actual: usize },
    #[error("opens are not strictly ascending")]
    Unordered,
    #[error(transparent)]
    Invalid(#[from] TopologyError),
}

impl FromStr for Topology {
    type Err = ParseTopologyError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let malformed = || ParseTopologyError::Malformed(line.to_string());
        let mut fields = line.trim().split(';');
        let mut field = |key: &str| {
            fields
                .next()
                .and_then(|f| f.strip_prefix(key))
                .and_then(|f| f.strip_prefix('='))
                .ok_or_else(malformed)
        };
        let n: usize = field("n")?.parse().map_err(|_| malformed())?;
        let ground = parse_hex(field("ground")?).ok_or_else(malformed)?;
        let opens = field("opens")?
            .split(',')
            .map(|s| parse_hex(s).ok_or_else(malformed))
            .collect::<Result<Vec<_>, _>>()?;
        if fields.next().is_some() {
            return Err(malformed());
        }
        if ground.len() != n {
            return Err(ParseTopologyError::CountMismatch {
                declared: n,
                actual: ground.len(),
            });
        }
        if opens.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ParseTopologyError::Unordered);
        }
        Ok(Topology::validate(opens, ground)?)
    }
}

fn parse_hex(s: &str) -> Option<PointSet> {
    if s.is_empty() || s.bytes().any(|b| b.is_ascii_uppercase()) {
        return None;
    }
    u32::from_str_radix(s, 16).ok().map(PointSet::from_mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[u32]) -> PointSet {
        points.iter().copied().collect()
    }

    fn topo(ground: &[u32], opens: &[&[u32]]) -> Topology {
        Topology::validate(opens.iter().map(|o| set(o)), set(ground)).unwrap()
    }

    fn chain01() -> Topology {
        topo(&[0, 1], &[&[], &[0], &[0, 1]])
    }

    #[test]
    fn validate_examples() {
        let indiscrete = topo(&[0, 1], &[&[], &[0, 1]]);
        assert_eq!(indiscrete, Topology::indiscrete(set(&[0, 1])));
        assert_eq!(
            Topology::validate([set(&[]), set(&[0]), set(&[1])], set(&[0, 1])),
            Err(TopologyError::W2Violation(set(&[0]), set(&[1])))
        );
        assert_eq!(chain01().opens(), &[set(&[]), set(&[0]), set(&[0, 1])]);
        assert_eq!(
            Topology::validate([set(&[0]), set(&[0, 1])], set(&[0, 1])),
            Err(TopologyError::W1Missing(PointSet::EMPTY))
        );
    }

    #[test]
    fn validate_error_paths() {
        assert_eq!(
            Topology::validate([set(&[]), set(&[0])], set(&[0, 1])),
            Err(TopologyError::W1Missing(set(&[0, 1])))
        );
        assert_eq!(
            Topology::validate([set(&[]), set(&[2]), set(&[0, 1])], set(&[0, 1])),
            Err(TopologyError::NotSubset {
                set: set(&[2]),
                ground: set(&[0, 1])
            })
        );
        let family = [set(&[]), set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])];
        assert_eq!(
            Topology::validate(family, set(&[0, 1, 2])),
            Err(TopologyError::W3Violation(set(&[0, 1]), set(&[1, 2])))
        );
        // unsorted input with duplicates is normalized
        let t = Topology::validate([set(&[0, 1]), set(&[]), set(&[0]), set(&[0])], set(&[0, 1]));
        assert_eq!(t.unwrap(), chain01());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            chain01().intersection_topology(set(&[0])).unwrap(),
            topo(&[0], &[&[], &[0]])
        );
        let ind = Topology::indiscrete(set(&[0, 1]));
        assert_eq!(ind.intersection_topology(set(&[0, 1])).unwrap(), ind);
        let chain3 = topo(&[0, 1, 2], &[&[], &[0], &[0, 1], &[0, 1, 2]]);
        assert_eq!(
            chain3.intersection_topology(set(&[0, 1])).unwrap(),
            chain01()
        );
        assert_eq!(
            chain01().intersection_topology(set(&[1])),
            Err(TopologyError::NotOpen(set(&[1])))
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            chain01().shift(set(&[0])).unwrap(),
            topo(&[1], &[&[], &[1]])
        );
        assert_eq!(chain01().shift(PointSet::EMPTY).unwrap(), chain01());
        assert_eq!(chain01().shift(set(&[0, 1])).unwrap(), Topology::empty());
        assert_eq!(
            chain01().shift(set(&[1])),
            Err(TopologyError::NotOpen(set(&[1])))
        );
    }

    #[test]
    fn inverse_shift_examples() {
        let point = topo(&[0], &[&[], &[0]]);
        let fam = point.inverse_shift(set(&[1])).unwrap();
        assert_eq!(fam.members(), &[set(&[1]), set(&[0, 1])]);
        assert_eq!(fam.floor(), set(&[1]));
        assert_eq!(fam.ceiling(), set(&[0, 1]));
        assert!(fam.is_closed());

        let fam = chain01().inverse_shift(PointSet::EMPTY).unwrap();
        assert_eq!(fam.members(), chain01().opens());
        assert_eq!(fam.floor(), PointSet::EMPTY);

        let fam = Topology::indiscrete(set(&[0, 1]))
            .inverse_shift(set(&[2]))
            .unwrap();
        assert_eq!(fam.members(), &[set(&[2]), set(&[0, 1, 2])]);

        assert!(matches!(
            chain01().inverse_shift(set(&[1, 2])),
            Err(TopologyError::NotDisjoint(..))
        ));
    }

    #[test]
    fn co_topology_examples() {
        assert_eq!(
            chain01().co_topology(),
            topo(&[0, 1], &[&[], &[1], &[0, 1]])
        );
        let ind = Topology::indiscrete(set(&[0, 1]));
        assert_eq!(ind.co_topology(), ind);
        let disc = Topology::discrete(set(&[0, 1]));
        assert_eq!(disc.co_topology(), disc);
        assert_eq!(chain01().co_topology().co_topology(), chain01());
    }

    #[test]
    fn t0_examples() {
        assert!(!Topology::indiscrete(set(&[0, 1])).is_t0());
        assert!(chain01().is_t0());
        assert!(Topology::empty().is_t0());
        assert!(Topology::indiscrete(set(&[4])).is_t0());
        assert!(Topology::discrete(set(&[0, 1, 2])).is_t0());
    }

    #[test]
    fn direct_sum_examples() {
        let a = topo(&[0], &[&[], &[0]]);
        let b = topo(&[1], &[&[], &[1]]);
        assert_eq!(a.direct_sum(&b).unwrap(), Topology::discrete(set(&[0, 1])));
        assert_eq!(chain01().direct_sum(&Topology::empty()).unwrap(), chain01());
        let ind = Topology::indiscrete(set(&[0, 1]));
        let c = topo(&[2], &[&[], &[2]]);
        let sum = ind.direct_sum(&c).unwrap();
        assert_eq!(sum, topo(&[0, 1, 2], &[&[], &[2], &[0, 1], &[0, 1, 2]]));
        assert_eq!(sum, c.direct_sum(&ind).unwrap());
        assert!(matches!(
            a.direct_sum(&a),
            Err(TopologyError::NotDisjoint(..))
        ));
    }

    #[test]
    fn w_sum_examples() {
        let a = topo(&[0], &[&[], &[0]]);
        let b = topo(&[1], &[&[], &[1]]);
        assert_eq!(a.w_sum(&b).unwrap(), chain01());

        let ind = Topology::indiscrete(set(&[0, 1]));
        let c = topo(&[2], &[&[], &[2]]);
        assert_eq!(
            ind.w_sum(&c).unwrap(),
            topo(&[0, 1, 2], &[&[], &[0, 1], &[0, 1, 2]])
        );
        assert_eq!(
            c.w_sum(&ind).unwrap(),
            topo(&[0, 1, 2], &[&[], &[2], &[0, 1, 2]])
        );

        assert_eq!(chain01().w_sum(&Topology::empty()).unwrap(), chain01());
        assert!(matches!(a.w_sum(&a), Err(TopologyError::NotDisjoint(..))));
    }

    #[test]
    fn recover_components_examples() {
        let (left, right) = chain01().recover_components(set(&[0])).unwrap();
        assert_eq!(left, topo(&[0], &[&[], &[0]]));
        assert_eq!(right, topo(&[1], &[&[], &[1]]));

        let (left, right) = chain01().recover_components(PointSet::EMPTY).unwrap();
        assert_eq!(left, Topology::empty());
        assert_eq!(right, chain01());

        let t = topo(&[0, 1, 2], &[&[], &[0, 1], &[0, 1, 2]]);
        let (left, right) = t.recover_components(set(&[0, 1])).unwrap();
        assert_eq!(left, Topology::indiscrete(set(&[0, 1])));
        assert_eq!(right, topo(&[2], &[&[], &[2]]));
    }

    #[test]
    fn relabel_examples() {
        let swap = PointMap::from_images(&[1, 0]);
        assert_eq!(
            chain01().relabel(&swap).unwrap(),
            topo(&[0, 1], &[&[], &[1], &[0, 1]])
        );
        assert_eq!(
            chain01()
                .relabel(&PointMap::identity(set(&[0, 1])))
                .unwrap(),
            chain01()
        );
        let point = topo(&[0], &[&[], &[0]]);
        assert_eq!(
            point.relabel(&PointMap::from_images(&[5])).unwrap(),
            topo(&[5], &[&[], &[5]])
        );
    }

    #[test]
    fn relabel_errors() {
        assert_eq!(
            chain01().relabel(&PointMap::from_images(&[3, 3])),
            Err(TopologyError::NotInjective(0, 1, 3))
        );
        assert_eq!(
            chain01().relabel(&PointMap::from_images(&[0, 32])),
            Err(TopologyError::WidthExceeded(32))
        );
        assert_eq!(
            chain01().relabel(&PointMap::from_images(&[0])),
            Err(TopologyError::Unmapped(1))
        );
    }

    #[test]
    fn normalize_examples() {
        let t = topo(&[5], &[&[], &[5]]);
        assert_eq!(t.normalize(), topo(&[0], &[&[], &[0]]));
        assert_eq!(chain01().normalize(), chain01());
        let t = topo(&[1, 3], &[&[], &[1], &[1, 3]]);
        assert_eq!(t.normalize(), chain01());
        assert_eq!(t.normalize().normalize(), t.normalize());
    }

    #[test]
    fn text_form() {
        let t = topo(&[0, 1, 2], &[&[], &[0, 1], &[0, 1, 2]]);
        assert_eq!(t.to_string(), "n=3;ground=7;opens=0,3,7");
        assert_eq!("n=3;ground=7;opens=0,3,7".parse::<Topology>().unwrap(), t);
        assert_eq!(Topology::empty().to_string(), "n=0;ground=0;opens=0");
        assert_eq!(
            "n=0;ground=0;opens=0".parse::<Topology>().unwrap(),
            Topology::empty()
        );
        let wide = Topology::indiscrete(set(&[4, 6]));
        assert_eq!(wide.to_string(), "n=2;ground=50;opens=0,50");
    }

    #[test]
    fn text_form_rejects_bad_lines() {
        assert!(matches!(
            "n=2;ground=7;opens=0,7".parse::<Topology>(),
            Err(ParseTopologyError::CountMismatch { .. })
        ));
        assert_eq!(
            "n=2;ground=3;opens=3,0".parse::<Topology>(),
            Err(ParseTopologyError::Unordered)
        );
        assert!("n=2;ground=3;opens=0,1,2,3".parse::<Topology>().is_ok());
        assert_eq!(
            "n=2;ground=3;opens=0,1".parse::<Topology>(),
            Err(ParseTopologyError::Invalid(TopologyError::W1Missing(set(
                &[0, 1]
            ))))
        );
        assert!("n=1;ground=A;opens=0,a".parse::<Topology>().is_err());
        assert!("ground=1;n=1;opens=0,1".parse::<Topology>().is_err());
        assert!("n=1;ground=1;opens=0,1;extra=2"
            .parse::<Topology>()
            .is_err());
    }
}
