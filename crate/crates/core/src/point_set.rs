//! Subsets of a labeled point universe encoded as bit masks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Maximum number of labeled points a [`PointSet`] can address.
pub const UNIVERSE_WIDTH: u32 = 32;

/// A set of labeled points; bit `i` is set iff point `i` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_mask(mask: u32) -> Self {
        PointSet(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    /// The points `0..n`. Panics if `n` exceeds the universe width.
    pub fn prefix(n: usize) -> Self {
        assert!(
            n as u32 <= UNIVERSE_WIDTH,
            "{n} points exceed the universe width"
        );
        if n == 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(point: u32) -> Self {
        assert!(point < UNIVERSE_WIDTH, "point {point} outside the universe");
        PointSet(1 << point)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, point: u32) -> bool {
        point < UNIVERSE_WIDTH && self.0 & (1 << point) != 0
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: PointSet) -> Self {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: PointSet) -> Self {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: PointSet) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn with(self, point: u32) -> Self {
        self | PointSet::singleton(point)
    }

    /// Member points in ascending order.
    pub fn iter(self) -> Points {
        Points(self.0)
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> PointSet {
        PointSet(!self.0)
    }
}

impl FromIterator<u32> for PointSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter().fold(PointSet::EMPTY, PointSet::with)
    }
}

impl IntoIterator for PointSet {
    type Item = u32;
    type IntoIter = Points;
    fn into_iter(self) -> Points {
        self.iter()
    }
}

/// Iterator over the points of a [`PointSet`].
#[derive(Clone, Debug)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Lowercase hex of the mask, the form used in topology text lines.
impl fmt::LowerHex for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}
