//! Exact counting values, generic over the integer type that holds them.

use std::fmt;
use std::str::FromStr;

use num_traits::{CheckedMul, FromPrimitive, One, Zero};
use serde::Serialize;

/// An exact, non-negative count. Implemented for the primitive unsigned
/// integers (products are checked for overflow) and for `BigUint`.
pub trait Count:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Zero
    + One
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + FromStr
        + Zero
        + One
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}

/// The four counting sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CountSequence {
    /// `T(n)`: topologies on `n` labeled points.
    #[serde(rename = "T")]
    Labeled,
    /// `f(n)`: homeomorphism classes on `n` points.
    #[serde(rename = "f")]
    Unlabeled,
    /// `T0(n)`: labeled T₀ topologies (labeled posets).
    #[serde(rename = "T0")]
    LabeledT0,
    /// `f0(n)`: unlabeled T₀ topologies (unlabeled posets).
    #[serde(rename = "f0")]
    UnlabeledT0,
}

impl CountSequence {
    pub const ALL: [CountSequence; 4] = [
        CountSequence::Labeled,
        CountSequence::Unlabeled,
        CountSequence::LabeledT0,
        CountSequence::UnlabeledT0,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            CountSequence::Labeled => "T",
            CountSequence::Unlabeled => "f",
            CountSequence::LabeledT0 => "T0",
            CountSequence::UnlabeledT0 => "f0",
        }
    }

    /// Catalog id of the reference sequence.
    pub fn catalog_id(self) -> &'static str {
        match self {
            CountSequence::Labeled => "A000798",
            CountSequence::Unlabeled => "A001930",
            CountSequence::LabeledT0 => "A001035",
            CountSequence::UnlabeledT0 => "A000112",
        }
    }
}

impl fmt::Display for CountSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for CountSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CountSequence::ALL
            .into_iter()
            .find(|seq| seq.symbol() == s || seq.catalog_id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown sequence `{s}` (expected T, f, T0 or f0)"))
    }
}

/// `T(n)`, `f(n)`, `T0(n)` and `f0(n)` for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: fmt::Display"))]
pub struct CountRecord<C> {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub labeled: C,
    #[serde(serialize_with = "decimal")]
    pub unlabeled: C,
    #[serde(serialize_with = "decimal")]
    pub labeled_t0: C,
    #[serde(serialize_with = "decimal")]
    pub unlabeled_t0: C,
}

impl<C: Count> CountRecord<C> {
    pub fn get(&self, seq: CountSequence) -> &C {
        match seq {
            CountSequence::Labeled => &self.labeled,
            CountSequence::Unlabeled => &self.unlabeled,
            CountSequence::LabeledT0 => &self.labeled_t0,
            CountSequence::UnlabeledT0 => &self.unlabeled_t0,
        }
    }

    /// Checks `labeled ≥ unlabeled ≥ 1` and that the T₀ counts do not
    /// exceed their unrestricted counterparts.
    pub fn is_consistent(&self) -> bool {
        self.labeled >= self.unlabeled
            && self.unlabeled >= C::one()
            && self.labeled_t0 <= self.labeled
            && self.unlabeled_t0 <= self.unlabeled
    }
}

/// Serializes any count as a decimal string, so big values stay exact.
pub(crate) fn decimal<S: serde::Serializer, C: fmt::Display>(
    value: &C,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub(crate) fn decimal_pair<S: serde::Serializer, C: fmt::Display>(
    value: &(C, C),
    serializer: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut tuple = serializer.serialize_tuple(2)?;
    tuple.serialize_element(&value.0.to_string())?;
    tuple.serialize_element(&value.1.to_string())?;
    tuple.end()
}

pub(crate) fn decimal_opt<S: serde::Serializer, C: fmt::Display>(
    value: &Option<C>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => serializer.collect_str(v),
        None => serializer.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_names_round_trip() {
        for seq in CountSequence::ALL {
            assert_eq!(seq.symbol().parse::<CountSequence>(), Ok(seq));
            assert_eq!(seq.catalog_id().parse::<CountSequence>(), Ok(seq));
        }
        assert!("F".parse::<CountSequence>().is_err());
    }

    #[test]
    fn record_serializes_counts_as_strings() {
        let rec = CountRecord::<u64> {
            n: 2,
            labeled: 4,
            unlabeled: 3,
            labeled_t0: 3,
            unlabeled_t0: 2,
        };
        assert!(rec.is_consistent());
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"n":2,"labeled":"4","unlabeled":"3","labeled_t0":"3","unlabeled_t0":"2"}"#
        );
    }
}
