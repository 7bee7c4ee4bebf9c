//! Finite topologies on labeled points: the w-sum and its companion
//! operations, homeomorphism classes, exhaustive enumeration at small `n`,
//! and exact super-multiplicative lower bounds for the counting sequences.
//!
//! Counting code is generic over the integer type (see [`Count`]); the
//! aliases below fix it to arbitrary precision.

pub mod bounds;
pub mod canon;
pub mod count;
pub mod enumerate;
pub mod fixtures;
pub mod point_set;
pub mod report;
pub mod topology;
pub mod verify;

pub use bounds::{
    bound_range, consistency_check, ingest_bfile, max_product_bound, reports_to_csv, BfileError,
    BoundEngine, BoundReport, BoundSource, BoundsError, SeedTable, Violation,
};
pub use canon::{
    canonical_key, count_automorphisms, find_homeomorphism, is_homeomorphic, CanonError,
    CanonicalKey, PointSignature,
};
pub use count::{Count, CountRecord, CountSequence};
pub use enumerate::{
    census, count_all, enumerate_labeled, naive_enumerate_labeled, unlabeled_representatives,
    ClassCensus, EnumerateError, EnumerateOptions, PreorderMatrix, Preorders,
};
pub use fixtures::ReferenceCounts;
pub use point_set::{PointSet, UNIVERSE_WIDTH};
pub use report::Document;
pub use topology::{ClosedFamily, ParseTopologyError, PointMap, Topology, TopologyError};
pub use verify::{
    direct_sum_image_count, noncommutativity_witness, phi, verify_inequalities, verify_injectivity,
    verify_injectivity_t0, verify_labeled_injectivity, CountSource, InequalityReport,
    InjectivityReport, LabeledInjectivity, VerifyError,
};

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;
pub type BigCountRecord = CountRecord<BigCount>;
pub type BigSeedTable = SeedTable<BigCount>;
pub type BigBoundReport = BoundReport<BigCount>;
pub type BigReferenceCounts = ReferenceCounts<BigCount>;
