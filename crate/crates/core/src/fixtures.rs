//! Reference b-files for the four counting sequences, shipped in `data/`.

use crate::bounds::{ingest_bfile, SeedTable};
use crate::count::{Count, CountRecord, CountSequence};

pub fn reference_bfile(seq: CountSequence) -> &'static str {
    match seq {
        CountSequence::Labeled => include_str!("../data/b000798.txt"),
        CountSequence::Unlabeled => include_str!("../data/b001930.txt"),
        CountSequence::LabeledT0 => include_str!("../data/b001035.txt"),
        CountSequence::UnlabeledT0 => include_str!("../data/b000112.txt"),
    }
}

pub fn reference_table<C: Count>(seq: CountSequence) -> SeedTable<C> {
    ingest_bfile(reference_bfile(seq), seq.catalog_id()).expect("shipped fixtures parse")
}

/// All four reference tables together.
pub struct ReferenceCounts<C> {
    tables: [SeedTable<C>; 4],
}

impl<C: Count> ReferenceCounts<C> {
    pub fn load() -> Self {
        ReferenceCounts {
            tables: CountSequence::ALL.map(reference_table),
        }
    }

    pub fn table(&self, seq: CountSequence) -> &SeedTable<C> {
        &self.tables[seq as usize]
    }

    /// The four values at `n`, if every table reaches that far.
    pub fn record(&self, n: usize) -> Option<CountRecord<C>> {
        let get = |seq| self.table(seq).get(n).cloned();
        Some(CountRecord {
            n,
            labeled: get(CountSequence::Labeled)?,
            unlabeled: get(CountSequence::Unlabeled)?,
            labeled_t0: get(CountSequence::LabeledT0)?,
            unlabeled_t0: get(CountSequence::UnlabeledT0)?,
        })
    }
}
