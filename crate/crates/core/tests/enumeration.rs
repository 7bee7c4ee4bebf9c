use std::collections::BTreeSet;

use topocount::{
    canonical_key, census, count_all, count_automorphisms, enumerate_labeled,
    naive_enumerate_labeled, BigCount, BigReferenceCounts, CanonicalKey, CountRecord,
    CountSequence, EnumerateOptions, PreorderMatrix, Preorders, Topology,
};

fn key_multiset(ts: impl Iterator<Item = Topology>) -> Vec<CanonicalKey> {
    let mut keys: Vec<CanonicalKey> = ts.map(|t| canonical_key(&t)).collect();
    keys.sort();
    keys
}

#[test]
fn naive_oracle_agrees_with_preorder_enumeration() {
    for n in 0..=4 {
        let fast: BTreeSet<Topology> = enumerate_labeled(n).unwrap().collect();
        let naive: BTreeSet<Topology> = naive_enumerate_labeled(n).unwrap().collect();
        assert_eq!(fast, naive, "n={n}");
        assert_eq!(
            key_multiset(enumerate_labeled(n).unwrap()),
            key_multiset(naive_enumerate_labeled(n).unwrap())
        );
    }
}

#[test]
fn naive_oracle_counts() {
    let counts: Vec<usize> = (0..=4)
        .map(|n| naive_enumerate_labeled(n).unwrap().count())
        .collect();
    assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    let t0: Vec<usize> = (0..=4)
        .map(|n| {
            naive_enumerate_labeled(n)
                .unwrap()
                .filter(Topology::is_t0)
                .count()
        })
        .collect();
    assert_eq!(t0, vec![1, 1, 3, 19, 219]);
}

#[test]
fn enumeration_yields_no_duplicates() {
    for n in 0..=5 {
        let all: Vec<Topology> = enumerate_labeled(n).unwrap().collect();
        let distinct: BTreeSet<&Topology> = all.iter().collect();
        assert_eq!(all.len(), distinct.len());
    }
}

#[test]
fn preorders_and_topologies_round_trip() {
    for n in 0..=4 {
        let mut seen = BTreeSet::new();
        for p in Preorders::new(n).unwrap() {
            let t = p.to_topology();
            assert_eq!(PreorderMatrix::from_topology(&t), p);
            assert!(seen.insert(t.clone()), "two preorders gave {t}");
            assert_eq!(t.is_t0(), p.is_antisymmetric());
        }
    }
}

#[test]
fn counts_match_known_values() {
    let expected: [(u64, u64, u64, u64); 5] = [
        (1, 1, 1, 1),
        (1, 1, 1, 1),
        (4, 3, 3, 2),
        (29, 9, 19, 5),
        (355, 33, 219, 16),
    ];
    for (n, want) in expected.iter().enumerate() {
        let rec: CountRecord<u64> = count_all(n).unwrap();
        assert_eq!(
            (rec.labeled, rec.unlabeled, rec.labeled_t0, rec.unlabeled_t0),
            *want,
            "n={n}"
        );
        assert!(rec.is_consistent());
    }
}

#[test]
fn counts_match_reference_fixtures() {
    let refs = BigReferenceCounts::load();
    for n in 0..=6 {
        let rec: CountRecord<BigCount> = count_all(n).unwrap();
        assert_eq!(Some(rec), refs.record(n), "n={n}");
    }
}

#[test]
fn class_sizes_sum_to_labeled_count() {
    let factorial = |n: u64| (1..=n).product::<u64>();
    for n in 0..=5 {
        let c = census(n, EnumerateOptions::default()).unwrap();
        let mut total = 0;
        for (key, entry) in &c.classes {
            let aut = count_automorphisms(&key.representative());
            assert_eq!(factorial(n as u64) % aut, 0);
            assert_eq!(entry.labeled, factorial(n as u64) / aut, "class {key}");
            total += factorial(n as u64) / aut;
        }
        assert_eq!(total, c.labeled());
    }
}

#[test]
fn representatives_cover_each_class_once() {
    let c = census(4, EnumerateOptions::default()).unwrap();
    let reps = c.representatives();
    assert_eq!(reps.len(), 33);
    for (rep, key) in reps.iter().zip(c.classes.keys()) {
        assert_eq!(&canonical_key(rep), key);
    }
    let sorted: Vec<CanonicalKey> = reps.iter().map(canonical_key).collect();
    assert!(sorted.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn enumeration_order_is_deterministic() {
    let a: Vec<Topology> = enumerate_labeled(4).unwrap().collect();
    let b: Vec<Topology> = enumerate_labeled(4).unwrap().collect();
    assert_eq!(a, b);
}

#[test]
fn sequence_lookup_matches_record_fields() {
    let rec: CountRecord<u64> = count_all(3).unwrap();
    let values: Vec<u64> = CountSequence::ALL.iter().map(|&s| *rec.get(s)).collect();
    assert_eq!(values, vec![29, 9, 19, 5]);
}
