use std::collections::BTreeSet;

use freecommutant_core::partitions::{
    self, compose_interval, enumerate, enumerate_by_filter, expansion_maps, join, joins_to_full,
    Partition, PartitionKind,
};
use freecommutant_core::Error;
use proptest::prelude::*;

const KINDS: [PartitionKind; 5] = [
    PartitionKind::All,
    PartitionKind::NonCrossing,
    PartitionKind::Interval,
    PartitionKind::IntervalMin2,
    PartitionKind::NonCrossingIrreducible,
];

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

#[test]
fn set_partition_counts_are_bell_numbers() {
    for n in 1..=9 {
        assert_eq!(
            enumerate(n, PartitionKind::All).unwrap().len(),
            bell(n),
            "n = {n}"
        );
    }
}

#[test]
fn direct_generation_matches_filtering() {
    for n in 1..=8 {
        for kind in KINDS {
            let mut direct = enumerate(n, kind).unwrap();
            let mut filtered = enumerate_by_filter(n, kind).unwrap();
            direct.sort_by_key(|p| p.blocks().to_vec());
            filtered.sort_by_key(|p| p.blocks().to_vec());
            assert_eq!(direct, filtered, "{kind:?}({n})");
            assert!(direct.iter().all(|p| p.is_kind(kind)));
        }
    }
}

#[test]
fn generation_has_no_duplicates() {
    for kind in [PartitionKind::NonCrossing, PartitionKind::Interval] {
        let list = enumerate(10, kind).unwrap();
        let unique: BTreeSet<_> = list.iter().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(unique.len(), list.len());
    }
}

#[test]
fn size_limits_are_enforced() {
    assert!(matches!(
        enumerate(14, PartitionKind::All),
        Err(Error::SizeLimit { .. })
    ));
    assert!(matches!(
        enumerate(17, PartitionKind::NonCrossing),
        Err(Error::SizeLimit { .. })
    ));
    assert!(enumerate(0, PartitionKind::NonCrossing).is_err());
}

#[test]
fn composition_with_interval_partitions_stays_noncrossing() {
    for n in 1..=7 {
        for sigma in enumerate(n, PartitionKind::Interval).unwrap() {
            for pi in enumerate(sigma.num_blocks(), PartitionKind::NonCrossing).unwrap() {
                let rho = compose_interval(&pi, &sigma).unwrap();
                assert!(rho.is_noncrossing(), "{pi} applied to {sigma}");
                assert_eq!(rho.num_blocks(), pi.num_blocks());
            }
        }
    }
}

#[test]
fn iota_inverts_phi() {
    for n in 1..=6usize {
        for mask in 0u32..1 << n {
            let b: BTreeSet<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
            let maps = expansion_maps(n, &b).unwrap();
            assert_eq!(maps.expanded_len(), n + b.len());
            for j in 1..=n {
                let fibre = maps.iota(&BTreeSet::from([j]));
                assert_eq!(fibre.len(), if b.contains(&j) { 2 } else { 1 });
                assert!(fibre.iter().all(|&t| maps.phi(t) == j));
            }
        }
    }
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels))
    })
}

fn pair_strategy() -> impl Strategy<Value = (Partition, Partition)> {
    (1..=9usize).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n),
            proptest::collection::vec(0..n, n),
        )
            .prop_map(|(a, b)| (Partition::from_labels(&a), Partition::from_labels(&b)))
    })
}

proptest! {
    #[test]
    fn join_is_commutative_and_idempotent((p, q) in pair_strategy()) {
        let pq = join(&p, &q).unwrap();
        prop_assert_eq!(&pq, &join(&q, &p).unwrap());
        prop_assert_eq!(&join(&p, &p).unwrap(), &p);
        prop_assert_eq!(joins_to_full(&p, &q).unwrap(), pq.num_blocks() == 1);
    }

    #[test]
    fn join_is_an_upper_bound((p, q) in pair_strategy()) {
        let pq = join(&p, &q).unwrap();
        for block in p.blocks().iter().chain(q.blocks()) {
            let host = pq.block_of(block[0]).unwrap();
            prop_assert!(block.iter().all(|e| host.contains(e)));
        }
        prop_assert_eq!(join(&p, &Partition::one(p.n())).unwrap(), Partition::one(p.n()));
        prop_assert_eq!(join(&p, &Partition::singletons(p.n())).unwrap(), p);
    }

    #[test]
    fn partitions_are_canonical(p in partition_strategy(10)) {
        let again = Partition::from_blocks(p.blocks().to_vec()).unwrap();
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(Partition::from_labels(&p.block_labels()), p.clone());
        prop_assert_eq!(p.is_noncrossing(), partitions::is_noncrossing(&p));
    }

    #[test]
    fn serde_round_trip(p in partition_strategy(8)) {
        let json = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }
}
