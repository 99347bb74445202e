use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use qpartitions::combinatorics::{
    enumerate, enumerate_vectors, enumerated_series, partition_numbers, partitions,
    residue_classes, series_counts, statistic_distribution, weighted_count, Family, Partition,
    PartitionClass, StarPartition,
};
use qpartitions::theta::SeriesName;
use qpartitions::Error;

/// Number of partitions of `n` into parts from `allowed`, by a coin-change table.
fn count_with_parts(n: usize, allowed: impl Fn(usize) -> bool, distinct: bool) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in (1..=n).filter(|p| allowed(*p)) {
        if distinct {
            for s in (part..=n).rev() {
                ways[s] += ways[s - part];
            }
        } else {
            for s in part..=n {
                ways[s] += ways[s - part];
            }
        }
    }
    ways[n]
}

#[test]
fn class_sizes_match_counting_oracle() {
    for n in 0..=20 {
        assert_eq!(partitions(n, PartitionClass::All).len() as u64, count_with_parts(n, |_| true, false));
        assert_eq!(partitions(n, PartitionClass::Odd).len() as u64, count_with_parts(n, |p| p % 2 == 1, false));
        assert_eq!(partitions(n, PartitionClass::DistinctEven).len() as u64, count_with_parts(n, |p| p % 2 == 0, true));
        assert_eq!(partitions(n, PartitionClass::DistinctOdd).len() as u64, count_with_parts(n, |p| p % 2 == 1, true));
    }
}

#[test]
fn odd_parts_of_five() {
    let got: Vec<Vec<usize>> = partitions(5, PartitionClass::Odd)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    assert_eq!(got, vec![vec![5], vec![3, 1, 1], vec![1, 1, 1, 1, 1]]);
}

#[test]
fn crank_generating_function_at_five() {
    // coefficient of q^5 in f1 / ((zq; q)(q/z; q)) over the starred set
    let mut dist: BTreeMap<i64, i64> = BTreeMap::new();
    for s in enumerate(5, PartitionClass::Star) {
        *dist.entry(s.crank()).or_default() += s.weight();
    }
    assert_eq!(Partition::new(vec![3, 1, 1]).crank(), -1);
    let gf = qpartitions::ProductSpec::new()
        .eta(1, 1)
        .z_pochhammer(1, 1, 1, -1)
        .z_pochhammer(-1, 1, 1, -1)
        .expand_bivariate(6)
        .unwrap();
    let expected: BTreeMap<i64, i64> = gf
        .row(5)
        .unwrap()
        .iter()
        .map(|(m, c)| (*m, i64::try_from(c).unwrap()))
        .collect();
    dist.retain(|_, c| *c != 0);
    assert_eq!(dist, expected);
    // 7 partitions of 5, cranks symmetric
    assert_eq!(dist.values().sum::<i64>(), 7);
}

#[test]
fn empty_w2_vector() {
    let vs = enumerate_vectors(Family::W2, 0, false).unwrap();
    assert_eq!(vs.len(), 1);
    assert_eq!(vs[0].weight(), 1);
    assert_eq!(vs[0].statistic(), 0);
    assert_eq!(vs[0].render_components(), "[];[];[];[];[];[];[]");
}

#[test]
fn table_examples() {
    let vs = enumerate_vectors(Family::v(4), 3, false).unwrap();
    let find = |render: &str| vs.iter().find(|v| v.render_components() == render).unwrap();
    let v = find("[];[];[];[3];[];[];[]");
    assert_eq!((v.weight(), v.statistic()), (1, 2));
    let v = find("[2];[1];[];[];[];[];[]");
    assert_eq!((v.weight(), v.statistic()), (-1, 1));
    assert_eq!(weighted_count(Family::v(4), 3, 2, 5, false).unwrap(), BigInt::from(4));
}

#[test]
fn enumeration_agrees_with_generating_function() {
    for family in [Family::v(3), Family::v(6), Family::V { t: 2, h: 1 }, Family::W2] {
        let direct = enumerated_series(family, 9, false).unwrap();
        let gf = series_counts(family, 9).unwrap();
        assert_eq!(direct, gf, "{family}");
    }
}

#[test]
fn guardrail_refuses_large_sizes_unless_forced() {
    assert!(matches!(
        residue_classes(Family::v(4), 30, 5, false),
        Err(Error::EnumerationTooLarge { n: 30, .. })
    ));
    // forced on a family with few vectors at this size is still cheap
    let forced = statistic_distribution(Family::v(40), 25, true);
    assert!(forced.is_ok());
}

#[test]
fn c4_even_is_partition_numbers() {
    let c4 = SeriesName::C(4).build(61).unwrap();
    let p = partition_numbers(31);
    for (k, pk) in p.iter().enumerate() {
        assert_eq!(&c4.coeffs()[2 * k], pk);
        if 2 * k + 1 < 61 {
            assert_eq!(c4.coeffs()[2 * k + 1], BigInt::from(0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_new_normalizes(parts in prop::collection::vec(0usize..9, 0..10)) {
        let p = Partition::new(parts.clone());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.sum(), parts.iter().sum::<usize>());
        prop_assert!(PartitionClass::All.contains(&p));
    }

    #[test]
    fn generated_partitions_belong_to_their_class(n in 0usize..16) {
        for class in [PartitionClass::Odd, PartitionClass::DistinctEven, PartitionClass::DistinctOdd] {
            for p in partitions(n, class) {
                prop_assert!(class.contains(&p));
                prop_assert_eq!(p.sum(), n);
            }
        }
    }

    #[test]
    fn star_objects_have_declared_size(n in 0usize..12) {
        for s in enumerate(n, PartitionClass::Star) {
            prop_assert_eq!(s.size(), n);
            prop_assert_eq!(s.weight() == -1, s == StarPartition::One);
        }
    }

    #[test]
    fn vector_distribution_is_symmetric_and_totals_w(t in 1usize..7, n in 0usize..8) {
        let dist = statistic_distribution(Family::v(t), n, false).unwrap();
        for (m, c) in &dist {
            prop_assert_eq!(dist.get(&-m), Some(c));
            prop_assert!(*c >= BigInt::from(0));
        }
        let w = SeriesName::W(t).build(n + 1).unwrap();
        prop_assert_eq!(dist.values().sum::<BigInt>(), w.coeffs()[n].clone());
    }

    #[test]
    fn residue_classes_partition_the_total(t in 1usize..6, n in 0usize..7, m in 1usize..8) {
        let classes = residue_classes(Family::v(t), n, m, false).unwrap();
        let total: BigInt = statistic_distribution(Family::v(t), n, false).unwrap().values().sum();
        prop_assert_eq!(classes.iter().sum::<BigInt>(), total);
    }
}
