use std::fmt;

use serde::Serialize;

/// An integer partition, parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into non-increasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts, `sigma(lambda)`.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts strictly larger than the number of ones.
    pub fn mu(&self) -> usize {
        let ones = self.ones();
        self.parts.iter().filter(|&&p| p > ones).count()
    }

    /// Andrews-Garvan crank: the largest part when there are no ones,
    /// otherwise `mu - (number of ones)`. The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        match self.ones() {
            0 => self.largest() as i64,
            ones => self.mu() as i64 - ones as i64,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PartitionClass {
    /// All partitions.
    All,
    /// Partitions into odd parts.
    Odd,
    /// Partitions into distinct even parts.
    DistinctEven,
    /// Partitions into distinct odd parts.
    DistinctOdd,
    /// All partitions, with the size-1 partition replaced by three tagged copies.
    Star,
}

impl PartitionClass {
    pub fn contains(&self, p: &Partition) -> bool {
        let distinct = p.parts.windows(2).all(|w| w[0] != w[1]);
        match self {
            PartitionClass::All | PartitionClass::Star => true,
            PartitionClass::Odd => p.parts.iter().all(|x| x % 2 == 1),
            PartitionClass::DistinctEven => distinct && p.parts.iter().all(|x| x % 2 == 0),
            PartitionClass::DistinctOdd => distinct && p.parts.iter().all(|x| x % 2 == 1),
        }
    }

    fn rules(&self) -> (Option<usize>, bool) {
        // (required parity of parts, distinct parts)
        match self {
            PartitionClass::All | PartitionClass::Star => (None, false),
            PartitionClass::Odd => (Some(1), false),
            PartitionClass::DistinctEven => (Some(0), true),
            PartitionClass::DistinctOdd => (Some(1), true),
        }
    }
}

/// An element of the starred partition set: an ordinary partition, or one of
/// the three tagged objects of size 1 that stand in for the partition `(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StarPartition {
    Ordinary(Partition),
    /// The tagged `1`: weight -1, crank 0.
    One,
    /// `1*`: weight +1, crank +1.
    OneStar,
    /// `1**`: weight +1, crank -1.
    OneStarStar,
}

impl StarPartition {
    pub fn weight(&self) -> i64 {
        match self {
            StarPartition::One => -1,
            _ => 1,
        }
    }

    /// `c*`: the ordinary crank on ordinary partitions.
    pub fn crank(&self) -> i64 {
        match self {
            StarPartition::Ordinary(p) => p.crank(),
            StarPartition::One => 0,
            StarPartition::OneStar => 1,
            StarPartition::OneStarStar => -1,
        }
    }

    /// `sigma*`: the sum of parts; 1 for every tagged object.
    pub fn size(&self) -> usize {
        match self {
            StarPartition::Ordinary(p) => p.sum(),
            _ => 1,
        }
    }

    /// Number of parts; each tagged object counts as one part.
    pub fn len(&self) -> usize {
        match self {
            StarPartition::Ordinary(p) => p.len(),
            _ => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_ordinary(&self) -> Option<&Partition> {
        match self {
            StarPartition::Ordinary(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for StarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarPartition::Ordinary(p) => p.fmt(f),
            StarPartition::One => write!(f, "[1]"),
            StarPartition::OneStar => write!(f, "[1*]"),
            StarPartition::OneStarStar => write!(f, "[1**]"),
        }
    }
}

/// All ordinary partitions of `n` in `class`, largest parts first.
///
/// For [`PartitionClass::Star`] this returns the ordinary partitions only;
/// see [`enumerate`] for the tagged objects.
pub fn partitions(n: usize, class: PartitionClass) -> Vec<Partition> {
    let (parity, distinct) = class.rules();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, parity, distinct, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    parity: Option<usize>,
    distinct: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if parity.is_some_and(|r| part % 2 != r) {
            continue;
        }
        current.push(part);
        let next_max = if distinct { part - 1 } else { part };
        fill(remaining - part, next_max, parity, distinct, current, out);
        current.pop();
    }
}

/// All members of `class` with size `n`.
///
/// In the starred class the size-1 partition is replaced by the tagged
/// objects `1`, `1*`, `1**`.
pub fn enumerate(n: usize, class: PartitionClass) -> Vec<StarPartition> {
    if class == PartitionClass::Star && n == 1 {
        return vec![
            StarPartition::One,
            StarPartition::OneStar,
            StarPartition::OneStarStar,
        ];
    }
    partitions(n, class)
        .into_iter()
        .map(StarPartition::Ordinary)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(list: &[Partition]) -> Vec<Vec<usize>> {
        list.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn distinct_even_small_cases() {
        assert_eq!(parts(&partitions(4, PartitionClass::DistinctEven)), vec![vec![4]]);
        assert_eq!(
            parts(&partitions(6, PartitionClass::DistinctEven)),
            vec![vec![6], vec![4, 2]]
        );
        assert!(partitions(3, PartitionClass::DistinctEven).is_empty());
        assert_eq!(partitions(0, PartitionClass::DistinctEven), vec![Partition::empty()]);
    }

    #[test]
    fn odd_parts_of_five() {
        assert_eq!(
            parts(&partitions(5, PartitionClass::Odd)),
            vec![vec![5], vec![3, 1, 1], vec![1, 1, 1, 1, 1]]
        );
    }

    #[test]
    fn class_counts_match_brute_force_filter() {
        for n in 0..=14 {
            let all = partitions(n, PartitionClass::All);
            for class in [
                PartitionClass::Odd,
                PartitionClass::DistinctEven,
                PartitionClass::DistinctOdd,
            ] {
                let filtered: Vec<_> = all.iter().filter(|p| class.contains(p)).cloned().collect();
                assert_eq!(partitions(n, class), filtered, "n={n} {class:?}");
            }
        }
        assert_eq!(partitions(14, PartitionClass::All).len(), 135);
        // odd parts and distinct parts are equinumerous
        let distinct = partitions(14, PartitionClass::All)
            .into_iter()
            .filter(|p| p.parts().windows(2).all(|w| w[0] != w[1]))
            .count();
        assert_eq!(partitions(14, PartitionClass::Odd).len(), distinct);
    }

    #[test]
    fn starred_set_at_size_one() {
        let one = enumerate(1, PartitionClass::Star);
        assert_eq!(one.len(), 3);
        let weights: Vec<i64> = one.iter().map(StarPartition::weight).collect();
        let cranks: Vec<i64> = one.iter().map(StarPartition::crank).collect();
        assert_eq!(weights, vec![-1, 1, 1]);
        assert_eq!(cranks, vec![0, 1, -1]);
        assert!(one.iter().all(|s| s.size() == 1));
        assert_eq!(enumerate(2, PartitionClass::Star).len(), 2);
    }

    #[test]
    fn crank_definition() {
        assert_eq!(Partition::new(vec![4]).crank(), 4);
        assert_eq!(Partition::new(vec![1]).crank(), -1);
        assert_eq!(Partition::new(vec![3, 1, 1]).crank(), -1);
        assert_eq!(Partition::new(vec![1, 1]).crank(), -2);
        assert_eq!(Partition::empty().crank(), 0);
        // n1 = 1, parts larger than 1: two
        assert_eq!(Partition::new(vec![1, 2, 5]).crank(), 1);
    }

    #[test]
    fn crank_is_symmetric_for_n_above_one() {
        use std::collections::BTreeMap;
        for n in 2..=16 {
            let mut dist: BTreeMap<i64, i64> = BTreeMap::new();
            for p in partitions(n, PartitionClass::All) {
                *dist.entry(p.crank()).or_default() += 1;
            }
            for (m, c) in &dist {
                assert_eq!(dist.get(&-m), Some(c), "n={n} m={m}");
            }
        }
    }
}
