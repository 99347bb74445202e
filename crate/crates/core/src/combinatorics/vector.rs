use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::partition::{enumerate, PartitionClass, StarPartition};
use crate::error::{Error, Result};
use crate::series::{BivariateSeries, ProductSpec};

/// Enumeration refuses sizes above this unless forced.
pub const ENUMERATION_LIMIT: usize = 24;

/// The two families of weighted 7-colored vector partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `V_t` with the multirank; `h` is the coefficient on `l(lambda_6) - l(lambda_7)`.
    V { t: usize, h: i64 },
    /// `W_2` with the vector crank.
    W2,
}

impl Family {
    /// `V_t` with the standard multirank (`h = 2`).
    pub fn v(t: usize) -> Family {
        Family::V { t, h: 2 }
    }

    pub fn t(&self) -> usize {
        match self {
            Family::V { t, .. } => *t,
            Family::W2 => 2,
        }
    }

    /// Component classes, in order `lambda_1 .. lambda_7`.
    ///
    /// `W_2` uses odd parts in components 2-5 so that its weighted count
    /// matches the crank product `f_2^3 / (zq, q/z, z^2 q, q/z^2; q)_inf`.
    pub fn classes(&self) -> [PartitionClass; 7] {
        use PartitionClass::*;
        match self {
            Family::V { .. } => [DistinctEven, Odd, Odd, Odd, Odd, All, All],
            Family::W2 => [DistinctEven, Odd, Odd, Odd, Odd, Star, Star],
        }
    }

    /// How much one unit of a component's size contributes to the total.
    pub fn scale(&self, component: usize) -> usize {
        if component >= 5 {
            self.t()
        } else {
            1
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Family::V { t: 0, .. } => Err(Error::InvalidParameter("t must be at least 1".into())),
            _ => Ok(()),
        }
    }

    /// Generating function `sum N(m, n) z^m q^n` of the statistic.
    pub fn generating_function(&self) -> ProductSpec {
        match *self {
            Family::V { t, h } => ProductSpec::new()
                .eta(2, 1)
                .z_pochhammer(1, 1, 2, -1)
                .z_pochhammer(-1, 1, 2, -1)
                .z_pochhammer(2, 1, 2, -1)
                .z_pochhammer(-2, 1, 2, -1)
                .z_pochhammer(h, t, t, -1)
                .z_pochhammer(-h, t, t, -1),
            Family::W2 => ProductSpec::new()
                .eta(2, 3)
                .z_pochhammer(1, 1, 1, -1)
                .z_pochhammer(-1, 1, 1, -1)
                .z_pochhammer(2, 1, 1, -1)
                .z_pochhammer(-2, 1, 1, -1),
        }
    }

    /// Weighted statistic of a 7-tuple of components.
    pub(crate) fn statistic_of(&self, c: &[&StarPartition; 7]) -> i64 {
        let l = |i: usize| c[i].len() as i64;
        let base = l(1) - l(2) + 2 * (l(3) - l(4));
        match self {
            Family::V { h, .. } => base + h * (l(5) - l(6)),
            Family::W2 => base + c[5].crank() + 2 * c[6].crank(),
        }
    }

    pub(crate) fn weight_of(&self, c: &[&StarPartition; 7]) -> i64 {
        let sign = if c[0].len().is_multiple_of(2) { 1 } else { -1 };
        sign * c[5].weight() * c[6].weight()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::V { t, h: 2 } => write!(f, "V{t}"),
            Family::V { t, h } => write!(f, "V{t}(h={h})"),
            Family::W2 => write!(f, "W2"),
        }
    }
}

/// A weighted 7-colored vector partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VectorPartition {
    pub family: Family,
    pub components: [StarPartition; 7],
}

impl VectorPartition {
    fn refs(&self) -> [&StarPartition; 7] {
        std::array::from_fn(|i| &self.components[i])
    }

    /// Total size, components 6 and 7 scaled by `t`.
    pub fn sum(&self) -> usize {
        (0..7)
            .map(|i| self.family.scale(i) * self.components[i].size())
            .sum()
    }

    pub fn weight(&self) -> i64 {
        self.family.weight_of(&self.refs())
    }

    /// Multirank for `V_t`, vector crank for `W_2`.
    pub fn statistic(&self) -> i64 {
        self.family.statistic_of(&self.refs())
    }

    /// Parts as `(color, value)` with colors 1..=7 naming the components.
    pub fn colored_parts(&self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            match c {
                StarPartition::Ordinary(p) => {
                    out.extend(p.parts().iter().map(|v| (i + 1, v.to_string())));
                }
                StarPartition::One => out.push((i + 1, "1".into())),
                StarPartition::OneStar => out.push((i + 1, "1*".into())),
                StarPartition::OneStarStar => out.push((i + 1, "1**".into())),
            }
        }
        out
    }

    /// Components as bracketed part lists joined by `;`.
    pub fn render_components(&self) -> String {
        self.components
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Per-class partition lists, indexed by size.
struct ComponentLists {
    lists: HashMap<PartitionClass, Vec<Vec<StarPartition>>>,
}

impl ComponentLists {
    fn new(family: &Family, n: usize) -> Self {
        let mut lists = HashMap::new();
        for (i, class) in family.classes().into_iter().enumerate() {
            let max = n / family.scale(i);
            let entry = lists.entry(class).or_insert_with(Vec::new);
            while entry.len() <= max {
                let size = entry.len();
                entry.push(enumerate(size, class));
            }
        }
        ComponentLists { lists }
    }

    fn get(&self, class: PartitionClass, size: usize) -> &[StarPartition] {
        &self.lists[&class][size]
    }
}

fn check_limit(n: usize, force: bool) -> Result<()> {
    if n > ENUMERATION_LIMIT && !force {
        return Err(Error::EnumerationTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Calls `visit` once for every vector partition of total size `n`.
pub fn for_each_vector(
    family: Family,
    n: usize,
    force: bool,
    mut visit: impl FnMut(&[&StarPartition; 7]),
) -> Result<()> {
    family.validate()?;
    check_limit(n, force)?;
    let lists = ComponentLists::new(&family, n);
    let classes = family.classes();
    let empty = StarPartition::Ordinary(Default::default());
    let mut chosen: [&StarPartition; 7] = [&empty; 7];
    walk(&family, &classes, &lists, 0, n, &mut chosen, &mut visit);
    Ok(())
}

fn walk<'a>(
    family: &Family,
    classes: &[PartitionClass; 7],
    lists: &'a ComponentLists,
    component: usize,
    remaining: usize,
    chosen: &mut [&'a StarPartition; 7],
    visit: &mut impl FnMut(&[&StarPartition; 7]),
) {
    let scale = family.scale(component);
    if component == 6 {
        if !remaining.is_multiple_of(scale) {
            return;
        }
        for p in lists.get(classes[6], remaining / scale) {
            chosen[6] = p;
            visit(chosen);
        }
        return;
    }
    for size in 0..=remaining / scale {
        for p in lists.get(classes[component], size) {
            chosen[component] = p;
            walk(
                family,
                classes,
                lists,
                component + 1,
                remaining - size * scale,
                chosen,
                visit,
            );
        }
    }
}

/// Every vector partition of total size `n`.
pub fn enumerate_vectors(family: Family, n: usize, force: bool) -> Result<Vec<VectorPartition>> {
    let mut out = Vec::new();
    for_each_vector(family, n, force, |c| {
        out.push(VectorPartition {
            family,
            components: std::array::from_fn(|i| c[i].clone()),
        })
    })?;
    Ok(out)
}

/// Map `m -> N(m, n)`: weighted count of vectors of size `n` with statistic `m`.
/// Only nonzero counts are kept.
pub fn statistic_distribution(family: Family, n: usize, force: bool) -> Result<BTreeMap<i64, BigInt>> {
    let mut dist: BTreeMap<i64, i64> = BTreeMap::new();
    for_each_vector(family, n, force, |c| {
        *dist.entry(family.statistic_of(c)).or_default() += family.weight_of(c);
    })?;
    Ok(dist
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(m, c)| (m, BigInt::from(c)))
        .collect())
}

/// `N(k, modulus, n)`: weighted count with statistic congruent to `k`.
pub fn weighted_count(family: Family, n: usize, k: i64, modulus: usize, force: bool) -> Result<BigInt> {
    Ok(residue_classes(family, n, modulus, force)?[k.rem_euclid(modulus as i64) as usize].clone())
}

/// All `modulus` residue-class counts at size `n`.
pub fn residue_classes(family: Family, n: usize, modulus: usize, force: bool) -> Result<Vec<BigInt>> {
    if modulus == 0 {
        return Err(Error::InvalidParameter("modulus must be at least 1".into()));
    }
    let mut classes = vec![BigInt::from(0); modulus];
    for (m, c) in statistic_distribution(family, n, force)? {
        classes[m.rem_euclid(modulus as i64) as usize] += c;
    }
    Ok(classes)
}

/// Statistic distributions for all sizes below `precision`, from enumeration.
pub fn enumerated_series(family: Family, precision: usize, force: bool) -> Result<BivariateSeries> {
    let rows = (0..precision)
        .map(|n| statistic_distribution(family, n, force))
        .collect::<Result<Vec<_>>>()?;
    Ok(BivariateSeries::from_rows(rows))
}

/// Statistic distributions for all sizes below `precision`, from the
/// generating function.
pub fn series_counts(family: Family, precision: usize) -> Result<BivariateSeries> {
    family.validate()?;
    family.generating_function().expand_bivariate(precision)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w2_at_one_is_four_singletons() {
        let vs = enumerate_vectors(Family::W2, 1, false).unwrap();
        assert_eq!(vs.len(), 4);
        let mut stats: Vec<i64> = vs.iter().map(VectorPartition::statistic).collect();
        stats.sort();
        assert_eq!(stats, vec![-2, -1, 1, 2]);
        assert!(vs.iter().all(|v| v.weight() == 1 && v.sum() == 1));
    }

    #[test]
    fn empty_vector() {
        for family in [Family::W2, Family::v(4)] {
            let vs = enumerate_vectors(family, 0, false).unwrap();
            assert_eq!(vs.len(), 1);
            assert_eq!((vs[0].weight(), vs[0].statistic()), (1, 0));
        }
    }

    #[test]
    fn v4_at_three_splits_evenly_mod_5() {
        let classes = residue_classes(Family::v(4), 3, 5, false).unwrap();
        assert_eq!(classes, vec![BigInt::from(4); 5]);
        assert_eq!(weighted_count(Family::v(4), 3, -1, 5, false).unwrap(), BigInt::from(4));
    }

    #[test]
    fn guardrail() {
        assert_eq!(
            statistic_distribution(Family::v(1), 25, false),
            Err(Error::EnumerationTooLarge { n: 25, limit: 24 })
        );
        assert!(matches!(
            enumerate_vectors(Family::v(0), 1, false),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn low_degree_gf_coefficients() {
        let b = series_counts(Family::v(4), 3).unwrap();
        assert_eq!(b.coeff(1, 1), Some(BigInt::from(1)));
        let w = series_counts(Family::W2, 2).unwrap();
        let row: Vec<(i64, i64)> = w
            .row(1)
            .unwrap()
            .iter()
            .map(|(m, c)| (*m, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(row, vec![(-2, 1), (-1, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn generalized_multirank_changes_only_the_last_term() {
        let v = VectorPartition {
            family: Family::V { t: 1, h: 3 },
            components: [
                StarPartition::Ordinary(Default::default()),
                StarPartition::Ordinary(Default::default()),
                StarPartition::Ordinary(Default::default()),
                StarPartition::Ordinary(Default::default()),
                StarPartition::Ordinary(Default::default()),
                StarPartition::Ordinary(super::super::partition::Partition::new(vec![1, 1])),
                StarPartition::Ordinary(Default::default()),
            ],
        };
        assert_eq!(v.statistic(), 6);
        assert_eq!(v.sum(), 2);
        let h3 = statistic_distribution(Family::V { t: 1, h: 3 }, 6, false).unwrap();
        let gf = series_counts(Family::V { t: 1, h: 3 }, 7).unwrap();
        assert_eq!(&h3, gf.row(6).unwrap());
    }
}
