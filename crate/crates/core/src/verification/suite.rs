use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use super::congruence::{check_congruence_on, CongruenceSpec, Target};
use super::equidistribution::{check_equidistribution_on, EquidistributionSpec};
use super::properties::{
    check_c4_partitions, check_d_pentagonal, check_oracle_equivalence, check_parity_enumeration,
    check_relation_chl_on, check_star_crank_identity, check_theta_dual_form,
    chl_required_precision, ORACLE_SIZE_LIMIT, THETA_PRECISION,
};
use super::report::Report;
use crate::combinatorics::{series_counts, Family};
use crate::error::Result;
use crate::series::{BivariateSeries, QSeries};
use crate::theta::{catalog, verify_entry, IdentityEntry, SeriesName};

/// Precision used when none is given.
pub const DEFAULT_SUITE_PRECISION: usize = 2000;

/// A check with a fixed shape that is neither a congruence nor an
/// equidistribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Chl { n_max: usize },
    ThetaDual(SeriesName),
    Oracle(Family),
    DPentagonal { n_max: usize },
    ParityEnumeration { t: usize },
    C4Partitions { k_max: usize },
    StarCrank { limit: usize },
}

impl Relation {
    fn required_precision(&self) -> usize {
        match self {
            Relation::Chl { n_max } => chl_required_precision(*n_max),
            Relation::ThetaDual(_) => THETA_PRECISION,
            Relation::Oracle(_) | Relation::ParityEnumeration { .. } => ORACLE_SIZE_LIMIT + 1,
            Relation::DPentagonal { n_max } => n_max + 1,
            Relation::C4Partitions { k_max } => 2 * k_max + 1,
            Relation::StarCrank { limit } => limit + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Identity(IdentityEntry),
    Congruence(CongruenceSpec),
    Equidistribution(EquidistributionSpec),
    Relation(Relation),
}

/// One entry of the theorem suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteItem {
    pub id: String,
    pub tags: Vec<String>,
    #[serde(skip)]
    pub check: Check,
}

impl SuiteItem {
    fn new(id: &str, tags: &[&str], check: Check) -> Self {
        SuiteItem {
            id: id.to_string(),
            tags: tags.iter().map(|t| t.to_string()).collect(),
            check,
        }
    }

    /// A filter matches a tag exactly or any substring of the id.
    pub fn matches(&self, filter: &str) -> bool {
        self.tags.iter().any(|t| t == filter) || self.id.contains(filter)
    }

    /// Coefficients needed for the check to be meaningful.
    pub fn required_precision(&self) -> usize {
        match &self.check {
            Check::Identity(e) => e.default_precision,
            Check::Congruence(s) => s.required_precision(),
            Check::Equidistribution(s) => s.required_precision(),
            Check::Relation(r) => r.required_precision(),
        }
    }
}

fn congruence(id: &str, anchor: &str, source: SeriesName, ab: (usize, usize), m: u64, n_max: usize, tags: &[&str]) -> SuiteItem {
    let spec = CongruenceSpec::new(id, anchor, source, ab, Target::Modulus(m), n_max).tagged(tags);
    SuiteItem::new(id, tags, Check::Congruence(spec))
}

fn vanishing(id: &str, anchor: &str, source: SeriesName, ab: (usize, usize), n_max: usize, tags: &[&str]) -> SuiteItem {
    let spec = CongruenceSpec::new(id, anchor, source, ab, Target::Zero, n_max).tagged(tags);
    SuiteItem::new(id, tags, Check::Congruence(spec))
}

fn equidistribution(id: &str, anchor: &str, family: Family, m: usize, ab: (usize, usize), n_max: usize, tags: &[&str]) -> SuiteItem {
    let spec = EquidistributionSpec::new(id, anchor, family, m, ab, n_max).tagged(tags);
    SuiteItem::new(id, tags, Check::Equidistribution(spec))
}

fn relation(id: &str, tags: &[&str], r: Relation) -> SuiteItem {
    SuiteItem::new(id, tags, Check::Relation(r))
}

/// The full theorem suite, in report order.
pub fn suite_items() -> Vec<SuiteItem> {
    use SeriesName::{C, W};
    let mut items = Vec::new();

    for entry in catalog() {
        let mut tags: Vec<&str> = entry.tags.iter().map(String::as_str).collect();
        tags.push("identity");
        let item = SuiteItem::new(&entry.id, &tags, Check::Identity(entry.clone()));
        items.push(item);
    }

    for (name, f) in [
        ("phi", SeriesName::Phi),
        ("psi", SeriesName::Psi),
        ("phineg", SeriesName::PhiNeg),
        ("jacobi", SeriesName::Jacobi),
        ("f1", SeriesName::Eta(1)),
    ] {
        items.push(relation(&format!("theta-dual-{name}"), &["theta"], Relation::ThetaDual(f)));
    }

    for t in [2, 4, 6] {
        items.push(congruence(&format!("w{t}-2n1-mod4"), "w_t(2n+1) = 0 mod 4 for even t", W(t), (2, 1), 4, 100, &["mod4", "2-dissection"]));
    }
    for t in [3, 6] {
        items.push(congruence(&format!("w{t}-3n1-mod4"), "w_t(3n+1) = 0 mod 4 for 3 | t", W(t), (3, 1), 4, 100, &["mod4", "3-dissection"]));
        items.push(congruence(&format!("w{t}-3n2-mod9"), "w_t(3n+2) = 0 mod 9 for 3 | t", W(t), (3, 2), 9, 100, &["mod9", "3-dissection"]));
    }
    items.push(congruence("w3-24n23-mod27", "w_3(24n+23) = 0 mod 27", W(3), (24, 23), 27, 80, &["mod27"]));
    items.push(congruence("w3-24n23-mod729", "remark (numeric): w_3(24n+23) = 0 mod 729", W(3), (24, 23), 729, 40, &["mod729"]));

    for (ts, residues, anchor) in [
        ([5, 10], &[3, 4][..], "w_t(5n+3) = w_t(5n+4) = 0 mod 5 for t = 0 mod 5"),
        ([1, 6], &[4][..], "w_t(5n+4) = 0 mod 5 for t = 1 mod 5"),
        ([4, 9], &[3][..], "w_t(5n+3) = 0 mod 5 for t = 4 mod 5"),
    ] {
        for t in ts {
            for &b in residues {
                items.push(congruence(&format!("w{t}-5n{b}-mod5"), anchor, W(t), (5, b), 5, 100, &["mod5"]));
            }
        }
    }
    for (ts, residues, anchor) in [
        ([5, 10], &[3, 4][..], "N_Vt(i,5,5n+3) and N_Vt(i,5,5n+4) equal in i for t = 0 mod 5"),
        ([1, 6], &[4][..], "N_Vt(i,5,5n+4) equal in i for t = 1 mod 5"),
        ([4, 9], &[3][..], "N_Vt(i,5,5n+3) equal in i for t = 4 mod 5"),
    ] {
        for t in ts {
            for &b in residues {
                items.push(equidistribution(&format!("v{t}-5n{b}-equidistribution"), anchor, Family::v(t), 5, (5, b), 30, &["mod5", "equidistribution"]));
            }
        }
    }

    items.push(congruence("w2-7n4-mod7", "w_2(7n+4) = 0 mod 7", W(2), (7, 4), 7, 100, &["mod7"]));
    items.push(equidistribution("w2-7n4-crank-equidistribution", "M*(i,7,7n+4) = w_2(7n+4)/7", Family::W2, 7, (7, 4), 10, &["mod7", "equidistribution"]));
    items.push(congruence("w2-11n10-mod11", "w_2(11n+10) = 0 mod 11", W(2), (11, 10), 11, 100, &["mod11"]));
    items.push(relation("a2-11n120-relation", &["mod11", "relation"], Relation::Chl { n_max: 150 }));

    for t in [1, 2, 4, 5] {
        items.push(relation(&format!("oracle-v{t}"), &["oracle", "nonnegativity"], Relation::Oracle(Family::v(t))));
    }
    items.push(relation("oracle-w2", &["oracle"], Relation::Oracle(Family::W2)));
    items.push(relation("star-crank-identity", &["oracle", "crank"], Relation::StarCrank { limit: 15 }));

    for t in [5, 10] {
        for b in [3, 4] {
            items.push(vanishing(&format!("c{t}-5n{b}-zero"), "c_t(5n+3) = c_t(5n+4) = 0 for t = 0 mod 5", C(t), (5, b), 100, &["parity"]));
        }
    }
    for t in [1, 6] {
        items.push(congruence(&format!("c{t}-5n4-div5"), "c_t(5n+4) = 0 mod 5 for t = 1 mod 5", C(t), (5, 4), 5, 100, &["parity"]));
    }
    for t in [4, 9] {
        items.push(congruence(&format!("c{t}-5n3-div5"), "c_t(5n+3) = 0 mod 5 for t = 4 mod 5", C(t), (5, 3), 5, 100, &["parity"]));
    }
    for t in [1, 4, 5] {
        items.push(relation(&format!("c{t}-parity-enumeration"), &["parity", "oracle"], Relation::ParityEnumeration { t }));
    }
    items.push(relation("d-pentagonal", &["parity"], Relation::DPentagonal { n_max: 200 }));
    items.push(relation("c4-even-partitions", &["parity"], Relation::C4Partitions { k_max: 100 }));
    items.push(vanishing("c4-odd-zero", "c_4(2n+1) = 0", C(4), (2, 1), 100, &["parity"]));

    for (source, name) in [(C(4), "c4"), (W(4), "w4")] {
        items.push(congruence(&format!("{name}-5n3-sellers"), &format!("{source}(5n+3) = 0 mod 5"), source, (5, 3), 5, 40, &["sellers"]));
        items.push(congruence(&format!("{name}-25n23-sellers"), &format!("{source}(25n+23) = 0 mod 25"), source, (25, 23), 25, 40, &["sellers"]));
    }
    items
}

/// Deliberately false statements; each must fail with a counterexample.
pub fn negative_controls() -> Vec<SuiteItem> {
    vec![
        congruence("control-w2-7n3-mod7", "false: w_2(7n+3) = 0 mod 7", SeriesName::W(2), (7, 3), 7, 100, &["control"]),
        congruence("control-w4-5n1-mod5", "false: w_4(5n+1) = 0 mod 5", SeriesName::W(4), (5, 1), 5, 20, &["control"]),
        vanishing("control-c4-5n2-zero", "false: c_4(5n+2) = 0", SeriesName::C(4), (5, 2), 20, &["control"]),
        equidistribution("control-v4-5n4-equidistribution", "false: N_V4(i,5,5n+4) equal in i", Family::v(4), 5, (5, 4), 5, &["control"]),
    ]
}

/// Series shared between suite items, expanded once before items run.
#[derive(Debug, Default)]
pub struct SeriesCache {
    univariate: HashMap<SeriesName, QSeries>,
    bivariate: HashMap<Family, BivariateSeries>,
}

impl SeriesCache {
    /// Expands everything `items` will read, each to the largest precision
    /// any item asks for, capped at `precision`.
    pub fn warm(items: &[SuiteItem], precision: usize) -> Result<Self> {
        let mut uni: HashMap<SeriesName, usize> = HashMap::new();
        let mut bi: HashMap<Family, usize> = HashMap::new();
        for item in items {
            let need = item.required_precision().min(precision);
            let mut want = |name: SeriesName| {
                let e = uni.entry(name).or_default();
                *e = (*e).max(need);
            };
            match &item.check {
                Check::Congruence(s) => want(s.source),
                Check::Equidistribution(s) => {
                    want(SeriesName::W(s.family.t()));
                    let e = bi.entry(s.family).or_default();
                    *e = (*e).max(need);
                }
                Check::Relation(Relation::Chl { .. }) => want(SeriesName::A2),
                _ => {}
            }
        }
        let uni: Vec<_> = uni.into_iter().collect();
        let bi: Vec<_> = bi.into_iter().collect();
        let univariate = par_map(&uni, |(name, n)| name.build(*n).map(|s| (*name, s)))
            .into_iter()
            .collect::<Result<_>>()?;
        let bivariate = par_map(&bi, |(family, n)| series_counts(*family, *n).map(|s| (*family, s)))
            .into_iter()
            .collect::<Result<_>>()?;
        Ok(SeriesCache {
            univariate,
            bivariate,
        })
    }

    fn uni(&self, name: SeriesName) -> Result<&QSeries> {
        self.univariate
            .get(&name)
            .ok_or_else(|| crate::Error::UnknownSeries(format!("{name} was not expanded")))
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Runs one item against a warmed cache.
pub fn run_item(item: &SuiteItem, precision: usize, cache: &SeriesCache) -> Result<Report> {
    match &item.check {
        Check::Identity(entry) => {
            if precision < entry.default_precision {
                let start = Instant::now();
                let report = verify_entry(entry, Some(0))?;
                return Ok(Report {
                    note: None,
                    range: format!("q^0..q^{}", entry.default_precision - 1),
                    ..report
                }
                .skip(format!(
                    "needs {} coefficients, only {precision} available",
                    entry.default_precision
                ))
                .timed(start));
            }
            verify_entry(entry, None)
        }
        Check::Congruence(spec) => check_congruence_on(spec, cache.uni(spec.source)?),
        Check::Equidistribution(spec) => {
            let gf = cache.bivariate.get(&spec.family).ok_or_else(|| {
                crate::Error::UnknownSeries(format!("{} was not expanded", spec.family))
            })?;
            check_equidistribution_on(spec, gf, cache.uni(SeriesName::W(spec.family.t()))?)
        }
        Check::Relation(r) => match *r {
            Relation::Chl { n_max } => check_relation_chl_on(n_max, cache.uni(SeriesName::A2)?),
            Relation::ThetaDual(name) => check_theta_dual_form(name, precision),
            Relation::Oracle(family) => check_oracle_equivalence(family, precision),
            Relation::DPentagonal { n_max } => check_d_pentagonal(n_max, precision),
            Relation::ParityEnumeration { t } => check_parity_enumeration(t, precision),
            Relation::C4Partitions { k_max } => check_c4_partitions(k_max, precision),
            Relation::StarCrank { limit } => check_star_crank_identity(limit, precision),
        },
    }
}

/// Runs `items` with shared series expanded once, in item order.
pub fn run_items(items: &[SuiteItem], precision: usize) -> Result<Vec<Report>> {
    let cache = SeriesCache::warm(items, precision)?;
    par_map(items, |item| run_item(item, precision, &cache))
        .into_iter()
        .collect()
}

/// Runs the suite, optionally restricted to items matching `filter`.
pub fn run_suite(precision: usize, filter: Option<&str>) -> Result<Vec<Report>> {
    let items: Vec<SuiteItem> = suite_items()
        .into_iter()
        .filter(|i| filter.is_none_or(|f| i.matches(f)))
        .collect();
    run_items(&items, precision)
}
