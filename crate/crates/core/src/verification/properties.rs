//! Checks that are neither a single congruence nor a single equidistribution:
//! coefficient relations, dual-form agreement and oracle comparisons.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use super::report::{Counterexample, Report, ReportKind};
use crate::combinatorics::{
    enumerate, parity_weighted, partition_numbers, pentagonal_d, series_counts,
    statistic_distribution, Family, PartitionClass,
};
use crate::error::Result;
use crate::series::{ProductSpec, QSeries};
use crate::theta::SeriesName;

/// Sizes compared between enumeration and generating functions.
pub const ORACLE_SIZE_LIMIT: usize = 10;
/// Coefficients compared between product and closed-sum theta forms.
pub const THETA_PRECISION: usize = 1000;

fn ce(index: usize, description: String, values: Vec<String>) -> Counterexample {
    Counterexample {
        index,
        description,
        values,
    }
}

fn finish(report: Report, broken: Option<Counterexample>, start: Instant) -> Report {
    match broken {
        Some(c) => report.fail(c).timed(start),
        None => report.timed(start),
    }
}

fn starved(report: Report, need: usize, available: usize) -> Report {
    report.skip(format!("needs {need} coefficients, only {available} available"))
}

/// Coefficients needed by [`check_relation_chl`].
pub fn chl_required_precision(n_max: usize) -> usize {
    11 * n_max + 121
}

/// `a2(11n + 120) = 11^4 a2(n/11)` for `0 <= n <= n_max`, where
/// `sum a2(n) q^n = f_2^14 / f_1^4` and `a2(x) = 0` unless `x` is a
/// nonnegative integer.
pub fn check_relation_chl(n_max: usize, precision: usize) -> Result<Report> {
    let need = chl_required_precision(n_max);
    if precision < need {
        let start = Instant::now();
        return Ok(starved(chl_report(n_max), need, precision).timed(start));
    }
    check_relation_chl_on(n_max, &SeriesName::A2.build(need)?)
}

fn chl_report(n_max: usize) -> Report {
    Report::new(
        "a2-11n120-relation",
        "a2(11n+120) = 11^4 a2(n/11)",
        ReportKind::Relation,
        format!("n = 0..={n_max}"),
    )
}

/// [`check_relation_chl`] against an expanded `a2` series.
pub fn check_relation_chl_on(n_max: usize, a2: &QSeries) -> Result<Report> {
    let start = Instant::now();
    let need = chl_required_precision(n_max);
    if a2.precision() < need {
        return Ok(starved(chl_report(n_max), need, a2.precision()).timed(start));
    }
    let c = a2.coeffs();
    let factor = BigInt::from(11u32.pow(4));
    let mut broken = None;
    for n in 0..=n_max {
        let lhs = &c[11 * n + 120];
        let rhs = if n % 11 == 0 {
            &factor * &c[n / 11]
        } else {
            BigInt::zero()
        };
        if *lhs != rhs {
            broken = Some(ce(
                11 * n + 120,
                format!("a2({}) = {lhs} but 11^4 a2({n}/11) = {rhs}", 11 * n + 120),
                vec![lhs.to_string(), rhs.to_string()],
            ));
            break;
        }
    }
    Ok(finish(chl_report(n_max), broken, start))
}

/// Product and closed-sum forms of a theta-type series agree to
/// [`THETA_PRECISION`] coefficients.
pub fn check_theta_dual_form(name: SeriesName, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        &format!("theta-dual-{}", name.to_string().replace('_', "")),
        &format!("{name}: product form = closed sum"),
        ReportKind::Identity,
        format!("q^0..q^{}", THETA_PRECISION - 1),
    );
    if precision < THETA_PRECISION {
        return Ok(starved(report, THETA_PRECISION, precision).timed(start));
    }
    let Some(sum) = name.closed_sum(THETA_PRECISION) else {
        return Err(crate::Error::InvalidParameter(format!("{name} has no closed-sum form")));
    };
    let product = name.build(THETA_PRECISION)?;
    let cmp = product.equal_upto(&sum, THETA_PRECISION, None)?;
    let broken = cmp.mismatch.map(|m| {
        ce(
            m.index,
            format!("product and sum differ at q^{}", m.index),
            vec![m.left.to_string(), m.right.to_string()],
        )
    });
    Ok(finish(report, broken, start))
}

/// Enumerated statistic distributions equal the generating function's
/// `z`-coefficients for every size up to [`ORACLE_SIZE_LIMIT`]; they are
/// symmetric, sum to `w_t(n)`, and for `V_t` are nonnegative.
pub fn check_oracle_equivalence(family: Family, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let label = family.to_string().to_lowercase();
    let report = Report::new(
        &format!("oracle-{label}"),
        &format!("{family}: enumeration = generating function"),
        ReportKind::Property,
        format!("sizes 0..={ORACLE_SIZE_LIMIT}"),
    );
    let need = ORACLE_SIZE_LIMIT + 1;
    if precision < need {
        return Ok(starved(report, need, precision).timed(start));
    }
    let gf = series_counts(family, need)?;
    let w = SeriesName::W(family.t()).build(need)?;
    let nonnegative_expected = matches!(family, Family::V { .. });
    for n in 0..need {
        let direct = statistic_distribution(family, n, false)?;
        let row = gf.row(n).cloned().unwrap_or_default();
        let broken = if direct != row {
            Some(ce(n, format!("distributions differ at size {n}"), vec![fmt_row(&direct), fmt_row(&row)]))
        } else if direct.iter().any(|(m, c)| direct.get(&-m) != Some(c)) {
            Some(ce(n, format!("distribution at size {n} is not symmetric"), vec![fmt_row(&direct)]))
        } else if direct.values().sum::<BigInt>() != w.coeffs()[n] {
            Some(ce(
                n,
                format!("weighted total at size {n} differs from w_{}({n})", family.t()),
                vec![fmt_row(&direct), w.coeffs()[n].to_string()],
            ))
        } else if nonnegative_expected && direct.values().any(|c| c < &BigInt::zero()) {
            Some(ce(n, format!("negative count at size {n}"), vec![fmt_row(&direct)]))
        } else {
            None
        };
        if broken.is_some() {
            return Ok(finish(report, broken, start));
        }
    }
    Ok(report.timed(start))
}

fn fmt_row(row: &BTreeMap<i64, BigInt>) -> String {
    row.iter()
        .map(|(m, c)| format!("{m}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `d(n)` three ways: the pentagonal closed form and the coefficient of
/// `f_2` for `n <= n_max`, and the vector-crank parity sum for small `n`.
pub fn check_d_pentagonal(n_max: usize, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        "d-pentagonal",
        "d(n) = (-1)^m if n = m(3m+-1), else 0",
        ReportKind::Relation,
        format!("n = 0..={n_max}; enumeration n = 0..={ORACLE_SIZE_LIMIT}"),
    );
    if precision < n_max + 1 {
        return Ok(starved(report, n_max + 1, precision).timed(start));
    }
    let d = SeriesName::D.build(n_max + 1)?;
    for n in 0..=n_max {
        let closed = BigInt::from(pentagonal_d(n));
        if closed != d.coeffs()[n] {
            let c = ce(n, format!("closed form and f_2 differ at n = {n}"), vec![closed.to_string(), d.coeffs()[n].to_string()]);
            return Ok(finish(report, Some(c), start));
        }
        if n <= ORACLE_SIZE_LIMIT {
            let parity = parity_weighted(Family::W2, n, false)?;
            if parity != closed {
                let c = ce(n, format!("crank parity sum differs at n = {n}"), vec![parity.to_string(), closed.to_string()]);
                return Ok(finish(report, Some(c), start));
            }
        }
    }
    Ok(report.timed(start))
}

/// `c_t(n)` by enumeration equals the series coefficient for small `n`.
pub fn check_parity_enumeration(t: usize, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        &format!("c{t}-parity-enumeration"),
        &format!("sum (-1)^m N_V{t}(m, n) = c_{t}(n)"),
        ReportKind::Property,
        format!("n = 0..={ORACLE_SIZE_LIMIT}"),
    );
    let need = ORACLE_SIZE_LIMIT + 1;
    if precision < need {
        return Ok(starved(report, need, precision).timed(start));
    }
    let c = SeriesName::C(t).build(need)?;
    for n in 0..need {
        let direct = parity_weighted(Family::v(t), n, false)?;
        if direct != c.coeffs()[n] {
            let x = ce(n, format!("c_{t}({n}) differs"), vec![direct.to_string(), c.coeffs()[n].to_string()]);
            return Ok(finish(report, Some(x), start));
        }
    }
    Ok(report.timed(start))
}

/// `c_4(2k) = p(k)` for `0 <= k <= k_max`.
pub fn check_c4_partitions(k_max: usize, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        "c4-even-partitions",
        "c_4(2k) = p(k)",
        ReportKind::Relation,
        format!("k = 0..={k_max}"),
    );
    let need = 2 * k_max + 1;
    if precision < need {
        return Ok(starved(report, need, precision).timed(start));
    }
    let c4 = SeriesName::C(4).build(need)?;
    let p = partition_numbers(k_max + 1);
    for (k, pk) in p.iter().enumerate() {
        if c4.coeffs()[2 * k] != *pk {
            let x = ce(2 * k, format!("c_4({}) differs from p({k})", 2 * k), vec![c4.coeffs()[2 * k].to_string(), pk.to_string()]);
            return Ok(finish(report, Some(x), start));
        }
    }
    Ok(report.timed(start))
}

/// Weighted starred partitions reproduce `f_1 / ((zq; q)(q/z; q))`.
pub fn check_star_crank_identity(limit: usize, precision: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        "star-crank-identity",
        "sum over P* of wt* z^c* q^size = f_1/(zq, q/z; q)",
        ReportKind::Identity,
        format!("q^0..q^{limit}"),
    );
    if precision < limit + 1 {
        return Ok(starved(report, limit + 1, precision).timed(start));
    }
    let gf = ProductSpec::new()
        .eta(1, 1)
        .z_pochhammer(1, 1, 1, -1)
        .z_pochhammer(-1, 1, 1, -1)
        .expand_bivariate(limit + 1)?;
    for n in 0..=limit {
        let mut row: BTreeMap<i64, BigInt> = BTreeMap::new();
        for s in enumerate(n, PartitionClass::Star) {
            *row.entry(s.crank()).or_default() += s.weight();
        }
        row.retain(|_, c| !c.is_zero());
        let expected = gf.row(n).cloned().unwrap_or_default();
        if row != expected {
            let x = ce(n, format!("q^{n} coefficients differ"), vec![fmt_row(&row), fmt_row(&expected)]);
            return Ok(finish(report, Some(x), start));
        }
    }
    Ok(report.timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::report::Status;

    #[test]
    fn chl_small_range() {
        let r = check_relation_chl(20, 400).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(check_relation_chl(20, 300).unwrap().status, Status::Skipped);
    }

    #[test]
    fn a2_at_120() {
        let a2 = SeriesName::A2.build(121).unwrap();
        assert_eq!(a2.coeffs()[120], BigInt::from(14641));
    }

    #[test]
    fn star_identity_to_fifteen() {
        assert_eq!(check_star_crank_identity(15, 16).unwrap().status, Status::Pass);
    }

    #[test]
    fn oracle_small_family() {
        let r = check_oracle_equivalence(Family::v(5), 11).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.id, "oracle-v5");
    }

    #[test]
    fn theta_starved() {
        assert_eq!(
            check_theta_dual_form(SeriesName::Psi, 999).unwrap().status,
            Status::Skipped
        );
    }
}
