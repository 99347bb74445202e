use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::report::{Counterexample, EquidistributionReport, Report, ReportKind};
use crate::combinatorics::{residue_classes, series_counts, Family};
use crate::error::{Error, Result};
use crate::series::{BivariateSeries, QSeries};
use crate::theta::SeriesName;

/// Sizes up to this bound are also checked by direct enumeration.
pub const ENUMERATION_ROUTE_LIMIT: usize = 10;

/// The statistic splits `w_t(a*n + b)` into `modulus` equal residue classes
/// for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistributionSpec {
    pub id: String,
    pub anchor: String,
    pub family: Family,
    pub modulus: usize,
    pub a: usize,
    pub b: usize,
    pub n_max: usize,
    pub tags: Vec<String>,
}

impl EquidistributionSpec {
    pub fn new(
        id: &str,
        anchor: &str,
        family: Family,
        modulus: usize,
        (a, b): (usize, usize),
        n_max: usize,
    ) -> Self {
        EquidistributionSpec {
            id: id.to_string(),
            anchor: anchor.to_string(),
            family,
            modulus,
            a,
            b,
            n_max,
            tags: Vec::new(),
        }
    }

    pub fn tagged(mut self, tags: &[&str]) -> Self {
        self.tags = tags.iter().map(|t| t.to_string()).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.modulus < 2 {
            return Err(Error::InvalidParameter("statistic modulus must be at least 2".into()));
        }
        if self.a == 0 || self.b >= self.a {
            return Err(Error::InvalidParameter(format!(
                "progression {}n+{} needs a >= 1 and 0 <= b < a",
                self.a, self.b
            )));
        }
        if self.family.t() == 0 {
            return Err(Error::InvalidParameter("t must be at least 1".into()));
        }
        Ok(())
    }

    pub fn required_precision(&self) -> usize {
        self.a * self.n_max + self.b + 1
    }

    fn range(&self) -> String {
        format!(
            "{} statistic mod {} on {}n+{}, n = 0..={}",
            self.family, self.modulus, self.a, self.b, self.n_max
        )
    }
}

/// Residue classes at `index`, from the generating function.
pub fn gf_classes(gf: &BivariateSeries, index: usize, modulus: usize) -> Vec<BigInt> {
    let mut classes = vec![BigInt::from(0); modulus];
    if let Some(row) = gf.row(index) {
        for (m, c) in row {
            classes[m.rem_euclid(modulus as i64) as usize] += c;
        }
    }
    classes
}

/// Expands the generating function and runs the check.
pub fn check_equidistribution(
    spec: &EquidistributionSpec,
    precision: usize,
) -> Result<EquidistributionReport> {
    spec.validate()?;
    let start = Instant::now();
    if precision < spec.required_precision() {
        return Ok(starved(spec, precision).timed(start));
    }
    let need = spec.required_precision();
    let gf = series_counts(spec.family, need)?;
    let w = SeriesName::W(spec.family.t()).build(need)?;
    Ok(check_equidistribution_on(spec, &gf, &w)?.timed(start))
}

fn starved(spec: &EquidistributionSpec, available: usize) -> Report {
    Report::new(&spec.id, &spec.anchor, ReportKind::Equidistribution, spec.range()).skip(format!(
        "needs {} coefficients, only {available} available",
        spec.required_precision()
    ))
}

/// Runs the check against an expanded generating function `gf` and the
/// independently expanded totals `w`.
///
/// Every index is checked through the generating function; indices up to
/// [`ENUMERATION_ROUTE_LIMIT`] are also enumerated and must give the same
/// classes.
pub fn check_equidistribution_on(
    spec: &EquidistributionSpec,
    gf: &BivariateSeries,
    w: &QSeries,
) -> Result<EquidistributionReport> {
    spec.validate()?;
    let start = Instant::now();
    let available = gf.precision().min(w.precision());
    if available < spec.required_precision() {
        return Ok(starved(spec, available).timed(start));
    }
    let report = Report::new(&spec.id, &spec.anchor, ReportKind::Equidistribution, spec.range());
    let m = BigInt::from(spec.modulus);
    let mut enumerated = 0;
    for n in 0..=spec.n_max {
        let index = spec.a * n + spec.b;
        let classes = gf_classes(gf, index, spec.modulus);
        let total = &w.coeffs()[index];
        let expected = total / &m;
        let values = || classes.iter().map(ToString::to_string).collect::<Vec<_>>();
        if &expected * &m != *total || classes.iter().any(|c| *c != expected) {
            return Ok(report
                .fail(Counterexample {
                    index,
                    description: format!(
                        "classes at {}n+{} (n = {n}) are not all {total}/{}",
                        spec.a, spec.b, spec.modulus
                    ),
                    values: values(),
                })
                .timed(start));
        }
        if index <= ENUMERATION_ROUTE_LIMIT {
            let direct = residue_classes(spec.family, index, spec.modulus, false)?;
            if direct != classes {
                let mut v = values();
                v.extend(direct.iter().map(ToString::to_string));
                return Ok(report
                    .fail(Counterexample {
                        index,
                        description: format!(
                            "enumeration and generating function disagree at size {index}"
                        ),
                        values: v,
                    })
                    .timed(start));
            }
            enumerated += 1;
        }
    }
    Ok(report
        .with_note(format!(
            "generating function at {} indices; {enumerated} also enumerated",
            spec.n_max + 1
        ))
        .timed(start))
}
