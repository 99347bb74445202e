use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::report::{CongruenceReport, Counterexample, Report, ReportKind};
use crate::error::{Error, Result};
use crate::series::QSeries;
use crate::theta::SeriesName;

/// What every coefficient on the progression must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// Divisible by the modulus.
    Modulus(u64),
    /// Exactly zero.
    Zero,
}

/// `source(a*n + b)` satisfies `target` for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceSpec {
    pub id: String,
    pub anchor: String,
    #[serde(serialize_with = "display")]
    pub source: SeriesName,
    pub a: usize,
    pub b: usize,
    pub target: Target,
    pub n_max: usize,
    pub tags: Vec<String>,
}

fn display<S: serde::Serializer>(name: &SeriesName, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(name)
}

impl CongruenceSpec {
    pub fn new(
        id: &str,
        anchor: &str,
        source: SeriesName,
        (a, b): (usize, usize),
        target: Target,
        n_max: usize,
    ) -> Self {
        CongruenceSpec {
            id: id.to_string(),
            anchor: anchor.to_string(),
            source,
            a,
            b,
            target,
            n_max,
            tags: Vec::new(),
        }
    }

    pub fn tagged(mut self, tags: &[&str]) -> Self {
        self.tags = tags.iter().map(|t| t.to_string()).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.a == 0 || self.b >= self.a {
            return Err(Error::InvalidParameter(format!(
                "progression {}n+{} needs a >= 1 and 0 <= b < a",
                self.a, self.b
            )));
        }
        if let Target::Modulus(m) = self.target {
            if m < 2 {
                return Err(Error::InvalidParameter(format!("modulus {m} must be at least 2")));
            }
        }
        Ok(())
    }

    /// Coefficients needed: indices up to `a * n_max + b`.
    pub fn required_precision(&self) -> usize {
        self.a * self.n_max + self.b + 1
    }

    fn statement(&self) -> String {
        match self.target {
            Target::Modulus(m) => {
                format!("{}({}n+{}) = 0 mod {m}", self.source, self.a, self.b)
            }
            Target::Zero => format!("{}({}n+{}) = 0", self.source, self.a, self.b),
        }
    }
}

/// Builds the source at `precision` and runs the check.
pub fn check_congruence(spec: &CongruenceSpec, precision: usize) -> Result<CongruenceReport> {
    spec.validate()?;
    let start = Instant::now();
    if precision < spec.required_precision() {
        return Ok(starved(spec, precision).timed(start));
    }
    let series = spec.source.build(precision)?;
    Ok(check_congruence_on(spec, &series)?.timed(start))
}

fn starved(spec: &CongruenceSpec, available: usize) -> Report {
    Report::new(&spec.id, &spec.anchor, ReportKind::Congruence, range(spec)).skip(format!(
        "needs {} coefficients, only {available} available",
        spec.required_precision()
    ))
}

fn range(spec: &CongruenceSpec) -> String {
    format!(
        "{} for n = 0..={} (indices {}..={})",
        spec.statement(),
        spec.n_max,
        spec.b,
        spec.a * spec.n_max + spec.b
    )
}

/// Runs the check against an already expanded source series.
pub fn check_congruence_on(spec: &CongruenceSpec, series: &QSeries) -> Result<CongruenceReport> {
    spec.validate()?;
    let start = Instant::now();
    if series.precision() < spec.required_precision() {
        return Ok(starved(spec, series.precision()).timed(start));
    }
    let report = Report::new(&spec.id, &spec.anchor, ReportKind::Congruence, range(spec));
    for n in 0..=spec.n_max {
        let index = spec.a * n + spec.b;
        let value = &series.coeffs()[index];
        let broken = match spec.target {
            Target::Modulus(m) => {
                let r = value.mod_floor(&BigInt::from(m));
                (!r.is_zero()).then(|| {
                    Counterexample {
                        index,
                        description: format!(
                            "{}({index}) = {value} leaves residue {r} mod {m} (n = {n})",
                            spec.source
                        ),
                        values: vec![value.to_string(), r.to_string()],
                    }
                })
            }
            Target::Zero => (!value.is_zero()).then(|| Counterexample {
                index,
                description: format!("{}({index}) = {value} is not zero (n = {n})", spec.source),
                values: vec![value.to_string()],
            }),
        };
        if let Some(ce) = broken {
            return Ok(report.fail(ce).timed(start));
        }
    }
    Ok(report.timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::report::Status;

    #[test]
    fn w2_7n4_single_term() {
        let spec = CongruenceSpec::new("t", "a", SeriesName::W(2), (7, 4), Target::Modulus(7), 0);
        assert_eq!(spec.required_precision(), 5);
        assert_eq!(check_congruence(&spec, 5).unwrap().status, Status::Pass);
    }

    #[test]
    fn starved_check_is_skipped() {
        let spec = CongruenceSpec::new("t", "a", SeriesName::W(5), (5, 3), Target::Modulus(5), 100);
        let r = check_congruence(&spec, 100).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn false_spec_fails_with_witness() {
        let spec = CongruenceSpec::new("t", "a", SeriesName::W(4), (5, 1), Target::Modulus(5), 20);
        let r = check_congruence(&spec, 200).unwrap();
        assert_eq!(r.status, Status::Fail);
        let ce = r.counterexample.unwrap();
        let w4 = SeriesName::W(4).build(200).unwrap();
        assert_eq!(ce.values[0], w4.coeffs()[ce.index].to_string());
        assert_eq!(ce.index % 5, 1);
    }

    #[test]
    fn exact_zero_target() {
        let spec = CongruenceSpec::new("t", "a", SeriesName::C(5), (5, 3), Target::Zero, 30);
        assert_eq!(check_congruence(&spec, 200).unwrap().status, Status::Pass);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        for (a, b, target) in [(0, 0, Target::Zero), (5, 5, Target::Zero), (5, 1, Target::Modulus(1))] {
            let spec = CongruenceSpec::new("t", "a", SeriesName::P, (a, b), target, 1);
            assert!(matches!(check_congruence(&spec, 50), Err(Error::InvalidParameter(_))));
        }
    }
}
