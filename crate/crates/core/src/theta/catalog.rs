//! Identities as data: each side is an expression tree over products,
//! substitutions, dissections, sums and scalar multiples.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::named::SeriesName;
use crate::error::Result;
use crate::series::{ProductSpec, QSeries};
use crate::verification::report::{Counterexample, Report, ReportKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Product(ProductSpec),
    /// A named series through its product form.
    Named(SeriesName),
    /// A named series through its closed sum.
    ClosedSum(SeriesName),
    Sum(Vec<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, i64),
    Scale(BigInt, Box<Expr>),
    /// Multiplication by `q^k`.
    Shift(usize, Box<Expr>),
    /// `q -> q^k`.
    Substitute(usize, Box<Expr>),
    /// `sum_n c_{mn+r} q^n`.
    Dissect {
        modulus: usize,
        residue: usize,
        inner: Box<Expr>,
    },
    Zero,
}

impl Expr {
    pub fn one() -> Expr {
        Expr::Product(ProductSpec::new())
    }

    pub fn pow(self, e: i64) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn times(self, c: i64) -> Expr {
        Expr::Scale(BigInt::from(c), Box::new(self))
    }

    pub fn q_shift(self, k: usize) -> Expr {
        Expr::Shift(k, Box::new(self))
    }

    pub fn at_power(self, k: usize) -> Expr {
        Expr::Substitute(k, Box::new(self))
    }

    pub fn dissect(self, modulus: usize, residue: usize) -> Expr {
        Expr::Dissect {
            modulus,
            residue,
            inner: Box::new(self),
        }
    }

    /// Evaluates to exactly `precision` coefficients.
    pub fn eval(&self, precision: usize) -> Result<QSeries> {
        match self {
            Expr::Product(spec) => spec.expand(precision),
            Expr::Named(name) => name.build(precision),
            Expr::ClosedSum(name) => name.closed_sum(precision).ok_or_else(|| {
                crate::Error::InvalidParameter(format!("{name} has no closed-sum form"))
            }),
            Expr::Sum(terms) => terms.iter().try_fold(QSeries::zero(precision), |acc, t| {
                Ok(&acc + &t.eval(precision)?)
            }),
            Expr::Mul(terms) => terms.iter().try_fold(QSeries::one(precision), |acc, t| {
                Ok(acc.mul(&t.eval(precision)?))
            }),
            Expr::Pow(inner, e) => inner.eval(precision)?.pow(*e),
            Expr::Scale(c, inner) => Ok(inner.eval(precision)?.scale(c)),
            Expr::Shift(k, inner) => {
                let shifted = inner.eval(precision.saturating_sub(*k))?.shift(*k);
                shifted.truncate(precision)
            }
            Expr::Substitute(k, inner) => {
                let k = *k;
                if k == 0 {
                    return Err(crate::Error::ZeroSubstitution);
                }
                inner
                    .eval(precision.div_ceil(k))?
                    .substitute_power(k)?
                    .truncate(precision)
            }
            Expr::Dissect {
                modulus,
                residue,
                inner,
            } => {
                if *modulus == 0 || residue >= modulus {
                    return Err(crate::Error::InvalidDissection {
                        modulus: *modulus,
                        residue: *residue,
                    });
                }
                inner
                    .eval(precision * modulus)?
                    .dissect(*modulus, *residue)?
                    .truncate(precision)
            }
            Expr::Zero => Ok(QSeries::zero(precision)),
        }
    }
}

fn eta_quotient(exponents: &[(usize, i64)]) -> Expr {
    Expr::Product(
        exponents
            .iter()
            .fold(ProductSpec::new(), |p, &(k, e)| p.eta(k, e)),
    )
}

/// One displayed identity (or congruence between series).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityEntry {
    pub id: String,
    pub description: String,
    pub anchor: String,
    #[serde(skip)]
    pub lhs: Expr,
    #[serde(skip)]
    pub rhs: Expr,
    pub modulus: Option<u64>,
    pub default_precision: usize,
    /// Tags used by suite filters.
    pub tags: Vec<String>,
}

impl IdentityEntry {
    fn new(id: &str, description: &str, anchor: &str, lhs: Expr, rhs: Expr, precision: usize) -> Self {
        IdentityEntry {
            id: id.to_string(),
            description: description.to_string(),
            anchor: anchor.to_string(),
            lhs,
            rhs,
            modulus: None,
            default_precision: precision,
            tags: Vec::new(),
        }
    }

    fn modulo(mut self, m: u64) -> Self {
        self.modulus = Some(m);
        self
    }

    fn tagged(mut self, tags: &[&str]) -> Self {
        self.tags = tags.iter().map(|t| t.to_string()).collect();
        self
    }
}

/// Precision used for the 2-dissection identities.
pub const TWO_DISSECTION_PRECISION: usize = 500;
/// Precision used for every other catalog entry.
pub const DEFAULT_PRECISION: usize = 240;

/// Every identity checked by the suite.
pub fn catalog() -> Vec<IdentityEntry> {
    use SeriesName::*;
    let n2 = TWO_DISSECTION_PRECISION;
    let n = DEFAULT_PRECISION;
    let x3 = || Expr::Named(X).at_power(3);
    let mut entries = vec![
        IdentityEntry::new(
            "phi-product",
            "phi(q) = f2^5 / (f1^2 f4^2)",
            "theta function phi, product form",
            Expr::ClosedSum(Phi),
            eta_quotient(&[(2, 5), (1, -2), (4, -2)]),
            n,
        ),
        IdentityEntry::new(
            "psi-product",
            "psi(q) = f2^2 / f1",
            "theta function psi, product form",
            Expr::ClosedSum(Psi),
            eta_quotient(&[(2, 2), (1, -1)]),
            n,
        ),
        IdentityEntry::new(
            "phi-neg-product",
            "phi(-q) = f1^2 / f2",
            "theta function phi(-q), product form",
            Expr::ClosedSum(PhiNeg),
            eta_quotient(&[(1, 2), (2, -1)]),
            n,
        ),
        IdentityEntry::new(
            "f1sq-2dissection",
            "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8",
            "2-dissection of f1^2",
            eta_quotient(&[(1, 2)]),
            Expr::Sum(vec![
                eta_quotient(&[(2, 1), (8, 5), (4, -2), (16, -2)]),
                eta_quotient(&[(2, 1), (16, 2), (8, -1)]).q_shift(1).times(-2),
            ]),
            n2,
        )
        .tagged(&["2-dissection"]),
        IdentityEntry::new(
            "f1pow4-2dissection",
            "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2",
            "2-dissection of f1^4",
            eta_quotient(&[(1, 4)]),
            Expr::Sum(vec![
                eta_quotient(&[(4, 10), (2, -2), (8, -4)]),
                eta_quotient(&[(2, 2), (8, 4), (4, -2)]).q_shift(1).times(-4),
            ]),
            n2,
        )
        .tagged(&["2-dissection"]),
        IdentityEntry::new(
            "inv-f1pow4-2dissection",
            "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10",
            "2-dissection of 1/f1^4",
            eta_quotient(&[(1, -4)]),
            Expr::Sum(vec![
                eta_quotient(&[(4, 14), (2, -14), (8, -4)]),
                eta_quotient(&[(4, 2), (8, 4), (2, -10)]).q_shift(1).times(4),
            ]),
            n2,
        )
        .tagged(&["2-dissection"]),
        IdentityEntry::new(
            "psi-3dissection",
            "psi(q) = psi(q^9) (1/x(q^3) + q)",
            "3-dissection of psi",
            Expr::Named(Psi),
            Expr::Mul(vec![
                Expr::Named(Psi).at_power(9),
                Expr::Sum(vec![x3().pow(-1), Expr::one().q_shift(1)]),
            ]),
            n,
        )
        .tagged(&["3-dissection"]),
        IdentityEntry::new(
            "inv-phi-neg-3dissection",
            "1/phi(-q) = phi(-q^9)^3/phi(-q^3)^4 (1 + 2q x(q^3) + 4q^2 x(q^3)^2)",
            "3-dissection of 1/phi(-q)",
            Expr::Named(PhiNeg).pow(-1),
            Expr::Mul(vec![
                Expr::Named(PhiNeg).at_power(9).pow(3),
                Expr::Named(PhiNeg).at_power(3).pow(-4),
                Expr::Sum(vec![
                    Expr::one(),
                    x3().q_shift(1).times(2),
                    x3().pow(2).q_shift(2).times(4),
                ]),
            ]),
            n,
        )
        .tagged(&["3-dissection"]),
        IdentityEntry::new(
            "w-eta-form-t1",
            "(q^2;q^2)/((q;q^2)^4 (q;q)^2) = f2^5/(f1^4 f1^2)",
            "definition of w_t as an eta quotient",
            Expr::Named(W(1)),
            eta_quotient(&[(2, 5), (1, -4), (1, -2)]),
            n,
        ),
        IdentityEntry::new(
            "w4-equals-cphi2",
            "sum w_4(n) q^n = (q^2;q^4)/((q;q^2)^4 (q^4;q^4))",
            "w_4(n) = cphi_2(n)",
            Expr::Named(W(4)),
            Expr::Named(CPhi2),
            n2,
        ),
        IdentityEntry::new(
            "a-key-identity",
            "f2^5/f1^4 = f6^4 f9^4 f18/f3^8 (x(q^3)^-2 + 4q x(q^3)^-1 + 9q^2 + 10q^3 x(q^3) + 4q^4 x(q^3)^2)",
            "key identity for f2^5/f1^4 in terms of x(q^3)",
            Expr::Named(A),
            Expr::Mul(vec![
                eta_quotient(&[(6, 4), (9, 4), (18, 1), (3, -8)]),
                Expr::Sum(vec![
                    x3().pow(-2),
                    x3().pow(-1).q_shift(1).times(4),
                    Expr::one().q_shift(2).times(9),
                    x3().q_shift(3).times(10),
                    x3().pow(2).q_shift(4).times(4),
                ]),
            ]),
            n,
        )
        .tagged(&["3-dissection"]),
        IdentityEntry::new(
            "a1-f12-expansion",
            "f1^2 f2^7 = f2^8 f8^5/(f4^2 f16^2) - 2q f2^8 f16^2/f8",
            "2-dissection of f1^2 f2^7",
            eta_quotient(&[(1, 2), (2, 7)]),
            Expr::Sum(vec![
                eta_quotient(&[(2, 8), (8, 5), (4, -2), (16, -2)]),
                eta_quotient(&[(2, 8), (16, 2), (8, -1)]).q_shift(1).times(-2),
            ]),
            n,
        )
        .tagged(&["mod27"]),
        IdentityEntry::new(
            "a1-mod3-step1",
            "f2^4 f3^4 f6/f1^10 == f1^2 f2^7 (mod 3)",
            "a_1 modulo 3",
            Expr::Named(A1),
            eta_quotient(&[(1, 2), (2, 7)]),
            n,
        )
        .modulo(3)
        .tagged(&["mod27"]),
        IdentityEntry::new(
            "a1-mod3-odd-part",
            "sum a_1(2n+1) q^n == -2 f1^8 f8^2/f4 (mod 3)",
            "odd part of a_1 modulo 3",
            Expr::Named(A1).dissect(2, 1),
            eta_quotient(&[(1, 8), (8, 2), (4, -1)]).times(-2),
            n,
        )
        .modulo(3)
        .tagged(&["mod27"]),
        IdentityEntry::new(
            "a1-mod3-4n3",
            "sum a_1(4n+3) q^n == 16 f2^7 f4^2 (mod 3)",
            "a_1(4n+3) modulo 3",
            Expr::Named(A1).dissect(4, 3),
            eta_quotient(&[(2, 7), (4, 2)]).times(16),
            n,
        )
        .modulo(3)
        .tagged(&["mod27"]),
        IdentityEntry::new(
            "a1-mod3-8n7",
            "16 f2^7 f4^2 has no odd powers of q (mod 3)",
            "a_1(8n+7) == 0 modulo 3",
            eta_quotient(&[(2, 7), (4, 2)]).times(16).dissect(2, 1),
            Expr::Zero,
            n,
        )
        .modulo(3)
        .tagged(&["mod27"]),
        IdentityEntry::new(
            "w-mod5-reduction-t5",
            "sum w_5(n) q^n == f1 f10/(f5 f5^2) (mod 5)",
            "w_t modulo 5 for t == 0 (mod 5)",
            Expr::Named(W(5)),
            eta_quotient(&[(1, 1), (10, 1), (5, -1), (5, -2)]),
            n,
        )
        .modulo(5)
        .tagged(&["mod5"]),
        IdentityEntry::new(
            "w-mod5-reduction-t1",
            "sum w_1(n) q^n == f1 f1^3 f10/(f5 f5) (mod 5)",
            "w_t modulo 5 for t != 0 (mod 5)",
            Expr::Named(W(1)),
            eta_quotient(&[(1, 1), (1, 3), (10, 1), (5, -1), (5, -1)]),
            n,
        )
        .modulo(5)
        .tagged(&["mod5"]),
        IdentityEntry::new(
            "w-mod5-reduction-t4",
            "sum w_4(n) q^n == f1 f4^3 f10/(f5 f20) (mod 5)",
            "w_t modulo 5 for t != 0 (mod 5)",
            Expr::Named(W(4)),
            eta_quotient(&[(1, 1), (4, 3), (10, 1), (5, -1), (20, -1)]),
            n,
        )
        .modulo(5)
        .tagged(&["mod5"]),
        IdentityEntry::new(
            "w2-eta-form",
            "sum w_2(n) q^n = f2^3/f1^4",
            "w_2 as an eta quotient",
            Expr::Named(W(2)),
            eta_quotient(&[(2, 3), (1, -4)]),
            n,
        ),
        IdentityEntry::new(
            "w2-mod7-reduction",
            "f2^3/f1^4 == f1^3 f2^3/f7 (mod 7)",
            "w_2 modulo 7",
            Expr::Named(W(2)),
            eta_quotient(&[(1, 3), (2, 3), (7, -1)]),
            n,
        )
        .modulo(7)
        .tagged(&["mod7"]),
        IdentityEntry::new(
            "w2-mod11-reduction",
            "f2^3/f1^4 == f2^14/(f1^4 f22) (mod 11)",
            "w_2 modulo 11",
            Expr::Named(W(2)),
            eta_quotient(&[(2, 14), (1, -4), (22, -1)]),
            n,
        )
        .modulo(11)
        .tagged(&["mod11"]),
    ];

    for t in [2usize, 4, 6] {
        let half = t / 2;
        entries.push(
            IdentityEntry::new(
                &format!("w-even-part-t{t}"),
                &format!("sum w_{t}(2n) q^n = f2^14/(f1^9 f4^4 f{half}^2)"),
                "even part of w_t for even t",
                Expr::Named(W(t)).dissect(2, 0),
                eta_quotient(&[(2, 14), (1, -9), (4, -4), (half, -2)]),
                n2,
            )
            .tagged(&["2-dissection", "mod4"]),
        );
        entries.push(
            IdentityEntry::new(
                &format!("w-odd-part-t{t}"),
                &format!("sum w_{t}(2n+1) q^n = 4 f2^2 f4^4/(f1^5 f{half}^2)"),
                "odd part of w_t for even t",
                Expr::Named(W(t)).dissect(2, 1),
                eta_quotient(&[(2, 2), (4, 4), (1, -5), (half, -2)]).times(4),
                n2,
            )
            .tagged(&["2-dissection", "mod4"]),
        );
    }

    let common = |third: Option<usize>| {
        let mut e = vec![(2, 4), (3, 4), (6, 1), (1, -8)];
        if let Some(k) = third {
            e.push((k, -2));
        }
        eta_quotient(&e)
    };
    for (label, third) in [("a", None), ("w-t3", Some(1usize)), ("w-t6", Some(2))] {
        let (lhs, name) = match third {
            None => (Expr::Named(A), "a".to_string()),
            Some(k) => (Expr::Named(W(3 * k)), format!("w_{}", 3 * k)),
        };
        let tail = third.map(|k| format!("/f{k}^2")).unwrap_or_default();
        entries.push(
            IdentityEntry::new(
                &format!("{label}-3n"),
                &format!(
                    "sum {name}(3n) q^n = f2^4 f3^4 f6/f1^8{tail} (f2^2 f3^6/(f1^2 f6^6) + 10q f1 f6^3/(f2 f3^3))"
                ),
                "3-dissection, residue 0",
                lhs.clone().dissect(3, 0),
                Expr::Mul(vec![
                    common(third),
                    Expr::Sum(vec![
                        eta_quotient(&[(2, 2), (3, 6), (1, -2), (6, -6)]),
                        eta_quotient(&[(1, 1), (6, 3), (2, -1), (3, -3)])
                            .q_shift(1)
                            .times(10),
                    ]),
                ]),
                n,
            )
            .tagged(&["3-dissection"]),
        );
        entries.push(
            IdentityEntry::new(
                &format!("{label}-3n1"),
                &format!(
                    "sum {name}(3n+1) q^n = 4 f2^4 f3^4 f6/f1^8{tail} (f2 f3^3/(f1 f6^3) + q f1^2 f6^6/(f2^2 f3^6))"
                ),
                "3-dissection, residue 1",
                lhs.clone().dissect(3, 1),
                Expr::Mul(vec![
                    common(third).times(4),
                    Expr::Sum(vec![
                        eta_quotient(&[(2, 1), (3, 3), (1, -1), (6, -3)]),
                        eta_quotient(&[(1, 2), (6, 6), (2, -2), (3, -6)]).q_shift(1),
                    ]),
                ]),
                n,
            )
            .tagged(&["3-dissection", "mod4"]),
        );
        entries.push(
            IdentityEntry::new(
                &format!("{label}-3n2"),
                &format!("sum {name}(3n+2) q^n = 9 f2^4 f3^4 f6/f1^8{tail}"),
                "3-dissection, residue 2",
                lhs.dissect(3, 2),
                common(third).times(9),
                n,
            )
            .tagged(&["3-dissection", "mod9"]),
        );
    }
    entries
}

/// Evaluates both sides of `entry` and compares them coefficientwise.
///
/// `precision` defaults to the entry's own default.
pub fn verify_entry(entry: &IdentityEntry, precision: Option<usize>) -> Result<Report> {
    let start = Instant::now();
    let n = precision.unwrap_or(entry.default_precision);
    let modulus = entry.modulus.map(BigInt::from);
    let range = match entry.modulus {
        Some(m) => format!("q^0..q^{} mod {m}", n.saturating_sub(1)),
        None => format!("q^0..q^{}", n.saturating_sub(1)),
    };
    let report = Report::new(&entry.id, &entry.anchor, ReportKind::Identity, range);
    if n == 0 {
        return Ok(report
            .with_note("vacuous: precision 0 compares no coefficients")
            .timed(start));
    }
    let lhs = entry.lhs.eval(n)?;
    let rhs = entry.rhs.eval(n)?;
    let cmp = lhs.equal_upto(&rhs, n, modulus.as_ref())?;
    let report = match cmp.mismatch {
        None => report,
        Some(m) => report.fail(Counterexample {
            index: m.index,
            description: format!("coefficient of q^{} differs between the two sides", m.index),
            values: vec![m.left.to_string(), m.right.to_string()],
        }),
    };
    Ok(report.timed(start))
}
