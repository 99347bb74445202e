use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{ProductSpec, QSeries};

/// The series with names: theta functions, eta products and the coefficient
/// families of weighted colored partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// `phi(q) = sum_{n in Z} q^{n^2}`
    Phi,
    /// `phi(-q)`
    PhiNeg,
    /// `psi(q) = sum_{n >= 0} q^{n(n+1)/2}`
    Psi,
    /// Ramanujan's cubic quotient `(q;q^2) / (q^3;q^6)^3`
    X,
    /// `f_k = (q^k; q^k)_inf`
    Eta(usize),
    /// `f_1^3`, expanded in closed form by Jacobi's identity
    Jacobi,
    /// `w_t(n)`: `(q^2;q^2) / ((q;q^2)^4 (q^t;q^t)^2)`
    W(usize),
    /// `f_2^5 / f_1^4`
    A,
    /// `f_2^4 f_3^4 f_6 / f_1^10`
    A1,
    /// `f_2^14 / f_1^4`
    A2,
    /// Multirank-parity weighted count `c_t(n)`: `f_2 / ((q^2;q^4)^2 f_t^2)`
    C(usize),
    /// Crank-parity weighted count `d(n)`: `f_2`
    D,
    /// Ordinary partitions `1 / f_1`
    P,
    /// Two-colored Frobenius partitions: `(q^2;q^4) / ((q;q^2)^4 (q^4;q^4))`
    CPhi2,
}

impl SeriesName {
    /// Parses a CLI-style name, taking `t` and `k` for the parametrized families.
    pub fn parse(name: &str, t: Option<usize>, k: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| -> Result<usize> {
            match v {
                Some(0) => Err(Error::InvalidParameter(format!("{what} must be at least 1"))),
                Some(v) => Ok(v),
                None => Err(Error::InvalidParameter(format!("`{name}` needs --{what}"))),
            }
        };
        Ok(match name {
            "phi" => SeriesName::Phi,
            "phi_neg" => SeriesName::PhiNeg,
            "psi" => SeriesName::Psi,
            "x" => SeriesName::X,
            "f" | "f_k" | "eta" => SeriesName::Eta(need(k, "k")?),
            "jacobi" => SeriesName::Jacobi,
            "w" | "w_t" => SeriesName::W(need(t, "t")?),
            "a" => SeriesName::A,
            "a1" => SeriesName::A1,
            "a2" => SeriesName::A2,
            "c" | "c_t" => SeriesName::C(need(t, "t")?),
            "d" => SeriesName::D,
            "p" => SeriesName::P,
            "cphi2" => SeriesName::CPhi2,
            other => return Err(Error::UnknownSeries(other.to_string())),
        })
    }

    /// Every accepted name, for usage text.
    pub const NAMES: &'static [&'static str] = &[
        "phi", "phi_neg", "psi", "x", "f", "jacobi", "w_t", "a", "a1", "a2", "c_t", "d", "p",
        "cphi2",
    ];

    /// The infinite-product form; this is the authoritative expansion.
    pub fn product(&self) -> ProductSpec {
        let p = ProductSpec::new();
        match *self {
            SeriesName::Phi => p.eta(2, 5).eta(1, -2).eta(4, -2),
            SeriesName::PhiNeg => p.eta(1, 2).eta(2, -1),
            SeriesName::Psi => p.eta(2, 2).eta(1, -1),
            SeriesName::X => p.pochhammer(1, 2, 1).pochhammer(3, 6, -3),
            SeriesName::Eta(k) => p.eta(k, 1),
            SeriesName::Jacobi => p.eta(1, 3),
            SeriesName::W(t) => p.eta(2, 1).pochhammer(1, 2, -4).eta(t, -2),
            SeriesName::A => p.eta(2, 5).eta(1, -4),
            SeriesName::A1 => p.eta(2, 4).eta(3, 4).eta(6, 1).eta(1, -10),
            SeriesName::A2 => p.eta(2, 14).eta(1, -4),
            SeriesName::C(t) => p.eta(2, 1).pochhammer(2, 4, -2).eta(t, -2),
            SeriesName::D => p.eta(2, 1),
            SeriesName::P => p.eta(1, -1),
            SeriesName::CPhi2 => p.pochhammer(2, 4, 1).pochhammer(1, 2, -4).eta(4, -1),
        }
    }

    /// Exact expansion from the product form.
    pub fn build(&self, precision: usize) -> Result<QSeries> {
        self.validate()?;
        self.product().expand(precision)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            SeriesName::Eta(0) => Err(Error::InvalidParameter("k must be at least 1".into())),
            SeriesName::W(0) | SeriesName::C(0) => {
                Err(Error::InvalidParameter("t must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Closed-sum expansion for the series that have one.
    pub fn closed_sum(&self, precision: usize) -> Option<QSeries> {
        let mut c = vec![BigInt::zero(); precision];
        let mut put = |index: usize, value: i64| {
            if index < precision {
                c[index] += value;
            }
        };
        match *self {
            SeriesName::Phi | SeriesName::PhiNeg => {
                put(0, 1);
                let sign = if *self == SeriesName::PhiNeg { -1 } else { 1 };
                let mut n = 1usize;
                while n * n < precision {
                    put(n * n, 2 * if n % 2 == 1 { sign } else { 1 });
                    n += 1;
                }
            }
            SeriesName::Psi => {
                let mut n = 0usize;
                while n * (n + 1) / 2 < precision {
                    put(n * (n + 1) / 2, 1);
                    n += 1;
                }
            }
            SeriesName::Eta(_) | SeriesName::D => {
                let k = match *self {
                    SeriesName::Eta(k) => k,
                    _ => 2,
                };
                if k == 0 {
                    return None;
                }
                // sum over m in Z of (-1)^m q^{k m(3m+1)/2}, both signs of m at once
                put(0, 1);
                let mut m = 1usize;
                while k * m * (3 * m - 1) / 2 < precision {
                    let sign = if m % 2 == 1 { -1 } else { 1 };
                    put(k * m * (3 * m - 1) / 2, sign);
                    put(k * m * (3 * m + 1) / 2, sign);
                    m += 1;
                }
            }
            SeriesName::Jacobi => {
                let mut n = 0usize;
                while n * (n + 1) / 2 < precision {
                    let sign = if n % 2 == 1 { -1 } else { 1 };
                    put(n * (n + 1) / 2, sign * (2 * n as i64 + 1));
                    n += 1;
                }
            }
            _ => return None,
        }
        Some(QSeries::from_coeffs(c))
    }

    /// The sequence's parameter `t`, when it has one.
    pub fn t(&self) -> Option<usize> {
        match *self {
            SeriesName::W(t) | SeriesName::C(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::Phi => write!(f, "phi"),
            SeriesName::PhiNeg => write!(f, "phi_neg"),
            SeriesName::Psi => write!(f, "psi"),
            SeriesName::X => write!(f, "x"),
            SeriesName::Eta(k) => write!(f, "f_{k}"),
            SeriesName::Jacobi => write!(f, "jacobi"),
            SeriesName::W(t) => write!(f, "w_{t}"),
            SeriesName::A => write!(f, "a"),
            SeriesName::A1 => write!(f, "a1"),
            SeriesName::A2 => write!(f, "a2"),
            SeriesName::C(t) => write!(f, "c_{t}"),
            SeriesName::D => write!(f, "d"),
            SeriesName::P => write!(f, "p"),
            SeriesName::CPhi2 => write!(f, "cphi2"),
        }
    }
}

/// Builds a named series by its CLI name.
pub fn build(name: &str, t: Option<usize>, k: Option<usize>, precision: usize) -> Result<QSeries> {
    SeriesName::parse(name, t, k)?.build(precision)
}
