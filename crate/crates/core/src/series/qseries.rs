use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many output coefficients a convolution stays on one thread.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 256;

/// A power series `sum c_n q^n` known exactly for `0 <= n < precision`.
///
/// The coefficient vector always has length equal to the precision, so there
/// is no way to read a coefficient that has not been computed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

/// First coefficient where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    #[serde(serialize_with = "serialize_decimal")]
    pub left: BigInt,
    #[serde(serialize_with = "serialize_decimal")]
    pub right: BigInt,
}

/// Outcome of [`QSeries::equal_upto`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub checked: usize,
    pub modulus: Option<BigInt>,
    pub mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn serialize_decimal<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

impl QSeries {
    /// The zero series known to `precision` coefficients.
    pub fn zero(precision: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); precision],
        }
    }

    /// The constant series 1 (empty when `precision == 0`).
    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if let Some(c) = s.coeffs.first_mut() {
            *c = BigInt::one();
        }
        s
    }

    /// `scalar * q^power`, known to `precision` coefficients.
    pub fn monomial(scalar: impl Into<BigInt>, power: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if power < precision {
            s.coeffs[power] = scalar.into();
        }
        s
    }

    /// Wraps a coefficient vector; its length is the precision.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        QSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QSeries {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`, or `None` when `n` is beyond the precision.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    /// Restricts to the first `precision` coefficients.
    pub fn truncate(&self, precision: usize) -> Result<QSeries> {
        if precision > self.precision() {
            return Err(Error::InsufficientPrecision {
                requested: precision,
                available: self.precision(),
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[..precision].to_vec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, by: &BigInt) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Multiplies by `q^power`; the precision grows by `power`.
    pub fn shift(&self, power: usize) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        QSeries { coeffs }
    }

    /// Coefficientwise reduction into `[0, modulus)`.
    pub fn reduce(&self, modulus: &BigInt) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(modulus)).collect(),
        }
    }

    fn nonzero_terms(&self) -> Vec<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Truncated product; precision is the smaller of the two.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.precision().min(other.precision());
        // Iterate over the sparser operand.
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let terms = sparse.nonzero_terms();
        let dense = &dense.coeffs;
        let coefficient = |k: usize| -> BigInt {
            let mut acc = BigInt::zero();
            for &(i, a) in &terms {
                if i > k {
                    break;
                }
                let b = &dense[k - i];
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        };
        #[cfg(feature = "parallel")]
        let coeffs: Vec<BigInt> = if n >= PARALLEL_THRESHOLD {
            (0..n).into_par_iter().map(coefficient).collect()
        } else {
            (0..n).map(coefficient).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let coeffs: Vec<BigInt> = (0..n).map(coefficient).collect();
        QSeries { coeffs }
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse. The constant term must be `+1` or `-1`.
    pub fn inverse(&self) -> Result<QSeries> {
        let n = self.precision();
        if n == 0 {
            return Ok(QSeries::zero(0));
        }
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NonUnit(c0.to_string()));
        }
        let negative = c0.is_negative();
        let terms: Vec<(usize, &BigInt)> = self.nonzero_terms().into_iter().skip(1).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for &(i, a) in &terms {
                if i > k {
                    break;
                }
                acc += a * &out[k - i];
            }
            // b_k = -c0^{-1} * acc with c0^{-1} = c0
            out.push(if negative { acc } else { -acc });
        }
        Ok(QSeries { coeffs: out })
    }

    /// Integer power; negative exponents invert the positive power.
    pub fn pow(&self, exponent: i64) -> Result<QSeries> {
        let mut base = self.clone();
        let mut e = exponent.unsigned_abs();
        let mut acc = QSeries::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        if exponent < 0 {
            acc.inverse()
        } else {
            Ok(acc)
        }
    }

    /// Replaces `q` by `q^k`. The result is known to `k * precision` terms.
    pub fn substitute_power(&self, k: usize) -> Result<QSeries> {
        if k == 0 {
            return Err(Error::ZeroSubstitution);
        }
        let mut coeffs = vec![BigInt::zero(); self.precision() * k];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = c.clone();
        }
        Ok(QSeries { coeffs })
    }

    /// The subseries `sum_n c_{mn+r} q^n`, known to `ceil((precision - r)/m)` terms.
    pub fn dissect(&self, modulus: usize, residue: usize) -> Result<QSeries> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidDissection { modulus, residue });
        }
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .skip(residue)
                .step_by(modulus)
                .cloned()
                .collect(),
        })
    }

    /// Compares the first `n` coefficients, optionally modulo `modulus`.
    ///
    /// Asking for more coefficients than either side knows is an error.
    pub fn equal_upto(
        &self,
        other: &QSeries,
        n: usize,
        modulus: Option<&BigInt>,
    ) -> Result<Comparison> {
        let available = self.precision().min(other.precision());
        if n > available {
            return Err(Error::InsufficientPrecision {
                requested: n,
                available,
            });
        }
        let mismatch = (0..n).find_map(|i| {
            let (a, b) = (&self.coeffs[i], &other.coeffs[i]);
            let differs = match modulus {
                Some(m) => !(a - b).is_multiple_of(m),
                None => a != b,
            };
            differs.then(|| Mismatch {
                index: i,
                left: a.clone(),
                right: b.clone(),
            })
        });
        Ok(Comparison {
            checked: n,
            modulus: modulus.cloned(),
            mismatch,
        })
    }

    /// Coefficients as decimal strings, the JSON wire form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

/// Truncation of `prod_{n>=0} (1 - q^{offset + n*step})`.
pub fn pochhammer_series(offset: usize, step: usize, precision: usize) -> Result<QSeries> {
    if offset == 0 || step == 0 {
        return Err(Error::InvalidFactor(format!(
            "offset {offset} and step {step} must both be positive"
        )));
    }
    let mut s = QSeries::one(precision);
    let mut j = offset;
    while j < precision {
        super::product::multiply_binomial(s.coeffs_mut(), j);
        j += step;
    }
    Ok(s)
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(q^{})]", self.precision())
    }
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QSeries { coeffs })
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
