use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::bivariate::{BivariateSeries, LaurentRows};
use super::qseries::QSeries;
use crate::error::{Error, Result};

/// One generalized Pochhammer factor `(z^z_exponent q^offset; q^step)_inf^exponent`,
/// i.e. `prod_{n>=0} (1 - z^z_exponent q^{offset + n*step})^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub z_exponent: i64,
    pub offset: usize,
    pub step: usize,
    pub exponent: i64,
}

impl Factor {
    pub fn new(z_exponent: i64, offset: usize, step: usize, exponent: i64) -> Self {
        Factor {
            z_exponent,
            offset,
            step,
            exponent,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.offset == 0 {
            return Err(Error::InvalidFactor(format!(
                "q-offset must be at least 1 (got {:?})",
                self
            )));
        }
        if self.step == 0 {
            return Err(Error::InvalidFactor(format!(
                "q-step must be at least 1 (got {:?})",
                self
            )));
        }
        Ok(())
    }
}

/// A symbolic product `scalar * z^z_shift * q^q_shift * prod factors`.
///
/// Every eta quotient and every z-decorated rank/crank product in this crate
/// is a `ProductSpec`. Nothing is computed until [`ProductSpec::expand`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProductSpec {
    factors: Vec<Factor>,
    #[serde(serialize_with = "decimal")]
    scalar: BigInt,
    z_shift: i64,
    q_shift: usize,
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Default for ProductSpec {
    fn default() -> Self {
        ProductSpec {
            factors: Vec::new(),
            scalar: BigInt::one(),
            z_shift: 0,
            q_shift: 0,
        }
    }
}

/// Result of [`expand`]: univariate when no factor carries `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Univariate(QSeries),
    Bivariate(BivariateSeries),
}

/// Expands a product, choosing the univariate or bivariate carrier.
pub fn expand(spec: &ProductSpec, precision: usize) -> Result<Expansion> {
    if spec.is_univariate() {
        spec.expand(precision).map(Expansion::Univariate)
    } else {
        spec.expand_bivariate(precision).map(Expansion::Bivariate)
    }
}

impl ProductSpec {
    /// The empty product, i.e. the constant 1.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn factor(mut self, factor: Factor) -> Self {
        self.factors.push(factor);
        self
    }

    /// Multiplies by `(q^offset; q^step)_inf^exponent`.
    pub fn pochhammer(self, offset: usize, step: usize, exponent: i64) -> Self {
        self.factor(Factor::new(0, offset, step, exponent))
    }

    /// Multiplies by `f_k^exponent = (q^k; q^k)_inf^exponent`.
    pub fn eta(self, k: usize, exponent: i64) -> Self {
        self.pochhammer(k, k, exponent)
    }

    /// Multiplies by `(z^z_exponent q^offset; q^step)_inf^exponent`.
    pub fn z_pochhammer(self, z_exponent: i64, offset: usize, step: usize, exponent: i64) -> Self {
        self.factor(Factor::new(z_exponent, offset, step, exponent))
    }

    pub fn scaled(mut self, by: impl Into<BigInt>) -> Self {
        self.scalar *= by.into();
        self
    }

    /// Multiplies by the monomial `z^z_power q^q_power`.
    pub fn shifted(mut self, z_power: i64, q_power: usize) -> Self {
        self.z_shift += z_power;
        self.q_shift += q_power;
        self
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn scalar(&self) -> &BigInt {
        &self.scalar
    }

    pub fn leading_monomial(&self) -> (i64, usize) {
        (self.z_shift, self.q_shift)
    }

    pub fn is_univariate(&self) -> bool {
        self.z_shift == 0 && self.factors.iter().all(|f| f.z_exponent == 0)
    }

    /// The same product with `q` replaced by `q^k`.
    pub fn substituted(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroSubstitution);
        }
        Ok(ProductSpec {
            factors: self
                .factors
                .iter()
                .map(|f| Factor::new(f.z_exponent, f.offset * k, f.step * k, f.exponent))
                .collect(),
            scalar: self.scalar.clone(),
            z_shift: self.z_shift,
            q_shift: self.q_shift * k,
        })
    }

    /// The same product with `z` replaced by `z^k` (negative `k` allowed).
    pub fn z_substituted(&self, k: i64) -> Self {
        ProductSpec {
            factors: self
                .factors
                .iter()
                .map(|f| Factor::new(f.z_exponent * k, f.offset, f.step, f.exponent))
                .collect(),
            scalar: self.scalar.clone(),
            z_shift: self.z_shift * k,
            q_shift: self.q_shift,
        }
    }

    fn validate(&self) -> Result<()> {
        self.factors.iter().try_for_each(Factor::validate)
    }

    /// Exact univariate expansion to `precision` coefficients.
    ///
    /// Each binomial `(1 - q^j)^{+-1}` is applied in place, so negative
    /// exponents never need a general series inversion.
    pub fn expand(&self, precision: usize) -> Result<QSeries> {
        self.validate()?;
        if !self.is_univariate() {
            return Err(Error::NotUnivariate);
        }
        let inner = precision.saturating_sub(self.q_shift);
        let mut series = QSeries::one(inner);
        let coeffs = series.coeffs_mut();
        for f in &self.factors {
            let mut j = f.offset;
            while j < inner {
                for _ in 0..f.exponent.unsigned_abs() {
                    if f.exponent > 0 {
                        multiply_binomial(coeffs, j);
                    } else {
                        divide_binomial(coeffs, j);
                    }
                }
                j += f.step;
            }
        }
        let scaled = if self.scalar.is_one() {
            series
        } else {
            series.scale(&self.scalar)
        };
        if self.q_shift == 0 {
            return Ok(scaled);
        }
        let mut coeffs = vec![BigInt::zero(); precision.min(self.q_shift)];
        coeffs.extend(scaled.into_coeffs());
        Ok(QSeries::from_coeffs(coeffs))
    }

    /// Exact expansion as a series in `q` with Laurent-polynomial coefficients in `z`.
    pub fn expand_bivariate(&self, precision: usize) -> Result<BivariateSeries> {
        self.validate()?;
        let inner = precision.saturating_sub(self.q_shift);
        // |z-degree| at q-degree n never exceeds n * max(|z_exponent| / offset).
        let bound = |n: usize| -> i64 {
            self.factors
                .iter()
                .map(|f| (f.z_exponent.unsigned_abs() as usize * n / f.offset) as i64)
                .max()
                .unwrap_or(0)
        };
        let mut rows = LaurentRows::new(inner, bound);
        for f in &self.factors {
            let mut j = f.offset;
            while j < inner {
                for _ in 0..f.exponent.unsigned_abs() {
                    if f.exponent > 0 {
                        rows.multiply_binomial(j, f.z_exponent);
                    } else {
                        rows.divide_binomial(j, f.z_exponent);
                    }
                }
                j += f.step;
            }
        }
        Ok(rows.into_series(&self.scalar, self.z_shift, self.q_shift, precision))
    }
}

/// In place: `coeffs *= (1 - q^j)`.
pub(crate) fn multiply_binomial(coeffs: &mut [BigInt], j: usize) {
    for i in (j..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        let src = &lo[i - j];
        if !src.is_zero() {
            hi[0] -= src;
        }
    }
}

/// In place: `coeffs /= (1 - q^j)`.
pub(crate) fn divide_binomial(coeffs: &mut [BigInt], j: usize) {
    for i in j..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(i);
        let src = &lo[i - j];
        if !src.is_zero() {
            hi[0] += src;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// Number of `k`-colored partitions of each `n < len`, by coin change.
    fn colored_partitions(k: usize, len: usize) -> Vec<i64> {
        let mut p = vec![0i64; len];
        p[0] = 1;
        for _ in 0..k {
            for part in 1..len {
                for m in part..len {
                    p[m] += p[m - part];
                }
            }
        }
        p
    }

    #[test]
    fn w4_generating_function_prefix() {
        let spec = ProductSpec::new().eta(2, 5).eta(1, -4).eta(4, -2);
        let s = spec.expand(4).unwrap();
        assert_eq!(ints(&s)[..2], [1, 4]);
        assert_eq!(ints(&s)[3], 20);
    }

    #[test]
    fn f2_cubed_over_f1_fourth_matches_convolution_oracle() {
        // 4-colored partitions convolved with f2^3 = 1 - 3q^2 + O(q^6)
        let four = colored_partitions(4, 5);
        assert_eq!(four, vec![1, 4, 14, 40, 105]);
        let oracle = four[4] - 3 * four[2];
        let s = ProductSpec::new().eta(2, 3).eta(1, -4).expand(5).unwrap();
        assert_eq!(oracle, 63);
        assert_eq!(i64::try_from(&s.coeffs()[4]).unwrap(), oracle);
    }

    #[test]
    fn empty_product_is_one() {
        let s = ProductSpec::new().expand(6).unwrap();
        assert_eq!(s, QSeries::one(6));
        match expand(&ProductSpec::new(), 3).unwrap() {
            Expansion::Univariate(s) => assert_eq!(s, QSeries::one(3)),
            Expansion::Bivariate(_) => panic!("expected univariate"),
        }
    }

    #[test]
    fn rejects_zero_offset() {
        let spec = ProductSpec::new().pochhammer(0, 1, 1);
        assert!(matches!(spec.expand(5), Err(Error::InvalidFactor(_))));
        let spec = ProductSpec::new().z_pochhammer(1, 0, 2, -1);
        assert!(matches!(spec.expand_bivariate(5), Err(Error::InvalidFactor(_))));
    }

    #[test]
    fn scalar_and_shift() {
        let s = ProductSpec::new().eta(1, 1).scaled(-2).shifted(0, 3).expand(7).unwrap();
        assert_eq!(ints(&s), vec![0, 0, 0, -2, 2, 2, 0]);
        let tiny = ProductSpec::new().shifted(0, 5).expand(2).unwrap();
        assert_eq!(ints(&tiny), vec![0, 0]);
    }

    #[test]
    fn factor_order_does_not_matter() {
        let a = ProductSpec::new().eta(1, -4).pochhammer(1, 2, 3).eta(3, 2);
        let b = ProductSpec::new().eta(3, 2).pochhammer(1, 2, 3).eta(1, -4);
        assert_eq!(a.expand(60).unwrap(), b.expand(60).unwrap());
    }

    #[test]
    fn substituted_product_matches_series_substitution() {
        let spec = ProductSpec::new().eta(2, 2).eta(1, -1).shifted(0, 1);
        let direct = spec.substituted(3).unwrap().expand(60).unwrap();
        let via_series = spec.expand(20).unwrap().substitute_power(3).unwrap();
        assert_eq!(direct, via_series);
    }

    #[test]
    fn expand_matches_series_arithmetic() {
        let n = 80;
        let f1 = super::super::pochhammer_series(1, 1, n).unwrap();
        let f2 = super::super::pochhammer_series(2, 2, n).unwrap();
        let by_ring = f2.pow(5).unwrap().mul(&f1.pow(-4).unwrap());
        let by_spec = ProductSpec::new().eta(2, 5).eta(1, -4).expand(n).unwrap();
        assert_eq!(by_ring, by_spec);
    }
}
