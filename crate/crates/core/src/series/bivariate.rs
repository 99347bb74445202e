use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::qseries::QSeries;

/// A power series in `q` whose coefficients are Laurent polynomials in `z`.
///
/// Row `n` maps each z-exponent `m` to the coefficient of `z^m q^n`; only
/// nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariateSeries {
    rows: Vec<BTreeMap<i64, BigInt>>,
}

impl BivariateSeries {
    pub fn zero(precision: usize) -> Self {
        BivariateSeries {
            rows: vec![BTreeMap::new(); precision],
        }
    }

    /// Builds a series from explicit rows, dropping zero entries.
    pub fn from_rows(rows: Vec<BTreeMap<i64, BigInt>>) -> Self {
        BivariateSeries {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    pub fn precision(&self) -> usize {
        self.rows.len()
    }

    /// The nonzero `z`-coefficients at q-degree `n`.
    pub fn row(&self, n: usize) -> Option<&BTreeMap<i64, BigInt>> {
        self.rows.get(n)
    }

    /// Coefficient of `z^m q^n`; `None` only when `n` is beyond the precision.
    pub fn coeff(&self, n: usize, m: i64) -> Option<BigInt> {
        self.rows
            .get(n)
            .map(|r| r.get(&m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Adds `value` to the coefficient of `z^m q^n`.
    pub fn add_term(&mut self, n: usize, m: i64, value: &BigInt) {
        let row = &mut self.rows[n];
        let entry = row.entry(m).or_insert_with(BigInt::zero);
        *entry += value;
        if entry.is_zero() {
            row.remove(&m);
        }
    }

    /// Specialization `z = 1`.
    pub fn at_z_one(&self) -> QSeries {
        QSeries::from_coeffs(
            self.rows
                .iter()
                .map(|r| r.values().fold(BigInt::zero(), |acc, c| acc + c))
                .collect(),
        )
    }

    /// Specialization `z = -1`, i.e. coefficients weighted by the parity of `m`.
    pub fn at_z_minus_one(&self) -> QSeries {
        QSeries::from_coeffs(
            self.rows
                .iter()
                .map(|r| {
                    r.iter().fold(BigInt::zero(), |acc, (m, c)| {
                        if m.is_even() {
                            acc + c
                        } else {
                            acc - c
                        }
                    })
                })
                .collect(),
        )
    }

    /// Splits by `m mod modulus`: bucket `k` at degree `n` is the sum of the
    /// coefficients of `z^j q^n` over `j ≡ k (mod modulus)`.
    pub fn residue_buckets(&self, modulus: usize) -> Vec<QSeries> {
        assert!(modulus >= 1, "residue modulus must be positive");
        let mut buckets = vec![vec![BigInt::zero(); self.precision()]; modulus];
        for (n, row) in self.rows.iter().enumerate() {
            for (m, c) in row {
                let k = m.rem_euclid(modulus as i64) as usize;
                buckets[k][n] += c;
            }
        }
        buckets.into_iter().map(QSeries::from_coeffs).collect()
    }

    /// Whether every row is invariant under `m -> -m`.
    pub fn is_z_symmetric(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().all(|(m, c)| r.get(&-m) == Some(c)))
    }

    /// Whether every stored coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().all(|r| r.values().all(|c| !c.is_negative()))
    }

    pub fn truncate(&self, precision: usize) -> Option<BivariateSeries> {
        (precision <= self.precision()).then(|| BivariateSeries {
            rows: self.rows[..precision].to_vec(),
        })
    }
}

/// Dense working storage for bivariate product expansion.
///
/// Row `n` covers z-exponents `-bound(n)..=bound(n)`; the bound grows
/// monotonically fast enough that each binomial step stays in range.
pub(super) struct LaurentRows {
    bounds: Vec<i64>,
    rows: Vec<Vec<BigInt>>,
}

impl LaurentRows {
    pub(super) fn new(precision: usize, bound: impl Fn(usize) -> i64) -> Self {
        let bounds: Vec<i64> = (0..precision).map(bound).collect();
        let mut rows: Vec<Vec<BigInt>> = bounds
            .iter()
            .map(|&b| vec![BigInt::zero(); (2 * b + 1) as usize])
            .collect();
        if let Some(first) = rows.first_mut() {
            let b = bounds[0] as usize;
            first[b] = BigInt::one();
        }
        LaurentRows { bounds, rows }
    }

    /// `rows[dst] += sign * z^z_shift * rows[dst - j]`.
    fn accumulate(&mut self, dst: usize, j: usize, z_shift: i64, subtract: bool) {
        let src_idx = dst - j;
        let (lo, hi) = self.rows.split_at_mut(dst);
        let src = &lo[src_idx];
        let target = &mut hi[0];
        let src_bound = self.bounds[src_idx];
        let dst_bound = self.bounds[dst];
        for (i, c) in src.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = i as i64 - src_bound + z_shift;
            debug_assert!(m.abs() <= dst_bound, "z-degree escaped its bound");
            let slot = &mut target[(m + dst_bound) as usize];
            if subtract {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }

    /// In place: multiply by `(1 - z^z_exponent q^j)`.
    pub(super) fn multiply_binomial(&mut self, j: usize, z_exponent: i64) {
        for dst in (j..self.rows.len()).rev() {
            self.accumulate(dst, j, z_exponent, true);
        }
    }

    /// In place: divide by `(1 - z^z_exponent q^j)`.
    pub(super) fn divide_binomial(&mut self, j: usize, z_exponent: i64) {
        for dst in j..self.rows.len() {
            self.accumulate(dst, j, z_exponent, false);
        }
    }

    pub(super) fn into_series(
        self,
        scalar: &BigInt,
        z_shift: i64,
        q_shift: usize,
        precision: usize,
    ) -> BivariateSeries {
        let mut rows = vec![BTreeMap::new(); precision.min(q_shift)];
        for (row, bound) in self.rows.into_iter().zip(self.bounds) {
            let map: BTreeMap<i64, BigInt> = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - bound + z_shift, c * scalar))
                .collect();
            rows.push(map);
        }
        BivariateSeries { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ProductSpec;

    fn row_pairs(b: &BivariateSeries, n: usize) -> Vec<(i64, i64)> {
        b.row(n)
            .unwrap()
            .iter()
            .map(|(m, c)| (*m, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn geometric_series_in_z() {
        // 1/(1 - z q) = sum z^n q^n
        let spec = ProductSpec::new().factor(crate::series::Factor::new(1, 1, 1000, -1));
        let b = spec.expand_bivariate(5).unwrap();
        for n in 0..5 {
            assert_eq!(row_pairs(&b, n), vec![(n as i64, 1)]);
        }
    }

    #[test]
    fn crank_product_at_low_degree() {
        // f1 / ((zq;q)(q/z;q)) = 1 + (z - 1 + 1/z) q + (z^2 + z^-2) q^2 + ...
        let spec = ProductSpec::new()
            .eta(1, 1)
            .z_pochhammer(1, 1, 1, -1)
            .z_pochhammer(-1, 1, 1, -1);
        let b = spec.expand_bivariate(3).unwrap();
        assert_eq!(row_pairs(&b, 0), vec![(0, 1)]);
        assert_eq!(row_pairs(&b, 1), vec![(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(row_pairs(&b, 2), vec![(-2, 1), (2, 1)]);
    }

    #[test]
    fn buckets_of_z_free_series_collect_in_zero() {
        let b = ProductSpec::new().eta(1, -1).expand_bivariate(8).unwrap();
        let buckets = b.residue_buckets(3);
        assert_eq!(buckets[0], b.at_z_one());
        assert!(buckets[1].is_zero() && buckets[2].is_zero());
    }

    #[test]
    fn specializations_and_shift() {
        let spec = ProductSpec::new()
            .z_pochhammer(2, 1, 2, -1)
            .z_pochhammer(-1, 1, 1, -1)
            .shifted(3, 2)
            .scaled(5);
        let b = spec.expand_bivariate(12).unwrap();
        assert!(b.row(0).unwrap().is_empty() && b.row(1).unwrap().is_empty());
        assert_eq!(row_pairs(&b, 2), vec![(3, 5)]);
        let at_one = ProductSpec::new()
            .pochhammer(1, 2, -1)
            .eta(1, -1)
            .shifted(0, 2)
            .scaled(5)
            .expand(12)
            .unwrap();
        assert_eq!(b.at_z_one(), at_one);
    }

    #[test]
    fn add_term_keeps_storage_sparse() {
        let mut b = BivariateSeries::zero(2);
        b.add_term(1, 4, &BigInt::from(3));
        b.add_term(1, 4, &BigInt::from(-3));
        assert!(b.row(1).unwrap().is_empty());
        assert_eq!(b.coeff(1, 4), Some(BigInt::zero()));
        assert_eq!(b.coeff(2, 0), None);
    }
}
