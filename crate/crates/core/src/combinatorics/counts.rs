use num_bigint::BigInt;
use num_traits::Zero;

use super::vector::{for_each_vector, statistic_distribution, Family};
use crate::error::Result;

/// `p(0), ..., p(len - 1)` by Euler's pentagonal recurrence.
pub fn partition_numbers(len: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); len];
    if len == 0 {
        return p;
    }
    p[0] = BigInt::from(1);
    for n in 1..len {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let plus = k % 2 == 1;
            let mut add = |idx: usize| {
                if plus {
                    acc += &p[idx];
                } else {
                    acc -= &p[idx];
                }
            };
            add(n - g1);
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                add(n - g2);
            }
            k += 1;
        }
        p[n] = acc;
    }
    p
}

/// Coefficient of `q^n` in `(q^2; q^2)_inf`: `(-1)^k` when `n = k(3k +- 1)`,
/// zero otherwise.
pub fn pentagonal_d(n: usize) -> i64 {
    if n % 2 == 1 {
        return 0;
    }
    let half = n / 2;
    let mut k = 0usize;
    while k * (3 * k).saturating_sub(1) / 2 <= half {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        if k * (3 * k + 1) / 2 == half || (k > 0 && k * (3 * k - 1) / 2 == half) {
            return sign;
        }
        k += 1;
    }
    0
}

/// `sum wt * (-1)^statistic` over all vectors of size `n`.
///
/// For `V_t` this is `c_t(n)`; for `W_2` it is `d(n)`.
pub fn parity_weighted(family: Family, n: usize, force: bool) -> Result<BigInt> {
    let mut total = 0i64;
    for_each_vector(family, n, force, |c| {
        let sign = if family.statistic_of(c) % 2 == 0 { 1 } else { -1 };
        total += sign * family.weight_of(c);
    })?;
    Ok(BigInt::from(total))
}

/// Weighted count `sum wt` over all vectors of size `n`; equals `w_t(n)`.
pub fn weighted_total(family: Family, n: usize, force: bool) -> Result<BigInt> {
    Ok(statistic_distribution(family, n, force)?
        .values()
        .sum())
}
