//! Truncated integer power series and the distinct-parts / odd-parts
//! partition identity
//!
//! ```text
//! prod_{m>=1} (1 + t^m) = prod_{m>=1} (1 - t^(2m-1))^(-1)
//! ```
//!
//! checked coefficient by coefficient at a finite truncation order, with an
//! independent brute-force partition counter as the oracle.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};

/// An integer power series truncated at a fixed order: `coeffs[i]` is the
/// coefficient of t^i, 0 <= i <= order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    /// 1 + t^m.
    pub fn one_plus_power(m: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if m <= order {
            s.coeffs[m] += 1;
        }
        s
    }

    /// The geometric series (1 - t^m)^(-1) = 1 + t^m + t^(2m) + ...
    pub fn geometric(m: usize, order: usize) -> Self {
        assert!(m >= 1, "geometric step must be positive");
        let mut s = Self::one(order);
        let mut e = m;
        while e <= order {
            s.coeffs[e] = BigInt::one();
            e += m;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// Product of a list of series, truncated at `order`. The empty product is
/// the constant series 1. Every factor must carry at least `order`
/// coefficients.
pub fn series_product(factors: &[TruncatedSeries], order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    for factor in factors {
        if factor.order() < order {
            return Err(Error::OutOfRange(format!(
                "factor truncated at {} cannot enter a product at order {}",
                factor.order(),
                order
            )));
        }
        acc = acc.mul(factor);
    }
    Ok(acc)
}

/// Outcome of comparing the two sides of the identity through t^order.
#[derive(Clone, Debug)]
pub struct EulerCheck {
    pub order: usize,
    pub ok: bool,
    /// Smallest exponent where the sides disagree, if any.
    pub first_mismatch: Option<usize>,
    /// Coefficients of prod (1 + t^m): partitions into distinct parts.
    pub distinct_side: Vec<BigInt>,
    /// Coefficients of prod (1 - t^(2m-1))^(-1): partitions into odd parts.
    pub odd_side: Vec<BigInt>,
}

/// Expand both products through t^order and compare coefficients.
pub fn euler_check(order: usize) -> Result<EulerCheck> {
    if order < 1 {
        return Err(Error::OutOfRange("order must be at least 1".into()));
    }
    let distinct_factors: Vec<TruncatedSeries> = (1..=order)
        .map(|m| TruncatedSeries::one_plus_power(m, order))
        .collect();
    let odd_factors: Vec<TruncatedSeries> = (1..=order)
        .map(|m| TruncatedSeries::geometric(2 * m - 1, order))
        .collect();
    let distinct = series_product(&distinct_factors, order)?;
    let odd = series_product(&odd_factors, order)?;
    let first_mismatch = (0..=order).find(|&i| distinct.coeff(i) != odd.coeff(i));
    Ok(EulerCheck {
        order,
        ok: first_mismatch.is_none(),
        first_mismatch,
        distinct_side: distinct.coeffs.clone(),
        odd_side: odd.coeffs.clone(),
    })
}

/// Which restricted partition family to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    /// All parts distinct.
    Distinct,
    /// All parts odd.
    Odd,
}

/// Count partitions of `n` of the given kind by exhaustive enumeration.
/// Deliberately independent of the series engine; capped at n = 30 where
/// enumeration stays instant.
pub fn partition_oracle(n: usize, kind: PartitionKind) -> Result<u64> {
    if n > 30 {
        return Err(Error::OutOfRange(format!(
            "oracle is capped at n = 30, got {n}"
        )));
    }
    fn count(remaining: usize, max_part: usize, kind: PartitionKind) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for part in (1..=max_part.min(remaining)).rev() {
            if kind == PartitionKind::Odd && part % 2 == 0 {
                continue;
            }
            let next_max = match kind {
                PartitionKind::Distinct => part - 1,
                PartitionKind::Odd => part,
            };
            total += count(remaining - part, next_max, kind);
        }
        total
    }
    Ok(count(n, n, kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn geometric_series_is_all_ones() {
        let s = TruncatedSeries::geometric(1, 3);
        assert_eq!(s.coeffs(), big(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn product_expands() {
        let a = TruncatedSeries::one_plus_power(1, 3);
        let b = TruncatedSeries::one_plus_power(2, 3);
        let p = a.mul(&b);
        assert_eq!(p.coeffs(), big(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn empty_product_is_one() {
        let p = series_product(&[], 4).unwrap();
        assert_eq!(p.coeffs(), big(&[1, 0, 0, 0, 0]).as_slice());
    }

    #[test]
    fn short_factor_rejected() {
        let short = TruncatedSeries::one(2);
        assert!(series_product(&[short], 5).is_err());
    }

    #[test]
    fn euler_small_orders() {
        let result = euler_check(5).unwrap();
        assert!(result.ok);
        assert_eq!(result.distinct_side, big(&[1, 1, 1, 2, 2, 3]));
        assert_eq!(result.odd_side, big(&[1, 1, 1, 2, 2, 3]));

        let result = euler_check(1).unwrap();
        assert!(result.ok);
        assert_eq!(result.distinct_side, big(&[1, 1]));
    }

    #[test]
    fn oracle_examples() {
        // 5 = 4+1 = 3+2 into distinct parts; 5 = 3+1+1 = 1+1+1+1+1 into odd.
        assert_eq!(partition_oracle(5, PartitionKind::Distinct).unwrap(), 3);
        assert_eq!(partition_oracle(5, PartitionKind::Odd).unwrap(), 3);
        assert_eq!(partition_oracle(0, PartitionKind::Distinct).unwrap(), 1);
        assert_eq!(partition_oracle(0, PartitionKind::Odd).unwrap(), 1);
        assert!(partition_oracle(31, PartitionKind::Odd).is_err());
    }

    #[test]
    fn series_agree_with_oracle() {
        let result = euler_check(30).unwrap();
        for n in 0..=30usize {
            let d = partition_oracle(n, PartitionKind::Distinct).unwrap();
            let o = partition_oracle(n, PartitionKind::Odd).unwrap();
            assert_eq!(result.distinct_side[n], BigInt::from(d), "distinct at {n}");
            assert_eq!(result.odd_side[n], BigInt::from(o), "odd at {n}");
        }
    }
}
