//! Exact binomial coefficients.

use crate::error::{Error, Result};

/// `C(n, k)` computed exactly; `Err(Overflow)` if the value does not fit in `u128`.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial"))?
            / u128::from(i + 1);
    }
    Ok(acc)
}

/// Infallible variant for small arguments where overflow is impossible.
pub fn binom_small(n: u64, k: u64) -> u128 {
    binomial(n, k).expect("binomial overflow on small arguments")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: u64, k: u64) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row.get(k as usize).copied().unwrap_or(0)
    }

    #[test]
    fn matches_pascal_triangle() {
        for n in 0..40 {
            for k in 0..=n + 1 {
                assert_eq!(binomial(n, k).unwrap(), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(7, 3).unwrap(), 35);
        assert_eq!(binomial(25, 20).unwrap(), 53130);
        assert_eq!(binomial(0, 0).unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(binomial(300, 150), Err(Error::Overflow("binomial")));
    }
}
