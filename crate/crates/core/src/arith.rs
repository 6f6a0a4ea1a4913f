//! Exact integer helpers shared by the index and closed-form code.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` as an unbounded integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn binomial_int(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Divides `num` by `den`, failing unless the division is exact.
pub fn exact_div(num: &BigInt, den: &BigInt, context: &str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::NonIntegral(format!("{context}: division by zero")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{context}: {num} / {den}")));
    }
    Ok(q)
}

pub fn halve(value: &BigInt, context: &str) -> Result<BigInt> {
    exact_div(value, &BigInt::from(2), context)
}

pub(crate) fn checked_add_u128(acc: u128, x: u128, what: &'static str) -> Result<u128> {
    acc.checked_add(x).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_mul_u128(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..30u64 {
            for k in 0..=n {
                let expected = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k), expected, "C({n},{k})");
            }
        }
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn binomial_large_is_exact() {
        // C(100, 50)
        let expected: BigUint = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binomial(100, 50), expected);
    }

    #[test]
    fn exact_div_rejects_remainders() {
        let seven = BigInt::from(7);
        assert!(halve(&seven, "test").is_err());
        assert_eq!(halve(&BigInt::from(-16), "test").unwrap(), BigInt::from(-8));
        assert!(exact_div(&seven, &BigInt::zero(), "test").is_err());
    }
}
