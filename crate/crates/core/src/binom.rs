//! Binomial coefficients, factorials, and the Kronecker delta.
//!
//! Out-of-range conventions matter here: the double sums downstream lean on
//! `C(n,k) = 0` for `k < 0` or `k > n`, and the generalized coefficient
//! extends that with `C(x,k) = 0` for `k < 0`. Small Pascal rows are
//! memoized; large arguments fall back to the multiplicative formula.

use crate::error::{Error, Result};
use crate::rational::{BigInt, Rational};
use crate::sync::Lock;
use alloc::format;
use alloc::vec::Vec;

/// Rows 0..=PASCAL_MAX of Pascal's triangle are cached; anything larger is
/// recomputed per call (rare: only the Catalan closed-form cross-checks).
const PASCAL_MAX: i64 = 160;

static PASCAL: Lock<Vec<Vec<BigInt>>> = Lock::new(Vec::new());
static FACTORIALS: Lock<Vec<BigInt>> = Lock::new(Vec::new());

/// `C(n, k)` for `n >= 0`; zero outside `0 <= k <= n`.
///
/// A negative `n` is a domain error; generalized upper arguments go through
/// [`gen_binomial`].
pub fn binomial(n: i64, k: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!(
            "binomial upper argument must be non-negative, got {n}"
        )));
    }
    Ok(bin(n, k))
}

/// Infallible `C(n, k)` for call sites that guarantee `n >= 0` structurally.
pub(crate) fn bin(n: i64, k: i64) -> Rational {
    debug_assert!(n >= 0, "bin: negative upper argument {n}");
    if k < 0 || k > n {
        return Rational::from_integer(BigInt::from(0));
    }
    if n <= PASCAL_MAX {
        {
            let rows = PASCAL.read();
            if let Some(row) = rows.get(n as usize) {
                return Rational::from_integer(row[k as usize].clone());
            }
        }
        let mut rows = PASCAL.write();
        while rows.len() as i64 <= n {
            let next = match rows.last() {
                None => alloc::vec![BigInt::from(1)],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigInt::from(1));
                    for w in prev.windows(2) {
                        row.push(&w[0] + &w[1]);
                    }
                    row.push(BigInt::from(1));
                    row
                }
            };
            rows.push(next);
        }
        return Rational::from_integer(rows[n as usize][k as usize].clone());
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `1 / C(n, k)`; errors when the coefficient is zero.
pub fn inv_binomial(n: i64, k: i64) -> Result<Rational> {
    let b = binomial(n, k)?;
    if b == Rational::from_integer(BigInt::from(0)) {
        return Err(Error::DivisionByZero(format!("1/C({n},{k})")));
    }
    Ok(Rational::from_integer(BigInt::from(1)) / b)
}

/// Generalized binomial coefficient `C(x, k) = x(x-1)...(x-k+1) / k!` for a
/// rational upper argument. Zero for `k < 0`, matching the integer
/// convention the cataloged closed forms rely on.
pub fn gen_binomial(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::from_integer(BigInt::from(0));
    }
    let mut num = Rational::from_integer(BigInt::from(1));
    for i in 0..k {
        num *= x - Rational::from_integer(BigInt::from(i));
    }
    num / Rational::from_integer(fact_big(k))
}

/// `1 / C(x, k)`; errors when the generalized coefficient vanishes.
pub fn inv_gen_binomial(x: &Rational, k: i64) -> Result<Rational> {
    let b = gen_binomial(x, k);
    if b == Rational::from_integer(BigInt::from(0)) {
        return Err(Error::DivisionByZero(format!("1/C({x},{k})")));
    }
    Ok(Rational::from_integer(BigInt::from(1)) / b)
}

/// `n!` as a rational; domain error for `n < 0`.
pub fn factorial(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("factorial of negative {n}")));
    }
    Ok(Rational::from_integer(fact_big(n)))
}

fn fact_big(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    {
        let cache = FACTORIALS.read();
        if let Some(v) = cache.get(n as usize) {
            return v.clone();
        }
    }
    let mut cache = FACTORIALS.write();
    if cache.is_empty() {
        cache.push(BigInt::from(1));
    }
    while cache.len() as i64 <= n {
        let next = cache.last().expect("non-empty") * BigInt::from(cache.len());
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Kronecker delta: 1 when `i == j`, else 0.
pub fn kronecker_delta(i: i64, j: i64) -> Rational {
    Rational::from_integer(BigInt::from(u8::from(i == j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2).unwrap(), rat(10));
        assert_eq!(binomial(3, 5).unwrap(), rat(0));
        assert_eq!(binomial(0, 0).unwrap(), rat(1));
        assert_eq!(binomial(7, -1).unwrap(), rat(0));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn pascal_rule_holds() {
        for n in 1..=64 {
            for k in 0..=n {
                assert_eq!(
                    bin(n, k),
                    bin(n - 1, k - 1) + bin(n - 1, k),
                    "Pascal fails at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn large_arguments_bypass_cache() {
        // n > PASCAL_MAX goes through the multiplicative fallback
        assert_eq!(bin(200, 1), rat(200));
        assert_eq!(bin(200, 199), rat(200));
        assert_eq!(bin(200, 2), rat(19900));
    }

    #[test]
    fn gen_binomial_examples() {
        assert_eq!(gen_binomial(&frac(-1, 2), 2), frac(3, 8));
        assert_eq!(gen_binomial(&rat(7), 3), rat(35));
        assert_eq!(gen_binomial(&rat(0), 0), rat(1));
        assert_eq!(gen_binomial(&rat(3), -2), rat(0));
    }

    #[test]
    fn gen_matches_integer_binomial() {
        for m in 0..=40 {
            for k in 0..=(m + 3) {
                assert_eq!(gen_binomial(&rat(m), k), bin(m, k), "mismatch at ({m},{k})");
            }
        }
    }

    #[test]
    fn negated_upper_argument() {
        // C(-r-1, n) = (-1)^n C(n+r, n), the reflection used by the
        // inverse-binomial closed forms
        for r in 0..6i64 {
            for n in 0..8i64 {
                let lhs = gen_binomial(&rat(-r - 1), n);
                let rhs = crate::rational::alt(n, bin(n + r, n));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn factorial_and_inverse() {
        assert_eq!(factorial(0).unwrap(), rat(1));
        assert_eq!(factorial(6).unwrap(), rat(720));
        assert!(factorial(-2).is_err());
        assert_eq!(inv_binomial(6, 3).unwrap(), frac(1, 20));
        assert!(inv_binomial(3, 5).is_err());
    }

    #[test]
    fn kronecker() {
        assert_eq!(kronecker_delta(0, 0), rat(1));
        assert_eq!(kronecker_delta(3, 0), rat(0));
        assert_eq!(kronecker_delta(-2, -2), rat(1));
    }
}
