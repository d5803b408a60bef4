//! The universal scalar: an arbitrary-precision rational, always kept in
//! canonical form (positive denominator, numerator and denominator coprime).
//!
//! `Rational` is `num_rational::BigRational`; its `Display`/`FromStr` already
//! use the exact decimal-free text form required everywhere in this crate:
//! `"num/den"` for proper fractions and plain `"n"` for integers.

use crate::error::{Error, Result};
use alloc::format;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a canonical rational. Panics if `den == 0` (grid literals
/// are static, so a zero denominator is a programming error).
pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "frac: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"n"` or `"num/den"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse()
        .map_err(|e| Error::parse(format!("bad rational literal {text:?}: {e}")))
}

/// `x^e` for any integer exponent, with the empty-product convention
/// `x^0 = 1` (including `0^0 = 1`). `0^e` with `e < 0` is a division by zero.
pub fn pow_i(x: &Rational, e: i64) -> Result<Rational> {
    if e == 0 {
        return Ok(Rational::one());
    }
    if x.is_zero() {
        return if e > 0 {
            Ok(Rational::zero())
        } else {
            Err(Error::DivisionByZero(format!("0^{e}")))
        };
    }
    let exp = u32::try_from(e.unsigned_abs())
        .map_err(|_| Error::domain(format!("exponent {e} out of range")))?;
    let num = x.numer().pow(exp);
    let den = x.denom().pow(exp);
    Ok(if e > 0 {
        // numerator and denominator are coprime, so their powers are too
        Rational::new_raw(num, den)
    } else if num.is_negative() {
        Rational::new_raw(-den, -num)
    } else {
        Rational::new_raw(den, num)
    })
}

/// Nearest `f64` (used only by the floating 2F1 cross-check).
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `(-1)^k`-signed copy of `value`.
pub fn alt(k: i64, value: Rational) -> Rational {
    if k & 1 == 0 {
        value
    } else {
        -value
    }
}

/// `(-1)^k` as a bare sign.
pub fn sign(k: i64) -> i64 {
    if k & 1 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        assert_eq!(frac(-691, 2730).to_string(), "-691/2730");
        assert_eq!(rat(17).to_string(), "17");
        assert_eq!(frac(4, -6).to_string(), "-2/3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["-691/2730", "0", "5", "-3", "7/9"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&frac(2, 3), 3).unwrap(), frac(8, 27));
        assert_eq!(pow_i(&frac(2, 3), -2).unwrap(), frac(9, 4));
        assert_eq!(pow_i(&frac(-1, 2), -3).unwrap(), rat(-8));
        assert_eq!(pow_i(&rat(0), 0).unwrap(), rat(1));
        assert_eq!(pow_i(&rat(0), 4).unwrap(), rat(0));
        assert!(pow_i(&rat(0), -1).is_err());
    }

    proptest! {
        // canonical form survives arithmetic: den > 0 and gcd(num, den) = 1
        #[test]
        fn canonical_after_ops(an in -200i64..200, ad in 1i64..60, bn in -200i64..200, bd in 1i64..60) {
            let a = frac(an, ad);
            let b = frac(bn, bd);
            for v in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(v.denom() > &BigInt::from(0));
                let g = num_integer::gcd(v.numer().clone(), v.denom().clone());
                prop_assert_eq!(g, BigInt::from(1));
            }
        }

        #[test]
        fn pow_matches_repeated_mul(n in -20i64..20, d in 1i64..10, e in 0i64..8) {
            let x = frac(n.max(1), d);
            let mut acc = Rational::one();
            for _ in 0..e { acc *= &x; }
            prop_assert_eq!(pow_i(&x, e).unwrap(), acc);
        }
    }
}
