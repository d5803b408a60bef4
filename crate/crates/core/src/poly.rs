//! Dense univariate polynomials with rational coefficients.
//!
//! The coefficient at index `i` is the degree-`i` coefficient. The zero
//! polynomial is the empty coefficient list, and every constructor and
//! operation strips trailing zeros, so the leading coefficient of a nonzero
//! polynomial is never zero.

use crate::rational::Rational;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(alloc::vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(alloc::vec![Rational::zero(), Rational::from_integer(1.into())])
    }

    /// Build from low-to-high coefficients, normalizing trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn zero_is_normalized() {
        let p = Poly::from_coeffs(alloc::vec![rat(0), rat(0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p, Poly::zero());
        let q = Poly::from_coeffs(alloc::vec![rat(3), rat(1), rat(0)]);
        assert_eq!(q.degree(), Some(1));
    }

    #[test]
    fn eval_is_exact() {
        // 5 - x/3 + 2x^2 at x = -3/2 is 5 + 1/2 + 9/2 = 10
        let p = Poly::from_coeffs(alloc::vec![rat(5), frac(-1, 3), rat(2)]);
        assert_eq!(p.eval(&frac(-3, 2)), rat(10));
        assert_eq!(Poly::x().eval(&frac(7, 4)), frac(7, 4));
        assert_eq!(Poly::zero().eval(&frac(7, 4)), rat(0));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-12i64..12, 1i64..6), 0..6)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| frac(n, d)).collect()))
    }

    proptest! {
        // evaluation is a ring homomorphism
        #[test]
        fn eval_homomorphism(p in arb_poly(), q in arb_poly(), xn in -9i64..9, xd in 1i64..5) {
            let x = frac(xn, xd);
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
        }

        #[test]
        fn leading_coefficient_nonzero(p in arb_poly()) {
            if let Some(d) = p.degree() {
                prop_assert!(!p.coeff(d).is_zero());
            }
        }
    }
}
