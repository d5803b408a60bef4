//! Evaluators for the incomplete-binomial double-sum kernels.
//!
//! The driving shape is `sum_{k=0}^n x^k sum_{j=0}^k C(n,j) y^j`: the inner
//! sum is an incomplete binomial expansion with no elementary closed form,
//! but the double sum collapses to a geometric-kernel closed form away from
//! `x = 1`. Everything here is exact except [`hypergeometric_2f1_check`],
//! the single floating-point routine in the crate, which cross-checks the
//! incomplete sum against a truncated 2F1 series.
//!
//! The hyperbolic corollaries are evaluated under `t = e^{x/2}`, which turns
//! both sides into Laurent polynomials in `t`; equality at more rational
//! points than the Laurent span then implies the identity as functions.

use crate::binom::bin;
use crate::error::{Error, Result};
use crate::guard;
use crate::rational::{alt, pow_i, rat, to_f64, Rational};
use alloc::format;
use alloc::string::ToString;
use num_traits::{One, Signed, Zero};

/// `sum_{j=0}^k C(n,j) y^j` for `0 <= k <= n`.
pub fn incomplete_binomial_sum(n: i64, k: i64, y: &Rational) -> Result<Rational> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::domain(format!(
            "incomplete binomial sum needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    let mut acc = Rational::zero();
    for j in 0..=k {
        acc += bin(n, j) * pow_i(y, j)?;
    }
    Ok(acc)
}

/// Brute-force left side `sum_{k=0}^n x^k sum_{j=0}^k C(n,j) y^j`.
pub fn thm31_lhs(n: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("geometric kernel needs n >= 0, got {n}")));
    }
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += pow_i(x, k)? * incomplete_binomial_sum(n, k, y)?;
    }
    Ok(acc)
}

/// Closed form `((1+xy)^n - x^{n+1} (1+y)^n) / (1-x)`; `x = 1` is a
/// singular parameter (the differentiated family handles that line).
pub fn thm31_rhs(n: i64, x: &Rational, y: &Rational) -> Result<Rational> {
    guard::note_closed_form();
    if n < 0 {
        return Err(Error::domain(format!("geometric kernel needs n >= 0, got {n}")));
    }
    if x == &Rational::one() {
        return Err(Error::SingularParameter(
            "closed form is undefined at x = 1".to_string(),
        ));
    }
    let a = pow_i(&(Rational::one() + x * y), n)?;
    let b = pow_i(x, n + 1)? * pow_i(&(Rational::one() + y), n)?;
    Ok((a - b) / (Rational::one() - x))
}

/// Brute-force side of the differentiated x = 1 family:
/// `sum_k sum_{j<=k} C(n,j) (-1)^j (1-y)^j` for `n >= 1`.
pub fn cor32_lhs(n: i64, y: &Rational) -> Result<Rational> {
    if n < 1 {
        return Err(Error::domain(format!("differentiated family needs n >= 1, got {n}")));
    }
    let mut lhs = Rational::zero();
    let one_minus_y = Rational::one() - y;
    for k in 0..=n {
        for j in 0..=k {
            lhs += alt(j, bin(n, j) * pow_i(&one_minus_y, j)?);
        }
    }
    Ok(lhs)
}

/// Closed form `n y^{n-1} + y^n` of the differentiated family.
pub fn cor32_rhs(n: i64, y: &Rational) -> Result<Rational> {
    guard::note_closed_form();
    if n < 1 {
        return Err(Error::domain(format!("differentiated family needs n >= 1, got {n}")));
    }
    Ok(rat(n) * pow_i(y, n - 1)? + pow_i(y, n)?)
}

/// Both sides of the differentiated x = 1 family.
pub fn cor32_sides(n: i64, y: &Rational) -> Result<(Rational, Rational)> {
    Ok((cor32_lhs(n, y)?, cor32_rhs(n, y)?))
}

/// True iff the differentiated x = 1 identity holds at `(n, y)`.
pub fn cor32_check(n: i64, y: &Rational) -> Result<bool> {
    let (lhs, rhs) = cor32_sides(n, y)?;
    Ok(lhs == rhs)
}

/// Both sides of the power-weighted variant
/// `sum_k sum_{j<=k} C(n,j) (-1)^j y^{n-k+j} = (1-y)^{n-1}`, `n >= 1`.
pub fn power_double_sum_sides(n: i64, y: &Rational) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(Error::domain(format!("power kernel needs n >= 1, got {n}")));
    }
    let mut lhs = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            lhs += alt(j, bin(n, j) * pow_i(y, n - k + j)?);
        }
    }
    guard::note_closed_form();
    let rhs = pow_i(&(Rational::one() - y), n - 1)?;
    Ok((lhs, rhs))
}

/// Truncated-series cross-check of the incomplete binomial sum against its
/// 2F1 representation:
/// `sum_{j<=k} C(n,j) y^j = y^{k+1}/(y+1) C(n,k) 2F1(1, n+1; n+1-k; 1/(y+1))`.
///
/// The series is summed in `f64` until the next term falls below
/// `eps * partial`; the result must match the exact sum within relative
/// tolerance `10 * eps`. Parameters with `|1/(y+1)| >= 1` are outside the
/// convergent regime and are rejected. This is the only floating-point
/// computation in the crate.
pub fn hypergeometric_2f1_check(n: i64, k: i64, y: &Rational, eps: f64) -> Result<bool> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::domain(format!(
            "2F1 check needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    if !eps.is_finite() || eps <= 0.0 || eps >= 1.0 {
        return Err(Error::domain(format!("tolerance must be in (0, 1), got {eps}")));
    }
    let y1 = y + Rational::one();
    if y1.is_zero() {
        return Err(Error::NonConvergent("y = -1 puts the series at z = infinity".to_string()));
    }
    let z_exact = Rational::one() / &y1;
    if z_exact.abs() >= Rational::one() {
        return Err(Error::NonConvergent(format!(
            "|1/(y+1)| = {} is outside the |z| < 1 disc",
            z_exact.abs()
        )));
    }
    let z = to_f64(&z_exact);
    // 2F1(1, n+1; n+1-k; z): with a = 1 the i-th term is
    // prod_{l<i} (n+1+l)/(n+1-k+l) * z^i
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut i = 0i64;
    loop {
        term *= (n + 1 + i) as f64 / (n + 1 - k + i) as f64 * z;
        sum += term;
        i += 1;
        if term.abs() < eps * sum.abs() {
            break;
        }
        if i > 100_000 {
            return Err(Error::NonConvergent(
                "series did not reach the requested tolerance".to_string(),
            ));
        }
    }
    let prefactor = to_f64(&(pow_i(y, k + 1)? / &y1)) * to_f64(&bin(n, k));
    let approx = prefactor * sum;
    let exact = to_f64(&incomplete_binomial_sum(n, k, y)?);
    let err = (approx - exact).abs();
    Ok(if exact == 0.0 {
        err <= 10.0 * eps
    } else {
        err <= 10.0 * eps * exact.abs()
    })
}

/// The hyperbolic corollaries, keyed by the shape of their right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicIdentity {
    /// `sum 2^m cosh^m(x/2) cosh(mx/2)` terms against `(-1)^{n-1} cosh((n-1)x)`.
    CoshReflection,
    /// Same weights with `sinh(mx/2)` against `(-1)^{n-1} sinh((n-1)x)`.
    SinhReflection,
    /// `1/(k-j)`-weighted sum against `(-1)^n (cosh(nx) - 2^n cosh^n(x/2) cosh(nx/2))`.
    CoshDifference,
    /// Sinh version of the difference form.
    SinhDifference,
    /// Reversed-exponent sum against `cosh(nx) + cosh((n-1)x)`.
    CoshSum,
    /// Sinh version of the sum form.
    SinhSum,
    /// Integrated family against `(-1)^n ((n+1) cosh(nx) - cosh((n+1)x)) - (n+2)`.
    CoshIntegrated,
    /// Sinh version of the integrated family.
    SinhIntegrated,
}

impl HyperbolicIdentity {
    pub const ALL: [HyperbolicIdentity; 8] = [
        HyperbolicIdentity::CoshReflection,
        HyperbolicIdentity::SinhReflection,
        HyperbolicIdentity::CoshDifference,
        HyperbolicIdentity::SinhDifference,
        HyperbolicIdentity::CoshSum,
        HyperbolicIdentity::SinhSum,
        HyperbolicIdentity::CoshIntegrated,
        HyperbolicIdentity::SinhIntegrated,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            HyperbolicIdentity::CoshReflection => "cosh-reflection",
            HyperbolicIdentity::SinhReflection => "sinh-reflection",
            HyperbolicIdentity::CoshDifference => "cosh-difference",
            HyperbolicIdentity::SinhDifference => "sinh-difference",
            HyperbolicIdentity::CoshSum => "cosh-sum",
            HyperbolicIdentity::SinhSum => "sinh-sum",
            HyperbolicIdentity::CoshIntegrated => "cosh-integrated",
            HyperbolicIdentity::SinhIntegrated => "sinh-integrated",
        }
    }

    /// Laurent degree span of both sides in `t` (max minus min exponent);
    /// sampling more distinct points than this span proves the identity as
    /// functions of `t`.
    pub fn laurent_span(&self, n: i64) -> i64 {
        match self {
            HyperbolicIdentity::CoshIntegrated | HyperbolicIdentity::SinhIntegrated => 4 * n + 4,
            _ => 4 * n,
        }
    }
}

impl core::str::FromStr for HyperbolicIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cosh-reflection" | "cosh-identity-1" => HyperbolicIdentity::CoshReflection,
            "sinh-reflection" | "sinh-identity-1" => HyperbolicIdentity::SinhReflection,
            "cosh-difference" | "cosh-identity-2" => HyperbolicIdentity::CoshDifference,
            "sinh-difference" | "sinh-identity-2" => HyperbolicIdentity::SinhDifference,
            "cosh-sum" | "cosh-identity-3" => HyperbolicIdentity::CoshSum,
            "sinh-sum" | "sinh-identity-3" => HyperbolicIdentity::SinhSum,
            "cosh-integrated" | "cosh-identity-4" => HyperbolicIdentity::CoshIntegrated,
            "sinh-integrated" | "sinh-identity-4" => HyperbolicIdentity::SinhIntegrated,
            other => return Err(Error::unknown(format!("no hyperbolic identity named {other:?}"))),
        })
    }
}

/// `cosh(m x / 2)` and `sinh(m x / 2)` as exact Laurent values at
/// `t = e^{x/2}`.
struct TSub {
    t: Rational,
}

impl TSub {
    fn new(t: &Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::domain(format!(
                "the t-substitution needs t > 0, got {t}"
            )));
        }
        if t == &Rational::one() {
            return Err(Error::domain(
                "t = 1 collapses the substitution (x = 0)".to_string(),
            ));
        }
        Ok(TSub { t: t.clone() })
    }

    fn cosh_half(&self, m: i64) -> Result<Rational> {
        Ok((pow_i(&self.t, m)? + pow_i(&self.t, -m)?) / rat(2))
    }

    fn sinh_half(&self, m: i64) -> Result<Rational> {
        Ok((pow_i(&self.t, m)? - pow_i(&self.t, -m)?) / rat(2))
    }

    /// cosh(kx) = cosh_half(2k)
    fn cosh(&self, k: i64) -> Result<Rational> {
        self.cosh_half(2 * k)
    }

    fn sinh(&self, k: i64) -> Result<Rational> {
        self.sinh_half(2 * k)
    }
}

/// Brute-force left side of a hyperbolic corollary at `t = e^{x/2}`.
pub fn hyperbolic_lhs(kind: HyperbolicIdentity, t: &Rational, n: i64) -> Result<Rational> {
    use HyperbolicIdentity::*;
    if n < 1 {
        return Err(Error::domain(format!("hyperbolic corollaries need n >= 1, got {n}")));
    }
    let sub = TSub::new(t)?;
    let ch1 = sub.cosh_half(1)?;
    let osc = |m: i64| -> Result<Rational> {
        match kind {
            CoshReflection | CoshDifference | CoshSum | CoshIntegrated => sub.cosh_half(m),
            _ => sub.sinh_half(m),
        }
    };
    let mut acc = Rational::zero();
    match kind {
        CoshReflection | SinhReflection => {
            for k in 0..=n {
                for j in 0..=k {
                    let m = n - k + j;
                    let w = pow_i(&rat(2), m)? * pow_i(&ch1, m)? * osc(m)?;
                    acc += alt(j, bin(n, j) * w);
                }
            }
        }
        CoshDifference | SinhDifference => {
            for k in 1..=n {
                for j in 0..k {
                    let m = n - k + j;
                    let w = pow_i(&rat(2), m)? * pow_i(&ch1, m)? * osc(m)?;
                    acc += alt(j, rat(n) * bin(n, j) * w / rat(k - j));
                }
            }
        }
        CoshSum | SinhSum => {
            for k in 0..=n {
                for j in 0..=k {
                    let m = k - j;
                    let w = pow_i(&rat(2), m)? * pow_i(&ch1, m)? * osc(m)?;
                    acc += alt(j, bin(n, j) * w);
                }
            }
        }
        CoshIntegrated | SinhIntegrated => {
            for k in 0..=n {
                for j in 0..=k {
                    let m = j + 1;
                    let w = pow_i(&rat(2), m)? * pow_i(&ch1, m)? * osc(m)?;
                    acc += alt(j + 1, bin(n + 1, j + 1) * w);
                }
            }
        }
    }
    Ok(acc)
}

/// Closed-form right side of a hyperbolic corollary at `t = e^{x/2}`.
pub fn hyperbolic_rhs(kind: HyperbolicIdentity, t: &Rational, n: i64) -> Result<Rational> {
    use HyperbolicIdentity::*;
    guard::note_closed_form();
    if n < 1 {
        return Err(Error::domain(format!("hyperbolic corollaries need n >= 1, got {n}")));
    }
    let sub = TSub::new(t)?;
    Ok(match kind {
        CoshReflection => alt(n - 1, sub.cosh(n - 1)?),
        SinhReflection => alt(n - 1, sub.sinh(n - 1)?),
        CoshDifference => {
            let inner = sub.cosh(n)?
                - pow_i(&rat(2), n)? * pow_i(&sub.cosh_half(1)?, n)? * sub.cosh_half(n)?;
            alt(n, inner)
        }
        SinhDifference => {
            let inner = sub.sinh(n)?
                - pow_i(&rat(2), n)? * pow_i(&sub.cosh_half(1)?, n)? * sub.sinh_half(n)?;
            alt(n, inner)
        }
        CoshSum => sub.cosh(n)? + sub.cosh(n - 1)?,
        SinhSum => sub.sinh(n)? + sub.sinh(n - 1)?,
        CoshIntegrated => {
            alt(n, rat(n + 1) * sub.cosh(n)? - sub.cosh(n + 1)?) - rat(n + 2)
        }
        SinhIntegrated => alt(n, rat(n + 1) * sub.sinh(n)? - sub.sinh(n + 1)?),
    })
}

/// Both sides of the selected hyperbolic corollary at `t = e^{x/2}`.
pub fn hyperbolic_eval(
    kind: HyperbolicIdentity,
    t: &Rational,
    n: i64,
) -> Result<(Rational, Rational)> {
    Ok((hyperbolic_lhs(kind, t, n)?, hyperbolic_rhs(kind, t, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn incomplete_sum_examples() {
        assert_eq!(incomplete_binomial_sum(4, 4, &rat(1)).unwrap(), rat(16));
        assert_eq!(incomplete_binomial_sum(3, 1, &rat(2)).unwrap(), rat(7));
        assert_eq!(incomplete_binomial_sum(2, 0, &rat(5)).unwrap(), rat(1));
        assert!(incomplete_binomial_sum(2, 3, &rat(1)).is_err());
        assert!(incomplete_binomial_sum(2, -1, &rat(1)).is_err());
    }

    #[test]
    fn geometric_kernel_examples() {
        assert_eq!(thm31_lhs(1, &rat(2), &rat(3)).unwrap(), rat(9));
        assert_eq!(thm31_rhs(1, &rat(2), &rat(3)).unwrap(), rat(9));
        assert_eq!(thm31_lhs(0, &rat(5), &rat(7)).unwrap(), rat(1));
        assert_eq!(thm31_rhs(0, &rat(5), &rat(7)).unwrap(), rat(1));
        assert_eq!(thm31_lhs(2, &rat(0), &rat(4)).unwrap(), rat(1));
        assert_eq!(thm31_rhs(2, &rat(0), &rat(4)).unwrap(), rat(1));
        assert!(matches!(
            thm31_rhs(2, &rat(1), &rat(4)),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn geometric_kernel_grid() {
        let grid = [rat(-3), rat(-1), frac(-1, 2), rat(0), frac(1, 2), rat(2), rat(3)];
        for n in 0..=8 {
            for x in &grid {
                for y in &grid {
                    if x == &rat(1) {
                        continue;
                    }
                    assert_eq!(
                        thm31_lhs(n, x, y).unwrap(),
                        thm31_rhs(n, x, y).unwrap(),
                        "n={n} x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn differentiated_family_examples() {
        let (l, r) = cor32_sides(2, &rat(3)).unwrap();
        assert_eq!(l, rat(15));
        assert_eq!(r, rat(15));
        let (l, r) = cor32_sides(1, &rat(0)).unwrap();
        assert_eq!(l, rat(1));
        assert_eq!(r, rat(1));
        let (l, r) = cor32_sides(3, &rat(-1)).unwrap();
        assert_eq!(l, rat(2));
        assert_eq!(r, rat(2));
        for n in 1..=12 {
            for y in [rat(-2), frac(-1, 3), rat(0), frac(2, 5), rat(1), rat(4)] {
                assert!(cor32_check(n, &y).unwrap(), "n={n} y={y}");
            }
        }
        assert!(cor32_sides(0, &rat(1)).is_err());
    }

    #[test]
    fn power_kernel_grid() {
        for n in 1..=16 {
            for y in [rat(-3), frac(-1, 2), rat(0), frac(1, 3), rat(2), rat(5)] {
                let (l, r) = power_double_sum_sides(n, &y).unwrap();
                assert_eq!(l, r, "n={n} y={y}");
            }
        }
    }

    #[test]
    fn series_check_examples() {
        assert_eq!(incomplete_binomial_sum(5, 2, &rat(3)).unwrap(), rat(106));
        assert!(hypergeometric_2f1_check(5, 2, &rat(3), 1e-12).unwrap());
        assert!(hypergeometric_2f1_check(1, 1, &rat(9), 1e-12).unwrap());
        assert!(matches!(
            hypergeometric_2f1_check(4, 0, &frac(-1, 2), 1e-12),
            Err(Error::NonConvergent(_))
        ));
        assert!(matches!(
            hypergeometric_2f1_check(4, 0, &rat(-1), 1e-12),
            Err(Error::NonConvergent(_))
        ));
        assert!(hypergeometric_2f1_check(4, 0, &rat(-3), 1e-12).unwrap());
        assert!(hypergeometric_2f1_check(3, 5, &rat(2), 1e-12).is_err());
    }

    #[test]
    fn hyperbolic_point_examples() {
        use HyperbolicIdentity::*;
        let (l, r) = hyperbolic_eval(CoshReflection, &rat(2), 1).unwrap();
        assert_eq!(l, rat(1));
        assert_eq!(r, rat(1));
        let (l, r) = hyperbolic_eval(SinhReflection, &rat(2), 1).unwrap();
        assert_eq!(l, rat(0));
        assert_eq!(r, rat(0));
        let (l, r) = hyperbolic_eval(CoshReflection, &frac(3, 2), 3).unwrap();
        assert_eq!(r, frac(6817, 2592)); // cosh(2x) at t = 3/2
        assert_eq!(l, r);
        assert!(hyperbolic_eval(CoshSum, &rat(1), 3).is_err());
        assert!(hyperbolic_eval(CoshSum, &rat(-2), 3).is_err());
        assert!(hyperbolic_eval(CoshSum, &rat(2), 0).is_err());
    }

    #[test]
    fn hyperbolic_grid_all_kinds() {
        let ts = [frac(1, 3), frac(1, 2), frac(2, 3), frac(3, 2), rat(2), rat(3)];
        for kind in HyperbolicIdentity::ALL {
            for n in 1..=8 {
                for t in &ts {
                    let (l, r) = hyperbolic_eval(kind, t, n).unwrap();
                    assert_eq!(l, r, "{} n={n} t={t}", kind.name());
                }
            }
        }
    }

    #[test]
    fn hyperbolic_names_parse() {
        for kind in HyperbolicIdentity::ALL {
            let back: HyperbolicIdentity = kind.name().parse().unwrap();
            assert_eq!(back, kind);
        }
        let alias: HyperbolicIdentity = "cosh-identity-1".parse().unwrap();
        assert_eq!(alias, HyperbolicIdentity::CoshReflection);
        assert!("cosh-nope".parse::<HyperbolicIdentity>().is_err());
    }
}
