//! Shared evaluator shapes for the pair-quantified identities.
//!
//! Left sides are raw double sums over pair term primitives; right sides
//! are the cataloged closed forms and announce themselves to the
//! independence guard. Sum bounds follow the uniform conventions: empty
//! sums are zero, and terms with a structural zero multiplier are skipped
//! before their sequence factor is evaluated.

use crate::binom::{bin, inv_binomial};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::harmonic;
use crate::transform::TransformPair;
use num_traits::{One, Zero};

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s_{m+n-k+j}`
pub(crate) fn shifted_lhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, bin(n, j) * pair.s(m + n - k + j)?);
        }
    }
    Ok(acc)
}

/// `sum_{k=0}^m (-1)^k C(m,k) sigma_{n+k-1}` (needs n >= 1)
pub(crate) fn shifted_rhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += alt(k, bin(m, k) * pair.sigma(n + k - 1)?);
    }
    Ok(acc)
}

/// Harmonic-weighted double sum. `amended` selects the inner weight
/// `C(n,j)` demanded by the derivation; the original form has `C(n,k)`.
pub(crate) fn harmonic_weight_lhs(pair: &TransformPair, n: i64, amended: bool) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let w = if amended { bin(n, j) } else { bin(n, k) };
            let idx = n + j - k;
            acc += alt(j, w * harmonic(idx, 1)? * pair.s(idx)?);
        }
    }
    Ok(acc)
}

/// `sigma_{n-1} H_{n-1} - sum_{k=1}^{n-1} sigma_{n-1-k}/k` (needs n >= 1)
pub(crate) fn harmonic_weight_rhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = pair.sigma(n - 1)? * harmonic(n - 1, 1)?;
    for k in 1..=(n - 1) {
        acc -= pair.sigma(n - 1 - k)? / rat(k);
    }
    Ok(acc)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s_{m+k-j} t_{n-k+j}`
pub(crate) fn two_pair_lhs(
    ps: &TransformPair,
    pt: &TransformPair,
    n: i64,
    m: i64,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, rat(n) * bin(n, j) * ps.s(m + k - j)? * pt.s(n - k + j)?);
        }
    }
    Ok(acc)
}

/// `sum_{k=1}^n (-1)^k k C(n,k) tau_{n-k} (sigma_k - sigma_{k-1})`
/// (the k = 0 term vanishes with its factor)
pub(crate) fn two_pair_rhs(ps: &TransformPair, pt: &TransformPair, n: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += alt(
            k,
            rat(k) * bin(n, k) * pt.sigma(n - k)? * (ps.sigma(k)? - ps.sigma(k - 1)?),
        );
    }
    Ok(acc)
}

/// `sum_{k=1}^n sum_{j=0}^m (-1)^{k+j} k C(n,k) C(m,j) tau_{n-k}
/// (sigma_{j+k} - sigma_{j+k-1})`
pub(crate) fn two_pair_rhs_general(
    ps: &TransformPair,
    pt: &TransformPair,
    n: i64,
    m: i64,
) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        for j in 0..=m {
            acc += alt(
                k + j,
                rat(k) * bin(n, k) * bin(m, j) * pt.sigma(n - k)?
                    * (ps.sigma(j + k)? - ps.sigma(j + k - 1)?),
            );
        }
    }
    Ok(acc)
}

/// `sum_{k=1}^n (-1)^{n-k} k C(n,k) s_k t_{n-k}`
pub(crate) fn two_pair_intermediate_rhs(
    ps: &TransformPair,
    pt: &TransformPair,
    n: i64,
) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += alt(n - k, rat(k) * bin(n, k) * ps.s(k)? * pt.s(n - k)?);
    }
    Ok(acc)
}

/// `sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) s_{m+n-k+j} / (k-j)`
pub(crate) fn ratio_lhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 1..=n {
        for j in 0..k {
            acc += alt(j, rat(n) * bin(n, j) * pair.s(m + n - k + j)? / rat(k - j));
        }
    }
    Ok(acc)
}

/// `sum_{k=0}^m (-1)^k C(m,k) sigma_{k+n} - (-1)^n s_{m+n}`
pub(crate) fn ratio_rhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += alt(k, bin(m, k) * pair.sigma(k + n)?);
    }
    Ok(acc - alt(n, pair.s(m + n)?))
}

/// Self-inverse specialization of [`ratio_rhs`]:
/// `sum_{k=0}^{m-1} (-1)^k C(m,k) s_{k+n} + ((-1)^m - (-1)^n) s_{m+n}`
pub(crate) fn ratio_rhs_self(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 0..m {
        acc += alt(k, bin(m, k) * pair.s(k + n)?);
    }
    let tail = (alt(m, Rational::one()) - alt(n, Rational::one())) * pair.s(m + n)?;
    Ok(acc + tail)
}

/// Anti-self-inverse specialization:
/// `-sum_{k=0}^{m-1} (-1)^k C(m,k) s_{k+n} - ((-1)^m + (-1)^n) s_{m+n}`
pub(crate) fn ratio_rhs_anti(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 0..m {
        acc -= alt(k, bin(m, k) * pair.s(k + n)?);
    }
    let tail = (alt(m, Rational::one()) + alt(n, Rational::one())) * pair.s(m + n)?;
    Ok(acc - tail)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s_{m+k-j}`
pub(crate) fn plain_lhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, bin(n, j) * pair.s(m + k - j)?);
        }
    }
    Ok(acc)
}

/// `(-1)^n sum_{k=0}^m (-1)^k C(m,k) (sigma_{k+n} - sigma_{k+n-1})`
/// (needs n >= 1)
pub(crate) fn plain_rhs(pair: &TransformPair, n: i64, m: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += alt(k, bin(m, k) * (pair.sigma(k + n)? - pair.sigma(k + n - 1)?));
    }
    Ok(alt(n, acc))
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) t^{k-j} s_{n-k+j}`
pub(crate) fn geometric_lhs(pair: &TransformPair, n: i64, t: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, rat(n) * bin(n, j) * pow_i(t, k - j)? * pair.s(n - k + j)?);
        }
    }
    Ok(acc)
}

/// `sum_{k=1}^n (-1)^{k+1} k C(n,k) sigma_{n-k} t (1-t)^{k-1}`
pub(crate) fn geometric_rhs(pair: &TransformPair, n: i64, t: &Rational) -> Result<Rational> {
    guard::note_closed_form();
    let one_minus_t = Rational::one() - t;
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += alt(
            k + 1,
            rat(k) * bin(n, k) * pair.sigma(n - k)? * t * pow_i(&one_minus_t, k - 1)?,
        );
    }
    Ok(acc)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s_{n-k+j} /
/// ((k-j+s) C(k-j+r, k-j+s))` for integer `r >= s >= 1`
pub(crate) fn beta_lhs(pair: &TransformPair, n: i64, r: i64, s: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let d = k - j;
            let w = inv_binomial(d + r, d + s)? / rat(d + s);
            acc += alt(j, rat(n) * bin(n, j) * w * pair.s(n - k + j)?);
        }
    }
    Ok(acc)
}

/// `sum_{k=1}^n (-1)^{k+1} k C(n,k) sigma_{n-k} / ((s+1) C(r+k, s+1))`
pub(crate) fn beta_rhs(pair: &TransformPair, n: i64, r: i64, s: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = inv_binomial(r + k, s + 1)? / rat(s + 1);
        acc += alt(k + 1, rat(k) * bin(n, k) * w * pair.sigma(n - k)?);
    }
    Ok(acc)
}

/// Beta-kernel sum with the differentiated harmonic factor
/// `(H_{r-s} - H_{k-j+r})` on each term.
pub(crate) fn beta_harmonic_lhs(pair: &TransformPair, n: i64, r: i64, s: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let d = k - j;
            let w = inv_binomial(d + r, d + s)? / rat(d + s);
            let h = harmonic(r - s, 1)? - harmonic(d + r, 1)?;
            acc += alt(j, rat(n) * bin(n, j) * w * h * pair.s(n - k + j)?);
        }
    }
    Ok(acc)
}

/// Right side of the differentiated beta identity, with factor
/// `(H_{r+k-s-1} - H_{r+k})`.
pub(crate) fn beta_harmonic_rhs(pair: &TransformPair, n: i64, r: i64, s: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = inv_binomial(r + k, s + 1)? / rat(s + 1);
        let h = harmonic(r + k - s - 1, 1)? - harmonic(r + k, 1)?;
        acc += alt(k + 1, rat(k) * bin(n, k) * w * h * pair.sigma(n - k)?);
    }
    Ok(acc)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) H_{k-j+1}/(k-j+1) s_{n-k+j}`
pub(crate) fn harmonic_ratio_lhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let d = k - j;
            acc += alt(
                j,
                rat(n) * bin(n, j) * harmonic(d + 1, 1)? / rat(d + 1) * pair.s(n - k + j)?,
            );
        }
    }
    Ok(acc)
}

/// Amended right side `sum_{k=1}^n (-1)^{k+1} C(n,k) (2k+1)/(k(k+1)^2)
/// sigma_{n-k}`: the sum starts at k = 1 and carries the sign of the
/// derivation from the differentiated beta identity at r = s = 1.
pub(crate) fn harmonic_ratio_rhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    guard::note_closed_form();
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = rat(2 * k + 1) / (rat(k) * rat(k + 1) * rat(k + 1));
        acc += alt(k + 1, bin(n, k) * w * pair.sigma(n - k)?);
    }
    Ok(acc)
}

/// The original form: starts at k = 0 (dividing by zero) with the opposite
/// sign; kept evaluable for the witness.
pub(crate) fn harmonic_ratio_rhs_printed(pair: &TransformPair, n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let denom = rat(k) * rat(k + 1) * rat(k + 1);
        if denom.is_zero() {
            return Err(crate::error::Error::DivisionByZero(
                "original form divides by k = 0".into(),
            ));
        }
        acc += alt(k, bin(n, k) * rat(2 * k + 1) / denom * pair.sigma(n - k)?);
    }
    Ok(acc)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^{j+1} C(n+1, j+1) s_{j+1}`
pub(crate) fn integrated_lhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j + 1, bin(n + 1, j + 1) * pair.s(j + 1)?);
        }
    }
    Ok(acc)
}

/// `(n+1) sigma_n + sigma_{n+1} - (n+2) sigma_0`
pub(crate) fn integrated_rhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    guard::note_closed_form();
    Ok(rat(n + 1) * pair.sigma(n)? + pair.sigma(n + 1)? - rat(n + 2) * pair.sigma(0)?)
}

/// `sum_{k=0}^n sum_{j=0}^k (-1)^j C(n+2, j+2) s_{j+2}`
pub(crate) fn twice_integrated_lhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, bin(n + 2, j + 2) * pair.s(j + 2)?);
        }
    }
    Ok(acc)
}

/// `(n+2) sigma_{n+1} + sigma_{n+2} + (n+2)^2 s_1 - (n+3) s_0`
pub(crate) fn twice_integrated_rhs(pair: &TransformPair, n: i64) -> Result<Rational> {
    guard::note_closed_form();
    Ok(rat(n + 2) * pair.sigma(n + 1)? + pair.sigma(n + 2)? + rat((n + 2) * (n + 2)) * pair.s(1)?
        - rat(n + 3) * pair.s(0)?)
}
