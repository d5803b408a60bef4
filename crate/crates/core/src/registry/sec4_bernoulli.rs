//! Catalog section 4.1: Bernoulli-number double sums.

use super::{entry, Identity, Point, Status};
use crate::binom::bin;
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, frac, pow_i, rat, Rational};
use crate::sequences::bernoulli_number;
use alloc::vec::Vec;
use num_traits::Zero;

fn two_pow(e: i64) -> Result<Rational> {
    pow_i(&rat(2), e)
}

/// `sum_k sum_j C(n,j) (-1)^sign 2^{n-k+j} B_{n-k+j}` with the sign taken
/// from `k` or `j`.
fn scaled_lhs(n: i64, sign_on_k: bool) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let idx = n - k + j;
            let term = bin(n, j) * two_pow(idx)? * bernoulli_number(idx)?;
            acc += alt(if sign_on_k { k } else { j }, term);
        }
    }
    Ok(acc)
}

fn ratio_lhs(n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            let idx = n - k + j + 1;
            let term =
                bin(n, j) * (two_pow(idx)? - rat(1)) * bernoulli_number(idx)? / rat(idx);
            acc += alt(k, term);
        }
    }
    Ok(acc)
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "prop-4.1-signed-shifted",
            "4.1.1.1",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) B[n+j-k] = -B[n-1], n >= 1",
        )
        .int_range("n", 1, 40)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * bernoulli_number(n + j - k)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| Ok(-bernoulli_number(pt.int("n")? - 1)?))
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-two-pow",
            "4.1.2.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k 2^(n-k+j) B[n-k+j] = \
             (-1)^n (2 - 2^(n-1)) B[n-1], n >= 1",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| scaled_lhs(pt.int("n")?, true))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n, (rat(2) - two_pow(n - 1)?) * bernoulli_number(n - 1)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-two-pow-even",
            "4.1.2.2",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k 2^(n-k+j) B[n-k+j] = 0 for even n >= 2",
        )
        .ints("n", &[2, 4, 6, 8, 10, 12, 14, 16])
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2 && n % 2 == 0))
        .lhs(|pt| scaled_lhs(pt.int("n")?, true))
        .rhs(|_| Ok(Rational::zero()))
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-two-pow-signed-j",
            "4.1.3.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(n-k+j) B[n-k+j] = \
             (-1)^(n-1) (2 - 2^(n-1)) B[n-1] + 2(n-1), n >= 1",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| scaled_lhs(pt.int("n")?, false))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n - 1, (rat(2) - two_pow(n - 1)?) * bernoulli_number(n - 1)?) + rat(2 * (n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-two-pow-signed-j-even",
            "4.1.3.2",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(n-k+j) B[n-k+j] = 2(n-1) for even n >= 2",
        )
        .ints("n", &[2, 4, 6, 8, 10, 12, 14, 16])
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2 && n % 2 == 0))
        .lhs(|pt| scaled_lhs(pt.int("n")?, false))
        .rhs(|pt| Ok(rat(2 * (pt.int("n")? - 1))))
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-mersenne-ratio",
            "4.1.4.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k (2^(n-k+j+1)-1) B[n-k+j+1]/(n-k+j+1) \
             = (1 - 2^n) B[n]/n, n >= 1",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| ratio_lhs(pt.int("n")?))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok((rat(1) - two_pow(n)?) * bernoulli_number(n)? / rat(n))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-index-weighted-lower",
            "4.1.5.1",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) (n+j-k) B[n+j-k-1] = (n-1) B[n-2], n >= 1",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let idx = n + j - k;
                    if idx == 0 {
                        continue; // zero multiplier; B[-1] is never evaluated
                    }
                    acc += alt(k, bin(n, j) * rat(idx) * bernoulli_number(idx - 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n == 1 {
                Rational::zero() // (n-1) B[n-2] with zero multiplier
            } else {
                rat(n - 1) * bernoulli_number(n - 2)?
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-index-weighted",
            "4.1.5.2",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) (n+j-k) B[n+j-k] = \
             -(n-1)(B[n-1] + B[n-2]), n >= 1",
        )
        .status(Status::Amended)
        .notes(
            "The cataloged case split (-(n-1)B[n-1] odd / -1/2 at n=2 / \
             -(n-1)B[n-2] even) silently assumes B[n-2] vanishes for odd n, \
             which fails exactly at n = 3 where B[1] = -1/2. The derivation \
             gives the uniform -(n-1)(B[n-1]+B[n-2]), which reduces to the \
             printed cases everywhere else. Witness n = 3: true value 2/3, \
             printed case -1/3.",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let idx = n + j - k;
                    acc += alt(k, bin(n, j) * rat(idx) * bernoulli_number(idx)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n == 1 {
                Rational::zero() // zero multiplier; B[-1] is never evaluated
            } else {
                -rat(n - 1) * (bernoulli_number(n - 1)? + bernoulli_number(n - 2)?)
            })
        })
        .printed(|pt| {
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                -rat(n - 1) * bernoulli_number(n - 1)?
            } else if n == 2 {
                frac(-1, 2)
            } else {
                -rat(n - 1) * bernoulli_number(n - 2)?
            })
        })
        .witness(Point::new().with_int("n", 3), "2/3", "2/3", Some("-1/3"))
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-ratio-diff",
            "4.1.6.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} C(n,j) (-1)^k B[n-k+j]/(k-j) = \
             (-1 if n = 1; 0 if n >= 2)",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(k, bin(n, j) * bernoulli_number(n - k + j)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            Ok(if pt.int("n")? == 1 {
                rat(-1)
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-ratio-diff-mersenne",
            "4.1.6.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} C(n,j) (-1)^k (2^(n-k+j+1)-1) \
             B[n-k+j+1]/((n-k+j+1)(k-j)) = (0 if n even; \
             2(2^(n+1)-1) B[n+1]/(n(n+1)) if n odd)",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let idx = n - k + j + 1;
                    let term = bin(n, j) * (two_pow(idx)? - rat(1)) * bernoulli_number(idx)?
                        / (rat(idx) * rat(k - j));
                    acc += alt(k, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                Rational::zero()
            } else {
                rat(2) * (two_pow(n + 1)? - rat(1)) * bernoulli_number(n + 1)?
                    / (rat(n) * rat(n + 1))
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-plain-diff",
            "4.1.7.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k B[k-j] = B[n] + B[n-1], n >= 1",
        )
        .int_range("n", 1, 40)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * bernoulli_number(k - j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(bernoulli_number(n)? + bernoulli_number(n - 1)?)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.1-plain-diff-two-pow",
            "4.1.7.2",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k 2^(k-j) B[k-j] = \
             (-1)^n ((2-2^n) B[n] - (2-2^(n-1)) B[n-1]), n >= 1",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * two_pow(k - j)? * bernoulli_number(k - j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let a = (rat(2) - two_pow(n)?) * bernoulli_number(n)?;
            let b = (rat(2) - two_pow(n - 1)?) * bernoulli_number(n - 1)?;
            Ok(alt(n, a - b))
        })
        .build(),
    );

    v
}
