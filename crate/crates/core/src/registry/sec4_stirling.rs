//! Catalog section 4.5: power sums and Stirling numbers of the second kind.

use super::{entry, Identity, Point, Status};
use crate::binom::{bin, factorial, gen_binomial, inv_binomial, inv_gen_binomial};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::stirling2;
use alloc::vec::Vec;
use num_traits::Zero;

fn ipow(base: i64, e: i64) -> Result<Rational> {
    pow_i(&rat(base), e)
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "lem-4.5-power-sum",
            "4.5.1.1",
            "sum_{k=0}^n (-1)^k C(n,k) k^r = (-1)^n n! S(r,n)",
        )
        .int_range("n", 0, 20)
        .int_range("r", 0, 10)
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * ipow(k, r)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, factorial(n)? * stirling2(r, n)?))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.5-power-sum-shift",
            "4.5.1.2",
            "sum_{k=0}^n (-1)^k C(n,k) (k+1)^(r-1) = (-1)^n n! S(r,n+1), r >= 1",
        )
        .int_range("n", 0, 20)
        .int_range("r", 1, 10)
        .constraint(|pt| pt.int("r").is_ok_and(|r| r >= 1))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * ipow(k + 1, r - 1)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, factorial(n)? * stirling2(r, n + 1)?))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.5-stirling-ratio",
            "4.5.1.3",
            "sum_{k=0}^n (-1)^k C(n,k) S(k+r+1,s+1) C(k+r,r)^-1 = \
             (-1)^n S(n+r,s) C(n+r,r)^-1, s >= r",
        )
        .int_range("n", 0, 16)
        .int_range("r", 0, 4)
        .int_range("s", 0, 6)
        .constraint(|pt| {
            let (r, s) = (pt.int("r").unwrap_or(-1), pt.int("s").unwrap_or(-1));
            r >= 0 && s >= r
        })
        .lhs(|pt| {
            let (n, r, s) = (pt.int("n")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * stirling2(k + r + 1, s + 1)? * inv_binomial(k + r, r)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r, s) = (pt.int("n")?, pt.int("r")?, pt.int("s")?);
            Ok(alt(n, stirling2(n + r, s)? * inv_binomial(n + r, r)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-shifted",
            "4.5.2.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) (m+n-k+j)^r = \
             (-1)^(n-1) sum_{k=0}^m C(m,k) (n+k-1)! S(r,n+k-1)",
        )
        .status(Status::EdgeRestricted)
        .notes(
            "Stated for non-negative n, r, s; at n = 0 the right side hits \
             (-1)! and is undefined.",
        )
        .int_range("n", 1, 12)
        .int_range("m", 0, 6)
        .int_range("r", 0, 8)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 0).with_int("r", 1),
            "0",
            "undefined",
            None,
        )
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * ipow(m + n - k + j, r)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += bin(m, k) * factorial(n + k - 1)? * stirling2(r, n + k - 1)?;
            }
            Ok(alt(n - 1, acc))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-shifted-offset",
            "4.5.2.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) (m+n-k+j+1)^(r-1) = \
             (-1)^(n-1) sum_{k=0}^m C(m,k) (n+k-1)! S(r,n+k), r >= 1, n >= 1",
        )
        .status(Status::Amended)
        .notes(
            "The cataloged base (m+n-k+j)^(r-1) agrees with the derivation's \
             (m+n-k+j+1)^(r-1) only for n >= r (their difference is the \
             shifted transform of a degree r-2 polynomial). Amended to the \
             +1 base, which holds for every n >= 1. Witness n = 1, m = 0, \
             r = 2: amended sides 1, original base gives 0.",
        )
        .int_range("n", 1, 12)
        .int_range("m", 0, 6)
        .int_range("r", 1, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 1))
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * ipow(m + n - k + j + 1, r - 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += bin(m, k) * factorial(n + k - 1)? * stirling2(r, n + k)?;
            }
            Ok(alt(n - 1, acc))
        })
        .printed(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * ipow(m + n - k + j, r - 1)?);
                }
            }
            Ok(acc)
        })
        .witness(
            Point::new().with_int("n", 1).with_int("m", 0).with_int("r", 2),
            "1",
            "1",
            Some("0"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-stirling-ratio-shifted",
            "4.5.2.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) S(m+n-k+j+r+1,s+1) \
             C(m+n-k+j+r,r)^-1 = (-1)^(n-1) sum_{k=0}^m C(m,k) S(n+k+r-1,s) \
             C(n+k+r-1,r)^-1, s >= r, n >= 1",
        )
        .status(Status::Amended)
        .notes(
            "The cataloged right side keeps a stray (-1)^k inside the m-sum; \
             the pair's transform already carries (-1)^(n+k-1), so the signs \
             must cancel. Witness n = m = r = s = 1: corrected sides 3/2, the \
             printed form gives 1/2.",
        )
        .int_range("n", 1, 10)
        .int_range("m", 0, 5)
        .int_range("r", 0, 3)
        .int_range("s", 0, 5)
        .constraint(|pt| {
            let (r, s) = (pt.int("r").unwrap_or(-1), pt.int("s").unwrap_or(-1));
            r >= 0 && s >= r && pt.int("n").is_ok_and(|n| n >= 1)
        })
        .lhs(|pt| {
            let (n, m, r, s) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = m + n - k + j;
                    acc += alt(
                        j,
                        bin(n, j) * stirling2(i + r + 1, s + 1)? * inv_binomial(i + r, r)?,
                    );
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r, s) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += bin(m, k) * stirling2(n + k + r - 1, s)? * inv_binomial(n + k + r - 1, r)?;
            }
            Ok(alt(n - 1, acc))
        })
        .printed(|pt| {
            let (n, m, r, s) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(
                    k,
                    bin(m, k) * stirling2(n + k + r - 1, s)? * inv_binomial(n + k + r - 1, r)?,
                );
            }
            Ok(alt(n - 1, acc))
        })
        .witness(
            Point::new()
                .with_int("n", 1)
                .with_int("m", 1)
                .with_int("r", 1)
                .with_int("s", 1),
            "3/2",
            "3/2",
            Some("1/2"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-ratio",
            "4.5.3.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j C(n,j) (n-k+j)^r/(k-j) = \
             (-1)^n (n-1)! S(r,n) - (-1)^n n^(r-1), n >= 1",
        )
        .int_range("n", 1, 14)
        .int_range("r", 0, 10)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, bin(n, j) * ipow(n - k + j, r)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, factorial(n - 1)? * stirling2(r, n)? - ipow(n, r - 1)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-ratio-offset",
            "4.5.3.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j C(n,j) (n-k+j+1)^(r-1)/(k-j) = \
             (-1)^n (n-1)! S(r,n+1) - (-1)^n (n+1)^(r-1)/n, r >= 1, n >= 1",
        )
        .int_range("n", 1, 14)
        .int_range("r", 1, 10)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 1))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, bin(n, j) * ipow(n - k + j + 1, r - 1)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(
                n,
                factorial(n - 1)? * stirling2(r, n + 1)? - ipow(n + 1, r - 1)? / rat(n),
            ))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-stirling-ratio-ratio",
            "4.5.3.3",
            "n sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j C(n,j) S(n-k+j+r+1,s+1) \
             C(n-k+j+r,r)^-1 / (k-j) = (-1)^(n-1) (s+1) S(n+r,s+1) C(n+r,r)^-1, \
             s >= r, n >= 1",
        )
        .status(Status::Amended)
        .notes(
            "The display drops the n factor that its sibling displays absorb \
             into their right sides via /n; its own right side is not divided. \
             Witness n = 2, r = s = 0: the unrestored form gives -1/2 against \
             the right side -1.",
        )
        .int_range("n", 1, 12)
        .int_range("r", 0, 3)
        .int_range("s", 0, 5)
        .constraint(|pt| {
            let (r, s) = (pt.int("r").unwrap_or(-1), pt.int("s").unwrap_or(-1));
            r >= 0 && s >= r && pt.int("n").is_ok_and(|n| n >= 1)
        })
        .lhs(|pt| {
            let (n, r, s) = (pt.int("n")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j;
                    let term = bin(n, j) * stirling2(i + r + 1, s + 1)? * inv_binomial(i + r, r)?
                        / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(rat(n) * acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r, s) = (pt.int("n")?, pt.int("r")?, pt.int("s")?);
            Ok(alt(
                n - 1,
                rat(s + 1) * stirling2(n + r, s + 1)? * inv_binomial(n + r, r)?,
            ))
        })
        .printed(|pt| {
            let (n, r, s) = (pt.int("n")?, pt.int("r")?, pt.int("s")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j;
                    let term = bin(n, j) * stirling2(i + r + 1, s + 1)? * inv_binomial(i + r, r)?
                        / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .witness(
            Point::new().with_int("n", 2).with_int("r", 0).with_int("s", 0),
            "-1",
            "-1",
            Some("-1/2"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-ratio-tree",
            "4.5.4.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j C(n,j) (n-k+j)^(n-1)/(k-j) = \
             (-1)^(n+1) n^(n-2), n >= 1",
        )
        .int_range("n", 1, 16)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, bin(n, j) * ipow(n - k + j, n - 1)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(alt(n + 1, ipow(n, n - 2)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-power-ratio-offset-tree",
            "4.5.4.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j C(n,j) (n-k+j+1)^(n-1)/(k-j) = \
             (-1)^(n+1) (n+1)^(n-1)/n, n >= 1",
        )
        .int_range("n", 1, 16)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, bin(n, j) * ipow(n - k + j + 1, n - 1)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(alt(n + 1, ipow(n + 1, n - 1)? / rat(n)))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.5-inverse-binomial-power",
            "4.5.5.1",
            "sum_{k=0}^n (-1)^k C(n,k) C(k+r,k)^-1 k^m = \
             C(-r-1,n)^-1 sum_{k=0}^m C(-r,n-k) S(m,k) k!",
        )
        .int_range("n", 0, 16)
        .int_range("r", 0, 6)
        .int_range("m", 0, 6)
        .lhs(|pt| {
            let (n, r, m) = (pt.int("n")?, pt.int("r")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * inv_binomial(k + r, k)? * ipow(k, m)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r, m) = (pt.int("n")?, pt.int("r")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += gen_binomial(&rat(-r), n - k) * stirling2(m, k)? * factorial(k)?;
            }
            Ok(inv_gen_binomial(&rat(-r - 1), n)? * acc)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.5-inverse-binomial-power",
            "4.5.6.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) C(n+j-k+r,r)^-1 (n+j-k)^m = \
             C(-r-1,n-1)^-1 sum_{k=0}^m C(-r,n-k-1) S(m,k) k!, n >= 1",
        )
        .int_range("n", 1, 12)
        .int_range("r", 0, 6)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let (n, r, m) = (pt.int("n")?, pt.int("r")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * inv_binomial(i + r, r)? * ipow(i, m)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r, m) = (pt.int("n")?, pt.int("r")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += gen_binomial(&rat(-r), n - k - 1) * stirling2(m, k)? * factorial(k)?;
            }
            Ok(inv_gen_binomial(&rat(-r - 1), n - 1)? * acc)
        })
        .build(),
    );

    v
}
