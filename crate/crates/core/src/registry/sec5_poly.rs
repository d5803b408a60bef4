//! Catalog section 5.2: Bernoulli-polynomial double sums.
//!
//! Polynomial identities are verified by rational-point sampling: `x` and
//! `y` range over small grids with `x != 0` wherever the statement divides
//! by `x`.

use super::{entry, Build, Identity, Point, Status};
use crate::binom::{bin, inv_binomial};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, frac, pow_i, rat, Rational};
use crate::sequences::{bernoulli_number, bernoulli_poly_at, stirling2};
use alloc::vec::Vec;
use num_traits::Zero;

fn bp(n: i64, y: &Rational) -> Result<Rational> {
    bernoulli_poly_at(n, y)
}

fn factorial(n: i64) -> Result<Rational> {
    crate::binom::factorial(n)
}

fn xy_entry(id: &'static str, anchor: &'static str, statement: &'static str) -> Build {
    entry(id, anchor, statement)
        .rats("x", alloc::vec![rat(2), frac(1, 2), rat(-3), frac(3, 2)])
        .rats("y", alloc::vec![rat(0), rat(1), frac(-1, 2), frac(2, 3)])
        .constraint(|pt| pt.rat("x").is_ok_and(|x| !x.is_zero()))
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        xy_entry(
            "prop-5.2-bpoly-shifted",
            "5.2.1.1",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) B[m+n-k+j](y)/x^(m-k+j) = \
             (-1)^(m+n) sum_{k=0}^m (-1)^k C(m,k) B[n+k-1](x+y)/x^(k-1), n >= 1",
        )
        .int_range("n", 1, 8)
        .int_range("m", 0, 4)
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * bp(m + n - k + j, &y)? / pow_i(&x, m - k + j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * bp(n + k - 1, &xy)? / pow_i(&x, k - 1)?);
            }
            Ok(alt(m + n, acc))
        })
        .build(),
    );

    v.push(
        xy_entry(
            "prop-5.2-bpoly-shifted-particular",
            "5.2.1.2",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) x^(k-j) B[n-k+j](y) = \
             (-1)^n x B[n-1](x+y), n >= 1",
        )
        .int_range("n", 1, 10)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * pow_i(&x, k - j)? * bp(n - k + j, &y)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            Ok(alt(n, x * bp(n - 1, &xy)?))
        })
        .build(),
    );

    v.push(
        xy_entry(
            "prop-5.2-bpoly-ratio",
            "5.2.2.1",
            "sum_{k=1}^n (-1)^k sum_{j=0}^{k-1} n C(n,j) x^(k-j)/(k-j) B[m+n-k+j](y) = \
             (-1)^(m+n) sum_{k=0}^m (-1)^k C(m,k) x^(m-k) B[k+n](x+y) - (-1)^n B[m+n](y)",
        )
        .int_range("n", 0, 8)
        .int_range("m", 0, 4)
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let term =
                        rat(n) * bin(n, j) * pow_i(&x, k - j)? / rat(k - j) * bp(m + n - k + j, &y)?;
                    acc += alt(k, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * pow_i(&x, m - k)? * bp(k + n, &xy)?);
            }
            Ok(alt(m + n, acc) - alt(n, bp(m + n, &y)?))
        })
        .build(),
    );

    v.push(
        xy_entry(
            "prop-5.2-bpoly-ratio-particular",
            "5.2.2.2",
            "sum_{k=1}^n (-1)^k sum_{j=0}^{k-1} n C(n,j) x^(k-j)/(k-j) B[n-k+j](y) = \
             (-1)^n (B[n](x+y) - B[n](y))",
        )
        .int_range("n", 0, 10)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let term =
                        rat(n) * bin(n, j) * pow_i(&x, k - j)? / rat(k - j) * bp(n - k + j, &y)?;
                    acc += alt(k, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            Ok(alt(n, bp(n, &xy)? - bp(n, &y)?))
        })
        .build(),
    );

    v.push(
        xy_entry(
            "prop-5.2-bpoly-diff",
            "5.2.3.1",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) x^(n-m-k+j) B[m+k-j](y) = \
             (-1)^(m-n) sum_{k=0}^m (-1)^k C(m,k) x^-k (B[k+n](x+y) - x B[k+n-1](x+y)), n >= 1",
        )
        .int_range("n", 1, 8)
        .int_range("m", 0, 4)
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * pow_i(&x, n - m - k + j)? * bp(m + k - j, &y)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            let mut acc = Rational::zero();
            for k in 0..=m {
                let inner = bp(k + n, &xy)? - &x * bp(k + n - 1, &xy)?;
                acc += alt(k, bin(m, k) * pow_i(&x, -k)? * inner);
            }
            Ok(alt(m + n, acc))
        })
        .build(),
    );

    v.push(
        xy_entry(
            "prop-5.2-bpoly-diff-particular",
            "5.2.3.2",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) x^(n-k+j) B[k-j](y) = \
             (-1)^n (B[n](x+y) - x B[n-1](x+y)), n >= 1",
        )
        .int_range("n", 1, 10)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * pow_i(&x, n - k + j)? * bp(k - j, &y)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let (x, y) = (pt.rat("x")?, pt.rat("y")?);
            let xy = &x + &y;
            Ok(alt(n, bp(n, &xy)? - &x * bp(n - 1, &xy)?))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-5.2-bpoly-arg",
            "5.2.4.1",
            "sum_{k=0}^n (-1)^k C(n,k) B_r(k+1) = (-1)^n (n-1)! r S(r,n), n >= 1",
        )
        .int_range("n", 1, 16)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * bp(r, &rat(k + 1))?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, factorial(n - 1)? * rat(r) * stirling2(r, n)?))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-5.2-bpoly-arg-ratio",
            "5.2.4.2",
            "sum_{k=0}^n (-1)^k C(n,k) B_r(k+1)/(k+1) = B[r]/(n+1) + \
             (-1)^n n!/(n+1) r S(r-1,n)",
        )
        .int_range("n", 0, 16)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * bp(r, &rat(k + 1))? / rat(k + 1));
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            // r S(r-1, n) vanishes structurally at r = 0
            let shift = if r == 0 {
                Rational::zero()
            } else {
                alt(n, factorial(n)? * rat(r) * stirling2(r - 1, n)?) / rat(n + 1)
            };
            Ok(bernoulli_number(r)? / rat(n + 1) + shift)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-5.2-bpoly-arg-shifted",
            "5.2.5.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) B_r(m+n-k+j+1) = \
             (-1)^(n-1) r sum_{k=0}^m C(m,k) (n+k-2)! S(r,n+k-1), n >= 2",
        )
        .status(Status::Amended)
        .notes(
            "The cataloged right side keeps a stray (-1)^k inside the m-sum; \
             the pair's transform already carries (-1)^(n+k-1), so the signs \
             cancel. Witness n = 2, m = 1, r = 2: corrected sides -4, printed \
             form 0.",
        )
        .int_range("n", 2, 10)
        .int_range("m", 0, 5)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * bp(r, &rat(m + n - k + j + 1))?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += bin(m, k) * factorial(n + k - 2)? * stirling2(r, n + k - 1)?;
            }
            Ok(alt(n - 1, rat(r) * acc))
        })
        .printed(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * factorial(n + k - 2)? * stirling2(r, n + k - 1)?);
            }
            Ok(alt(n - 1, rat(r) * acc))
        })
        .witness(
            Point::new()
                .with_int("n", 2)
                .with_int("m", 1)
                .with_int("r", 2),
            "-4",
            "-4",
            Some("0"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-5.2-bpoly-arg-ratio-shifted",
            "5.2.5.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) B_r(m+n-k+j+1)/(m+n-k+j+1) = \
             B[r]/(m+n) C(m+n-1,m)^-1 + (-1)^(n-1) r sum_{k=0}^m \
             (n+k-1)!/(n+k) C(m,k) S(r-1,n+k-1), n >= 2",
        )
        .int_range("n", 2, 10)
        .int_range("m", 0, 5)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = m + n - k + j + 1;
                    acc += alt(j, bin(n, j) * bp(r, &rat(i))? / rat(i));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let head = bernoulli_number(r)? * inv_binomial(m + n - 1, m)? / rat(m + n);
            let mut acc = Rational::zero();
            if r >= 1 {
                for k in 0..=m {
                    acc += bin(m, k) * factorial(n + k - 1)? / rat(n + k)
                        * stirling2(r - 1, n + k - 1)?;
                }
            }
            Ok(head + alt(n - 1, rat(r) * acc))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-5.2-bpoly-arg-ratio2",
            "5.2.6.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) B_r(m+n-k+j+1)/(k-j) = \
             (-1)^n r sum_{k=0}^m C(m,k) S(r,k+n) (k+n-1)! - (-1)^n B_r(m+n+1), n >= 1",
        )
        .int_range("n", 1, 10)
        .int_range("m", 0, 5)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = m + n - k + j + 1;
                    acc += alt(j, rat(n) * bin(n, j) * bp(r, &rat(i))? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += bin(m, k) * stirling2(r, k + n)? * factorial(k + n - 1)?;
            }
            Ok(alt(n, rat(r) * acc) - alt(n, bp(r, &rat(m + n + 1))?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-5.2-bpoly-arg-ratio2-particular",
            "5.2.6.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) B_r(n-k+j+1)/(k-j) = \
             (-1)^n r S(r,n) (n-1)! - (-1)^n B_r(n+1), n >= 1",
        )
        .int_range("n", 1, 12)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j + 1;
                    acc += alt(j, rat(n) * bin(n, j) * bp(r, &rat(i))? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, rat(r) * stirling2(r, n)? * factorial(n - 1)?)
                - alt(n, bp(r, &rat(n + 1))?))
        })
        .build(),
    );

    v
}
