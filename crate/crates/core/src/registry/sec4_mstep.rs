//! Catalog section 4.6: m-step (m-bonacci) double sums.
//!
//! The `lucas` parameter is a 0/1 flag selecting the seed family
//! (`fibonacci-m-step` seeds `[0,..,0,1]`, `lucas-m-step` seeds `[2,1]` /
//! `[3,1,3]`). Whether the underlying transform lemma depends on the seed
//! at all is settled empirically by the basis-seed test in the suite: it
//! holds for every basis seed, i.e. for the whole recurrence class.

use super::{entry, Identity, Point, Status};
use crate::binom::bin;
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::{gibonacci, mstep, mstep_fibonacci_seed, mstep_lucas_seed, tribonacci};
use alloc::vec::Vec;
use num_traits::Zero;

fn seed_of(pt: &super::Point) -> Result<Vec<Rational>> {
    let m = pt.int("m")? as usize;
    if pt.int("lucas")? == 1 {
        mstep_lucas_seed(m)
    } else {
        mstep_fibonacci_seed(m)
    }
}

fn two_pow(e: i64) -> Result<Rational> {
    pow_i(&rat(2), e)
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "lem-4.6-mstep-double",
            "4.6.1.1",
            "sum_{k=0}^n (-1)^k C(n,k) 2^k W[mk] = (-1)^n W[(m+1)n]",
        )
        .int_range("n", 0, 14)
        .int_range("m", 2, 4)
        .int_range("lucas", 0, 1)
        .constraint(|pt| pt.int("lucas") == Ok(0) || pt.int("m").is_ok_and(|m| m <= 3))
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let seed = seed_of(pt)?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(k)? * mstep(&seed, m * k)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            Ok(alt(n, mstep(&seed_of(pt)?, (m + 1) * n)?))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.6-mstep-half",
            "4.6.1.2",
            "sum_{k=0}^n (-1)^k C(n,k) 2^-k W[k] = 2^-n W[-mn]",
        )
        .int_range("n", 0, 14)
        .int_range("m", 2, 4)
        .int_range("lucas", 0, 1)
        .constraint(|pt| pt.int("lucas") == Ok(0) || pt.int("m").is_ok_and(|m| m <= 3))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let seed = seed_of(pt)?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(-k)? * mstep(&seed, k)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            Ok(two_pow(-n)? * mstep(&seed_of(pt)?, -m * n)?)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-mstep-shifted",
            "4.6.2.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(n+j-k) W[m(n+j-k)] = \
             (-1)^(n-1) W[(m+1)(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 12)
        .int_range("m", 2, 4)
        .int_range("lucas", 0, 1)
        .constraint(|pt| pt.int("lucas") == Ok(0) || pt.int("m").is_ok_and(|m| m <= 3))
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 2).with_int("lucas", 0),
            "0",
            "-2",
            None,
        )
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let seed = seed_of(pt)?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(i)? * mstep(&seed, m * i)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            Ok(alt(n - 1, mstep(&seed_of(pt)?, (m + 1) * (n - 1))?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-gibonacci-double-index",
            "4.6.2.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(n+j-k) G[2(n+j-k)] = (-1)^(n-1) G[3(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1; the two-step transform lemma is seed-linear, so arbitrary seeds are admitted.")
        .int_range("n", 1, 16)
        .rats("g0", alloc::vec![rat(0), rat(2), rat(-1)])
        .rats("g1", alloc::vec![rat(1), rat(3)])
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new()
                .with_int("n", 0)
                .with_rat("g0", rat(0))
                .with_rat("g1", rat(1)),
            "0",
            "-2",
            None,
        )
        .lhs(|pt| {
            let n = pt.int("n")?;
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(i)? * gibonacci(&g0, &g1, 2 * i));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n - 1, gibonacci(&pt.rat("g0")?, &pt.rat("g1")?, 3 * (n - 1))))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-tribonacci-triple-index",
            "4.6.2.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(n+j-k) T[3(n+j-k)] = (-1)^(n-1) T[4(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 12)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "0", "-2", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(i)? * tribonacci(3 * i));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n - 1, tribonacci(4 * (n - 1))))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-mstep-reversed",
            "4.6.3.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(k-j) W[n+j-k] = 2 W[-m(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 12)
        .int_range("m", 2, 4)
        .int_range("lucas", 0, 1)
        .constraint(|pt| pt.int("lucas") == Ok(0) || pt.int("m").is_ok_and(|m| m <= 3))
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 2).with_int("lucas", 0),
            "0",
            "2",
            None,
        )
        .lhs(|pt| {
            let n = pt.int("n")?;
            let seed = seed_of(pt)?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(k - j)? * mstep(&seed, n + j - k)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            Ok(rat(2) * mstep(&seed_of(pt)?, -m * (n - 1))?)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-gibonacci-reversed",
            "4.6.3.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(k-j) G[n+j-k] = 2 G[-2(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 16)
        .rats("g0", alloc::vec![rat(0), rat(2), rat(-1)])
        .rats("g1", alloc::vec![rat(1), rat(3)])
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new()
                .with_int("n", 0)
                .with_rat("g0", rat(0))
                .with_rat("g1", rat(1)),
            "0",
            "2",
            None,
        )
        .lhs(|pt| {
            let n = pt.int("n")?;
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(k - j)? * gibonacci(&g0, &g1, n + j - k));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(rat(2) * gibonacci(&pt.rat("g0")?, &pt.rat("g1")?, -2 * (n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.6-tribonacci-reversed",
            "4.6.3.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(k-j) T[n+j-k] = 2 T[-3(n-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 14)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "0", "2", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(k - j)? * tribonacci(n + j - k));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(rat(2) * tribonacci(-3 * (n - 1)))
        })
        .build(),
    );

    v
}
