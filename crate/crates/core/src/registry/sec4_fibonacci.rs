//! Catalog section 4.2: Fibonacci, Lucas, and Gibonacci double sums.

use super::{entry, Identity, Point, Status};
use crate::binom::{bin, gen_binomial};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::{fibonacci, gibonacci, lucas};
use alloc::vec::Vec;
use num_traits::Zero;

fn f3(i: i64) -> Result<Rational> {
    pow_i(&fibonacci(i), 3)
}

fn l3(i: i64) -> Result<Rational> {
    pow_i(&lucas(i), 3)
}

fn two_pow(e: i64) -> Result<Rational> {
    pow_i(&rat(2), e)
}

/// `sum_k (-1)^k sum_j C(n, k-j) X_j` for the row-sum particulars.
fn rowsum_lhs(n: i64, x: impl Fn(i64) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(k, bin(n, k - j) * x(j));
        }
    }
    acc
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "lem-4.2-gibonacci-reflection",
            "4.2.1.1",
            "sum_{k=m}^n (-1)^k C(n,k) C(k,m) G[r+(k-m)t]/L[t]^k = \
             (-1)^((n-m)t+m) C(n,m) G[r-(n-m)t]/L[t]^n",
        )
        .int_range("n", 0, 10)
        .int_range("m", 0, 6)
        .int_range("r", -3, 3)
        .int_range("t", -2, 2)
        .rats("g0", alloc::vec![rat(0), rat(2)])
        .rats("g1", alloc::vec![rat(1), rat(-3)])
        .lhs(|pt| {
            let (n, m, r, t) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("t")?);
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let mut acc = Rational::zero();
            for k in m..=n {
                let term = bin(n, k) * bin(k, m) * gibonacci(&g0, &g1, r + (k - m) * t)
                    / pow_i(&lucas(t), k)?;
                acc += alt(k, term);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r, t) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("t")?);
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let val = bin(n, m) * gibonacci(&g0, &g1, r - (n - m) * t) / pow_i(&lucas(t), n)?;
            Ok(alt((n - m) * t + m, val))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-weighted-gibonacci",
            "4.2.2.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) C(n-k+j,m) L[t]^(k-j) G[r+(n-k+j-m)t] = \
             (-1)^((n-m-1)t+m) C(n-1,m) L[t] G[r-(n-m-1)t]",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; the shifted master identity behind it needs n >= 1, and n = 0 fails.")
        .int_range("n", 1, 10)
        .int_range("m", 0, 4)
        .int_range("r", -2, 2)
        .int_range("t", -2, 2)
        .rats("g0", alloc::vec![rat(0), rat(2)])
        .rats("g1", alloc::vec![rat(1), rat(-3)])
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new()
                .with_int("n", 0)
                .with_int("m", 0)
                .with_int("r", 0)
                .with_int("t", 1)
                .with_rat("g0", rat(0))
                .with_rat("g1", rat(1)),
            "0",
            "-1",
            None,
        )
        .lhs(|pt| {
            let (n, m, r, t) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("t")?);
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    let term = bin(n, j) * bin(i, m) * pow_i(&lucas(t), k - j)?
                        * gibonacci(&g0, &g1, r + (i - m) * t);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r, t) = (pt.int("n")?, pt.int("m")?, pt.int("r")?, pt.int("t")?);
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let val = gen_binomial(&rat(n - 1), m) * lucas(t) * gibonacci(&g0, &g1, r - (n - m - 1) * t);
            Ok(alt((n - m - 1) * t + m, val))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-rowsum",
            "4.2.2.2",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,k-j) F[j] = (-1)^n F[2n-1]",
        )
        .status(Status::EdgeRestricted)
        .notes("Fails at n = 0, where the left side is F[0] = 0 but F[-1] = 1.")
        .int_range("n", 1, 40)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "0", "1", None)
        .lhs(|pt| Ok(rowsum_lhs(pt.int("n")?, fibonacci)))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n, fibonacci(2 * n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-rowsum",
            "4.2.2.3",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,k-j) L[j] = (-1)^n L[2n-1]",
        )
        .status(Status::EdgeRestricted)
        .notes("Fails at n = 0 (left side 2, right side -1).")
        .int_range("n", 1, 40)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "2", "-1", None)
        .lhs(|pt| Ok(rowsum_lhs(pt.int("n")?, lucas)))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n, lucas(2 * n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-cubed",
            "4.2.3.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) C(n-k+j,m) F[n+j+r-k-m]^3 = \
             (-1)^m/5 C(n-1,m) ((-1)^(n-m-1) 2^(n-m-1) F[n+3r-m-1] - (-1)^r 3 F[2(n-m-1)+r])",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 10)
        .int_range("m", 0, 4)
        .int_range("r", -3, 3)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 0).with_int("r", 0),
            "0",
            "1/2",
            None,
        )
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    acc += alt(j, bin(n, j) * bin(i, m) * f3(i + r - m)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let e = n - m - 1;
            let inner = alt(e, two_pow(e)? * fibonacci(n + 3 * r - m - 1))
                - alt(r, rat(3) * fibonacci(2 * e + r));
            Ok(alt(m, gen_binomial(&rat(n - 1), m) * inner / rat(5)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-cubed",
            "4.2.3.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) C(n-k+j,m) L[n+j+r-k-m]^3 = \
             (-1)^m C(n-1,m) ((-1)^(n-m-1) 2^(n-m-1) L[n+3r-m-1] + (-1)^r 3 L[2(n-m-1)+r])",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 10)
        .int_range("m", 0, 4)
        .int_range("r", -3, 3)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 0).with_int("r", 0),
            "8",
            "19/2",
            None,
        )
        .lhs(|pt| {
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    acc += alt(j, bin(n, j) * bin(i, m) * l3(i + r - m)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m, r) = (pt.int("n")?, pt.int("m")?, pt.int("r")?);
            let e = n - m - 1;
            let inner = alt(e, two_pow(e)? * lucas(n + 3 * r - m - 1))
                + alt(r, rat(3) * lucas(2 * e + r));
            Ok(alt(m, gen_binomial(&rat(n - 1), m) * inner))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-cubed-particular",
            "4.2.3.3",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) C(n-k+j,m) F[n+k-m-j-2]^3 = \
             (-1)^n/5 C(n-1,m) 2^(n-m-1) F[5(n-m-1)]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1 (witness at n = 0).")
        .int_range("n", 1, 10)
        .int_range("m", 0, 4)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 0),
            "-1",
            "1/2",
            None,
        )
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * bin(n - k + j, m) * f3(n + k - m - j - 2)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let e = n - m - 1;
            Ok(alt(n, gen_binomial(&rat(n - 1), m) * two_pow(e)? * fibonacci(5 * e) / rat(5)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-cubed-special",
            "4.2.3.4",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) C(n-k+j,n-2) F[k-j]^3 = (-1)^n 2(n-1)",
        )
        .status(Status::EdgeRestricted)
        .notes("The m = n-2 slice of the previous display; needs n >= 1.")
        .int_range("n", 1, 24)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "0", "-2", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * bin(n - k + j, n - 2) * f3(k - j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(alt(n, rat(2 * (n - 1))))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-cubed-ratio",
            "4.2.4.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) F[n-k+j+r]^3/(k-j) = \
             1/5 ((-1)^n 2^n F[n+3r] - (-1)^r 3 F[2n+r]) - (-1)^n F[n+r]^3",
        )
        .int_range("n", 0, 12)
        .int_range("r", -3, 3)
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, rat(n) * bin(n, j) * f3(n - k + j + r)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let head = (alt(n, two_pow(n)? * fibonacci(n + 3 * r))
                - alt(r, rat(3) * fibonacci(2 * n + r)))
                / rat(5);
            Ok(head - alt(n, f3(n + r)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-cubed-ratio",
            "4.2.4.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) L[n-k+j+r]^3/(k-j) = \
             (-1)^n 2^n L[n+3r] + (-1)^r 3 L[2n+r] - (-1)^n L[n+r]^3",
        )
        .int_range("n", 0, 12)
        .int_range("r", -3, 3)
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, rat(n) * bin(n, j) * l3(n - k + j + r)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(alt(n, two_pow(n)? * lucas(n + 3 * r)) + alt(r, rat(3) * lucas(2 * n + r))
                - alt(n, l3(n + r)?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-cubed-ratio-particular",
            "4.2.4.3",
            "sum_{k=1}^n (-1)^(k-1) sum_{j=0}^{k-1} n C(n,j) F[k-j]^3/(k-j) = \
             (-1)^(n+1)/5 (2^n F[2n] + 3 F[n])",
        )
        .int_range("n", 0, 20)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(k - 1, rat(n) * bin(n, j) * f3(k - j)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n + 1, (two_pow(n)? * fibonacci(2 * n) + rat(3) * fibonacci(n)) / rat(5)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-cubed-ratio-particular",
            "4.2.4.4",
            "sum_{k=1}^n (-1)^(n-k) sum_{j=0}^{k-1} n C(n,j) L[k-j]^3/(k-j) = \
             2^n L[2n] + 3 L[n] - 8",
        )
        .int_range("n", 0, 20)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(n - k, rat(n) * bin(n, j) * l3(k - j)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(two_pow(n)? * lucas(2 * n) + rat(3) * lucas(n) - rat(8))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-parity",
            "4.2.5.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) L[n-k+j]/(k-j) = \
             (0 if n even; 2 L[n] if n odd)",
        )
        .int_range("n", 0, 24)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, rat(n) * bin(n, j) * lucas(n - k + j) / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                Rational::zero()
            } else {
                rat(2) * lucas(n)
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-parity",
            "4.2.5.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) F[n-k+j]/(k-j) = \
             (-2 F[n] if n even; 0 if n odd)",
        )
        .int_range("n", 0, 24)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    acc += alt(j, rat(n) * bin(n, j) * fibonacci(n - k + j) / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                rat(-2) * fibonacci(n)
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-gibonacci-plain",
            "4.2.6.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) G[r+k-j] = G[r-n+2]",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (the n = 0 instance would read G[r] = G[r+2]).")
        .int_range("n", 1, 30)
        .int_range("r", -4, 4)
        .rats("g0", alloc::vec![rat(0), rat(2), rat(3)])
        .rats("g1", alloc::vec![rat(1), rat(-2)])
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new()
                .with_int("n", 0)
                .with_int("r", 0)
                .with_rat("g0", rat(0))
                .with_rat("g1", rat(1)),
            "0",
            "1",
            None,
        )
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let (g0, g1) = (pt.rat("g0")?, pt.rat("g1")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * gibonacci(&g0, &g1, r + k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            Ok(gibonacci(&pt.rat("g0")?, &pt.rat("g1")?, r - n + 2))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-fibonacci-plain",
            "4.2.6.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) F[k-j] = (-1)^(n-1) F[n-2], n >= 1",
        )
        .int_range("n", 1, 60)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * fibonacci(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n - 1, fibonacci(n - 2)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.2-lucas-plain",
            "4.2.6.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) L[k-j] = (-1)^n L[n-2]",
        )
        .status(Status::EdgeRestricted)
        .notes("Needs n >= 1; at n = 0 the left side is L[0] = 2 but L[-2] = 3.")
        .int_range("n", 1, 60)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "2", "3", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * lucas(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n, lucas(n - 2)))
        })
        .build(),
    );

    v
}
