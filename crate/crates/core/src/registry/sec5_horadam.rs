//! Catalog section 5.1: Horadam-sequence double sums, the repunit
//! specializations, and the hyperbolic corollaries under `t = e^{x/2}`.
//!
//! Horadam points are tuples `(a, b, p, q)` with `q != 0`; the default grid
//! covers the Fibonacci, Lucas, Pell, Chebyshev, and base-3 repunit points
//! plus a non-integer rational point. Hyperbolic entries sample more
//! distinct `t` values than the Laurent span of their sides, so passing the
//! grid proves each corollary as an identity of functions.

use super::{entry, Build, Identity};
use crate::binom::bin;
use crate::doublesum::{hyperbolic_lhs, hyperbolic_rhs, HyperbolicIdentity};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, frac, pow_i, rat, Rational};
use crate::sequences::horadam;
use crate::transform;
use alloc::vec::Vec;
use num_traits::Zero;

fn horadam_tuples() -> Vec<Vec<Rational>> {
    transform::horadam_points()
        .into_iter()
        .map(|(a, b, p, q)| alloc::vec![a, b, p, q])
        .collect()
}

fn w_at(pt: &super::Point, n: i64) -> Result<Rational> {
    let w = pt.tuple("w")?;
    horadam(&w[0], &w[1], &w[2], &w[3], n)
}

/// `(p/q)^e` for the current Horadam point.
fn pq_pow(pt: &super::Point, e: i64) -> Result<Rational> {
    let w = pt.tuple("w")?;
    pow_i(&(&w[2] / &w[3]), e)
}

fn q_pow(pt: &super::Point, e: i64) -> Result<Rational> {
    let w = pt.tuple("w")?;
    pow_i(&w[3], e)
}

fn horadam_entry(id: &'static str, anchor: &'static str, statement: &'static str) -> Build {
    entry(id, anchor, statement)
        .tuples("w", horadam_tuples())
        .constraint(|pt| {
            pt.tuple("w")
                .is_ok_and(|w| w.len() == 4 && !w[3].is_zero())
        })
}

/// 60 distinct positive rationals, none equal to 1: exceeds the Laurent
/// span 4n+4 <= 52 of every hyperbolic corollary over the default n range.
fn hyperbolic_t_grid() -> Vec<Rational> {
    let mut ts: Vec<Rational> = (0..56).map(|i| frac(i + 2, i + 1)).collect();
    ts.push(frac(1, 3));
    ts.push(frac(1, 2));
    ts.push(frac(2, 3));
    ts.push(rat(3));
    ts
}

fn hyperbolic_entry(
    id: &'static str,
    anchor: &'static str,
    statement: &'static str,
    kind: HyperbolicIdentity,
) -> Identity {
    entry(id, anchor, statement)
        .notes(
            "Both sides are Laurent polynomials in t with degree span 4n \
             (4n+4 for the integrated family), at most 52 on the default \
             range; the 60-point t grid exceeds that bound, so grid equality \
             proves the identity as functions of t.",
        )
        .int_range("n", 1, 12)
        .rats("t", hyperbolic_t_grid())
        .constraint(|pt| {
            pt.int("n").is_ok_and(|n| n >= 1)
                && pt
                    .rat("t")
                    .is_ok_and(|t| t > Rational::zero() && t != rat(1))
        })
        .lhs(move |pt| hyperbolic_lhs(kind, &pt.rat("t")?, pt.int("n")?))
        .rhs(move |pt| hyperbolic_rhs(kind, &pt.rat("t")?, pt.int("n")?))
        .build()
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        horadam_entry(
            "prop-5.1-horadam-shifted",
            "5.1.1.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j (p/q)^(n-k+j) w[n-k+j] = \
             (-1)^(n-1) q^-(n-1) w[2(n-1)], n >= 1",
        )
        .int_range("n", 1, 12)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    acc += alt(j, bin(n, j) * pq_pow(pt, i)? * w_at(pt, i)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(alt(n - 1, q_pow(pt, -(n - 1))? * w_at(pt, 2 * (n - 1))?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-5.1-repunit-sum",
            "5.1.2.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j (1+x)^(n-k+j) (1 + x^-(n-k+j)) = \
             (-1)^(n-1) (x^(n-1) + x^-(n-1)), n >= 1",
        )
        .int_range("n", 1, 12)
        .rats(
            "x",
            alloc::vec![rat(2), rat(3), frac(1, 2), frac(3, 2), rat(-2), frac(-1, 2), rat(5)],
        )
        .constraint(|pt| pt.rat("x").is_ok_and(|x| !x.is_zero()))
        .lhs(|pt| {
            let (n, x) = (pt.int("n")?, pt.rat("x")?);
            let xp1 = rat(1) + &x;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    let term = bin(n, j) * pow_i(&xp1, i)? * (rat(1) + pow_i(&x, -i)?);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, x) = (pt.int("n")?, pt.rat("x")?);
            Ok(alt(n - 1, pow_i(&x, n - 1)? + pow_i(&x, -(n - 1))?))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-5.1-repunit-diff",
            "5.1.2.2",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j (1+x)^(n-k+j) (1 - x^-(n-k+j)) = \
             (-1)^(n-1) (x^(n-1) - x^-(n-1)), n >= 1",
        )
        .int_range("n", 1, 12)
        .rats(
            "x",
            alloc::vec![rat(2), rat(3), frac(1, 2), frac(3, 2), rat(-2), frac(-1, 2), rat(5)],
        )
        .constraint(|pt| pt.rat("x").is_ok_and(|x| !x.is_zero()))
        .lhs(|pt| {
            let (n, x) = (pt.int("n")?, pt.rat("x")?);
            let xp1 = rat(1) + &x;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    let term = bin(n, j) * pow_i(&xp1, i)? * (rat(1) - pow_i(&x, -i)?);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, x) = (pt.int("n")?, pt.rat("x")?);
            Ok(alt(n - 1, pow_i(&x, n - 1)? - pow_i(&x, -(n - 1))?))
        })
        .build(),
    );

    v.push(hyperbolic_entry(
        "cor-5.1-cosh-reflection",
        "5.1.3.1",
        "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(n-k+j) cosh(x/2)^(n-k+j) \
         cosh((n-k+j)x/2) = (-1)^(n-1) cosh((n-1)x)",
        HyperbolicIdentity::CoshReflection,
    ));

    v.push(hyperbolic_entry(
        "cor-5.1-sinh-reflection",
        "5.1.3.2",
        "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(n-k+j) cosh(x/2)^(n-k+j) \
         sinh((n-k+j)x/2) = (-1)^(n-1) sinh((n-1)x)",
        HyperbolicIdentity::SinhReflection,
    ));

    v.push(
        horadam_entry(
            "prop-5.1-horadam-ratio",
            "5.1.4.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} C(n,j) n (-1)^j (p/q)^(n-k+j) w[n-k+j]/(k-j) = \
             (-1)^n q^-n (w[2n] - p^n w[n]), n >= 1",
        )
        .int_range("n", 1, 12)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j;
                    acc += alt(j, rat(n) * bin(n, j) * pq_pow(pt, i)? * w_at(pt, i)? / rat(k - j));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let w = pt.tuple("w")?;
            let inner = w_at(pt, 2 * n)? - pow_i(&w[2], n)? * w_at(pt, n)?;
            Ok(alt(n, q_pow(pt, -n)? * inner))
        })
        .build(),
    );

    v.push(hyperbolic_entry(
        "cor-5.1-cosh-difference",
        "5.1.5.1",
        "sum_{k=1}^n sum_{j=0}^{k-1} C(n,j) n (-1)^j 2^(n-k+j) cosh(x/2)^(n-k+j) \
         cosh((n-k+j)x/2)/(k-j) = (-1)^n (cosh(nx) - 2^n cosh(x/2)^n cosh(nx/2))",
        HyperbolicIdentity::CoshDifference,
    ));

    v.push(hyperbolic_entry(
        "cor-5.1-sinh-difference",
        "5.1.5.2",
        "sum_{k=1}^n sum_{j=0}^{k-1} C(n,j) n (-1)^j 2^(n-k+j) cosh(x/2)^(n-k+j) \
         sinh((n-k+j)x/2)/(k-j) = (-1)^n (sinh(nx) - 2^n cosh(x/2)^n sinh(nx/2))",
        HyperbolicIdentity::SinhDifference,
    ));

    v.push(
        horadam_entry(
            "prop-5.1-horadam-diff",
            "5.1.6.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j (p/q)^(k-j) w[k-j] = \
             q^-n w[2n] + q^-(n-1) w[2(n-1)], n >= 1",
        )
        .int_range("n", 1, 12)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = k - j;
                    acc += alt(j, bin(n, j) * pq_pow(pt, i)? * w_at(pt, i)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(q_pow(pt, -n)? * w_at(pt, 2 * n)?
                + q_pow(pt, -(n - 1))? * w_at(pt, 2 * (n - 1))?)
        })
        .build(),
    );

    v.push(hyperbolic_entry(
        "cor-5.1-cosh-sum",
        "5.1.7.1",
        "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(k-j) cosh(x/2)^(k-j) \
         cosh((k-j)x/2) = cosh(nx) + cosh((n-1)x)",
        HyperbolicIdentity::CoshSum,
    ));

    v.push(hyperbolic_entry(
        "cor-5.1-sinh-sum",
        "5.1.7.2",
        "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(k-j) cosh(x/2)^(k-j) \
         sinh((k-j)x/2) = sinh(nx) + sinh((n-1)x)",
        HyperbolicIdentity::SinhSum,
    ));

    v.push(
        horadam_entry(
            "prop-5.1-horadam-integrated",
            "5.1.8.1",
            "sum_{k=0}^n sum_{j=0}^k C(n+1,j+1) (-1)^(j+1) (p/q)^(j+1) w[j+1] = \
             (n+1)(-1)^n q^-n w[2n] + (-1)^(n+1) q^-(n+1) w[2(n+1)] - (n+2) a, n >= 1",
        )
        .int_range("n", 1, 12)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j + 1, bin(n + 1, j + 1) * pq_pow(pt, j + 1)? * w_at(pt, j + 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let w = pt.tuple("w")?;
            Ok(alt(n, rat(n + 1) * q_pow(pt, -n)? * w_at(pt, 2 * n)?)
                + alt(n + 1, q_pow(pt, -(n + 1))? * w_at(pt, 2 * (n + 1))?)
                - rat(n + 2) * &w[0])
        })
        .build(),
    );

    v.push(hyperbolic_entry(
        "cor-5.1-cosh-integrated",
        "5.1.9.1",
        "sum_{k=0}^n sum_{j=0}^k C(n+1,j+1) (-1)^(j+1) 2^(j+1) cosh(x/2)^(j+1) \
         cosh((j+1)x/2) = (-1)^n ((n+1) cosh(nx) - cosh((n+1)x)) - (n+2)",
        HyperbolicIdentity::CoshIntegrated,
    ));

    v.push(hyperbolic_entry(
        "cor-5.1-sinh-integrated",
        "5.1.9.2",
        "sum_{k=0}^n sum_{j=0}^k C(n+1,j+1) (-1)^(j+1) 2^(j+1) cosh(x/2)^(j+1) \
         sinh((j+1)x/2) = (-1)^n ((n+1) sinh(nx) - sinh((n+1)x))",
        HyperbolicIdentity::SinhIntegrated,
    ));

    v.push(
        entry(
            "rem-5.1-horadam-families",
            "5.1.10.1",
            "the four cataloged-without-proof Horadam pairs transform as claimed: \
             sum_{k=0}^j C(j,k) (-1)^k s[k] = sigma[j]",
        )
        .notes(
            "Optional entries: the source catalogs these pairs without proof, so \
             they are validated here rather than assumed.",
        )
        .pairs(
            "pair",
            &[
                "horadam-w3(0,1;1,-1)",
                "horadam-even-w3(0,1;1,-1)",
                "horadam-w4(0,1;1,-1)",
                "horadam-even-w4(0,1;1,-1)",
                "horadam-w3(1,1;3,2)",
                "horadam-even-w3(1,1;3,2)",
                "horadam-w4(1,1;3,2)",
                "horadam-even-w4(1,1;3,2)",
            ],
        )
        .int_range("j", 0, 12)
        .lhs(|pt| {
            let pair = pt.pair("pair")?;
            transform::transform_of(|k| pair.s(k), pt.int("j")?)
        })
        .rhs(|pt| pt.pair("pair")?.sigma(pt.int("j")?))
        .build(),
    );

    v
}
