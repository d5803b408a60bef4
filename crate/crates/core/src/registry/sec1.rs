//! Catalog section 1: the pair-level shift and rescaling identities plus
//! the four headline double sums.

use super::{entry, Identity, Point, Status};
use crate::binom::{bin, inv_binomial};
use crate::rational::{alt, frac, pow_i, rat, Rational};
use crate::sequences::{bernoulli_number, catalan, fibonacci, harmonic};
use crate::transform;
use alloc::vec::Vec;
use num_traits::Zero;

/// Diverse pair subset used by the pair-quantified master identities.
pub(crate) const MASTER_PAIRS: &[&str] = &[
    "constant-one",
    "alternating",
    "bernoulli-signed",
    "fibonacci-anti",
    "lucas-self",
    "harmonic-r(0)",
    "odd-harmonic",
    "catalan-donaghey",
    "stirling-power(r=3)",
    "horadam-sq(0,1;1,-1)",
    "mstep-half(fibonacci,3)",
    "bernoulli-poly(2,0)",
];

pub(crate) fn p_grid() -> Vec<Rational> {
    alloc::vec![rat(2), frac(1, 2), rat(-3), rat(3), frac(-2, 3)]
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "intro-chen-shift",
            "1.1.1",
            "sum_{k=0}^m C(m,k) (-1)^k s[n+k] = sum_{j=0}^n C(n,j) (-1)^j sigma[m+j]",
        )
        .all_pairs("pair")
        .int_range("m", 0, 12)
        .int_range("n", 0, 12)
        .lhs(|pt| transform::chen_shift_lhs(pt.pair("pair")?.as_ref(), pt.int("m")?, pt.int("n")?))
        .rhs(|pt| transform::chen_shift_rhs(pt.pair("pair")?.as_ref(), pt.int("m")?, pt.int("n")?))
        .build(),
    );

    v.push(
        entry(
            "intro-p-identity",
            "1.2.1",
            "p^(n+m) sum_j C(n,j) p^-j sum_k C(m,k) sigma[j+k] p^-k = \
             (p+1)^(n+m) sum_j C(n,j) (p+1)^-j sum_k C(m,k) (-1)^(j+k) s[j+k] (p+1)^-k",
        )
        .status(Status::Amended)
        .notes(
            "The original display omits the C(m,k) weights on both inner sums; \
             with them, Vandermonde collapses each side to the particular case at \
             n+m, which holds for every pair. The unweighted form agrees only for \
             m <= 1; the witness freezes the difference of its two sides (8 vs 14) \
             at m = 2.",
        )
        .pairs("pair", MASTER_PAIRS)
        .rats("p", p_grid())
        .int_range("n", 0, 5)
        .int_range("m", 0, 5)
        .lhs(|pt| {
            Ok(transform::p_identity_sides(pt.pair("pair")?.as_ref(), &pt.rat("p")?, pt.int("n")?, pt.int("m")?)?.0)
        })
        .rhs(|pt| {
            Ok(transform::p_identity_sides(pt.pair("pair")?.as_ref(), &pt.rat("p")?, pt.int("n")?, pt.int("m")?)?.1)
        })
        .printed(|pt| {
            let (l, r) = transform::p_identity_printed_sides(
                pt.pair("pair")?.as_ref(),
                &pt.rat("p")?,
                pt.int("n")?,
                pt.int("m")?,
            )?;
            Ok(l - r)
        })
        .witness(
            Point::new()
                .with_pair("pair", "constant-one")
                .with_rat("p", rat(2))
                .with_int("n", 1)
                .with_int("m", 2),
            "8",
            "8",
            Some("-6"),
        )
        .build(),
    );

    v.push(
        entry(
            "intro-p-particular",
            "1.2.2",
            "sum_j C(n,j) sigma[j] p^(n-j) = sum_j C(n,j) (-1)^j s[j] (p+1)^(n-j)",
        )
        .pairs("pair", MASTER_PAIRS)
        .rats("p", p_grid())
        .int_range("n", 0, 10)
        .lhs(|pt| {
            Ok(transform::p_identity_particular_sides(pt.pair("pair")?.as_ref(), &pt.rat("p")?, pt.int("n")?)?.0)
        })
        .rhs(|pt| {
            Ok(transform::p_identity_particular_sides(pt.pair("pair")?.as_ref(), &pt.rat("p")?, pt.int("n")?)?.1)
        })
        .build(),
    );

    v.push(
        entry(
            "intro-bernoulli-double",
            "1.3.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^k B[k-j] = B[n] + B[n-1], n >= 1",
        )
        .int_range("n", 1, 60)
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
            "intro-fibonacci-double",
            "1.3.2",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j F[k-j] = (-1)^(n-1) F[n-2], n >= 1",
        )
        .int_range("n", 1, 200)
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
            let n = pt.int("n")?;
            Ok(alt(n - 1, fibonacci(n - 2)))
        })
        .build(),
    );

    v.push(
        entry(
            "intro-harmonic-double",
            "1.3.3",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j H[k+r-j] = (-1)^n (-H[r+1] if n=1; \
             1/(n-1) C(n+r-1,r)^-1 - 1/n C(n+r,r)^-1 if n>=2)",
        )
        .int_range("n", 1, 60)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * harmonic(k + r - j, 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let inner = if n == 1 {
                -harmonic(r + 1, 1)?
            } else {
                inv_binomial(n + r - 1, r)? / rat(n - 1) - inv_binomial(n + r, r)? / rat(n)
            };
            Ok(alt(n, inner))
        })
        .build(),
    );

    v.push(
        entry(
            "intro-catalan-double",
            "1.3.4",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j 2^(2(k-j)) Cat[n-k+j+1] = 4 Cat[n]",
        )
        .status(Status::EdgeRestricted)
        .notes(
            "Stated for non-negative n but derived from the shifted master \
             identity, which needs n >= 1; at n = 0 the left side is Cat[1] = 1 \
             while the right side is 4.",
        )
        .int_range("n", 1, 100)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 0))
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "1", "4", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * pow_i(&rat(2), 2 * (k - j))? * catalan(n - k + j + 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| Ok(rat(4) * catalan(pt.int("n")?)?))
        .build(),
    );

    v
}
