//! Catalog section 3: the master double-sum identities for binomial
//! transform pairs.

use super::masters::*;
use super::sec1::MASTER_PAIRS;
use super::{entry, Identity, Point, Status};
use crate::doublesum;
use crate::rational::{alt, frac, rat, Rational};
use crate::transform;
use alloc::vec::Vec;
use num_traits::{One, Zero};

const SELF_PAIRS: &[&str] = &[
    "bernoulli-signed",
    "bernoulli-ratio",
    "lucas-self",
    "catalan-donaghey",
    "catalan-odd-ratio",
];

const ANTI_PAIRS: &[&str] = &["fibonacci-anti"];

const S_PAIRS: &[&str] = &[
    "constant-one",
    "bernoulli-signed",
    "fibonacci-anti",
    "harmonic-r(0)",
];

const T_PAIRS: &[&str] = &["alternating", "lucas-self", "catalan-donaghey"];

const BETA_PAIRS: &[&str] = &[
    "constant-one",
    "alternating",
    "bernoulli-signed",
    "fibonacci-anti",
    "lucas-self",
    "catalan-donaghey",
    "harmonic-r(0)",
    "horadam-sq(0,1;1,-1)",
];

fn grid7() -> Vec<Rational> {
    alloc::vec![rat(-3), rat(-1), frac(-1, 2), rat(0), frac(1, 2), rat(2), rat(3)]
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "thm-3.1",
            "3.1.1",
            "sum_{k=0}^n x^k sum_{j=0}^k C(n,j) y^j = ((1+xy)^n - x^(n+1)(1+y)^n)/(1-x)",
        )
        .int_range("n", 0, 16)
        .rats("x", grid7())
        .rats("y", grid7())
        .constraint(|pt| pt.rat("x").is_ok_and(|x| x != Rational::one()))
        .lhs(|pt| doublesum::thm31_lhs(pt.int("n")?, &pt.rat("x")?, &pt.rat("y")?))
        .rhs(|pt| doublesum::thm31_rhs(pt.int("n")?, &pt.rat("x")?, &pt.rat("y")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.2",
            "3.2.1",
            "sum_{k=0}^n sum_{j=0}^k C(n,j) (-1)^j (1-y)^j = n y^(n-1) + y^n, n >= 1",
        )
        .int_range("n", 1, 16)
        .rats("y", grid7())
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| doublesum::cor32_lhs(pt.int("n")?, &pt.rat("y")?))
        .rhs(|pt| doublesum::cor32_rhs(pt.int("n")?, &pt.rat("y")?))
        .build(),
    );

    v.push(
        entry(
            "lem-3.3",
            "3.3.1",
            "the substitution operator sends (1-y)^j to sigma[j]: \
             sum_{k=0}^j C(j,k) (-1)^k s[k] = sigma[j]",
        )
        .all_pairs("pair")
        .int_range("j", 0, 16)
        .lhs(|pt| {
            let pair = pt.pair("pair")?;
            transform::transform_of(|k| pair.s(k), pt.int("j")?)
        })
        .rhs(|pt| pt.pair("pair")?.sigma(pt.int("j")?))
        .build(),
    );

    v.push(
        entry(
            "thm-3.4",
            "3.4.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s[m+n-k+j] = \
             sum_{k=0}^m (-1)^k C(m,k) sigma[n+k-1], n >= 1",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 8)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| shifted_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .rhs(|pt| shifted_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .build(),
    );

    v.push(
        entry(
            "thm-3.4-particular",
            "3.4.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s[n+j-k] = sigma[n-1], n >= 1",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 12)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| shifted_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| {
            crate::guard::note_closed_form();
            pt.pair("pair")?.sigma(pt.int("n")? - 1)
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.5-harmonic-weight",
            "3.5.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+j-k] s[n+j-k] = \
             sigma[n-1] H[n-1] - sum_{k=1}^{n-1} sigma[n-1-k]/k, n >= 1",
        )
        .status(Status::Amended)
        .notes(
            "The original display weights the inner sum with C(n,k); the \
             derivation substitutes the harmonic-weighted pair into the shifted \
             master identity, whose weight is C(n,j). Witness: constant pair at \
             n = 2, where the C(n,k) form gives 1 against the true value -1.",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 10)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| harmonic_weight_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, true))
        .rhs(|pt| harmonic_weight_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .printed(|pt| harmonic_weight_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, false))
        .witness(
            Point::new().with_pair("pair", "constant-one").with_int("n", 2),
            "-1",
            "-1",
            Some("1"),
        )
        .build(),
    );

    v.push(
        entry(
            "thm-3.6",
            "3.6.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s[k-j] t[n-k+j] = \
             sum_{k=0}^n (-1)^k k C(n,k) tau[n-k] (sigma[k]-sigma[k-1])",
        )
        .pairs("pair", S_PAIRS)
        .pairs("pair_t", T_PAIRS)
        .int_range("n", 1, 8)
        .lhs(|pt| two_pair_lhs(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| two_pair_rhs(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?))
        .build(),
    );

    v.push(
        entry(
            "thm-3.6-general",
            "3.6.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s[m+k-j] t[n-k+j] = \
             sum_{k=0}^n sum_{j=0}^m (-1)^(k+j) k C(n,k) C(m,j) tau[n-k] \
             (sigma[j+k]-sigma[j+k-1])",
        )
        .pairs("pair", S_PAIRS)
        .pairs("pair_t", T_PAIRS)
        .int_range("n", 1, 6)
        .int_range("m", 0, 4)
        .lhs(|pt| {
            two_pair_lhs(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?, pt.int("m")?)
        })
        .rhs(|pt| {
            two_pair_rhs_general(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?, pt.int("m")?)
        })
        .build(),
    );

    v.push(
        entry(
            "thm-3.6-intermediate",
            "3.6.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s[k-j] t[n-k+j] = \
             sum_{k=0}^n (-1)^(n-k) k C(n,k) s[k] t[n-k]",
        )
        .pairs("pair", S_PAIRS)
        .pairs("pair_t", T_PAIRS)
        .int_range("n", 1, 8)
        .lhs(|pt| two_pair_lhs(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| two_pair_intermediate_rhs(pt.pair("pair")?.as_ref(), pt.pair("pair_t")?.as_ref(), pt.int("n")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.7",
            "3.7.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) s[m+n-k+j]/(k-j) = \
             sum_{k=0}^m (-1)^k C(m,k) sigma[k+n] - (-1)^n s[m+n]",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 0, 8)
        .int_range("m", 0, 6)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .rhs(|pt| ratio_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.7-particular",
            "3.7.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) s[n-k+j]/(k-j) = \
             sigma[n] - (-1)^n s[n]",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 0, 12)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let pair = pt.pair("pair")?;
            let n = pt.int("n")?;
            Ok(pair.sigma(n)? - alt(n, pair.s(n)?))
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.8-self",
            "3.8.1",
            "for self-inverse s: sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) \
             s[m+n-k+j]/(k-j) = sum_{k=0}^{m-1} (-1)^k C(m,k) s[k+n] + \
             ((-1)^m - (-1)^n) s[m+n]",
        )
        .pairs("pair", SELF_PAIRS)
        .int_range("n", 0, 8)
        .int_range("m", 0, 6)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .rhs(|pt| ratio_rhs_self(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.8-anti",
            "3.8.2",
            "for anti-self-inverse s: sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) \
             s[m+n-k+j]/(k-j) = -sum_{k=0}^{m-1} (-1)^k C(m,k) s[k+n] - \
             ((-1)^m + (-1)^n) s[m+n]",
        )
        .pairs("pair", ANTI_PAIRS)
        .int_range("n", 0, 8)
        .int_range("m", 0, 6)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .rhs(|pt| ratio_rhs_anti(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.8-self-parity",
            "3.8.3",
            "for self-inverse s: sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) \
             s[n-k+j]/(k-j) = 0 for even n, 2 s[n] for odd n",
        )
        .pairs("pair", SELF_PAIRS)
        .int_range("n", 0, 12)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                Rational::zero()
            } else {
                rat(2) * pt.pair("pair")?.s(n)?
            })
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.8-anti-parity",
            "3.8.4",
            "for anti-self-inverse s: sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) \
             s[n-k+j]/(k-j) = -2 s[n] for even n, 0 for odd n",
        )
        .pairs("pair", ANTI_PAIRS)
        .int_range("n", 0, 12)
        .lhs(|pt| ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                rat(-2) * pt.pair("pair")?.s(n)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.9",
            "3.9.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s[m+k-j] = \
             (-1)^n sum_{k=0}^m (-1)^k C(m,k) (sigma[k+n] - sigma[k+n-1]), n >= 1",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 8)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| plain_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .rhs(|pt| plain_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("m")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.9-particular",
            "3.9.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) s[k-j] = \
             (-1)^n (sigma[n] - sigma[n-1]), n >= 1",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 12)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| plain_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, 0))
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let pair = pt.pair("pair")?;
            let n = pt.int("n")?;
            Ok(alt(n, pair.sigma(n)? - pair.sigma(n - 1)?))
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.10-geometric",
            "3.10.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) t^(k-j) s[n-k+j] = \
             sum_{k=1}^n (-1)^(k+1) k C(n,k) sigma[n-k] t (1-t)^(k-1)",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 0, 10)
        .rats("t", alloc::vec![rat(0), rat(1), rat(2), frac(1, 2), rat(-1), frac(-1, 3), rat(3)])
        .lhs(|pt| geometric_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, &pt.rat("t")?))
        .rhs(|pt| geometric_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, &pt.rat("t")?))
        .build(),
    );

    v.push(
        entry(
            "thm-3.11-beta-a",
            "3.11.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) s[n-k+j] / ((k-j+s) C(k-j+r,k-j+s)) \
             = sum_{k=1}^n (-1)^(k+1) k C(n,k) sigma[n-k] / ((s+1) C(r+k,s+1))",
        )
        .notes("Quantified over complex r, s; instantiated at integers r >= s >= 1.")
        .pairs("pair", BETA_PAIRS)
        .int_range("n", 1, 8)
        .int_range("r", 1, 5)
        .int_range("s", 1, 4)
        .constraint(|pt| {
            let (r, s) = (pt.int("r").unwrap_or(-1), pt.int("s").unwrap_or(-1));
            s >= 1 && r >= s
        })
        .lhs(|pt| beta_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("r")?, pt.int("s")?))
        .rhs(|pt| beta_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("r")?, pt.int("s")?))
        .build(),
    );

    v.push(
        entry(
            "thm-3.11-beta-b",
            "3.11.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) (H[r-s]-H[k-j+r]) s[n-k+j] / \
             ((k-j+s) C(k-j+r,k-j+s)) = sum_{k=1}^n (-1)^(k+1) k C(n,k) \
             (H[r+k-s-1]-H[r+k]) sigma[n-k] / ((s+1) C(r+k,s+1))",
        )
        .notes("Quantified over complex r, s; instantiated at integers r >= s >= 1.")
        .pairs("pair", BETA_PAIRS)
        .int_range("n", 1, 8)
        .int_range("r", 1, 5)
        .int_range("s", 1, 4)
        .constraint(|pt| {
            let (r, s) = (pt.int("r").unwrap_or(-1), pt.int("s").unwrap_or(-1));
            s >= 1 && r >= s
        })
        .lhs(|pt| beta_harmonic_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("r")?, pt.int("s")?))
        .rhs(|pt| beta_harmonic_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?, pt.int("r")?, pt.int("s")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.12-harmonic-ratio",
            "3.12.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j n C(n,j) H[k-j+1]/(k-j+1) s[n-k+j] = \
             sum_{k=1}^n (-1)^(k+1) C(n,k) (2k+1)/(k(k+1)^2) sigma[n-k]",
        )
        .status(Status::Amended)
        .notes(
            "As printed the right side starts at k = 0 (dividing by zero) and \
             carries sign (-1)^k; setting r = s = 1 in the differentiated beta \
             identity gives the k >= 1 sum with sign (-1)^(k+1). Witness: the \
             alternating pair at n = 1 (both corrected sides 3/4; the original \
             right side is undefined).",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 12)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| harmonic_ratio_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .rhs(|pt| harmonic_ratio_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .printed(|pt| harmonic_ratio_rhs_printed(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .witness(
            Point::new().with_pair("pair", "alternating").with_int("n", 1),
            "3/4",
            "3/4",
            Some("undefined"),
        )
        .build(),
    );

    v.push(
        entry(
            "cor-3.13-poly",
            "3.13.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^(j+1) C(n+1,j+1) (1-y)^(j+1) = \
             (n+1) y^n + y^(n+1) - (n+2), n >= 1",
        )
        .int_range("n", 1, 12)
        .rats("y", grid7())
        .lhs(|pt| {
            let (n, y) = (pt.int("n")?, pt.rat("y")?);
            let one_minus_y = Rational::one() - &y;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(
                        j + 1,
                        crate::binom::bin(n + 1, j + 1) * crate::rational::pow_i(&one_minus_y, j + 1)?,
                    );
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let (n, y) = (pt.int("n")?, pt.rat("y")?);
            Ok(rat(n + 1) * crate::rational::pow_i(&y, n)? + crate::rational::pow_i(&y, n + 1)?
                - rat(n + 2))
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.13-pair",
            "3.13.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^(j+1) C(n+1,j+1) s[j+1] = \
             (n+1) sigma[n] + sigma[n+1] - (n+2) sigma[0], n >= 1",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 1, 10)
        .lhs(|pt| integrated_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .rhs(|pt| integrated_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .build(),
    );

    v.push(
        entry(
            "cor-3.14-poly",
            "3.14.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n+2,j+2) (1-y)^(j+2) = \
             (n+2) y^(n+1) + y^(n+2) - (n+2)^2 y + n^2 + 3n + 1",
        )
        .int_range("n", 0, 12)
        .rats("y", grid7())
        .lhs(|pt| {
            let (n, y) = (pt.int("n")?, pt.rat("y")?);
            let one_minus_y = Rational::one() - &y;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(
                        j,
                        crate::binom::bin(n + 2, j + 2) * crate::rational::pow_i(&one_minus_y, j + 2)?,
                    );
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            crate::guard::note_closed_form();
            let (n, y) = (pt.int("n")?, pt.rat("y")?);
            Ok(rat(n + 2) * crate::rational::pow_i(&y, n + 1)?
                + crate::rational::pow_i(&y, n + 2)?
                - rat((n + 2) * (n + 2)) * &y
                + rat(n * n + 3 * n + 1))
        })
        .build(),
    );

    v.push(
        entry(
            "cor-3.14-pair",
            "3.14.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n+2,j+2) s[j+2] = \
             (n+2) sigma[n+1] + sigma[n+2] + (n+2)^2 s[1] - (n+3) s[0]",
        )
        .pairs("pair", MASTER_PAIRS)
        .int_range("n", 0, 10)
        .lhs(|pt| twice_integrated_lhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .rhs(|pt| twice_integrated_rhs(pt.pair("pair")?.as_ref(), pt.int("n")?))
        .build(),
    );

    v
}
