//! Catalog section 4.3: harmonic and odd-harmonic double sums.

use super::{entry, Identity, Point, Status};
use crate::binom::{bin, inv_binomial};
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::{harmonic, odd_harmonic};
use alloc::vec::Vec;
use num_traits::Zero;

fn h(i: i64) -> Result<Rational> {
    harmonic(i, 1)
}

fn o(i: i64) -> Result<Rational> {
    odd_harmonic(i, 1)
}

fn two_pow(e: i64) -> Result<Rational> {
    pow_i(&rat(2), e)
}

fn ceil_div2(k: i64) -> i64 {
    (k + 1).div_euclid(2)
}

fn floor_div2(k: i64) -> i64 {
    k.div_euclid(2)
}

/// `sum_k sum_j (-1)^j C(n,j) X[n+j-k]`, the shifted-difference shape.
fn shifted_lhs(n: i64, x: impl Fn(i64) -> Result<Rational>) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        for j in 0..=k {
            acc += alt(j, bin(n, j) * x(n + j - k)?);
        }
    }
    Ok(acc)
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "prop-4.3-harmonic-Hnjk",
            "4.3.1.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+r+j-k] = \
             (H[r] if n=1; -1/(n-1) C(n-1+r,r)^-1 if n>1)",
        )
        .int_range("n", 2, 40)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let r = pt.int("r")?;
            shifted_lhs(pt.int("n")?, |i| h(i + r))
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            if n == 1 {
                h(r)
            } else {
                Ok(-inv_binomial(n - 1 + r, r)? / rat(n - 1))
            }
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-odd-harmonic",
            "4.3.1.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) O[n+j-k] = \
             -1/(n-1) C(2(n-1),n-1)^-1 2^(2n-3)",
        )
        .status(Status::EdgeRestricted)
        .notes(
            "Stated for positive n, but the closed form divides by n-1; at \
             n = 1 the left side is 0 while the right side is undefined.",
        )
        .int_range("n", 2, 30)
        .gap(|pt| pt.int("n") == Ok(1))
        .witness(Point::new().with_int("n", 1), "0", "undefined", None)
        .lhs(|pt| shifted_lhs(pt.int("n")?, o))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            if n == 1 {
                return Err(crate::error::Error::DivisionByZero(
                    "closed form divides by n - 1".into(),
                ));
            }
            Ok(-inv_binomial(2 * (n - 1), n - 1)? * two_pow(2 * n - 3)? / rat(n - 1))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-shifted-diff",
            "4.3.2.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[k+r-j] = (-1)^n (-H[r+1] if n=1; \
             1/(n-1) C(n+r-1,r)^-1 - 1/n C(n+r,r)^-1 if n>1)",
        )
        .int_range("n", 1, 40)
        .int_range("r", 0, 8)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1) && pt.int("r").is_ok_and(|r| r >= 0))
        .lhs(|pt| {
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * h(k + r - j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, r) = (pt.int("n")?, pt.int("r")?);
            let inner = if n == 1 {
                -h(r + 1)?
            } else {
                inv_binomial(n + r - 1, r)? / rat(n - 1) - inv_binomial(n + r, r)? / rat(n)
            };
            Ok(alt(n, inner))
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.3-ho-central",
            "4.3.3.1",
            "sum_{k=0}^n (-1)^k C(n,k) 2^-k C(2k,k) (H[k]-O[k]) = \
             (2^(-n-1) C(n,n/2) H[n/2] if n even; 0 if n odd)",
        )
        .int_range("n", 0, 30)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(-k)? * bin(2 * k, k) * (h(k)? - o(k)?));
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                two_pow(-n - 1)? * bin(n, n / 2) * h(n / 2)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-ho-central-shifted",
            "4.3.4.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(k-j) C(2(n-k+j),n-k+j) \
             (H[n-k+j]-O[n-k+j]) = (C(n-1,(n-1)/2) H[(n-1)/2] if n odd; 0 if n even)",
        )
        .int_range("n", 0, 24)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n - k + j;
                    acc += alt(j, bin(n, j) * two_pow(k - j)? * bin(2 * i, i) * (h(i)? - o(i)?));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                bin(n - 1, (n - 1) / 2) * h((n - 1) / 2)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-ho-central-ratio",
            "4.3.5.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) 2^(k-j) C(2(n-k+j),n-k+j) \
             (H[n-k+j]-O[n-k+j])/(k-j) = (-1)^(n+1) C(2n,n) (H[n]-O[n]) + \
             (1/2 C(n,n/2) H[n/2] if n even; 0 if n odd)",
        )
        .int_range("n", 0, 20)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j;
                    let term = rat(n) * bin(n, j) * two_pow(k - j)? * bin(2 * i, i)
                        * (h(i)? - o(i)?)
                        / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let head = alt(n + 1, bin(2 * n, n) * (h(n)? - o(n)?));
            Ok(if n % 2 == 0 {
                head + bin(n, n / 2) * h(n / 2)? / rat(2)
            } else {
                head
            })
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.3-inv-square",
            "4.3.6.1",
            "sum_{k=0}^n (-1)^k C(n,k) 2^k/(k+1)^2 = O[floor((n+2)/2)]/(n+1)",
        )
        .status(Status::Amended)
        .notes(
            "The cataloged closed form omits the /(n+1) factor; without it the \
             identity already fails at n = 1 (1/2 against O[1] = 1). The \
             division restores the transform relation, which then validates \
             over the whole range.",
        )
        .int_range("n", 0, 30)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(k)? / rat((k + 1) * (k + 1)));
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(o(floor_div2(n + 2))? / rat(n + 1))
        })
        .printed(|pt| o(floor_div2(pt.int("n")? + 2)))
        .witness(Point::new().with_int("n", 1), "1/2", "1/2", Some("1"))
        .build(),
    );

    v.push(
        entry(
            "lem-4.3-inv-cube",
            "4.3.6.2",
            "sum_{k=0}^n (-1)^k C(n,k) 2^k/(k+1)^3 = 1/4 (H[n+1]^2+H2[n+1])/(n+1) - \
             1/8 (H[ceil(n/2)]^2+H2[ceil(n/2)])/(n+1) + 1/2 (O[floor((n+2)/2)]^2+\
             O2[floor((n+2)/2)])/(n+1) - 1/(2(n+1)) sum_{k=0}^n (-1)^k H[k+1]/(k+1)",
        )
        .int_range("n", 0, 24)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(k)? / rat((k + 1) * (k + 1) * (k + 1)));
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let np1 = rat(n + 1);
            let part1 = (pow_i(&h(n + 1)?, 2)? + harmonic(n + 1, 2)?) / &np1 / rat(4);
            let hc = ceil_div2(n);
            let part2 = (pow_i(&h(hc)?, 2)? + harmonic(hc, 2)?) / &np1 / rat(8);
            let of = floor_div2(n + 2);
            let part3 = (pow_i(&o(of)?, 2)? + odd_harmonic(of, 2)?) / &np1 / rat(2);
            let mut tail = Rational::zero();
            for k in 0..=n {
                tail += alt(k, h(k + 1)? / rat(k + 1));
            }
            Ok(part1 - part2 + part3 - tail / (rat(2) * np1))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-inv-square-shifted",
            "4.3.7.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(m+n+j-k)/(m+n+j-k+1)^2 = \
             sum_{k=0}^m (-1)^k C(m,k) O[ceil((n+k)/2)]/(n+k)",
        )
        .status(Status::Amended)
        .notes(
            "Inherits the missing division from the square lemma: the right \
             side needs the /(n+k) factor. Witness n = 2, m = 0: both corrected \
             sides 1/2, the undivided form gives 1.",
        )
        .int_range("n", 1, 16)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = m + n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(i)? / rat((i + 1) * (i + 1)));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * o(ceil_div2(n + k))? / rat(n + k));
            }
            Ok(acc)
        })
        .printed(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * o(ceil_div2(n + k))?);
            }
            Ok(acc)
        })
        .witness(
            Point::new().with_int("n", 2).with_int("m", 0),
            "1/2",
            "1/2",
            Some("1"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-inv-cube-shifted",
            "4.3.7.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(n+j-k)/(n+j-k+1)^3 = \
             1/4 (H[n]^2+H2[n])/n - 1/8 (H[floor(n/2)]^2+H2[floor(n/2)])/n + \
             1/2 (O[ceil(n/2)]^2+O2[ceil(n/2)])/n + 1/(2n) sum_{k=1}^n (-1)^k H[k]/k",
        )
        .int_range("n", 1, 24)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(i)? / rat((i + 1) * (i + 1) * (i + 1)));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let nn = rat(n);
            let part1 = (pow_i(&h(n)?, 2)? + harmonic(n, 2)?) / &nn / rat(4);
            let hf = floor_div2(n);
            let part2 = (pow_i(&h(hf)?, 2)? + harmonic(hf, 2)?) / &nn / rat(8);
            let oc = ceil_div2(n);
            let part3 = (pow_i(&o(oc)?, 2)? + odd_harmonic(oc, 2)?) / &nn / rat(2);
            let mut tail = Rational::zero();
            for k in 1..=n {
                tail += alt(k, h(k)? / rat(k));
            }
            Ok(part1 - part2 + part3 + tail / (rat(2) * nn))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-simple",
            "4.3.8.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+j-k] = -1/(n-1), n >= 2",
        )
        .int_range("n", 2, 40)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2))
        .lhs(|pt| shifted_lhs(pt.int("n")?, h))
        .rhs(|pt| Ok(-Rational::from_integer(1.into()) / rat(pt.int("n")? - 1)))
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-simple-squared",
            "4.3.8.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+j-k]^2 = \
             H[n-1]/(n-1) - 2/(n-1)^2, n >= 2",
        )
        .int_range("n", 2, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 2))
        .lhs(|pt| shifted_lhs(pt.int("n")?, |i| pow_i(&h(i)?, 2)))
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(h(n - 1)? / rat(n - 1) - rat(2) / rat((n - 1) * (n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-alternating",
            "4.3.8.3",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k C(n,j) H[n+j-k] = \
             (-1)^n 2^(n-1) (H[n-1] - sum_{k=1}^{n-1} 1/(k 2^k))",
        )
        .int_range("n", 1, 30)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(k, bin(n, j) * h(n + j - k)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let mut tail = Rational::zero();
            for k in 1..=(n - 1) {
                tail += Rational::from_integer(1.into()) / (rat(k) * two_pow(k)?);
            }
            Ok(alt(n, two_pow(n - 1)? * (h(n - 1)? - tail)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-ratio-alternating",
            "4.3.9.1",
            "sum_{k=0}^n (-1)^k sum_{j=0}^k n C(n,j) H[k-j+1]/(k-j+1) = \
             -sum_{k=1}^n C(n,k) (2k+1) (-2)^(n-k) / (k(k+1)^2)",
        )
        .status(Status::Amended)
        .notes(
            "Inherits the harmonic-ratio amendment: the cataloged right side \
             starts its sum at k = 0 (dividing by zero) and has the opposite \
             sign. Witness n = 1: both corrected sides -3/4; the original form \
             is undefined.",
        )
        .int_range("n", 1, 24)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let d = k - j;
                    acc += alt(k, rat(n) * bin(n, j) * h(d + 1)? / rat(d + 1));
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                let w = rat(2 * k + 1) * pow_i(&rat(-2), n - k)? / (rat(k) * rat(k + 1) * rat(k + 1));
                acc += bin(n, k) * w;
            }
            Ok(-acc)
        })
        .printed(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                let denom = rat(k) * rat(k + 1) * rat(k + 1);
                if denom.is_zero() {
                    return Err(crate::error::Error::DivisionByZero(
                        "original form divides by k = 0".into(),
                    ));
                }
                acc += bin(n, k) * rat(2 * k + 1) * pow_i(&rat(-2), n - k)? / denom;
            }
            Ok(acc)
        })
        .witness(
            Point::new().with_int("n", 1),
            "-3/4",
            "-3/4",
            Some("undefined"),
        )
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-triple",
            "4.3.10.1",
            "sum_{n=0}^m sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+j-k] = -H[m-1]",
        )
        .int_range("m", 1, 30)
        .constraint(|pt| pt.int("m").is_ok_and(|m| m >= 1))
        .lhs(|pt| {
            let m = pt.int("m")?;
            let mut acc = Rational::zero();
            for n in 0..=m {
                acc += shifted_lhs(n, h)?;
            }
            Ok(acc)
        })
        .rhs(|pt| Ok(-h(pt.int("m")? - 1)?))
        .build(),
    );

    v.push(
        entry(
            "prop-4.3-harmonic-triple-squared",
            "4.3.10.2",
            "sum_{n=0}^m sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) H[n+j-k]^2 = \
             1/2 (H[m-1]^2 - 3 H2[m-1])",
        )
        .int_range("m", 1, 24)
        .constraint(|pt| pt.int("m").is_ok_and(|m| m >= 1))
        .lhs(|pt| {
            let m = pt.int("m")?;
            let mut acc = Rational::zero();
            for n in 0..=m {
                acc += shifted_lhs(n, |i| pow_i(&h(i)?, 2))?;
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let m = pt.int("m")?;
            Ok((pow_i(&h(m - 1)?, 2)? - rat(3) * harmonic(m - 1, 2)?) / rat(2))
        })
        .build(),
    );

    v
}
