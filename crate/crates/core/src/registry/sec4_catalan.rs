//! Catalog section 4.4: Catalan-number double sums (several mixed with
//! harmonic and odd-harmonic factors).

use super::{entry, Identity, Point, Status};
use crate::binom::bin;
use crate::error::Result;
use crate::guard;
use crate::rational::{alt, pow_i, rat, Rational};
use crate::sequences::{catalan, harmonic, odd_harmonic};
use alloc::vec::Vec;
use num_traits::Zero;

fn two_pow(e: i64) -> Result<Rational> {
    pow_i(&rat(2), e)
}

fn floor_div2(k: i64) -> i64 {
    k.div_euclid(2)
}

pub(super) fn entries() -> Vec<Identity> {
    let mut v = Vec::new();

    v.push(
        entry(
            "lem-4.4-central-binom-half",
            "4.4.1.1",
            "sum_{k=0}^n (-1)^k C(n,k) 2^-k C(k,floor(k/2)) = 2^-n Cat[n]",
        )
        .int_range("n", 0, 40)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(-k)? * bin(k, floor_div2(k)));
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(two_pow(-n)? * catalan(n)?)
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.4-catalan-half",
            "4.4.1.2",
            "sum_{k=0}^n (-1)^k C(n,k) 2^-k Cat[k+1] = (0 if n odd; 2^-n Cat[n/2] if n even)",
        )
        .int_range("n", 0, 40)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += alt(k, bin(n, k) * two_pow(-k)? * catalan(k + 1)?);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                two_pow(-n)? * catalan(n / 2)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-half-shifted",
            "4.4.2.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^-(m-k+j) Cat[m+n-k+j] = \
             sum_{k=0}^m (-1)^k C(m,k) 2^-(k-1) C(n+k-1, floor((n+k-1)/2)), n >= 1",
        )
        .int_range("n", 1, 14)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(-(m - k + j))? * catalan(m + n - k + j)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                let i = n + k - 1;
                acc += alt(k, bin(m, k) * two_pow(-(k - 1))? * bin(i, floor_div2(i)));
            }
            Ok(acc)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-half-parity",
            "4.4.2.2",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^-(n+j-k) Cat[n+j-k+1] = \
             (2^-(n-1) Cat[(n-1)/2] if n odd; 0 if n even), n >= 1",
        )
        .int_range("n", 1, 20)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(-i)? * catalan(i + 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                two_pow(-(n - 1))? * catalan((n - 1) / 2)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-central-shift",
            "4.4.2.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^-(n+j-k) Cat[n+j-k] = \
             2^-(n-1) C(n-1, floor((n-1)/2)), n >= 1",
        )
        .int_range("n", 1, 20)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    acc += alt(j, bin(n, j) * two_pow(-i)? * catalan(i)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(two_pow(-(n - 1))? * bin(n - 1, floor_div2(n - 1)))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-ratio-parity",
            "4.4.3.1",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) 2^(k-j) Cat[n-k+j+1]/(k-j) = \
             (Cat[n+1] if n odd; Cat[n/2] - Cat[n+1] if n even)",
        )
        .int_range("n", 0, 20)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let term =
                        rat(n) * bin(n, j) * two_pow(k - j)? * catalan(n - k + j + 1)? / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                catalan(n + 1)?
            } else {
                catalan(n / 2)? - catalan(n + 1)?
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-quad",
            "4.4.4.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(2(k-j)) Cat[m+n-k+j+1] = \
             2^(2m+2) sum_{k=0}^m (-1)^k C(m,k) 2^-2k Cat[n+k]",
        )
        .status(Status::EdgeRestricted)
        .notes(
            "Stated for non-negative m and n but derived from the shifted \
             master identity, which needs n >= 1; n = 0 fails (1 against 4 at \
             m = 0).",
        )
        .int_range("n", 1, 14)
        .int_range("m", 0, 6)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(
            Point::new().with_int("n", 0).with_int("m", 0),
            "1",
            "4",
            None,
        )
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(2 * (k - j))? * catalan(m + n - k + j + 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += alt(k, bin(m, k) * two_pow(-2 * k)? * catalan(n + k)?);
            }
            Ok(two_pow(2 * m + 2)? * acc)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-quad-ratio",
            "4.4.4.2",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) 2^(-2(m+n-k+j)) \
             Cat[m+n-k+j+1]/(k-j) = sum_{k=0}^{m-1} (-1)^k C(m,k) 2^(-2(k+n)) \
             Cat[k+n+1] + ((-1)^m - (-1)^n) 2^(-2(m+n)) Cat[m+n+1]",
        )
        .int_range("n", 0, 12)
        .int_range("m", 0, 6)
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = m + n - k + j;
                    let term =
                        rat(n) * bin(n, j) * two_pow(-2 * i)? * catalan(i + 1)? / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..m {
                acc += alt(k, bin(m, k) * two_pow(-2 * (k + n))? * catalan(k + n + 1)?);
            }
            let sign = alt(m, Rational::from_integer(1.into()))
                - alt(n, Rational::from_integer(1.into()));
            Ok(acc + sign * two_pow(-2 * (m + n))? * catalan(m + n + 1)?)
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-4Cn",
            "4.4.4.3",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(2(k-j)) Cat[n-k+j+1] = 4 Cat[n]",
        )
        .status(Status::EdgeRestricted)
        .notes("The m = 0 slice of the quad identity; fails at n = 0 (1 against 4).")
        .int_range("n", 1, 60)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "1", "4", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    acc += alt(j, bin(n, j) * two_pow(2 * (k - j))? * catalan(n - k + j + 1)?);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| Ok(rat(4) * catalan(pt.int("n")?)?))
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-quad-ratio-parity",
            "4.4.4.4",
            "sum_{k=1}^n sum_{j=0}^{k-1} (-1)^j n C(n,j) 2^(-2(n-k+j)) \
             Cat[n-k+j+1]/(k-j) = (2^(1-2n) Cat[n+1] if n odd; 0 if n even)",
        )
        .int_range("n", 0, 16)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 1..=n {
                for j in 0..k {
                    let i = n - k + j;
                    let term =
                        rat(n) * bin(n, j) * two_pow(-2 * i)? * catalan(i + 1)? / rat(k - j);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                two_pow(1 - 2 * n)? * catalan(n + 1)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.4-catalan-ho",
            "4.4.5.1",
            "sum_{k=0}^n (-1)^k C(n,k) 2^-k Cat[k+1] (H[k+2]-O[k+1]) = \
             (2^(-n-1) Cat[n/2] H[(n+2)/2] if n even; 0 if n odd)",
        )
        .int_range("n", 0, 30)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                let term = bin(n, k)
                    * two_pow(-k)?
                    * catalan(k + 1)?
                    * (harmonic(k + 2, 1)? - odd_harmonic(k + 1, 1)?);
                acc += alt(k, term);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 0 {
                two_pow(-n - 1)? * catalan(n / 2)? * harmonic((n + 2) / 2, 1)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-ho-shifted",
            "4.4.6.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) 2^(k-j) Cat[n+j-k+1] \
             (H[n+j-k+2]-O[n+j-k+1]) = (Cat[(n-1)/2] H[(n+1)/2] if n odd; 0 if n even)",
        )
        .status(Status::EdgeRestricted)
        .notes("Stated for non-negative n; needs n >= 1 (at n = 0 the left side is 1/2).")
        .int_range("n", 1, 20)
        .gap(|pt| pt.int("n") == Ok(0))
        .witness(Point::new().with_int("n", 0), "1/2", "0", None)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = n + j - k;
                    let term = bin(n, j)
                        * two_pow(k - j)?
                        * catalan(i + 1)?
                        * (harmonic(i + 2, 1)? - odd_harmonic(i + 1, 1)?);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(if n % 2 == 1 {
                catalan((n - 1) / 2)? * harmonic((n + 1) / 2, 1)?
            } else {
                Rational::zero()
            })
        })
        .build(),
    );

    v.push(
        entry(
            "lem-4.4-catalan-odd-ratio",
            "4.4.7.1",
            "sum_{k=0}^n (-1)^k C(n,k) (2k+1) Cat[k] 2^-2k O[k+1]/(k+1) = \
             (2n+1) Cat[n] 2^-2n O[n+1]/(n+1)",
        )
        .int_range("n", 0, 30)
        .lhs(|pt| {
            let n = pt.int("n")?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                let term = bin(n, k) * rat(2 * k + 1) * catalan(k)? * two_pow(-2 * k)?
                    * odd_harmonic(k + 1, 1)?
                    / rat(k + 1);
                acc += alt(k, term);
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let n = pt.int("n")?;
            Ok(rat(2 * n + 1) * catalan(n)? * two_pow(-2 * n)? * odd_harmonic(n + 1, 1)?
                / rat(n + 1))
        })
        .build(),
    );

    v.push(
        entry(
            "prop-4.4-catalan-odd-ratio-shifted",
            "4.4.8.1",
            "sum_{k=0}^n sum_{j=0}^k (-1)^j C(n,j) (2(m+n-k+j)+1) Cat[m+n-k+j] \
             2^(-2(m+n-k+j)) O[m+n-k+j+1]/(m+n-k+j+1) = sum_{k=0}^m (-1)^k C(m,k) \
             (2(k+n)-1) Cat[k+n-1] 2^(-2(k+n-1)) O[k+n]/(k+n), n >= 1",
        )
        .int_range("n", 1, 12)
        .int_range("m", 0, 6)
        .constraint(|pt| pt.int("n").is_ok_and(|n| n >= 1))
        .lhs(|pt| {
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=n {
                for j in 0..=k {
                    let i = m + n - k + j;
                    let term = bin(n, j) * rat(2 * i + 1) * catalan(i)? * two_pow(-2 * i)?
                        * odd_harmonic(i + 1, 1)?
                        / rat(i + 1);
                    acc += alt(j, term);
                }
            }
            Ok(acc)
        })
        .rhs(|pt| {
            guard::note_closed_form();
            let (n, m) = (pt.int("n")?, pt.int("m")?);
            let mut acc = Rational::zero();
            for k in 0..=m {
                let i = k + n;
                let term = bin(m, k) * rat(2 * i - 1) * catalan(i - 1)? * two_pow(-2 * (i - 1))?
                    * odd_harmonic(i, 1)?
                    / rat(i);
                acc += alt(k, term);
            }
            Ok(acc)
        })
        .build(),
    );

    v
}
