//! Exact, memoized generators for the special sequences and polynomial
//! families used by the identity catalog.
//!
//! Index-only families (Bernoulli, Catalan, Fibonacci, Lucas, harmonic
//! numbers of any order, Stirling numbers of the second kind) memoize global
//! prefix tables. Parameterized recurrences (Gibonacci, Horadam, m-step)
//! are computed by direct forward/backward iteration from their seeds; a
//! [`Seq`] handle adds a per-instance cache on top, with negative indices
//! memoized separately from the forward prefix.
//!
//! Conventions fixed here:
//! - Bernoulli numbers use the generating-function convention `B_1 = -1/2`.
//! - `fibonacci(n) = gibonacci(0, 1, n)`, `lucas(n) = gibonacci(2, 1, n)`,
//!   with negative subscripts via `F_{-n} = (-1)^{n-1} F_n` and
//!   `L_{-n} = (-1)^n L_n` (equal to the backward recurrence).
//! - Harmonic and odd harmonic numbers are defined for `n >= 0`, order
//!   `m >= 1` only; there is no analytic continuation in exact mode.
//! - m-step presets: `fibonacci-m-step` seeds `[0, .., 0, 1]`;
//!   `lucas-m-step` is cataloged for m = 2 (`[2, 1]`) and m = 3 (`[3, 1, 3]`).

use crate::binom::bin;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{alt, frac, parse_rational, pow_i, rat, Rational};
use crate::sync::Lock;
use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

static BERNOULLI: Lock<Vec<Rational>> = Lock::new(Vec::new());
static BERNOULLI_POLY: Lock<Vec<Poly>> = Lock::new(Vec::new());
static CATALAN: Lock<Vec<Rational>> = Lock::new(Vec::new());
static FIBONACCI: Lock<Vec<Rational>> = Lock::new(Vec::new());
static LUCAS: Lock<Vec<Rational>> = Lock::new(Vec::new());
static STIRLING2: Lock<Vec<Vec<Rational>>> = Lock::new(Vec::new());
static HARMONIC: Lock<BTreeMap<i64, Vec<Rational>>> = Lock::new(BTreeMap::new());
static ODD_HARMONIC: Lock<BTreeMap<i64, Vec<Rational>>> = Lock::new(BTreeMap::new());

/// Drop every global memo table. Semantically invisible: recomputed terms
/// are equal to cached ones.
pub fn clear_caches() {
    BERNOULLI.write().clear();
    BERNOULLI_POLY.write().clear();
    CATALAN.write().clear();
    FIBONACCI.write().clear();
    LUCAS.write().clear();
    STIRLING2.write().clear();
    HARMONIC.write().clear();
    ODD_HARMONIC.write().clear();
}

fn prefix_term(
    table: &Lock<Vec<Rational>>,
    n: usize,
    mut next: impl FnMut(&[Rational]) -> Result<Rational>,
) -> Result<Rational> {
    {
        let t = table.read();
        if let Some(v) = t.get(n) {
            return Ok(v.clone());
        }
    }
    let mut t = table.write();
    while t.len() <= n {
        let v = next(&t)?;
        t.push(v);
    }
    Ok(t[n].clone())
}

/// Bernoulli number `B_n`, `B_1 = -1/2`.
///
/// Computed through the Stirling-number explicit form
/// `B_n = sum_k (-1)^k k! S(n,k) / (k+1)`, which keeps this route
/// independent of the Pascal-recurrence oracle used in the tests.
pub fn bernoulli_number(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("bernoulli_number({n})")));
    }
    prefix_term(&BERNOULLI, n as usize, |t| {
        let m = t.len() as i64;
        let mut acc = Rational::zero();
        let mut k_factorial = Rational::one();
        for k in 0..=m {
            if k > 0 {
                k_factorial *= rat(k);
            }
            let term = &k_factorial * stirling2(m, k)? / rat(k + 1);
            acc += alt(k, term);
        }
        Ok(acc)
    })
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^{n-k}` as a dense
/// polynomial.
pub fn bernoulli_poly(n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::domain(format!("bernoulli_poly({n})")));
    }
    {
        let t = BERNOULLI_POLY.read();
        if let Some(p) = t.get(n as usize) {
            return Ok(p.clone());
        }
    }
    let mut t = BERNOULLI_POLY.write();
    while t.len() as i64 <= n {
        let m = t.len() as i64;
        let mut coeffs = alloc::vec![Rational::zero(); m as usize + 1];
        for k in 0..=m {
            // coefficient of x^{m-k}
            coeffs[(m - k) as usize] = bin(m, k) * bernoulli_number(k)?;
        }
        t.push(Poly::from_coeffs(coeffs));
    }
    Ok(t[n as usize].clone())
}

/// `B_n(x)` evaluated exactly at a rational point.
pub fn bernoulli_poly_at(n: i64, x: &Rational) -> Result<Rational> {
    Ok(bernoulli_poly(n)?.eval(x))
}

/// `F_n` for any integer `n` (`F_{-n} = (-1)^{n-1} F_n`).
pub fn fibonacci(n: i64) -> Rational {
    if n < 0 {
        return alt(-n - 1, fibonacci(-n));
    }
    prefix_term(&FIBONACCI, n as usize, |t| {
        Ok(match t.len() {
            0 => Rational::zero(),
            1 => Rational::one(),
            l => &t[l - 1] + &t[l - 2],
        })
    })
    .expect("fibonacci is total")
}

/// `L_n` for any integer `n` (`L_{-n} = (-1)^n L_n`).
pub fn lucas(n: i64) -> Rational {
    if n < 0 {
        return alt(-n, lucas(-n));
    }
    prefix_term(&LUCAS, n as usize, |t| {
        Ok(match t.len() {
            0 => rat(2),
            1 => Rational::one(),
            l => &t[l - 1] + &t[l - 2],
        })
    })
    .expect("lucas is total")
}

/// Fibonacci-recurrence sequence with arbitrary seeds, extended to all
/// integers by direct iteration (`G_{-1} = G_1 - G_0`, ...).
pub fn gibonacci(g0: &Rational, g1: &Rational, n: i64) -> Rational {
    let (mut a, mut b) = (g0.clone(), g1.clone());
    if n >= 0 {
        for _ in 0..n {
            let next = &a + &b;
            a = b;
            b = next;
        }
        a
    } else {
        for _ in 0..-n {
            let prev = &b - &a;
            b = a;
            a = prev;
        }
        a
    }
}

/// Horadam term `w_n(a, b; p, q)`: `w_0 = a`, `w_1 = b`,
/// `w_n = p w_{n-1} - q w_{n-2}`, extended backwards by
/// `w_{-n} = (p w_{-n+1} - w_{-n+2}) / q` (so `q != 0` is required for
/// negative indices).
pub fn horadam(a: &Rational, b: &Rational, p: &Rational, q: &Rational, n: i64) -> Result<Rational> {
    let (mut w0, mut w1) = (a.clone(), b.clone());
    if n >= 0 {
        for _ in 0..n {
            let next = p * &w1 - q * &w0;
            w0 = w1;
            w1 = next;
        }
        Ok(w0)
    } else {
        if q.is_zero() {
            return Err(Error::domain(
                "horadam backward extension requires q != 0".to_owned(),
            ));
        }
        for _ in 0..-n {
            let prev = (p * &w0 - &w1) / q;
            w1 = w0;
            w0 = prev;
        }
        Ok(w0)
    }
}

fn harmonic_like(
    table: &Lock<BTreeMap<i64, Vec<Rational>>>,
    denom_at: impl Fn(i64) -> i64,
    name: &str,
    n: i64,
    m: i64,
) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!(
            "{name} is only defined for non-negative arguments, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::domain(format!("{name} order must be >= 1, got {m}")));
    }
    {
        let t = table.read();
        if let Some(v) = t.get(&m).and_then(|v| v.get(n as usize)) {
            return Ok(v.clone());
        }
    }
    let mut t = table.write();
    let v = t.entry(m).or_default();
    if v.is_empty() {
        v.push(Rational::zero());
    }
    while v.len() as i64 <= n {
        let j = v.len() as i64;
        let step = pow_i(&rat(denom_at(j)), m)?;
        let next = v.last().expect("non-empty") + Rational::one() / step;
        v.push(next);
    }
    Ok(v[n as usize].clone())
}

/// Harmonic number of order `m`: `H_n^{(m)} = sum_{j=1}^n 1/j^m`.
pub fn harmonic(n: i64, m: i64) -> Result<Rational> {
    harmonic_like(&HARMONIC, |j| j, "harmonic", n, m)
}

/// Odd harmonic number of order `m`: `O_n^{(m)} = sum_{j=1}^n 1/(2j-1)^m`.
pub fn odd_harmonic(n: i64, m: i64) -> Result<Rational> {
    harmonic_like(&ODD_HARMONIC, |j| 2 * j - 1, "odd_harmonic", n, m)
}

/// Catalan number via the exact recursion `C_n = 2(2n-1)/(n+1) C_{n-1}`;
/// the central-binomial closed form is the independent cross-check.
pub fn catalan(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::domain(format!("catalan({n})")));
    }
    prefix_term(&CATALAN, n as usize, |t| {
        Ok(match t.len() {
            0 => Rational::one(),
            l => {
                let m = l as i64;
                t[l - 1].clone() * frac(2 * (2 * m - 1), m + 1)
            }
        })
    })
}

/// Stirling number of the second kind `S(r, n)` by the triangle recurrence
/// `S(r, n) = n S(r-1, n) + S(r-1, n-1)`.
pub fn stirling2(r: i64, n: i64) -> Result<Rational> {
    if r < 0 || n < 0 {
        return Err(Error::domain(format!("stirling2({r},{n})")));
    }
    if n > r {
        return Ok(Rational::zero());
    }
    {
        let t = STIRLING2.read();
        if let Some(row) = t.get(r as usize) {
            return Ok(row[n as usize].clone());
        }
    }
    let mut t = STIRLING2.write();
    while t.len() as i64 <= r {
        let row = match t.last() {
            None => alloc::vec![Rational::one()],
            Some(prev) => {
                let rr = t.len();
                let mut row = Vec::with_capacity(rr + 1);
                for k in 0..=rr {
                    let same = if k < prev.len() {
                        rat(k as i64) * &prev[k]
                    } else {
                        Rational::zero()
                    };
                    let carry = if k >= 1 {
                        prev[k - 1].clone()
                    } else {
                        Rational::zero()
                    };
                    row.push(same + carry);
                }
                row
            }
        };
        t.push(row);
    }
    Ok(t[r as usize][n as usize].clone())
}

/// m-step term: `W_n = W_{n-1} + ... + W_{n-m}` forward from the seed
/// `W_0..W_{m-1}`, extended backwards by
/// `W_{n-m} = W_n - W_{n-1} - ... - W_{n-m+1}`.
pub fn mstep(seed: &[Rational], n: i64) -> Result<Rational> {
    let m = seed.len();
    if m < 2 {
        return Err(Error::domain(format!(
            "mstep needs a seed of length >= 2, got {m}"
        )));
    }
    if n >= 0 && (n as usize) < m {
        return Ok(seed[n as usize].clone());
    }
    let mut window: Vec<Rational> = seed.to_vec();
    if n >= 0 {
        // window holds W_j..W_{j+m-1}; push j upward
        for _ in 0..(n as usize - m + 1) {
            let next = window.iter().fold(Rational::zero(), |acc, w| acc + w);
            window.remove(0);
            window.push(next);
        }
        Ok(window[m - 1].clone())
    } else {
        // W_{j-1} = W_{j+m-1} - (W_j + .. + W_{j+m-2})
        for _ in 0..(-n) {
            let tail: Rational = window[..m - 1]
                .iter()
                .fold(Rational::zero(), |acc, w| acc + w);
            let prev = &window[m - 1] - tail;
            window.pop();
            window.insert(0, prev);
        }
        Ok(window[0].clone())
    }
}

/// Seed `[0, .., 0, 1]` of length `m` (m = 2 is Fibonacci).
pub fn mstep_fibonacci_seed(m: usize) -> Result<Vec<Rational>> {
    if m < 2 {
        return Err(Error::domain("fibonacci-m-step needs m >= 2".to_owned()));
    }
    let mut seed = alloc::vec![Rational::zero(); m];
    seed[m - 1] = Rational::one();
    Ok(seed)
}

/// Lucas-style seed; cataloged only for m = 2 (`[2,1]`) and m = 3
/// (`[3,1,3]`).
pub fn mstep_lucas_seed(m: usize) -> Result<Vec<Rational>> {
    match m {
        2 => Ok(alloc::vec![rat(2), rat(1)]),
        3 => Ok(alloc::vec![rat(3), rat(1), rat(3)]),
        _ => Err(Error::domain(format!(
            "lucas-m-step seed is only cataloged for m = 2 or 3, got {m}"
        ))),
    }
}

/// Three-step Fibonacci numbers: 0, 0, 1, 1, 2, 4, 7, 13, ...
pub fn tribonacci(n: i64) -> Rational {
    mstep(&mstep_fibonacci_seed(3).expect("m = 3"), n).expect("m >= 2")
}

/// Term function used by custom sequences.
pub type TermFn = dyn Fn(i64) -> Result<Rational> + Send + Sync;

/// The sequence families with a canonical text form.
#[derive(Clone)]
pub enum SeqKind {
    Bernoulli,
    BernoulliPolyAt(Rational),
    Gibonacci(Rational, Rational),
    Horadam {
        a: Rational,
        b: Rational,
        p: Rational,
        q: Rational,
    },
    Harmonic(i64),
    OddHarmonic(i64),
    Catalan,
    Stirling2Diagonal(i64),
    MStep(Vec<Rational>),
    Constant(Rational),
    Power(Rational),
    Custom(Arc<TermFn>),
}

/// A named, parameterized exact sequence with per-instance memoization.
///
/// `term(n)` is deterministic and safe under concurrent readers; cache
/// fills are idempotent. Negative indices are memoized separately and are
/// only defined for families with a two-sided extension (Gibonacci,
/// Horadam with `q != 0`, m-step, nonzero geometric powers, constants,
/// and custom terms that accept them).
///
/// ```
/// use bintrans_core::sequences::Seq;
///
/// let repunits: Seq = "horadam(0,1;4,3)".parse().unwrap();
/// assert_eq!(repunits.term(4).unwrap().to_string(), "40");
/// assert_eq!(Seq::fibonacci().term(-5).unwrap().to_string(), "5");
/// ```
#[derive(Clone)]
pub struct Seq {
    inner: Arc<SeqInner>,
}

struct SeqInner {
    kind: SeqKind,
    label: String,
    fwd: Lock<Vec<Rational>>,
    bwd: Lock<Vec<Rational>>,
}

impl Seq {
    fn new(kind: SeqKind, label: String) -> Self {
        Seq {
            inner: Arc::new(SeqInner {
                kind,
                label,
                fwd: Lock::new(Vec::new()),
                bwd: Lock::new(Vec::new()),
            }),
        }
    }

    pub fn bernoulli() -> Self {
        Seq::new(SeqKind::Bernoulli, "bernoulli".to_owned())
    }

    pub fn bernoulli_poly_at(x: Rational) -> Self {
        let label = format!("bernoulli-poly-at({x})");
        Seq::new(SeqKind::BernoulliPolyAt(x), label)
    }

    pub fn fibonacci() -> Self {
        Seq::gibonacci(Rational::zero(), Rational::one())
    }

    pub fn lucas() -> Self {
        Seq::gibonacci(rat(2), Rational::one())
    }

    pub fn gibonacci(g0: Rational, g1: Rational) -> Self {
        let label = format!("gibonacci({g0},{g1})");
        Seq::new(SeqKind::Gibonacci(g0, g1), label)
    }

    pub fn horadam(a: Rational, b: Rational, p: Rational, q: Rational) -> Self {
        let label = format!("horadam({a},{b};{p},{q})");
        Seq::new(SeqKind::Horadam { a, b, p, q }, label)
    }

    pub fn harmonic(m: i64) -> Self {
        Seq::new(SeqKind::Harmonic(m), format!("harmonic^{m}"))
    }

    pub fn odd_harmonic(m: i64) -> Self {
        Seq::new(SeqKind::OddHarmonic(m), format!("odd-harmonic^{m}"))
    }

    pub fn catalan() -> Self {
        Seq::new(SeqKind::Catalan, "catalan".to_owned())
    }

    /// `n -> S(n + d, n)`.
    pub fn stirling2_diagonal(d: i64) -> Self {
        Seq::new(
            SeqKind::Stirling2Diagonal(d),
            format!("stirling2-diagonal({d})"),
        )
    }

    pub fn mstep(seed: Vec<Rational>) -> Self {
        let body = seed
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        Seq::new(SeqKind::MStep(seed), format!("mstep[{body}]"))
    }

    pub fn tribonacci() -> Self {
        Seq::mstep(mstep_fibonacci_seed(3).expect("m = 3"))
    }

    pub fn constant(c: Rational) -> Self {
        let label = format!("constant({c})");
        Seq::new(SeqKind::Constant(c), label)
    }

    /// Geometric sequence `n -> x^n`.
    pub fn power(x: Rational) -> Self {
        let label = format!("power({x})");
        Seq::new(SeqKind::Power(x), label)
    }

    pub fn custom(label: impl Into<String>, f: Arc<TermFn>) -> Self {
        Seq::new(SeqKind::Custom(f), label.into())
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn kind(&self) -> &SeqKind {
        &self.inner.kind
    }

    fn compute(&self, n: i64) -> Result<Rational> {
        match &self.inner.kind {
            SeqKind::Bernoulli => bernoulli_number(n),
            SeqKind::BernoulliPolyAt(x) => bernoulli_poly_at(n, x),
            SeqKind::Gibonacci(g0, g1) => Ok(gibonacci(g0, g1, n)),
            SeqKind::Horadam { a, b, p, q } => horadam(a, b, p, q, n),
            SeqKind::Harmonic(m) => harmonic(n, *m),
            SeqKind::OddHarmonic(m) => odd_harmonic(n, *m),
            SeqKind::Catalan => catalan(n),
            SeqKind::Stirling2Diagonal(d) => {
                if n < 0 {
                    Err(Error::domain(format!("stirling2-diagonal({n})")))
                } else {
                    stirling2(n + d, n)
                }
            }
            SeqKind::MStep(seed) => mstep(seed, n),
            SeqKind::Constant(c) => Ok(c.clone()),
            SeqKind::Power(x) => pow_i(x, n),
            SeqKind::Custom(f) => f(n),
        }
    }

    /// The `n`-th term, from the per-instance cache when warm.
    pub fn term(&self, n: i64) -> Result<Rational> {
        let (table, idx) = if n >= 0 {
            (&self.inner.fwd, n as usize)
        } else {
            (&self.inner.bwd, (-1 - n) as usize)
        };
        {
            let t = table.read();
            if let Some(v) = t.get(idx) {
                return Ok(v.clone());
            }
        }
        let value = self.compute(n)?;
        let mut t = table.write();
        while t.len() <= idx {
            let k = t.len() as i64;
            let at = if n >= 0 { k } else { -1 - k };
            let v = self.compute(at)?;
            t.push(v);
        }
        debug_assert_eq!(t[idx], value);
        Ok(value)
    }

    /// Clear this instance's caches (used by the memoization-invisibility
    /// checks).
    pub fn clear(&self) {
        self.inner.fwd.write().clear();
        self.inner.bwd.write().clear();
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.label)
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq({})", self.inner.label)
    }
}

fn parse_args(body: &str, expect: usize, what: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split([',', ';']).collect()
    };
    if parts.len() != expect {
        return Err(Error::parse(format!(
            "{what} expects {expect} parameter(s), got {}",
            parts.len()
        )));
    }
    parts.iter().map(|p| parse_rational(p)).collect()
}

fn int_arg(x: &Rational, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::parse(format!("{what} must be an integer, got {x}")));
    }
    i64::try_from(x.to_integer()).map_err(|_| Error::parse(format!("{what} out of range")))
}

impl core::str::FromStr for Seq {
    type Err = Error;

    /// Parse the canonical text form, e.g. `"bernoulli"`, `"harmonic^2"`,
    /// `"gibonacci(2,1)"`, `"horadam(0,1;4,3)"`, `"mstep[0,0,1]"`,
    /// `"power(3/2)"`.
    fn from_str(text: &str) -> Result<Seq> {
        let t = text.trim();
        match t {
            "bernoulli" => return Ok(Seq::bernoulli()),
            "catalan" => return Ok(Seq::catalan()),
            "fibonacci" => return Ok(Seq::fibonacci()),
            "lucas" => return Ok(Seq::lucas()),
            "tribonacci" => return Ok(Seq::tribonacci()),
            "harmonic" => return Ok(Seq::harmonic(1)),
            "odd-harmonic" => return Ok(Seq::odd_harmonic(1)),
            _ => {}
        }
        if let Some(m) = t.strip_prefix("harmonic^") {
            return Ok(Seq::harmonic(int_arg(&parse_rational(m)?, "harmonic order")?));
        }
        if let Some(m) = t.strip_prefix("odd-harmonic^") {
            return Ok(Seq::odd_harmonic(int_arg(
                &parse_rational(m)?,
                "odd-harmonic order",
            )?));
        }
        if let Some(body) = t.strip_prefix("mstep[").and_then(|r| r.strip_suffix(']')) {
            let seed: Vec<Rational> = body.split(',').map(parse_rational).collect::<Result<_>>()?;
            if seed.len() < 2 {
                return Err(Error::parse("mstep seed needs length >= 2".to_owned()));
            }
            return Ok(Seq::mstep(seed));
        }
        if let Some((name, rest)) = t.split_once('(') {
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(format!("unterminated parameter list in {text:?}")))?;
            return match name {
                "gibonacci" => {
                    let a = parse_args(body, 2, "gibonacci")?;
                    Ok(Seq::gibonacci(a[0].clone(), a[1].clone()))
                }
                "horadam" => {
                    let a = parse_args(body, 4, "horadam")?;
                    Ok(Seq::horadam(
                        a[0].clone(),
                        a[1].clone(),
                        a[2].clone(),
                        a[3].clone(),
                    ))
                }
                "bernoulli-poly-at" => {
                    let a = parse_args(body, 1, "bernoulli-poly-at")?;
                    Ok(Seq::bernoulli_poly_at(a[0].clone()))
                }
                "stirling2-diagonal" => {
                    let a = parse_args(body, 1, "stirling2-diagonal")?;
                    Ok(Seq::stirling2_diagonal(int_arg(&a[0], "diagonal offset")?))
                }
                "constant" => {
                    let a = parse_args(body, 1, "constant")?;
                    Ok(Seq::constant(a[0].clone()))
                }
                "power" => {
                    let a = parse_args(body, 1, "power")?;
                    Ok(Seq::power(a[0].clone()))
                }
                "fibonacci-m-step" => {
                    let a = parse_args(body, 1, "fibonacci-m-step")?;
                    let m = int_arg(&a[0], "step count")?;
                    Ok(Seq::mstep(mstep_fibonacci_seed(m.max(0) as usize)?))
                }
                "lucas-m-step" => {
                    let a = parse_args(body, 1, "lucas-m-step")?;
                    let m = int_arg(&a[0], "step count")?;
                    Ok(Seq::mstep(mstep_lucas_seed(m.max(0) as usize)?))
                }
                other => Err(Error::parse(format!("unknown sequence family {other:?}"))),
            };
        }
        Err(Error::parse(format!("unknown sequence spec {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Bernoulli oracle: solve sum_{k=0}^{n} C(n+1,k) B_k = 0
    /// for B_n, starting from B_0 = 1. Shares nothing with the
    /// Stirling-form production route.
    fn bernoulli_oracle(up_to: i64) -> Vec<Rational> {
        let mut b = alloc::vec![Rational::one()];
        for n in 1..=up_to {
            let mut acc = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += bin(n + 1, k as i64) * bk;
            }
            b.push(-acc / bin(n + 1, n));
        }
        b
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        let oracle = bernoulli_oracle(60);
        for (n, expect) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli_number(n as i64).unwrap(), expect, "B_{n}");
        }
        assert_eq!(bernoulli_number(0).unwrap(), rat(1));
        assert_eq!(bernoulli_number(1).unwrap(), frac(-1, 2));
        assert_eq!(bernoulli_number(12).unwrap(), frac(-691, 2730));
        assert!(bernoulli_number(-1).is_err());
    }

    #[test]
    fn bernoulli_alternating_transform_relation() {
        // sum_k C(n,k) B_k = (-1)^n B_n for 0 <= n <= 60
        for n in 0..=60 {
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += bin(n, k) * bernoulli_number(k).unwrap();
            }
            assert_eq!(acc, alt(n, bernoulli_number(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn bernoulli_poly_small_cases() {
        assert_eq!(bernoulli_poly(0).unwrap(), Poly::constant(rat(1)));
        let b1 = bernoulli_poly(1).unwrap();
        assert_eq!(b1.coeff(0), frac(-1, 2));
        assert_eq!(b1.coeff(1), rat(1));
        // B_2(1/2) = (2^{-1} - 1) B_2 = -1/12
        assert_eq!(bernoulli_poly_at(2, &frac(1, 2)).unwrap(), frac(-1, 12));
        assert!(bernoulli_poly(-3).is_err());
    }

    #[test]
    fn bernoulli_poly_translation_rule() {
        // B_n(x+y) = sum_k C(n,k) B_k(x) y^{n-k} on a rational grid
        let grid = [rat(0), rat(1), frac(1, 2), frac(-2, 3), frac(5, 7)];
        for n in 0..=20i64 {
            for x in &grid {
                for y in &grid {
                    let lhs = bernoulli_poly_at(n, &(x + y)).unwrap();
                    let mut rhs = Rational::zero();
                    for k in 0..=n {
                        rhs += bin(n, k)
                            * bernoulli_poly_at(k, x).unwrap()
                            * pow_i(y, n - k).unwrap();
                    }
                    assert_eq!(lhs, rhs, "n={n} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn fibonacci_and_lucas_with_negative_indices() {
        assert_eq!(fibonacci(10), rat(55));
        assert_eq!(fibonacci(-2), rat(-1));
        assert_eq!(lucas(-3), rat(-4));
        // reflection equals the backward recurrence
        for n in -30..=30 {
            assert_eq!(fibonacci(n), gibonacci(&rat(0), &rat(1), n), "F_{n}");
            assert_eq!(lucas(n), gibonacci(&rat(2), &rat(1), n), "L_{n}");
        }
    }

    #[test]
    fn gibonacci_is_linear_in_the_seed() {
        let (g0, g1) = (frac(3, 2), rat(-4));
        for n in -30..=30 {
            let direct = gibonacci(&g0, &g1, n);
            let combo = &g0 * gibonacci(&rat(1), &rat(0), n) + &g1 * gibonacci(&rat(0), &rat(1), n);
            assert_eq!(direct, combo, "n = {n}");
        }
    }

    #[test]
    fn horadam_examples_and_specializations() {
        assert_eq!(
            horadam(&rat(0), &rat(1), &rat(1), &rat(-1), 7).unwrap(),
            rat(13)
        );
        // base-3 repunits: w(0,1;4,3) at n = 4 is (3^4 - 1)/2
        assert_eq!(
            horadam(&rat(0), &rat(1), &rat(4), &rat(3), 4).unwrap(),
            rat(40)
        );
        assert_eq!(
            horadam(&rat(1), &frac(1, 2), &rat(1), &frac(1, 4), -1).unwrap(),
            rat(2)
        );
        for n in -20..=20 {
            assert_eq!(
                horadam(&rat(0), &rat(1), &rat(1), &rat(-1), n).unwrap(),
                fibonacci(n),
                "F_{n}"
            );
            assert_eq!(
                horadam(&rat(2), &rat(1), &rat(1), &rat(-1), n).unwrap(),
                lucas(n),
                "L_{n}"
            );
        }
        assert!(horadam(&rat(1), &rat(1), &rat(2), &rat(0), -1).is_err());
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(2, 1).unwrap(), frac(3, 2));
        assert_eq!(harmonic(3, 2).unwrap(), frac(49, 36));
        assert_eq!(odd_harmonic(3, 1).unwrap(), frac(23, 15));
        assert_eq!(harmonic(0, 5).unwrap(), rat(0));
        assert!(harmonic(-1, 1).is_err());
        assert!(odd_harmonic(2, 0).is_err());
    }

    #[test]
    fn catalan_recursion_matches_central_binomial() {
        assert_eq!(catalan(0).unwrap(), rat(1));
        assert_eq!(catalan(3).unwrap(), rat(5));
        assert_eq!(catalan(10).unwrap(), rat(16796));
        for n in 0..=200i64 {
            let closed = bin(2 * n, n) / rat(n + 1);
            assert_eq!(catalan(n).unwrap(), closed, "C_{n}");
        }
        assert!(catalan(-1).is_err());
    }

    #[test]
    fn stirling_triangle_matches_alternating_sum() {
        assert_eq!(stirling2(0, 0).unwrap(), rat(1));
        assert_eq!(stirling2(4, 2).unwrap(), rat(7));
        assert_eq!(stirling2(5, 5).unwrap(), rat(1));
        assert!(stirling2(-1, 0).is_err());
        // explicit representation: S(r,n) = (-1)^n/n! * sum_k (-1)^k C(n,k) k^r
        for r in 0..=20i64 {
            for n in 0..=20i64 {
                let mut acc = Rational::zero();
                for k in 0..=n {
                    acc += alt(k, bin(n, k) * pow_i(&rat(k), r).unwrap());
                }
                let mut fact = Rational::one();
                for i in 1..=n {
                    fact *= rat(i);
                }
                let via_sum = alt(n, acc / fact);
                assert_eq!(stirling2(r, n).unwrap(), via_sum, "S({r},{n})");
            }
        }
    }

    #[test]
    fn mstep_presets_and_round_trip() {
        let fib2 = mstep_fibonacci_seed(2).unwrap();
        assert_eq!(mstep(&fib2, 6).unwrap(), rat(8));
        assert_eq!(mstep(&fib2, -2).unwrap(), rat(-1));
        assert_eq!(tribonacci(7), rat(13));
        assert!(mstep(&[rat(1)], 0).is_err());
        // the recurrence holds across the backward extension for every preset
        let presets: Vec<Vec<Rational>> = alloc::vec![
            mstep_fibonacci_seed(2).unwrap(),
            mstep_fibonacci_seed(3).unwrap(),
            mstep_fibonacci_seed(4).unwrap(),
            mstep_lucas_seed(2).unwrap(),
            mstep_lucas_seed(3).unwrap(),
        ];
        for seed in &presets {
            let m = seed.len() as i64;
            for n in -30..=30i64 {
                let mut acc = Rational::zero();
                for i in 1..=m {
                    acc += mstep(seed, n - i).unwrap();
                }
                assert_eq!(mstep(seed, n).unwrap(), acc, "m={m} n={n}");
            }
        }
        // m = 2 presets agree with the closed families on both sides
        for n in -25..=25 {
            assert_eq!(mstep(&presets[0], n).unwrap(), fibonacci(n));
            assert_eq!(mstep(&presets[3], n).unwrap(), lucas(n));
        }
    }

    #[test]
    fn memoization_is_invisible() {
        let warm = bernoulli_number(40).unwrap();
        let warm_cat = catalan(60).unwrap();
        let warm_h = harmonic(50, 2).unwrap();
        clear_caches();
        assert_eq!(bernoulli_number(40).unwrap(), warm);
        assert_eq!(catalan(60).unwrap(), warm_cat);
        assert_eq!(harmonic(50, 2).unwrap(), warm_h);

        let seq = Seq::horadam(rat(1), frac(1, 2), rat(3), frac(-2, 3));
        let a = seq.term(17).unwrap();
        let b = seq.term(17).unwrap(); // cached
        seq.clear();
        let c = seq.term(17).unwrap(); // recomputed
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn seq_negative_index_rules() {
        assert_eq!(Seq::fibonacci().term(-5).unwrap(), rat(5));
        assert_eq!(Seq::mstep(mstep_fibonacci_seed(3).unwrap()).term(-4).unwrap(), tribonacci(-4));
        assert_eq!(Seq::power(frac(2, 3)).term(-2).unwrap(), frac(9, 4));
        assert!(Seq::bernoulli().term(-1).is_err());
        assert!(Seq::harmonic(1).term(-1).is_err());
        assert!(Seq::catalan().term(-3).is_err());
        assert!(Seq::power(rat(0)).term(-1).is_err());
    }

    #[test]
    fn canonical_text_round_trip() {
        let specs = [
            "bernoulli",
            "catalan",
            "harmonic^1",
            "odd-harmonic^2",
            "gibonacci(2,1)",
            "gibonacci(0,1)",
            "horadam(0,1;4,3)",
            "bernoulli-poly-at(1/2)",
            "stirling2-diagonal(3)",
            "mstep[0,0,1]",
            "constant(5)",
            "power(3/2)",
        ];
        for s in specs {
            let seq: Seq = s.parse().unwrap();
            assert_eq!(seq.to_string(), s, "round trip for {s}");
        }
        // aliases normalize to canonical labels
        assert_eq!("fibonacci".parse::<Seq>().unwrap().to_string(), "gibonacci(0,1)");
        assert_eq!("lucas".parse::<Seq>().unwrap().to_string(), "gibonacci(2,1)");
        assert_eq!("tribonacci".parse::<Seq>().unwrap().to_string(), "mstep[0,0,1]");
        assert_eq!("harmonic".parse::<Seq>().unwrap().to_string(), "harmonic^1");
        assert_eq!(
            "fibonacci-m-step(4)".parse::<Seq>().unwrap().to_string(),
            "mstep[0,0,0,1]"
        );
        assert_eq!(
            "lucas-m-step(3)".parse::<Seq>().unwrap().to_string(),
            "mstep[3,1,3]"
        );
        for bad in ["nope", "gibonacci(1)", "mstep[1]", "horadam(1,2;3)", "harmonic^x"] {
            assert!(bad.parse::<Seq>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn concurrent_readers_get_identical_terms() {
        clear_caches();
        let seq = Seq::bernoulli();
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let seq = seq.clone();
                std::thread::spawn(move || {
                    (0..40)
                        .map(|n| seq.term(n).unwrap())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let results: Vec<Vec<Rational>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for r in &results[1..] {
            assert_eq!(r, &results[0]);
        }
    }
}
