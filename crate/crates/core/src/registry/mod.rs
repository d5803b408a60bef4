//! The identity catalog: every cataloged double-sum identity encoded as a
//! parameter domain plus independent left/right evaluators.
//!
//! Each [`Identity`] carries:
//! - a stable id (kebab-case slug) and an `anchor`, the catalog coordinates
//!   `section.statement.display` used as the stable cross-reference key;
//! - an ASCII `statement` of the formula;
//! - a `status`: `as-stated` entries hold on their whole default domain;
//!   `amended` entries correct a defect in the cataloged closed form and
//!   keep the original form evaluable for audit; `edge-restricted` entries
//!   hold only away from documented edge points;
//! - evaluators: `lhs` is raw summation over sequence-term primitives,
//!   `rhs` may use closed forms (the [`crate::guard`] tracing enforces that
//!   separation at test time);
//! - for amended/edge-restricted entries, a [`Witness`]: a parameter point
//!   with frozen exact values demonstrating the original defect.
//!
//! Entries are registered in catalog order (section, then statement, then
//! display), so listing order is deterministic.

use crate::error::{Error, Result};
use crate::guard;
use crate::rational::Rational;
use crate::sync::Lock;
use crate::transform::TransformPair;
use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

mod masters;
mod sec1;
mod sec3;
mod sec4_bernoulli;
mod sec4_catalan;
mod sec4_fibonacci;
mod sec4_harmonic;
mod sec4_mstep;
mod sec4_stirling;
mod sec5_horadam;
mod sec5_poly;

/// A parameter value: integer, rational, rational tuple (e.g. recurrence
/// seeds), or a cataloged transform pair.
#[derive(Clone)]
pub enum Value {
    Int(i64),
    Rat(Rational),
    Tuple(Vec<Rational>),
    Pair(Arc<TransformPair>),
}

impl Value {
    /// Canonical text: integers bare, rationals as `num/den`, tuples in
    /// parentheses, pairs by label.
    pub fn display(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Rat(v) => v.to_string(),
            Value::Tuple(vs) => {
                let body = vs
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                alloc::format!("({body})")
            }
            Value::Pair(p) => p.label().to_string(),
        }
    }
}

/// An ordered parameter assignment.
#[derive(Clone, Default)]
pub struct Point {
    entries: Vec<(&'static str, Value)>,
}

impl Point {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn with_int(mut self, name: &'static str, v: i64) -> Self {
        self.entries.push((name, Value::Int(v)));
        self
    }

    pub fn with_rat(mut self, name: &'static str, v: Rational) -> Self {
        self.entries.push((name, Value::Rat(v)));
        self
    }

    pub fn with_pair(mut self, name: &'static str, label: &str) -> Self {
        let p = crate::transform::pair(label)
            .unwrap_or_else(|e| panic!("witness/point construction: {e}"));
        self.entries.push((name, Value::Pair(p)));
        self
    }

    pub fn with_tuple(mut self, name: &'static str, vs: Vec<Rational>) -> Self {
        self.entries.push((name, Value::Tuple(vs)));
        self
    }

    pub fn with_value(mut self, name: &'static str, v: Value) -> Self {
        self.entries.push((name, v));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|(n, _)| *n)
    }

    /// Integer parameter (exact integers stored as rationals also qualify).
    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(Value::Int(v)) => Ok(*v),
            Some(Value::Rat(v)) if v.is_integer() => i64::try_from(v.to_integer())
                .map_err(|_| Error::domain(format!("parameter {name} out of integer range"))),
            Some(_) => Err(Error::domain(format!("parameter {name} must be an integer"))),
            None => Err(Error::unknown(format!("missing parameter {name}"))),
        }
    }

    /// Rational parameter (integers coerce).
    pub fn rat(&self, name: &str) -> Result<Rational> {
        match self.get(name) {
            Some(Value::Int(v)) => Ok(crate::rational::rat(*v)),
            Some(Value::Rat(v)) => Ok(v.clone()),
            Some(_) => Err(Error::domain(format!("parameter {name} must be a scalar"))),
            None => Err(Error::unknown(format!("missing parameter {name}"))),
        }
    }

    pub fn pair(&self, name: &str) -> Result<Arc<TransformPair>> {
        match self.get(name) {
            Some(Value::Pair(p)) => Ok(p.clone()),
            Some(_) => Err(Error::domain(format!("parameter {name} must be a pair"))),
            None => Err(Error::unknown(format!("missing parameter {name}"))),
        }
    }

    pub fn tuple(&self, name: &str) -> Result<Vec<Rational>> {
        match self.get(name) {
            Some(Value::Tuple(vs)) => Ok(vs.clone()),
            Some(_) => Err(Error::domain(format!("parameter {name} must be a tuple"))),
            None => Err(Error::unknown(format!("missing parameter {name}"))),
        }
    }

    /// `name=value` rendering in declaration order.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|(n, v)| format!("{n}={}", v.display()))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Name/value pairs in declaration order.
    pub fn items(&self) -> impl Iterator<Item = (&'static str, String)> + '_ {
        self.entries.iter().map(|(n, v)| (*n, v.display()))
    }
}

/// The values a parameter ranges over in the default domain.
#[derive(Clone)]
pub enum DomainValues {
    Ints(Vec<i64>),
    Rats(Vec<Rational>),
    Tuples(Vec<Vec<Rational>>),
    Pairs(Vec<Arc<TransformPair>>),
}

impl DomainValues {
    pub fn len(&self) -> usize {
        match self {
            DomainValues::Ints(v) => v.len(),
            DomainValues::Rats(v) => v.len(),
            DomainValues::Tuples(v) => v.len(),
            DomainValues::Pairs(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn value_at(&self, i: usize) -> Value {
        match self {
            DomainValues::Ints(v) => Value::Int(v[i]),
            DomainValues::Rats(v) => Value::Rat(v[i].clone()),
            DomainValues::Tuples(v) => Value::Tuple(v[i].clone()),
            DomainValues::Pairs(v) => Value::Pair(v[i].clone()),
        }
    }

    /// Summary like `1..16` or an explicit list, for the index export.
    pub fn describe(&self) -> String {
        match self {
            DomainValues::Ints(v) => {
                let contiguous = v.windows(2).all(|w| w[1] == w[0] + 1);
                if contiguous && v.len() > 2 {
                    format!("{}..{}", v[0], v[v.len() - 1])
                } else {
                    v.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }
            }
            DomainValues::Rats(v) => v
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
            DomainValues::Tuples(v) => v
                .iter()
                .map(|t| Value::Tuple(t.clone()).display())
                .collect::<Vec<_>>()
                .join(","),
            DomainValues::Pairs(v) => {
                if v.len() > 4 {
                    format!("{} cataloged pairs", v.len())
                } else {
                    v.iter()
                        .map(|p| p.label().to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            }
        }
    }
}

#[derive(Clone)]
pub struct ParamDomain {
    pub name: &'static str,
    pub values: DomainValues,
}

/// Verification posture of a cataloged identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    AsStated,
    Amended,
    EdgeRestricted,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::AsStated => "as-stated",
            Status::Amended => "amended",
            Status::EdgeRestricted => "edge-restricted",
        }
    }
}

impl core::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "as-stated" => Status::AsStated,
            "amended" => Status::Amended,
            "edge-restricted" => Status::EdgeRestricted,
            other => return Err(Error::parse(format!("unknown status {other:?}"))),
        })
    }
}

pub type EvalFn = dyn Fn(&Point) -> Result<Rational> + Send + Sync;
pub type PredFn = dyn Fn(&Point) -> bool + Send + Sync;

/// A parameter point with frozen exact values demonstrating the defect this
/// entry documents: for `amended` entries, `printed` is the original form's
/// outcome (an exact value differing from `lhs`/`rhs`, or `"undefined"`);
/// for `edge-restricted` entries, `lhs != rhs` at the excluded point.
pub struct Witness {
    pub point: Point,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub printed: Option<&'static str>,
}

/// Exact evaluation outcome at one parameter point.
pub struct Evaluation {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

pub struct Identity {
    id: &'static str,
    anchor: &'static str,
    statement: &'static str,
    status: Status,
    notes: &'static str,
    params: Vec<ParamDomain>,
    constraint: Option<Box<PredFn>>,
    lhs: Box<EvalFn>,
    rhs: Box<EvalFn>,
    printed: Option<Box<EvalFn>>,
    witness: Option<Witness>,
    gap: Option<Box<PredFn>>,
}

impl Identity {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn anchor(&self) -> &'static str {
        self.anchor
    }

    /// Catalog section: the anchor with its statement/display coordinates
    /// stripped (`"4.2.3.1"` -> `"4.2"`).
    pub fn section(&self) -> &'static str {
        let mut dots = 0;
        for (i, b) in self.anchor.bytes().enumerate().rev() {
            if b == b'.' {
                dots += 1;
                if dots == 2 {
                    return &self.anchor[..i];
                }
            }
        }
        self.anchor
    }

    pub fn statement(&self) -> &'static str {
        self.statement
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn notes(&self) -> &'static str {
        self.notes
    }

    pub fn params(&self) -> &[ParamDomain] {
        &self.params
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn has_printed_variant(&self) -> bool {
        self.printed.is_some()
    }

    /// Left side by raw summation over term primitives.
    pub fn lhs(&self, pt: &Point) -> Result<Rational> {
        self.check_point(pt)?;
        (self.lhs)(pt)
    }

    /// Right side; may use closed forms.
    pub fn rhs(&self, pt: &Point) -> Result<Rational> {
        self.check_point(pt)?;
        guard::note_closed_form();
        (self.rhs)(pt)
    }

    /// The original (pre-amendment) form, where one exists.
    pub fn printed(&self, pt: &Point) -> Option<Result<Rational>> {
        self.printed.as_ref().map(|f| {
            self.check_point(pt)?;
            f(pt)
        })
    }

    /// Exact evaluation of both sides.
    pub fn evaluate(&self, pt: &Point) -> Result<Evaluation> {
        let lhs = self.lhs(pt)?;
        let rhs = self.rhs(pt)?;
        let equal = lhs == rhs;
        Ok(Evaluation { lhs, rhs, equal })
    }

    /// True when this point is a documented known gap (only meaningful for
    /// edge-restricted entries evaluated outside their default domain).
    pub fn is_documented_gap(&self, pt: &Point) -> bool {
        self.gap.as_ref().is_some_and(|g| g(pt))
    }

    /// True when the point satisfies the entry's hard validity constraint.
    pub fn admits(&self, pt: &Point) -> bool {
        self.constraint.as_ref().is_none_or(|c| c(pt))
    }

    fn check_point(&self, pt: &Point) -> Result<()> {
        for pd in &self.params {
            if pt.get(pd.name).is_none() {
                return Err(Error::domain(format!(
                    "identity {} needs parameter {}",
                    self.id, pd.name
                )));
            }
        }
        if !self.admits(pt) {
            return Err(Error::domain(format!(
                "point ({}) violates the domain constraint of {}",
                pt.render(),
                self.id
            )));
        }
        Ok(())
    }

    /// The curated default grid: the cartesian product of the declared
    /// parameter values, filtered by the domain constraint, in declaration
    /// order (last parameter varies fastest).
    pub fn default_domain(&self) -> Vec<Point> {
        self.domain_from(&self.params)
    }

    /// Same product walk over an overridden parameter set.
    pub fn domain_from(&self, params: &[ParamDomain]) -> Vec<Point> {
        let mut out = Vec::new();
        if params.is_empty() {
            return out;
        }
        let sizes: Vec<usize> = params.iter().map(|p| p.values.len()).collect();
        if sizes.contains(&0) {
            return out;
        }
        let total: usize = sizes.iter().product();
        for mut ix in 0..total {
            let mut pt = Point::new();
            // declaration order, last varies fastest
            let mut coords = alloc::vec![0usize; params.len()];
            for i in (0..params.len()).rev() {
                coords[i] = ix % sizes[i];
                ix /= sizes[i];
            }
            for (p, &c) in params.iter().zip(coords.iter()) {
                pt = pt.with_value(p.name, p.values.value_at(c));
            }
            if self.admits(&pt) {
                out.push(pt);
            }
        }
        out
    }
}

pub(crate) struct Build {
    id: &'static str,
    anchor: &'static str,
    statement: &'static str,
    status: Status,
    notes: &'static str,
    params: Vec<ParamDomain>,
    constraint: Option<Box<PredFn>>,
    lhs: Option<Box<EvalFn>>,
    rhs: Option<Box<EvalFn>>,
    printed: Option<Box<EvalFn>>,
    witness: Option<Witness>,
    gap: Option<Box<PredFn>>,
}

pub(crate) fn entry(id: &'static str, anchor: &'static str, statement: &'static str) -> Build {
    Build {
        id,
        anchor,
        statement,
        status: Status::AsStated,
        notes: "",
        params: Vec::new(),
        constraint: None,
        lhs: None,
        rhs: None,
        printed: None,
        witness: None,
        gap: None,
    }
}

impl Build {
    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn notes(mut self, notes: &'static str) -> Self {
        self.notes = notes;
        self
    }

    pub fn int_range(mut self, name: &'static str, lo: i64, hi: i64) -> Self {
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Ints((lo..=hi).collect()),
        });
        self
    }

    pub fn ints(mut self, name: &'static str, vals: &[i64]) -> Self {
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Ints(vals.to_vec()),
        });
        self
    }

    pub fn rats(mut self, name: &'static str, vals: Vec<Rational>) -> Self {
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Rats(vals),
        });
        self
    }

    pub fn tuples(mut self, name: &'static str, vals: Vec<Vec<Rational>>) -> Self {
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Tuples(vals),
        });
        self
    }

    /// Every cataloged pair (including the optional ones, which validate).
    pub fn all_pairs(mut self, name: &'static str) -> Self {
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Pairs(crate::transform::catalog().iter().cloned().collect()),
        });
        self
    }

    pub fn pairs(mut self, name: &'static str, labels: &[&str]) -> Self {
        let vals = labels
            .iter()
            .map(|l| {
                crate::transform::pair(l)
                    .unwrap_or_else(|e| panic!("registry entry {}: {e}", self.id))
            })
            .collect();
        self.params.push(ParamDomain {
            name,
            values: DomainValues::Pairs(vals),
        });
        self
    }

    pub fn constraint(
        mut self,
        f: impl Fn(&Point) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.constraint = Some(Box::new(f));
        self
    }

    pub fn lhs(mut self, f: impl Fn(&Point) -> Result<Rational> + Send + Sync + 'static) -> Self {
        self.lhs = Some(Box::new(f));
        self
    }

    pub fn rhs(mut self, f: impl Fn(&Point) -> Result<Rational> + Send + Sync + 'static) -> Self {
        self.rhs = Some(Box::new(f));
        self
    }

    pub fn printed(
        mut self,
        f: impl Fn(&Point) -> Result<Rational> + Send + Sync + 'static,
    ) -> Self {
        self.printed = Some(Box::new(f));
        self
    }

    pub fn witness(
        mut self,
        point: Point,
        lhs: &'static str,
        rhs: &'static str,
        printed: Option<&'static str>,
    ) -> Self {
        self.witness = Some(Witness {
            point,
            lhs,
            rhs,
            printed,
        });
        self
    }

    pub fn gap(mut self, f: impl Fn(&Point) -> bool + Send + Sync + 'static) -> Self {
        self.gap = Some(Box::new(f));
        self
    }

    pub fn build(self) -> Identity {
        Identity {
            id: self.id,
            anchor: self.anchor,
            statement: self.statement,
            status: self.status,
            notes: self.notes,
            params: self.params,
            constraint: self.constraint,
            lhs: self.lhs.unwrap_or_else(|| panic!("entry {} has no lhs", self.id)),
            rhs: self.rhs.unwrap_or_else(|| panic!("entry {} has no rhs", self.id)),
            printed: self.printed,
            witness: self.witness,
            gap: self.gap,
        }
    }
}

/// The full identity catalog.
pub struct Registry {
    entries: Vec<Identity>,
    by_id: BTreeMap<&'static str, usize>,
}

impl Registry {
    fn build() -> Self {
        let mut entries = Vec::new();
        entries.extend(sec1::entries());
        entries.extend(sec3::entries());
        entries.extend(sec4_bernoulli::entries());
        entries.extend(sec4_fibonacci::entries());
        entries.extend(sec4_harmonic::entries());
        entries.extend(sec4_catalan::entries());
        entries.extend(sec4_stirling::entries());
        entries.extend(sec4_mstep::entries());
        entries.extend(sec5_horadam::entries());
        entries.extend(sec5_poly::entries());
        let mut by_id = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            if by_id.insert(e.id, i).is_some() {
                panic!("duplicate identity id {}", e.id);
            }
        }
        Registry { entries, by_id }
    }

    pub fn entries(&self) -> &[Identity] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Result<&Identity> {
        self.by_id
            .get(id)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::unknown(format!("no identity with id {id:?}")))
    }

    /// Exact evaluation of both sides of `id` at `point`.
    pub fn evaluate(&self, id: &str, point: &Point) -> Result<Evaluation> {
        self.get(id)?.evaluate(point)
    }
}

static REGISTRY: Lock<Option<Arc<Registry>>> = Lock::new(None);

/// The catalog, built once on first use.
pub fn registry() -> Arc<Registry> {
    {
        let r = REGISTRY.read();
        if let Some(v) = r.as_ref() {
            return v.clone();
        }
    }
    let built = Arc::new(Registry::build());
    let mut r = REGISTRY.write();
    if r.is_none() {
        *r = Some(built);
    }
    r.as_ref().expect("just filled").clone()
}

#[cfg(test)]
mod tests;
