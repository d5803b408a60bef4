//! The grid runner: evaluates catalog entries over their parameter domains
//! point by point, in parallel, and assembles deterministic reports.
//!
//! Point order is the declaration-order product walk from the registry, and
//! failures are collected positionally, so report content is identical for
//! any thread count.

use crate::report::{Classification, Failure, Report};
use bintrans_core::error::{Error, Result};
use bintrans_core::registry::{DomainValues, Identity, ParamDomain, Registry, Status};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;

/// Replacement value lists for named parameters of one identity.
#[derive(Default, Clone)]
pub struct DomainOverride {
    pub params: Vec<(String, DomainValues)>,
}

impl DomainOverride {
    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }
}

fn effective_params(entry: &Identity, over: &DomainOverride) -> Result<Vec<ParamDomain>> {
    let mut params: Vec<ParamDomain> = entry.params().to_vec();
    for (name, values) in &over.params {
        let slot = params
            .iter_mut()
            .find(|p| p.name == name.as_str())
            .ok_or_else(|| {
                Error::unknown(format!(
                    "identity {} has no parameter named {name}",
                    entry.id()
                ))
            })?;
        slot.values = values.clone();
    }
    Ok(params)
}

fn outcome(res: Result<bintrans_core::Rational>) -> String {
    match res {
        Ok(v) => v.to_string(),
        Err(e) => format!("undefined: {e}"),
    }
}

/// Evaluate one identity over its (possibly overridden) domain.
pub fn verify(reg: &Registry, id: &str, over: &DomainOverride) -> Result<Report> {
    let entry = reg.get(id)?;
    let started = Instant::now();
    let points = if over.is_empty() {
        entry.default_domain()
    } else {
        entry.domain_from(&effective_params(entry, over)?)
    };
    let failures: Vec<Option<(Failure, bool)>> = points
        .par_iter()
        .map(|pt| {
            let lhs = entry.lhs(pt);
            let rhs = entry.rhs(pt);
            let equal = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
            if equal {
                None
            } else {
                let params: BTreeMap<String, String> = pt
                    .items()
                    .map(|(name, value)| (name.to_string(), value))
                    .collect();
                Some((
                    Failure {
                        params,
                        lhs: outcome(lhs),
                        rhs: outcome(rhs),
                    },
                    entry.is_documented_gap(pt),
                ))
            }
        })
        .collect();

    let total = points.len() as u64;
    let mut recorded = Vec::new();
    let mut all_gaps = true;
    for f in failures.into_iter().flatten() {
        all_gaps &= f.1;
        recorded.push(f.0);
    }
    let classification = if recorded.is_empty() {
        Classification::Pass
    } else if all_gaps {
        Classification::KnownGapConfirmed
    } else {
        Classification::Fail
    };
    Ok(Report {
        identity: entry.id().to_string(),
        anchor: entry.anchor().to_string(),
        status: entry.status().as_str().to_string(),
        classification,
        points: total,
        passes: total - recorded.len() as u64,
        failures: recorded,
        ms: started.elapsed().as_millis() as u64,
    })
}

/// Entry filter for batch runs.
#[derive(Default, Clone)]
pub struct Filter {
    pub section: Option<String>,
    pub status: Option<Status>,
}

impl Filter {
    pub fn matches(&self, entry: &Identity) -> bool {
        if let Some(s) = &self.section {
            if entry.section() != s {
                return false;
            }
        }
        if let Some(st) = self.status {
            if entry.status() != st {
                return false;
            }
        }
        true
    }
}

/// One report per matching entry, in catalog order.
pub fn verify_all(reg: &Registry, filter: &Filter) -> Vec<Report> {
    reg.entries()
        .iter()
        .filter(|e| filter.matches(e))
        .map(|e| verify(reg, e.id(), &DomainOverride::default()).expect("known id"))
        .collect()
}

/// Re-check the frozen defect witness of an amended or edge-restricted
/// entry; `Ok` means the witness reproduces exactly.
pub fn verify_witness(entry: &Identity) -> std::result::Result<(), String> {
    let Some(w) = entry.witness() else {
        return match entry.status() {
            Status::AsStated => Ok(()),
            _ => Err(format!("{} carries no witness", entry.id())),
        };
    };
    let lhs = outcome(entry.lhs(&w.point));
    let rhs = outcome(entry.rhs(&w.point));
    let strip = |s: &str| s.split(':').next().unwrap_or_default().to_string();
    if strip(&lhs) != w.lhs {
        return Err(format!("{}: lhs {lhs} != frozen {}", entry.id(), w.lhs));
    }
    if strip(&rhs) != w.rhs {
        return Err(format!("{}: rhs {rhs} != frozen {}", entry.id(), w.rhs));
    }
    match entry.status() {
        Status::Amended => {
            let printed = match entry.printed(&w.point) {
                Some(res) => outcome(res),
                None => return Err(format!("{} lacks the original form", entry.id())),
            };
            let printed = strip(&printed);
            if printed != w.printed.unwrap_or_default() {
                return Err(format!(
                    "{}: original form gave {printed}, frozen {:?}",
                    entry.id(),
                    w.printed
                ));
            }
            if printed == rhs {
                return Err(format!(
                    "{}: original form no longer differs from the amended one",
                    entry.id()
                ));
            }
            Ok(())
        }
        Status::EdgeRestricted => {
            if !entry.is_documented_gap(&w.point) {
                return Err(format!("{}: witness point not covered by the gap", entry.id()));
            }
            if lhs == rhs {
                return Err(format!("{}: gap point no longer separates the sides", entry.id()));
            }
            Ok(())
        }
        Status::AsStated => Ok(()),
    }
}

/// Run `f` on a dedicated rayon pool with `threads` workers (0 = default).
pub fn with_parallelism<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}
