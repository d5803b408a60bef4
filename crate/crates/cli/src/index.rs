//! JSON export of the catalog itself: one record per identity with its
//! coordinates, statement, parameter domains, status, and notes, plus the
//! transform-pair catalog with construction-time validation outcomes.

use bintrans_core::registry::Registry;
use bintrans_core::transform;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndexEntry {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub params: Vec<String>,
    pub status: String,
    pub notes: String,
}

pub fn catalog_index(reg: &Registry) -> Vec<IndexEntry> {
    reg.entries()
        .iter()
        .map(|e| IndexEntry {
            id: e.id().to_string(),
            anchor: e.anchor().to_string(),
            statement: e.statement().to_string(),
            params: e
                .params()
                .iter()
                .map(|p| format!("{}={}", p.name, p.values.describe()))
                .collect(),
            status: e.status().as_str().to_string(),
            notes: e.notes().to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairEntry {
    pub label: String,
    pub optional: bool,
    pub validated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<String>,
}

pub fn pairs_index() -> Vec<PairEntry> {
    transform::catalog()
        .iter()
        .map(|p| PairEntry {
            label: p.label().to_string(),
            optional: p.is_optional(),
            validated: p.defect().is_none(),
            defect: p.defect().map(str::to_string),
        })
        .collect()
}
