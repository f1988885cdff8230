//! Report types serialized to JSON/CSV. Rationals travel as `p/q` strings;
//! maps are ordered so repeated runs render byte-identical JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const STATUS_OK: &str = "ok";
pub const STATUS_SKIPPED_CAP: &str = "skipped-cap";
pub const STATUS_TIE_FLAGGED: &str = "tie-flagged";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ParamEntry {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl ParamEntry {
    pub fn ok(value: i64, witness: Option<serde_json::Value>) -> Self {
        ParamEntry { status: STATUS_OK.into(), value: Some(value), witness }
    }

    pub fn tie_flagged(value: i64, witness: Option<serde_json::Value>) -> Self {
        ParamEntry { status: STATUS_TIE_FLAGGED.into(), value: Some(value), witness }
    }

    pub fn skipped() -> Self {
        ParamEntry { status: STATUS_SKIPPED_CAP.into(), value: None, witness: None }
    }

    pub fn computed_value(&self) -> Option<i64> {
        (self.status != STATUS_SKIPPED_CAP).then_some(self.value).flatten()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RelCheck {
    pub name: String,
    pub lhs: i64,
    pub relation: String,
    pub rhs: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ParameterReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub had_ties: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub parameters: BTreeMap<String, ParamEntry>,
    pub relationship_checks: Vec<RelCheck>,
}

impl ParameterReport {
    pub fn error_entry(graph_id: &str, message: String) -> Self {
        ParameterReport {
            graph_id: graph_id.to_string(),
            n: 0,
            m: 0,
            had_ties: false,
            error: Some(message),
            parameters: BTreeMap::new(),
            relationship_checks: Vec::new(),
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.relationship_checks.iter().all(|c| c.pass)
    }

    pub fn to_csv_rows(&self) -> Vec<String> {
        let mut rows = Vec::new();
        for (name, entry) in &self.parameters {
            rows.push(format!(
                "{},param,{},{},{}",
                self.graph_id,
                name,
                entry.status,
                entry.value.map_or(String::new(), |v| v.to_string())
            ));
        }
        for check in &self.relationship_checks {
            rows.push(format!(
                "{},check,{},{},{}",
                self.graph_id,
                check.name,
                if check.pass { "pass" } else { "fail" },
                format_args!("{} {} {}", check.lhs, check.relation, check.rhs)
            ));
        }
        rows
    }
}

pub const CSV_HEADER: &str = "graph_id,kind,name,status,detail";
