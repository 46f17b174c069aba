//! JSON report emitted by `birat classify --json`. The key set and key order
//! are a stable machine interface; `elapsed_ms` is the only field that varies
//! between identical runs.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub classification: String,
    pub basis_monic: Vec<String>,
    pub basis_primitive: Vec<String>,
    /// A count, or the string "infinite".
    pub staircase: serde_json::Value,
    /// "satisfied" | "violated" | "inapplicable", null unless n = 2 with
    /// nonconstant inputs.
    pub am_check: Option<String>,
    pub inputs: Vec<String>,
    pub order: String,
    pub field: String,
    pub reasons: Vec<String>,
    pub elapsed_ms: u128,
    pub version: String,
}
