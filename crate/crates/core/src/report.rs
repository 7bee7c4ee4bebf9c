//! The machine-readable document shared by verification and bound reports.
//!
//! Every document is one JSON object:
//!
//! ```text
//! { "schema": "topocount-report", "version": 1, "kind": "<kind>", "body": { ... } }
//! ```
//!
//! Big integers are decimal strings. Canonical keys are topology text lines.

use serde::Serialize;

pub const SCHEMA: &str = "topocount-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Document<'a, T> {
    pub schema: &'static str,
    pub version: u32,
    pub kind: &'a str,
    pub body: T,
}

impl<'a, T: Serialize> Document<'a, T> {
    pub fn new(kind: &'a str, body: T) -> Self {
        Document {
            schema: SCHEMA,
            version: SCHEMA_VERSION,
            kind,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report bodies serialize")
    }
}
