use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, ExitCode};
use crate::VERSION;

/// The JSON document every command prints.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// The subcommand and its arguments, echoed back.
    pub command: Value,
    pub version: &'static str,
    /// `ok`, `violation`, or an error status from [`CliError::status`].
    pub status: String,
    /// The verdict for `check`, `nagata` and `campaign`; absent otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: Value,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(command: Value, holds: Option<bool>, seed: Option<u64>, result: Value) -> Self {
        Report {
            command,
            version: VERSION,
            status: if holds == Some(false) { "violation" } else { "ok" }.into(),
            holds,
            seed,
            result,
            wall_time_ms: 0.0,
        }
    }

    pub fn from_error(command: Value, err: &CliError) -> Self {
        Report {
            command,
            version: VERSION,
            status: err.status().into(),
            holds: None,
            seed: None,
            result: json!({ "error": err.to_string() }),
            wall_time_ms: 0.0,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self.holds {
            Some(false) => ExitCode::Violation,
            _ => ExitCode::Ok,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with the wall-time field removed, for comparing runs.
    pub fn timeless_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("wall_time_ms");
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }
}
