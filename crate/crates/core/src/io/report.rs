use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::parity::{ParityBackend, ParityConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputIdentity {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
}

impl InputIdentity {
    pub fn of(name: &str, g: &Graph) -> Self {
        InputIdentity {
            name: name.to_string(),
            vertices: g.n(),
            edges: g.m(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackendConfig {
    pub parity_backend: ParityBackend,
    pub max_exhaustive_n: usize,
}

impl From<ParityConfig> for BackendConfig {
    fn from(c: ParityConfig) -> Self {
        BackendConfig {
            parity_backend: c.backend,
            max_exhaustive_n: c.max_exhaustive_n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_micros: u64,
}

/// One line of report output. Everything except `timing` is a function of
/// the input and configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputIdentity,
    pub command: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recursion_calls: Option<usize>,
    pub config: BackendConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The line with timing removed, for replay comparisons.
    pub fn stable_line(&self) -> String {
        Report {
            timing: None,
            ..self.clone()
        }
        .to_line()
    }
}
