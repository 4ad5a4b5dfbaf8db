//! JSON certificate documents.

use rooted_k4::decider::{Decision, Verdict};
use rooted_k4::minors::check_witness;
use rooted_k4::obstructions::check_obstruction;
use rooted_k4::MinorWitness;
use serde::{Deserialize, Serialize};

use crate::io::InstanceFile;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("rk4 ", env!("CARGO_PKG_VERSION"));

/// A verdict with everything needed to check it standalone.
///
/// Vertex identifiers index `names`, the vertex names of the instance file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub names: Vec<String>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

impl CertificateDocument {
    pub fn new(file: &InstanceFile, decision: Decision) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            names: file.names.clone(),
            verdict: decision.verdict,
            trace: decision.trace,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: CertificateDocument = serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Schema(format!(
                "schema version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }

    /// Checks the stored verdict against `file`; `Err` when the document
    /// does not describe the file at all.
    pub fn verify(&self, file: &InstanceFile) -> Result<Result<(), String>, CliError> {
        if self.names != file.names {
            return Err(CliError::Schema("vertex names differ from the instance".into()));
        }
        let g = file.instance.graph();
        let roots = file.instance.roots();
        Ok(match &self.verdict {
            Verdict::Yes { witness } => check_witness(g, &roots, witness).map_err(|f| f.to_string()),
            Verdict::No { obstruction } => check_obstruction(g, &roots, obstruction).map_err(|f| f.to_string()),
        })
    }
}

/// The oracle's answer; absence comes without a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub names: Vec<String>,
    pub present: bool,
    pub witness: Option<MinorWitness>,
}

impl OracleDocument {
    pub fn new(file: &InstanceFile, witness: Option<MinorWitness>) -> Self {
        OracleDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            names: file.names.clone(),
            present: witness.is_some(),
            witness,
        }
    }
}
