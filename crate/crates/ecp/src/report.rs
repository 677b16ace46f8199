//! The JSON envelope every CLI invocation prints: the command echo, a
//! digest of the input it consumed, the command-specific payload, and
//! run metadata. For fixed input and flags the payload is byte-identical
//! across runs; only `elapsed_ms` varies.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    /// The argv this run was invoked with.
    pub command: Vec<String>,
    /// SHA-256 of the raw input bytes, when the command read any.
    pub input_digest: Option<String>,
    /// Command-specific result, documented per subcommand.
    pub payload: Value,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub elapsed_ms: u128,
    pub budget: BudgetCounters,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetCounters {
    /// The node budget the run's searches were allowed.
    pub node_limit: u64,
}

/// Hex SHA-256 of raw input bytes.
pub fn digest_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
