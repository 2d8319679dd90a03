//! Library side of the `qderange` command: rendering, the verification
//! sweep and the kernel benchmark.

pub mod bench;
pub mod format;
pub mod sweep;

use thiserror::Error;

/// Environment variable overriding the oracle enumeration cap.
pub const ORACLE_CAP_ENV: &str = "QDERANGE_ORACLE_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qderange_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Usage(String),
}

/// Oracle cap from an explicit flag, else `QDERANGE_ORACLE_CAP`, else the
/// library default.
pub fn resolve_oracle_cap(flag: Option<u32>) -> Result<u32, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(ORACLE_CAP_ENV) {
        Ok(value) => value.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{ORACLE_CAP_ENV}={value:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(qderange_core::DEFAULT_ORACLE_CAP),
    }
}
