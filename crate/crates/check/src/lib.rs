//! Claim registry, report rendering and the `nikulin-check` command line on
//! top of `nikulin-core`.

pub mod claims;
pub mod export;
pub mod report;
mod value;

pub use claims::{builtin_claims, override_expected, run_claim_set, run_claims, Claim, Config, Outcome};
pub use report::{render_canonical_json, render_report, ClaimReport, ClaimResult, Format, Status};
pub use value::Value;

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    /// Bad flags or bounds; the CLI exits with status 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nikulin_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
