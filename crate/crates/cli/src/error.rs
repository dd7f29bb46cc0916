//! Errors surfaced by the command line, with their exit codes.

use coeff_ring::RingError;
use formal_group::FglError;
use homology::HomologyError;
use prefoam::FoamError;
use serde_json::{json, Value};
use skein::SkeinError;
use thiserror::Error;
use webs::WebError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag values or combinations that clap cannot see.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{msg}")]
    Domain { kind: &'static str, msg: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Io { .. } => "Io",
            CliError::Domain { kind, .. } => kind,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string()}})
    }

    pub fn domain(kind: &'static str, msg: impl Into<String>) -> Self {
        CliError::Domain { kind, msg: msg.into() }
    }
}

fn ring_kind(e: &RingError) -> &'static str {
    match e {
        RingError::NotDivisible { .. } => "NotDivisible",
        RingError::NonUnitRho(_) => "NonUnitRho",
        RingError::NotSymmetric(_) => "NotSymmetric",
        RingError::Parse(_) => "Parse",
        _ => "Ring",
    }
}

fn foam_kind(e: &FoamError) -> &'static str {
    match e {
        FoamError::Ring(r) => ring_kind(r),
        FoamError::NotBipartite(_) => "NotBipartite",
        FoamError::Json(_) => "Parse",
        _ => "InvalidFoam",
    }
}

fn web_kind(e: &WebError) -> &'static str {
    match e {
        WebError::Foam(f) => foam_kind(f),
        WebError::Ring(r) => ring_kind(r),
        WebError::Json(_) => "Parse",
        _ => "InvalidWeb",
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError::domain(ring_kind(&e), e.to_string())
    }
}

impl From<FoamError> for CliError {
    fn from(e: FoamError) -> Self {
        CliError::domain(foam_kind(&e), e.to_string())
    }
}

impl From<WebError> for CliError {
    fn from(e: WebError) -> Self {
        CliError::domain(web_kind(&e), e.to_string())
    }
}

impl From<FglError> for CliError {
    fn from(e: FglError) -> Self {
        let kind = match &e {
            FglError::Ring(r) => ring_kind(r),
            FglError::Axiom(_) => "Axiom",
            _ => "FormalGroup",
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<SkeinError> for CliError {
    fn from(e: SkeinError) -> Self {
        let kind = match &e {
            SkeinError::Web(w) => web_kind(w),
            SkeinError::Foam(f) => foam_kind(f),
            SkeinError::Ring(r) => ring_kind(r),
            SkeinError::UnknownRelation(_) => "UnknownRelation",
            _ => "Skein",
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        let kind = match &e {
            HomologyError::InvalidPd(_) => "InvalidPd",
            HomologyError::NonUnitRho(_) => "NonUnitRho",
            HomologyError::Web(w) => web_kind(w),
            HomologyError::Ring(r) => ring_kind(r),
            HomologyError::Cube(_) => "Cube",
        };
        CliError::domain(kind, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::domain("Parse", e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
