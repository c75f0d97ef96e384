use serde::Serialize;
use serde_json::{json, Value};

use qhalg::Error;

#[derive(Serialize)]
pub struct InputInfo {
    pub source: String,
    pub digest: String,
}

/// JSON report; `timing_ms` only appears when requested so that reports are
/// byte-identical across runs otherwise.
#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub seed: u64,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &'static str, input: InputInfo, seed: u64, result: Value) -> Self {
        Report {
            tool: "qhalg",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input,
            seed,
            result,
            timing_ms: None,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidPresentation(_) => "invalid-presentation",
        Error::NonHomogeneousRelation(_) => "non-homogeneous-relation",
        Error::CapExceeded(_) => "cap-exceeded",
        Error::DimensionCapExceeded(_) => "dimension-cap-exceeded",
        Error::NotQuiverPresented => "not-quiver-presented",
        Error::NotBasic => "not-basic",
        Error::RelationViolated(_) => "relation-violated",
        Error::InvalidRepresentation(_) => "invalid-representation",
        Error::NotNested => "not-nested",
        Error::NonSplitInput(_) => "non-split-input",
        Error::WrongShape(_) => "wrong-shape",
        Error::TooManyVertices(..) => "too-many-vertices",
        Error::GlobalDimensionTooLarge(_) => "global-dimension-too-large",
        Error::Undetermined(_) => "undetermined",
        Error::NotStrongChain => "not-strong-chain",
        Error::UnknownFixture(_) => "unknown-fixture",
        Error::UnknownVertex(_) => "unknown-vertex",
        Error::Parse(_) => "parse",
        Error::InvalidOrder(_) => "invalid-order",
        Error::InternalDefect(_) => "internal-defect",
        Error::Lin(_) => "linear-algebra",
    }
}

/// 2 for malformed input, 3 for computational limits and failed constructions.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPresentation(_)
        | Error::NonHomogeneousRelation(_)
        | Error::NotQuiverPresented
        | Error::RelationViolated(_)
        | Error::InvalidRepresentation(_)
        | Error::NotNested
        | Error::WrongShape(_)
        | Error::UnknownFixture(_)
        | Error::UnknownVertex(_)
        | Error::Parse(_)
        | Error::InvalidOrder(_) => 2,
        _ => 3,
    }
}

pub fn error_object(e: &Error) -> String {
    let v = json!({
        "error": {
            "kind": kind(e),
            "exit_code": exit_code(e),
            "message": e.to_string(),
        }
    });
    serde_json::to_string_pretty(&v).expect("serializable")
}
