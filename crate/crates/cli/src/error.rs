use serde_json::json;

/// Failures that end a run, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    /// One-line machine-readable description for stderr.
    pub fn to_json(&self) -> String {
        let kind = match self {
            CliError::Input(_) => "input",
            CliError::Precondition(_) => "precondition",
        };
        json!({ "error": kind, "message": self.to_string() }).to_string()
    }
}

impl From<mazic_core::Error> for CliError {
    fn from(e: mazic_core::Error) -> Self {
        use mazic_core::Error::*;
        match e {
            Precondition(_) | DegenerateObjective(_) => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
