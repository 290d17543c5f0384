use thiserror::Error;

use jetline::p1::GeometryError;
use jetline::projective::ProjectiveError;

use crate::json::JsonError;
use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {arg} at {error}")]
    Parse { arg: String, error: ParseError },
    #[error("cannot read {arg}: {message}")]
    Input { arg: String, message: String },
    #[error("{0}")]
    Usage(String),
    /// A well-formed input rejected by the mathematics, tagged with the
    /// library error variant.
    #[error("{name}: {message}")]
    Domain { name: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain { .. } => 1,
            _ => 2,
        }
    }

    pub fn parse(arg: &str, error: ParseError) -> Self {
        CliError::Parse {
            arg: arg.to_string(),
            error,
        }
    }

    pub fn input(arg: &str, error: JsonError) -> Self {
        match error {
            JsonError::Parse(error) => CliError::parse(arg, error),
            other => CliError::Input {
                arg: arg.to_string(),
                message: other.to_string(),
            },
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        let name = match e {
            GeometryError::BadParameter(_) => "BadParameter",
            GeometryError::RankMismatch { .. } => "RankMismatch",
            GeometryError::InconsistentIncrements(_) => "InconsistentIncrements",
            GeometryError::NotAUnit { .. } => "NotAUnit",
        };
        CliError::Domain {
            name,
            message: e.to_string(),
        }
    }
}

impl From<ProjectiveError> for CliError {
    fn from(e: ProjectiveError) -> Self {
        let name = match e {
            ProjectiveError::NotIdempotent { .. } => "NotIdempotent",
            ProjectiveError::NotSquare { .. } => "NotSquare",
            ProjectiveError::DimensionMismatch { .. } => "DimensionMismatch",
            ProjectiveError::NotInImage => "NotInImage",
        };
        CliError::Domain {
            name,
            message: e.to_string(),
        }
    }
}
