use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("axiom check failed at stage {stage}: {detail}")]
    Axiom { stage: String, detail: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("stage {stage} failed: {source}")]
    Stage { stage: String, source: Box<Error> },
}

impl Error {
    /// Wraps `self` with the name of the pipeline stage that produced it.
    pub fn at(self, stage: &str) -> Error {
        Error::Stage {
            stage: stage.to_string(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
