use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("negative offset {0}")]
    NegativeOffset(f64),
    #[error("offset {offset} is beyond the inradius {inradius}")]
    OffsetBeyondInradius { offset: f64, inradius: f64 },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
