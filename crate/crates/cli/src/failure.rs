use std::fmt;

use lineword::{ArithError, CuttingError, IntersectError, WordError};

/// Anything that ends a run with a nonzero exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or malformed input: exit 2.
    Usage(String),
    /// Input shorter than the operation needs: exit 2.
    TooShort(String),
    /// Exact arithmetic refused the operation: exit 3.
    Arith(String),
    /// Prefix too short for the requested factor lengths: exit 4.
    Margin(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::TooShort(_) => 2,
            Failure::Arith(_) => 3,
            Failure::Margin(_) => 4,
        }
    }

    pub fn margin(len: usize, n: usize) -> Self {
        Failure::Margin(format!(
            "a prefix of {len} letters is too short for factor length {n}; need at least {}",
            lineword::cutting2d::MARGIN_FACTOR * n
        ))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::TooShort(m) | Failure::Arith(m) | Failure::Margin(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<ArithError> for Failure {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Arith(e.to_string()),
        }
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        match e {
            WordError::LengthOutOfRange { .. } => Failure::TooShort(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CuttingError> for Failure {
    fn from(e: CuttingError) -> Self {
        match e {
            CuttingError::Arith(a) => a.into(),
            CuttingError::Word(w) => w.into(),
            CuttingError::TooShort => Failure::TooShort(e.to_string()),
            CuttingError::MarginTooSmall { .. } => Failure::Margin(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<IntersectError> for Failure {
    fn from(e: IntersectError) -> Self {
        match e {
            IntersectError::Arith(a) => a.into(),
            IntersectError::Word(w) => w.into(),
            IntersectError::Cutting(c) => c.into(),
            IntersectError::TooShort { .. } => Failure::TooShort(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}
