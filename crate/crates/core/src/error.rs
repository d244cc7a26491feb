use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field size {0}: expected one of 2, 3, 5, 7, 11, 13")]
    UnsupportedField(u32),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u8, right: u8 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} out of range 0..{bound}")]
    Range { value: usize, bound: usize },
    #[error("index error: {0}")]
    Index(String),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("empty subset")]
    EmptySubset,
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
