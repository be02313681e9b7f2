use thiserror::Error;

/// Errors produced by every layer of the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid panel: {0}")]
    InvalidPanel(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("unknown group label `{0}`")]
    UnknownGroup(String),

    #[error("variable `{0}` has no observed cells")]
    EmptyVariable(String),

    #[error("cannot take log of {value} in `{variable}` (unit {unit}, period {period})")]
    NonPositiveLog {
        variable: String,
        unit: String,
        period: i32,
        value: f64,
    },

    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    #[error("csv line {line}: {message}")]
    Csv { line: usize, message: String },

    #[error("duplicate row for ({country}, {year}) at line {line}")]
    DuplicateRow {
        country: String,
        year: i32,
        line: usize,
    },

    #[error("unit `{0}` is not in any income classification list")]
    Unclassified(String),

    #[error("unit `{0}` appears in more than one income classification list")]
    AmbiguousClassification(String),

    #[error("fetch failed for indicator {indicator}: {message}")]
    Fetch { indicator: String, message: String },

    #[error("malformed payload for {context}: {message}")]
    Parse { context: String, message: String },

    #[error("insufficient observations: {0}")]
    InsufficientData(String),

    #[error("degenerate regression: {0}")]
    Degenerate(String),

    #[error("missing moment table entry: {0}")]
    MissingMoments(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("model is under-identified: {instruments} instruments for {parameters} parameters")]
    UnderIdentified {
        instruments: usize,
        parameters: usize,
    },

    #[error("collinear regressors: {}", .0.join(", "))]
    Collinear(Vec<String>),

    #[error("invalid estimate state: {0}")]
    EstimateState(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
