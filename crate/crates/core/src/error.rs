use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("label column '{0}' not found")]
    LabelColumnNotFound(String),

    #[error("label column '{0}' appears more than once")]
    DuplicateLabelColumn(String),

    #[error("row {row}, column '{column}': cannot parse '{value}' as a number")]
    CsvCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("file has no data rows")]
    EmptyFile,

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("non-finite value in feature matrix at row {row}, column {column}")]
    NonFiniteFeature { row: usize, column: usize },

    #[error("invalid classification label at row {row}: {value}")]
    InvalidLabel { row: usize, value: f64 },

    #[error("unknown feature '{0}'")]
    UnknownFeature(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("classification data contains a single class")]
    SingleClass,

    #[error("sample weights sum to zero")]
    ZeroWeight,

    #[error("model family mismatch: expected {expected}, got {got}")]
    FamilyMismatch { expected: String, got: String },

    #[error("task mismatch: model is {model}, data is {data}")]
    TaskMismatch { model: String, data: String },

    #[error("family '{0}' exposes no differentiable decision function")]
    NonDifferentiableFamily(&'static str),

    #[error("decision function is only defined for binary classifiers ({0} classes)")]
    BinaryOnly(usize),

    #[error("flip target requires a binary classifier ({0} classes)")]
    AmbiguousTarget(usize),

    #[error("ill-defined counterfactual target: input lies exactly on the decision boundary")]
    IllDefinedCounterfactual,

    #[error("input is already predicted as the requested target")]
    AlreadyAtTarget,

    #[error("tree has no leaf with label {0}")]
    NoTargetLeaf(usize),

    #[error("regression model has a zero coefficient vector")]
    ZeroCoefficients,

    #[error("undefined angle: zero-norm explanation delta")]
    UndefinedAngle,

    #[error("degenerate counterfactual: counterfactual equals the input")]
    DegenerateCounterfactual,

    #[error("weight vector is not unit norm")]
    NonUnitWeight,

    #[error("requested top-{k} from only {n} samples")]
    KTooLarge { k: usize, n: usize },

    #[error("singular linear system in least-squares fit")]
    SingularSystem,

    #[error("unsupported model format version {0}")]
    UnsupportedVersion(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
