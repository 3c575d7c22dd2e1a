use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, VnDimError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VnDimError {
    #[error("value carries pi^{pi_power} and is not a rational number")]
    NonRationalValue { pi_power: i32 },
    #[error("signature is not admissible: {reason}")]
    InadmissibleSignature { reason: String },
    #[error("weight k = {k} is below 2")]
    WeightTooSmall { k: i64 },
    #[error("odd weight k = {k} does not factor through PSL(2,R) unless the second cohomology is trivial")]
    ParityObstruction { k: u64 },
    #[error("lattice rank n = {n} is below 2")]
    RankTooSmall { n: u64 },
    #[error("invalid representation label: {0}")]
    InvalidLabel(String),
    #[error("index quotient {num}/{den} is not an integer")]
    NonIntegerIndex { num: BigInt, den: BigInt },
    #[error("q must be an odd prime power (got {q})")]
    InvalidField { q: u64 },
    #[error("enumeration needs {required} steps, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("graph generation gave up after {rejections} rejected samples")]
    GenerationExhausted { rejections: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl VnDimError {
    /// Stable variant name, used by the CLI when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            VnDimError::NonRationalValue { .. } => "NonRationalValue",
            VnDimError::InadmissibleSignature { .. } => "InadmissibleSignature",
            VnDimError::WeightTooSmall { .. } => "WeightTooSmall",
            VnDimError::ParityObstruction { .. } => "ParityObstruction",
            VnDimError::RankTooSmall { .. } => "RankTooSmall",
            VnDimError::InvalidLabel(_) => "InvalidLabel",
            VnDimError::NonIntegerIndex { .. } => "NonIntegerIndex",
            VnDimError::InvalidField { .. } => "InvalidField",
            VnDimError::BudgetExceeded { .. } => "BudgetExceeded",
            VnDimError::GenerationExhausted { .. } => "GenerationExhausted",
            VnDimError::InvalidArgument(_) => "InvalidArgument",
            VnDimError::Parse(_) => "Parse",
        }
    }
}
