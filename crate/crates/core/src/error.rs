use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series whose leading term is zero or unknown")]
    DivisionByZeroSeries,
    #[error("tau -> tau + 1 needs cyclotomic coefficients (exponent {exponent} has denominator > 2)")]
    NeedsCyclotomic { exponent: String },
    #[error("q-expansion does not converge for Im(tau) <= 0")]
    NotConvergent,
    #[error("odd weight {0} has no Duke-Jenkins basis form")]
    OddWeight(i64),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("matrix is not invertible over the polynomial ring")]
    NotInvertible,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("no rational sl2-triple for labels {0}")]
    NoRationalTriple(String),
    #[error("odd label in weighted Dynkin diagram {0}")]
    OddLabel(String),
    #[error("odd grading {0}: cocycle values would not be integral")]
    OddGrading(i64),
    #[error("unknown form id {0:?}")]
    UnknownForm(String),
    #[error("unknown orbit {0:?}")]
    UnknownOrbit(String),
    #[error("evaluation point is a pole")]
    PoleAtEvaluationPoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
