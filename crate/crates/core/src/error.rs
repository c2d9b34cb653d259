use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown Cartan preset {0:?}")]
    UnknownPreset(String),

    #[error("index {index} out of range for rank {rank} (indices are 1-based)")]
    IndexOutOfRange { index: i64, rank: usize },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("string data has a negative entry")]
    NegativeEntry,

    #[error("string data was built for a different model")]
    ModelMismatch,

    #[error("string data is not in the image of B(inf): no raising operator applies")]
    StuckElement,

    #[error("e*_{} applied {requested} times but eps*_{} = {available}", .index + 1, .index + 1)]
    StarredUnderflow { index: usize, requested: i64, available: i64 },

    #[error("sigma_{} needs eps_{} = 0, found {eps}", .index + 1, .index + 1)]
    SaitoDomain { index: usize, eps: i64 },

    #[error("element is not in B(lambda): eps*_{} = {eps_star} > {bound}", .index + 1)]
    NotMember { index: usize, eps_star: i64, bound: i64 },

    #[error(
        "phi_{} disagrees: counting gives {counted}, formula gives {formula}",
        .index + 1
    )]
    PhiInconsistency { index: usize, counted: i64, formula: i64 },
}
