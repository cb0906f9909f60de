use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported field GF({p}^{n})")]
    UnsupportedField { p: u64, n: u32 },
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("invalid block {block:?}: {reason}")]
    InvalidBlock { block: Vec<u32>, reason: String },
    #[error("block {0:?} occurs more than once")]
    DuplicateBlock(Vec<u32>),
    #[error("set system is not closed under translation: {missing:?} (translate of {source_block:?}) is absent")]
    NotTranslationClosed {
        source_block: Vec<u32>,
        missing: Vec<u32>,
    },
    #[error("block {0:?} has an orbit that is neither full nor the short orbit")]
    UnsupportedOrbit(Vec<u32>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid ingredient: {0}")]
    InvalidIngredient(String),
    #[error("{0} blocks exceed the brute-force limit of {1}")]
    TooManyBlocks(usize, usize),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("construction produced an invalid result: {0}")]
    Internal(String),
    #[error("format error: {0}")]
    Format(String),
}
