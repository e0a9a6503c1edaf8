use thiserror::Error;

/// Errors produced by word construction, generators and analysis entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} does not belong to the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("symbol index {index} out of range for an alphabet of {size} symbols")]
    SymbolIndexOutOfRange { index: u8, size: usize },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("pattern must be nonempty")]
    EmptyPattern,
    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("operation requires a word over an alphabet of at most two symbols")]
    NotBinary,
    #[error("periodic tail must be nonempty")]
    EmptyPeriod,
    #[error("directive must be nonempty")]
    EmptyDirective,
    #[error("directive entries must be positive")]
    ZeroDirectiveEntry,
    #[error("directive period omits letter {0:?}, so it does not recur")]
    LetterNotRecurrent(char),
    #[error("morphism is not prolongable from seed {0:?}")]
    NotProlongable(char),
    #[error("finite directive exhausted at length {reached}, cannot reach {need}")]
    PrefixUnreachable { need: usize, reached: usize },
    #[error("corpus of {words} words exceeds the budget of {budget}")]
    CorpusBudgetExceeded { words: u128, budget: u128 },
    #[error("invalid source spec {0:?}")]
    BadSourceSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
