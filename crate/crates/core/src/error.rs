use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("bit count must be even, got {0}")]
    OddBitCount(usize),
    #[error("bit values must be 0 or 1, got {0}")]
    InvalidBit(u8),
    #[error("frame must contain at least one symbol")]
    EmptyFrame,
    #[error("frame contains a non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("oversampling factor must be at least 1")]
    ZeroOversample,
    #[error("frame has zero mean power; PAPR is undefined")]
    ZeroPower,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("{what} must be a power of two, got {value}")]
    NotPowerOfTwo { what: &'static str, value: usize },
    #[error("bank size {u} exceeds sequence length {n}")]
    BankTooLarge { u: usize, n: usize },
    #[error("phase vector entry {0} is not unit modulus")]
    NotUnitModulus(usize),
    #[error("phase-vector index {index} out of range for bank of {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("rank {rank} out of range for n = {n} (n! = {limit})")]
    RankOutOfRange { rank: u128, n: usize, limit: u128 },
    #[error("n = {0} is too large for 128-bit permutation ranks")]
    RankOverflow(usize),
    #[error("mapping is not a bijection on 0..{0}")]
    NotAPermutation(usize),
    #[error("exhaustive search over {n}! permutations exceeds the budget (n <= {max}); use sampled selection instead")]
    OverBudget { n: usize, max: usize },
    #[error("candidate count K must be at least 1")]
    ZeroCandidates,
    #[error("no permutation of the received frame reproduces it at rank {0}")]
    NoMatch(u128),
    #[error("cannot estimate a CCDF from an empty sample set")]
    EmptySamples,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
