//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported limit 2^16")]
    FieldTooLarge(u128),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("modulus must be a monic polynomial of degree {expected}, got degree {got}")]
    BadModulusDegree { expected: u32, got: usize },
    #[error("modulus coefficient {0} is out of range for GF({1})")]
    BadModulusCoefficient(u16, u16),
    #[error("modulus is reducible: divisible by a degree-{0} factor")]
    ReducibleModulus(usize),
    #[error("modulus must be monic (leading coefficient 1)")]
    NotMonicModulus,
    #[error("prime fields take no modulus")]
    ModulusForPrimeField,
    #[error("no built-in modulus for GF({p}^{e}); pass one explicitly")]
    NoDefaultModulus { p: u16, e: u32 },
    #[error("element value {value} is out of range for a field of order {q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("enumeration of {size} items exceeds the cap {cap}")]
    SizeExceeded { size: String, cap: u64 },
    #[error("generator matrix rows are linearly dependent (rank {rank} < {k})")]
    RankDeficient { rank: usize, k: usize },
    #[error("a linear code needs at least one row and 1 <= k <= n (got k={k}, n={n})")]
    BadDimensions { k: usize, n: usize },
    #[error("the requested code is the zero code, which cannot be represented")]
    ZeroCode,
    #[error("subcode dimension {r} is out of range 1..={k}")]
    SubcodeRankOutOfRange { r: usize, k: usize },
    #[error("column selection is empty")]
    EmptyColumnSelection,
    #[error("column index {index} is out of range 1..={n}")]
    ColumnOutOfRange { index: usize, n: usize },

    #[error("minimum distance {d} must exceed the secret length {l}")]
    DistanceTooSmall { d: usize, l: usize },
    #[error("the first {l} generator columns are linearly dependent")]
    DependentSecretColumns { l: usize },
    #[error("secret length {l} is out of range for a code of length {n}")]
    SecretLengthOutOfRange { l: usize, n: usize },
    #[error("secret has {got} coordinates, expected {expected}")]
    SecretLengthMismatch { got: usize, expected: usize },
    #[error("participant index {index} is out of range 1..={n}")]
    ParticipantOutOfRange { index: usize, n: usize },
    #[error("share index {0} is outside the given group")]
    ShareOutsideGroup(usize),
    #[error("group member {0} is missing from the shares")]
    MissingShare(usize),
    #[error("shares are inconsistent: no codeword matches them")]
    InconsistentShares,

    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("this check needs a binary self-dual code with l = 2")]
    ParityCheckPrecondition,
    #[error("joint weight enumerator arguments must share one length")]
    LengthMismatch,
    #[error("expected a 2-fold enumerator over 4 variables, got {0} variables")]
    NotABiweight(usize),
    #[error("coefficient of x0^{i}x1^{j}x2^{k}x3^{m} is not divisible by n(n-1)={div}; the code is not 2-transitive or the input is not a biweight enumerator")]
    InexactDerivative { i: u16, j: u16, k: u16, m: u16, div: u64 },
    #[error("variable merge map must cover all {expected} variables, got {got}")]
    BadMergeMap { expected: usize, got: usize },
    #[error("supports longer than 128 coordinates are not implemented for enumeration")]
    SupportTooWide,
    #[error("{0}-fold enumerators are not supported (max 16)")]
    FoldTooLarge(usize),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("catalog entry `{name}` failed validation: {reason}")]
    CatalogValidation { name: String, reason: String },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
