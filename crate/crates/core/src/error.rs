use thiserror::Error;

pub type Result<T> = std::result::Result<T, KolamError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KolamError {
    #[error("dots and arms must be coprime: gcd({m}, {n}) = {gcd}")]
    NotCoprime { m: i64, n: i64, gcd: i64 },

    #[error("dots and arms must both be at least 1 (got m = {m}, n = {n})")]
    ZeroOrNegative { m: i64, n: i64 },

    #[error("m·n = {product} exceeds the supported maximum of {max}")]
    TooLarge { product: i128, max: i64 },

    #[error("bulge must lie strictly between 0 and 1 (got {0})")]
    BulgeOutOfRange(f64),

    #[error("stroke {index} has coincident endpoints")]
    DegenerateChord { index: usize },

    #[error("non-finite coordinate in stroke {index}")]
    NonFiniteCoordinate { index: usize },

    #[error("cannot render an empty stroke list")]
    EmptyStrokeList,

    #[error("dot matrix is {rows}×{cols} but the spec is {m}×{n}")]
    MatrixMismatch {
        rows: usize,
        cols: usize,
        m: u32,
        n: u32,
    },

    #[error("invalid render configuration: {0}")]
    InvalidConfig(String),
}
