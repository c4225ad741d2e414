use thiserror::Error;

/// Errors raised by word, partition and slope operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pattern must be nonempty")]
    EmptyPattern,
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("word must have length at least 2, got {0}")]
    WordTooShort(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid letter {0:?}; words are spelled over 'a' and 'b'")]
    InvalidLetter(char),
    #[error("counts ({p}, {q}) must both be positive")]
    ZeroCount { p: usize, q: usize },
    #[error("counts ({p}, {q}) are not coprime")]
    NotCoprime { p: usize, q: usize },
    #[error("factor length {m} must satisfy 1 <= m < {n}")]
    BadLength { m: usize, n: usize },
    #[error("word is not primitive")]
    NotPrimitive,
    #[error("word is not conjugate to a Christoffel word")]
    NotChristoffel,
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("invalid composition {0:?}")]
    InvalidComposition(String),
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("slope is not asserted irrational")]
    NotIrrational,
    #[error("orbit points collide, so the slope is rational {}", at_precision(*bits))]
    DegenerateSlope { bits: u32 },
    #[error("could not certify a comparison within {bits} bits of precision")]
    PrecisionExhausted { bits: u32 },
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

fn at_precision(bits: u32) -> String {
    if bits == 0 {
        "(exact arithmetic)".to_string()
    } else {
        format!("or within 2^-{bits} of a rational")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
