use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("tuple (w={w}, h={h}) is not realizable for N={n}")]
    InvalidTuple { n: u32, w: u32, h: u32 },

    #[error("{what}={value} is outside the domain for N={n}")]
    Domain {
        what: &'static str,
        value: i64,
        n: u32,
    },

    #[error("rank r={r} is not attainable for N={n}")]
    InvalidRank { n: u32, r: i32 },

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("no partition of {n} satisfies the class predicate")]
    EmptyClass { n: u32 },

    #[error("state of {n} qubits exceeds the dense-vector cap of {cap}")]
    TooLarge { n: u32, cap: u32 },

    #[error("invalid measurement: {0}")]
    Measurement(String),

    #[error("cannot parse decimal {0:?}")]
    Decimal(String),

    #[error("dataset: {0}")]
    Dataset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
