//! Error type shared by the kernel, transform, node-selection and oracle layers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("panel nodes must be strictly ascending, got ({n1}, {n2}, {n3})")]
    InvalidPanel { n1: i64, n2: i64, n3: i64 },

    #[error("panel span must be at least 2, got {span}")]
    SpanTooSmall { span: i64 },

    #[error("invalid node sequence: {reason}")]
    InvalidSequence { reason: String },

    #[error("node {node} lies outside the sampled domain [{lo}, {hi}]")]
    Domain { node: i64, lo: i64, hi: i64 },

    #[error("segment ranges overlap near index {at}")]
    InvalidPartition { at: i64 },

    #[error("node count must be an odd integer >= 3, got {count}")]
    InvalidCount { count: usize },

    #[error("growth ratio must be a finite number > 1, got {q}")]
    InvalidRatio { q: f64 },

    #[error("cutoff {cutoff} must exceed the flat-region boundary {boundary}")]
    InvalidCutoff { boundary: i64, cutoff: i64 },

    #[error("{count} nodes cannot reach cutoff {cutoff} from {reached} by unit steps")]
    BudgetExhausted {
        count: usize,
        cutoff: i64,
        reached: i64,
    },

    #[error("sequence value {value:e} overflows the supported integer range")]
    Overflow { value: f64 },

    #[error("range of {len} terms exceeds the brute-force cost guard of {guard}")]
    RangeTooLarge { len: u64, guard: u64 },

    #[error("parameter a = {a} puts the singular point on the sampling grid")]
    SingularParameter { a: f64 },

    #[error("series diverges for exponent p = {p} (requires p > 1)")]
    DivergentSeries { p: f64 },

    #[error("no tabulated reference value for exponent p = {p}")]
    NoReference { p: f64 },

    #[error("power-sum order {m} exceeds the supported maximum of {max}")]
    UnsupportedOrder { m: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
