use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tree size n must be at least 1")]
    InvalidSize,

    #[error("modulus m must be at least 2 (got {0})")]
    InvalidModulus(usize),

    #[error("mode index k must satisfy 1 <= k <= m-1 (got k = {k}, m = {m})")]
    InvalidMode { k: usize, m: usize },

    #[error("invalid offspring law: {0}")]
    InvalidOffspring(String),

    #[error("no tree of size {n} exists for this offspring law (support forces n = 1 mod {span})")]
    InfeasibleSize { n: u64, span: u64 },

    #[error("conditioned sampling budget exhausted after {attempts} attempts")]
    SamplingBudget { attempts: u64 },

    #[error("exact enumeration supports n <= {max} (got {n})")]
    EnumerationBudget { n: u64, max: u64 },

    #[error("{0}")]
    UnsupportedModel(String),

    #[error("{model} with m = {m} is outside the {required} regime required by this operation")]
    WrongRegime {
        model: &'static str,
        m: usize,
        required: &'static str,
    },

    #[error("gamma has a pole at the nonpositive integer z = {0}")]
    GammaPole(f64),

    #[error("moment recursion denominator vanishes at ({a},{b}) for m = {m}")]
    DegenerateMoment { a: u32, b: u32, m: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("insufficient data for fit: {0}")]
    Fit(String),
}
