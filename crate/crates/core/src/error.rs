use crate::dynkin::Family;

/// Errors surfaced by the engine. Budget refusals are deliberate: the
/// enumeration-backed computations refuse to run past their configured
/// budget instead of silently approximating.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inadmissible Dynkin type {family}_{rank}: {reason}")]
    InadmissibleType {
        family: Family,
        rank: u32,
        reason: String,
    },

    #[error("cannot parse {input:?} as a Dynkin type (expected e.g. A_7, D_43, G_2)")]
    BadTypeSyntax { input: String },

    #[error("({a},{b},{c}) is not a hyperbolic triple: {reason}")]
    NotHyperbolic {
        a: u64,
        b: u64,
        c: u64,
        reason: String,
    },

    #[error("enumeration budget exceeded: {needed} points required, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid chain step {sub} -> {whole}: exponents of {sub} are not a sub-multiset of those of {whole}")]
    InvalidChainStep { sub: String, whole: String },

    #[error("modulus {n} out of range: family deviation suprema are tabulated for 2 <= n <= 7")]
    ModulusOutOfRange { n: u64 },

    #[error("rank cap {cap} too small for table {which}: need at least {required}")]
    RankCapTooSmall { which: u8, cap: u32, required: u32 },

    #[error("unsupported field size q={q}: {reason}")]
    UnsupportedField { q: u64, reason: String },

    #[error("malformed table row {line:?}: {reason}")]
    BadTableRow { line: String, reason: String },
}
