//! Separability criteria and the machinery to run them by name.

mod chsh;
mod entropic;
mod harness;
mod registry;
mod report;

pub use chsh::horodecki_chsh;
pub use entropic::{
    conditional_tsallis, entropic_gap, negative_alpha_bound, ppt_criterion, reduction_criterion, reduction_operator,
    renyi_entropy, renyi_from_spectrum, EntropicValue, SpectralPair,
};
pub use harness::{
    chain_record, implication_chain, sign_pattern_harness, AlphaCheck, ChainRecord, SignPatternRecord,
    SIGN_CHECK_ALPHAS,
};
pub use registry::{
    alpha_label, ChshCriterion, Criterion, CriterionRegistry, EntropicCriterion, EvalContext, OperatorNormCriterion,
    PptCriterion, ReductionCriterion, Subject, DEFAULT_ALPHAS,
};
pub use report::{AlphaEntry, CriterionReport, Verdict, FLAG_SUPPORT_RESTRICTED};
