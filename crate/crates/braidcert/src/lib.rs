//! Braid-group computation with machine-checkable Hurwitz-move certificates.
//!
//! The library works in the braid group `B_n` presented on the Artin
//! generators and produces explicit sequences of Hurwitz moves that
//! transform one factorization of the full twist into another. Every
//! certificate is plain data (a list of indexed moves) and can be replayed
//! and checked independently of the code that produced it.
//!
//! Module layout:
//!
//! * [`braid`] — words in the generators, free reduction, conjugation, the
//!   half-twist word, and the projection to the symmetric group.
//! * [`garside`] — the left-greedy normal form over permutation braids;
//!   this is the equality oracle everything else leans on.
//! * [`rewrite`] — positive-word rewriting: relation steps, path search
//!   between equal positive words, and compilation of relation steps into
//!   Hurwitz moves.
//! * [`hurwitz`] — factorization tuples, Hurwitz moves, certificate replay
//!   and verification, and a bounded bidirectional orbit search.
//! * [`frames`] — conjugated generator frames and the constructive
//!   certificate generators for full-twist factorizations.

pub mod braid;
pub mod frames;
pub mod garside;
pub mod hurwitz;
pub mod rewrite;

pub use braid::{half_twist_word, BraidWord, Permutation};
pub use frames::{
    conjugation_certificate, cycle_shift_certificate, double_cycle_shift_certificate,
    frame_equivalence_certificate, generator_conjugation_certificate, same_frame_certificate,
    Frame, FrameFactorization,
};
pub use garside::{equal, normal_form, positive_conjugator, positive_decomposition, NormalForm};
pub use hurwitz::{
    apply_move, orbit_search, replay, verify_certificate, Certificate, Factorization, HurwitzMove,
    MoveDirection, VerifyOutcome,
};
pub use rewrite::{
    apply_relation, positive_equivalence_certificate, rewrite_path, step_to_moves, RelationStep,
    StepDirection, StepKind,
};

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid strand count {0}: need at least 2")]
    StrandCount(usize),
    #[error("cannot parse generator token {token:?}")]
    ParseToken { token: String },
    #[error("generator index {index} out of range for {n} strands")]
    GeneratorRange { index: i64, n: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("index {index} out of range {low}..={high}")]
    IndexRange { index: usize, low: usize, high: usize },
    #[error("move index {k} out of range for tuple length {len}")]
    MoveRange { k: usize, len: usize },
    #[error("tuple lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("relation step not applicable at position {position}: {reason}")]
    InapplicableStep { position: usize, reason: String },
    #[error("word is not positive")]
    NotPositive,
    #[error("factorization entries are not single positive generators")]
    NotSingleGenerators,
    #[error("not equivalent: {0}")]
    NotEquivalent(String),
    #[error("state budget of {budget} states exhausted")]
    BudgetExhausted { budget: usize },
    #[error("no certificate found within depth {depth}")]
    DepthExhausted { depth: usize },
    #[error("factorizations are over different frames")]
    FrameMismatch,
    #[error("stage replay failed at stage {stage:?}")]
    StageReplay { stage: &'static str },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
