use num::BigInt;
use thiserror::Error;

use crate::rational::Rational;

/// Errors reported by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// su(n) needs n >= 2.
    #[error("su(n) requires n >= 2, got n = {0}")]
    RankTooSmall(usize),

    /// Label vector length does not match n - 1.
    #[error("su({n}) takes {expected} Dynkin labels, got {got}")]
    LabelCount {
        n: usize,
        expected: usize,
        got: usize,
    },

    /// Two representations live in different su(n).
    #[error("rank mismatch: su({left}) vs su({right})")]
    RankMismatch { left: usize, right: usize },

    /// Fundamental-weight index outside 1..=n-1.
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// Stable head and tail of different lengths, or empty.
    #[error("head and tail must have equal positive length, got {head} and {tail}")]
    HeadTailLength { head: usize, tail: usize },

    /// A stable window of width zero makes no sense.
    #[error("stable window k must be at least 1")]
    ZeroK,

    /// n too small for the requested window: need n >= 2k + 1.
    #[error("n = {n} is not in the stable range for k = {k} (need n >= 2k + 1)")]
    NotInStableRange { n: usize, k: usize },

    /// A label strictly between the head and tail windows is nonzero.
    #[error("middle label nonzero at position {position} (k = {k}, n = {n})")]
    MiddleLabelNonzero { position: usize, k: usize, n: usize },

    /// Casimir polynomials cannot be evaluated at N = 0.
    #[error("cannot evaluate at N = 0")]
    EvaluateAtZero,

    /// The polynomial has a 1/N term, so no universal form exists.
    #[error("not linear in N: 1/N coefficient is {am1}")]
    NotLinear { am1: Rational },

    /// Decomposition grew past the configured summand cap.
    #[error("decomposition reached {count} summands, over the cap of {cap}")]
    CapExceeded { count: u64, cap: u64 },

    /// Product dimension too large for the brute-force oracle.
    #[error("product dimension {dim} exceeds the oracle guard {guard}")]
    OracleGuard { dim: BigInt, guard: u64 },
}
