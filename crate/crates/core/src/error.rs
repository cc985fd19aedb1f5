use thiserror::Error;

use crate::qlinalg::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("slot index out of range: ({p}, {q}) on {slots} slots")]
    SlotOutOfRange { p: usize, q: usize, slots: usize },
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no good pair in orbit")]
    NoGoodPair,
    #[error("orbit too large: m = {0} exceeds the search cap")]
    OrbitTooLarge(usize),
    #[error("sign flips are not allowed for gl weights")]
    FlipOnGl,
    /// A computed object contradicts a claim that should hold unconditionally.
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("entry has a pole of order {order} at t = {at}")]
    Regularity { order: usize, at: Rational },
}

pub type Result<T> = std::result::Result<T, Error>;
