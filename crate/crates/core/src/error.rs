//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected exactly two bracket groups, found {0}")]
    ArityMismatch(usize),
    #[error("division by the zero polynomial")]
    ZeroPolyDivision,
    #[error("polynomial and its unit shift share a nonconstant factor")]
    NotCoprime,
    #[error("polynomial vanishes at x = {0}")]
    ZeroAtIntegerPole(i64),
    #[error("term function vanishes at n = {0}")]
    ZeroValue(i64),
    #[error("equivalence multiplier vanishes at n = {0}")]
    ZeroMultiplier(i64),
    #[error("transformed entry {0} is not a polynomial")]
    NonPolynomialEntry(String),
    #[error("zero denominator in convergent at depth {0}")]
    ZeroDenominator(u32),
    #[error("not enough distinct differences to estimate a convergence rate")]
    InsufficientData,
    #[error("essential assumption violated: {0}")]
    EssentialAssumption(String),
    #[error("no constant-d accelerator found at step {0}")]
    NoAccelerator(u32),
    #[error("coefficient of 1/x is {0}, so the term sum diverges")]
    ConvergenceViolation(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{0} does not divide the shifted combination")]
    NotDivisible(String),
    #[error("invalid continued fraction: {0}")]
    InvalidCf(String),
}
