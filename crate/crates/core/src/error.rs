use thiserror::Error;

use crate::field::Backend;

/// Errors raised by the numeric and symbolic layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Lucas parameter {0} must be non-zero")]
    ZeroParameter(&'static str),
    #[error("roots of x^2 - s x - t are not available in this backend")]
    RootsUnavailable,
    #[error("Lucas number {{{0}}} vanishes at these parameters")]
    VanishingFactor(usize),
    #[error("Lucasnomial index out of range: n = {n}, k = {k}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("Lucasnomial denominator factor {{{0}}} vanishes")]
    DivisionByZeroFactor(usize),
    #[error("backend mismatch: {left:?} vs {right:?}")]
    BackendMismatch { left: Backend, right: Backend },
    #[error("cannot demote a {from:?} value to {to:?}")]
    InvalidPromotion { from: Backend, to: Backend },
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has a non-invertible constant term")]
    NonUnitConstantTerm,
    #[error("{0} has a pole at the origin and has no power series")]
    PoleAtOrigin(&'static str),
    #[error("{0} is not supported by this operation")]
    UnsupportedKind(&'static str),
    #[error("series terms keep growing after {terms} terms")]
    SeriesDiverging { terms: usize },
    #[error("division by a vanishing value in {0}")]
    DivisionByZeroValue(&'static str),
    #[error("normalizer cos(0_(u,u) x) = {0} is not positive")]
    NegativeNormalizer(f64),
    #[error("no first positive root found in (0, {x_max}]")]
    NoRootFound { x_max: f64 },
    #[error("neither node family contracts: |phi'/phi| = {ratio}")]
    NonContractingNodes { ratio: f64 },
    #[error("Lucas integral did not converge within {terms} terms")]
    NonConvergent { terms: usize },
    #[error("unknown identity or group: {0}")]
    UnknownIdentityId(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
