use thiserror::Error;

use crate::rational::{format_rational, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid object: homogeneous vector is zero")]
    InvalidObject,
    #[error("degenerate span: points are coincident or collinear")]
    DegenerateSpan,
    #[error("matrix is singular")]
    Singular,
    #[error("invalid group element: c must be nonzero")]
    InvalidGroupElement,
    #[error("invalid parameter: beta = {} is excluded (must differ from 0 and 3)", format_rational(.0))]
    InvalidParameter(Rational),
    #[error("point coincides with the projection centre U")]
    ProjectionCenter,
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("not in family: fitted beta = {}", format_rational(.0))]
    NotInFamily(Rational),
    #[error("inconsistent input: point #{index} {reason}")]
    InconsistentInput { index: usize, reason: &'static str },
    #[error("incomparable jets: {0}")]
    IncomparableJets(&'static str),
    #[error("truncation order {have} is too short, need at least {need}")]
    Truncation { have: usize, need: usize },
    #[error("irregular branch: no component has a nonzero linear term")]
    IrregularBranch,
    #[error("invalid basepoint: {0}")]
    InvalidBasepoint(&'static str),
    #[error("identical curves have no finite intersection multiplicity")]
    IdenticalCurves,
    #[error("curves share a component through the basepoint")]
    CommonComponent,
    #[error("parse error: {0}")]
    Parse(String),
}
