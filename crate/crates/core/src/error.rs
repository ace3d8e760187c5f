use core::fmt;

use crate::lie::GroupInvariant;

/// Errors reported by the library.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A matrix failed one of the `SO₀(2,1)` membership invariants.
    NotInGroup {
        invariant: GroupInvariant,
        deviation: f64,
    },
    /// A point is not on the upper sheet of the hyperboloid.
    NotOnHyperboloid { deviation: f64 },
    /// The argument of an `arccosh` fell below `1` beyond rounding slack.
    InvalidDistanceArgument(f64),
    /// An angle parameter outside `[0, 2π]`.
    AngleOutOfRange(f64),
    /// A radius below zero.
    NegativeRadius(f64),
    /// `β = 0` has no digon and no cut point.
    DegenerateBeta,
    /// The projected curve closes up or self-intersects before `t1`.
    SelfIntersection { beta: f64, t1: f64, period: f64 },
    /// A non-positive arclength where a positive one is required.
    NonPositiveTime(f64),
    /// Fewer samples than an estimator needs, or an index without neighbours.
    TooFewSamples { needed: usize, got: usize },
    /// An invalid parameter range.
    InvalidRange(&'static str),
    /// The boundary solver found no geodesic reaching the target within the gate.
    SolverFailure { best_residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInGroup {
                invariant,
                deviation,
            } => write!(
                f,
                "matrix is not in SO0(2,1): {invariant} violated by {deviation:e}"
            ),
            Error::NotOnHyperboloid { deviation } => {
                write!(
                    f,
                    "point is not on the upper hyperboloid sheet (deviation {deviation:e})"
                )
            }
            Error::InvalidDistanceArgument(x) => {
                write!(f, "arccosh argument {x} is below 1")
            }
            Error::AngleOutOfRange(a) => write!(f, "angle {a} is outside [0, 2pi]"),
            Error::NegativeRadius(r) => write!(f, "radius {r} is negative"),
            Error::DegenerateBeta => write!(f, "beta = 0 has no digon or cut point"),
            Error::SelfIntersection { beta, t1, period } => write!(
                f,
                "projection for beta = {beta} self-intersects: t1 = {t1} >= {period}"
            ),
            Error::NonPositiveTime(t) => write!(f, "time {t} must be positive"),
            Error::TooFewSamples { needed, got } => {
                write!(f, "need at least {needed} samples, got {got}")
            }
            Error::InvalidRange(what) => write!(f, "invalid range: {what}"),
            Error::SolverFailure { best_residual } => write!(
                f,
                "no geodesic reaches the target within the gate (best residual {best_residual:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
