use core::fmt;
use core::ops::Mul;

use super::{
    algebra_iso, char_invariant, Mat2, Mat3, MinkVector, Sl2Vector, So21Vector, TimeReversal,
};
use crate::error::{Error, Result};
use crate::math::{abs, atan2, chc, chq, cos, shc, sin, wrap_two_pi};

/// Default tolerance for group membership checks.
pub const DEFAULT_TOL_GROUP: f64 = 1e-10;

/// The three defining conditions of `SO₀(2,1)` inside `GL(3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupInvariant {
    /// `m·I·mᵀ·I = E`.
    PseudoOrthogonality,
    /// `det m = 1`.
    Orientation,
    /// `m₁₁ ≥ 1`: the time direction is preserved.
    TimeDirection,
}

impl fmt::Display for GroupInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupInvariant::PseudoOrthogonality => "pseudo-orthogonality (m I m^T I = E)",
            GroupInvariant::Orientation => "orientation (det = 1)",
            GroupInvariant::TimeDirection => "time direction (m11 >= 1)",
        })
    }
}

/// Measured deviations of a matrix from the group invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantReport {
    /// `‖m·I·mᵀ·I - E‖∞`.
    pub pseudo_orthogonality: f64,
    /// `|det m - 1|`.
    pub orientation: f64,
    /// `max(0, 1 - m₁₁)`.
    pub time_direction: f64,
}

impl InvariantReport {
    pub fn of(m: &Mat3) -> Self {
        let i = TimeReversal::MATRIX;
        let gram = *m * i * m.transpose() * i;
        InvariantReport {
            pseudo_orthogonality: gram.max_abs_diff(&Mat3::IDENTITY),
            orientation: abs(m.det() - 1.0),
            time_direction: (1.0 - m[(0, 0)]).max(0.0),
        }
    }

    /// First invariant exceeding `tol`, if any.
    pub fn first_violation(&self, tol: f64) -> Option<(GroupInvariant, f64)> {
        // NaN deviations must count as violations
        let bad = |d: f64| !(d <= tol);
        if bad(self.pseudo_orthogonality) {
            Some((
                GroupInvariant::PseudoOrthogonality,
                self.pseudo_orthogonality,
            ))
        } else if bad(self.orientation) {
            Some((GroupInvariant::Orientation, self.orientation))
        } else if bad(self.time_direction) {
            Some((GroupInvariant::TimeDirection, self.time_direction))
        } else {
            None
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.first_violation(tol).is_none()
    }
}

/// An element of `SO₀(2,1)` acting on column vectors `(t, x, y)ᵀ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SO21Element(Mat3);

impl SO21Element {
    pub const IDENTITY: SO21Element = SO21Element(Mat3::IDENTITY);

    /// Validates `m` against the group invariants at tolerance `tol`.
    pub fn new(m: Mat3, tol: f64) -> Result<Self> {
        match InvariantReport::of(&m).first_violation(tol) {
            None => Ok(SO21Element(m)),
            Some((invariant, deviation)) => Err(Error::NotInGroup {
                invariant,
                deviation,
            }),
        }
    }

    /// Wraps a matrix known to lie in the group (up to rounding).
    pub(crate) fn from_matrix_unchecked(m: Mat3) -> Self {
        SO21Element(m)
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn invariants(&self) -> InvariantReport {
        InvariantReport::of(&self.0)
    }

    /// `g⁻¹ = I gᵀ I`.
    pub fn inverse(&self) -> Self {
        let i = TimeReversal::MATRIX;
        SO21Element(i * self.0.transpose() * i)
    }

    pub fn apply(&self, v: MinkVector) -> MinkVector {
        self.0.mul_vec(v)
    }

    /// `g·w₀`, the first column.
    pub fn base_point(&self) -> MinkVector {
        self.0.column(0)
    }

    pub fn max_abs_diff(&self, other: &SO21Element) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

impl Mul for SO21Element {
    type Output = SO21Element;
    fn mul(self, rhs: SO21Element) -> SO21Element {
        SO21Element(self.0 * rhs.0)
    }
}

/// Closed-form exponential `exp(x) = E + s(q)·x + c(q)·x²` of `so(2,1)`.
///
/// `s`, `c` are `sin α/α`, `(1 - cos α)/α²` for `q < 0`, their hyperbolic
/// counterparts for `q > 0`, and `1`, `½` at `q = 0`.
pub fn exp_so21(x: So21Vector) -> SO21Element {
    let (q, _) = char_invariant(x);
    let m = x.to_matrix();
    let e = Mat3::IDENTITY + m.scale(shc(q)) + (m * m).scale(chc(q));
    SO21Element(e)
}

/// Closed-form exponential of `sl(2)`.
///
/// Trace-free `w` satisfies `w² = -det(w)·E₂`, so
/// `exp(w) = chq(-det w)·E₂ + shc(-det w)·w`.
pub fn exp_sl2(w: Sl2Vector) -> Mat2 {
    let m = w.to_matrix();
    let q = -m.det();
    Mat2::IDENTITY.scale(chq(q)) + m.scale(shc(q))
}

/// `(exp(w), exp(l(w)))`, the pair related by the covering `L(exp w) = exp(l(w))`.
///
/// `L` is two-to-one with kernel `{±E₂}`; this is the only place it is realised.
pub fn covering_on_exponentials(w: Sl2Vector) -> (Mat2, SO21Element) {
    (exp_sl2(w), exp_so21(algebra_iso(w)))
}

/// `exp(φ·c)`: rotation by `φ` in the `(x, y)` plane, fixing `w₀`.
pub fn so2_rotation(phi: f64) -> SO21Element {
    let (s, c) = (sin(phi), cos(phi));
    SO21Element(Mat3([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]))
}

/// Membership in the stabiliser `SO(2)` of `w₀`.
///
/// Returns the rotation angle in `[0, 2π)` when the first row and column match
/// `(1, 0, 0)` within `tol`.
pub fn is_in_so2(g: &SO21Element, tol: f64) -> Option<f64> {
    let m = g.matrix();
    let off = [m[(0, 1)], m[(0, 2)], m[(1, 0)], m[(2, 0)]];
    if abs(m[(0, 0)] - 1.0) <= tol && off.iter().all(|v| abs(*v) <= tol) {
        Some(wrap_two_pi(atan2(m[(2, 1)], m[(1, 1)])))
    } else {
        None
    }
}
