//! Arclength-parametrised geodesics from the identity.
//!
//! Every geodesic through `e` is a product of two one-parameter subgroups,
//!
//! ```text
//! γ(t) = exp(t(cos φ₀·a + sin φ₀·b - β·c)) · exp(tβ·c),
//! ```
//!
//! selected by the initial direction `φ₀` and the vertical constant `β`.
//! Geodesics from other points are left translates `g·γ(t)`.

use crate::hyperbolic::HyperboloidPoint;
use crate::lie::{exp_so21, Mat3, MinkVector, SO21Element, So21Vector};
use crate::math::{abs, chc, cos, shc, sin, wrap_two_pi, PI};

/// Below this distance of `|β|` from 1 the regime is reported as parabolic.
pub const PARABOLIC_BAND: f64 = 1e-9;

/// `(φ₀, β)`: initial horizontal direction and vertical covector component.
///
/// `β` is also the geodesic curvature of the projected curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicParams {
    phi0: f64,
    beta: f64,
}

impl GeodesicParams {
    /// `phi0` is reduced to `[0, 2π)`.
    pub fn new(phi0: f64, beta: f64) -> Self {
        GeodesicParams {
            phi0: wrap_two_pi(phi0),
            beta,
        }
    }

    pub fn phi0(&self) -> f64 {
        self.phi0
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Parameters `(φ₀ + π, -β)`.
    ///
    /// Flipping the sign of `β` is the same as reversing time and turning the
    /// initial direction by `π`: `γ_{φ₀,-β}(t) = γ_{φ₀+π,β}(-t)`. Nothing in
    /// the crate applies this normalisation implicitly.
    pub fn with_negated_beta(&self) -> Self {
        GeodesicParams::new(self.phi0 + PI, -self.beta)
    }

    /// Initial velocity `cos φ₀·a + sin φ₀·b` in the Lie algebra.
    pub fn initial_direction(&self) -> So21Vector {
        So21Vector::new(cos(self.phi0), sin(self.phi0), 0.0)
    }
}

/// Which closed form the coefficients `m`, `n` follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MnRegime {
    /// `β² = 1`: `m = t`, `n = t²/2`.
    Parabolic,
    /// `β² > 1`: sines and cosines of `t√(β²-1)`.
    Trigonometric,
    /// `β² < 1`: hyperbolic functions of `t√(1-β²)`.
    Hyperbolic,
}

impl MnRegime {
    pub fn of(beta: f64) -> Self {
        let b = abs(beta);
        if abs(b - 1.0) < PARABOLIC_BAND {
            MnRegime::Parabolic
        } else if b > 1.0 {
            MnRegime::Trigonometric
        } else {
            MnRegime::Hyperbolic
        }
    }
}

/// Coefficients of the explicit geodesic matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MNCoefficients {
    pub m: f64,
    pub n: f64,
    pub regime: MnRegime,
}

/// `m(t)`, `n(t)` for the given `β`.
///
/// With `q = t²(1 - β²)`, `m = t·shc(q)` and `n = t²·chc(q)`; this is one
/// analytic expression covering all three regimes, so there is no
/// cancellation near `β² = 1`.
pub fn mn_coefficients(beta: f64, t: f64) -> MNCoefficients {
    let q = t * t * (1.0 - beta * beta);
    MNCoefficients {
        m: t * shc(q),
        n: t * t * chc(q),
        regime: MnRegime::of(beta),
    }
}

/// `γ(t)` evaluated as the product of the two one-parameter subgroups.
pub fn geodesic_product(params: GeodesicParams, t: f64) -> SO21Element {
    let beta = params.beta;
    let gen = params.initial_direction() - So21Vector::C.scale(beta);
    exp_so21(gen.scale(t)) * exp_so21(So21Vector::C.scale(t * beta))
}

/// `γ(t)` from the explicit entrywise matrix.
pub fn geodesic_matrix(params: GeodesicParams, t: f64) -> SO21Element {
    let GeodesicParams { phi0, beta } = params;
    let MNCoefficients { m, n, .. } = mn_coefficients(beta, t);
    let bt = beta * t;
    let (sd, cd) = (sin(bt - phi0), cos(bt - phi0));
    let (sp, cp) = (sin(phi0), cos(phi0));
    let (sb, cb) = (sin(bt), cos(bt));
    let w = 1.0 - beta * beta * n;
    SO21Element::from_matrix_unchecked(Mat3([
        [1.0 + n, m * cd + beta * n * sd, beta * n * cd - m * sd],
        [
            m * cp + beta * n * sp,
            n * cd * cp + beta * m * sb + w * cb,
            -n * sd * cp + beta * m * cb - w * sb,
        ],
        [
            m * sp - beta * n * cp,
            n * cd * sp - beta * m * cb + w * sb,
            -n * sd * sp + beta * m * sb + w * cb,
        ],
    ]))
}

/// Left translate `g·γ(t)`: the geodesic with the same parameters starting at `g`.
pub fn geodesic_from(g: &SO21Element, params: GeodesicParams, t: f64) -> SO21Element {
    *g * geodesic_matrix(params, t)
}

/// Horizontal control `u(t)` and vertical covector `v(t)` along a geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicControl {
    /// `cos(φ₀ - βt)·a + sin(φ₀ - βt)·b`, unit in the horizontal metric.
    pub u: So21Vector,
    /// `β·c`.
    pub v: So21Vector,
}

/// The control pair at time `t`; `γ'(t) = γ(t)·u(t)`.
pub fn control(params: GeodesicParams, t: f64) -> GeodesicControl {
    let phi = params.phi0 - params.beta * t;
    GeodesicControl {
        u: So21Vector::new(cos(phi), sin(phi), 0.0),
        v: So21Vector::C.scale(params.beta),
    }
}

/// `γ(t₀)⁻¹·γ(t)` in closed form.
///
/// The tail of a geodesic, moved back to the identity, is again a geodesic
/// with the same `β` and initial direction `φ₀ - βt₀`.
pub fn shifted_tail(params: GeodesicParams, t0: f64, t: f64) -> SO21Element {
    let shifted = GeodesicParams::new(params.phi0 - params.beta * t0, params.beta);
    geodesic_product(shifted, t - t0)
}

/// Projection `p(g) = g·w₀` onto the hyperboloid: the first column of `g`.
pub fn project_to_l2(g: &SO21Element) -> HyperboloidPoint {
    HyperboloidPoint::from_group_column(g.base_point())
}

/// Projection of a raw matrix, validating group membership first.
pub fn project_matrix_to_l2(m: &Mat3, tol: f64) -> crate::Result<HyperboloidPoint> {
    SO21Element::new(*m, tol).map(|g| project_to_l2(&g))
}

/// `f(γ(t)) = γ(t)·v₀`: a unit tangent vector field along the projection,
/// parallel in the hyperbolic plane.
pub fn parallel_frame(params: GeodesicParams, t: f64) -> MinkVector {
    geodesic_matrix(params, t).matrix().column(1)
}
