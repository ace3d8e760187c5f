//! The hyperbolic plane as the upper sheet of `-t² + x² + y² = -1`.
//!
//! Also the digon bounded by a projected geodesic and its chord. Its area
//! `S(t1) = |β|t1 - 2ψ` (Gauss–Bonnet with curvature `-1`) decides where a
//! geodesic stops minimising.

use crate::error::{Error, Result};
use crate::geodesic::{mn_coefficients, GeodesicParams, MNCoefficients, PARABOLIC_BAND};
use crate::lie::{pseudo_product, MinkVector};
use crate::math::{
    abs, acosh, asinh, atan2, chq, cos, cosh, ln, sgn, shc, sin, sinh, sqrt, tanh, TAU,
};

/// Tolerance of the hyperboloid constraint, scaled by `max(1, t²)`.
pub const HYPERBOLOID_TOL: f64 = 1e-10;

/// Slack below 1 that `arccosh` arguments may carry from rounding.
pub const ACOSH_SLACK: f64 = 1e-9;

/// A point of the hyperbolic plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperboloidPoint {
    t: f64,
    x: f64,
    y: f64,
}

impl HyperboloidPoint {
    pub const ORIGIN: HyperboloidPoint = HyperboloidPoint {
        t: 1.0,
        x: 0.0,
        y: 0.0,
    };

    /// Validates `-t² + x² + y² = -1` and `t > 0`.
    ///
    /// The constraint is checked to `HYPERBOLOID_TOL·max(1, t²)`, which is the
    /// rounding floor of the quadratic form.
    pub fn new(t: f64, x: f64, y: f64) -> Result<Self> {
        let p = HyperboloidPoint { t, x, y };
        let deviation = p.constraint_deviation();
        let scale = (t * t).max(1.0);
        if !(deviation <= HYPERBOLOID_TOL * scale) || !(t >= 1.0 - HYPERBOLOID_TOL) {
            return Err(Error::NotOnHyperboloid { deviation });
        }
        Ok(p)
    }

    /// Wraps the first column of a group element.
    pub(crate) fn from_group_column(v: MinkVector) -> Self {
        HyperboloidPoint {
            t: v.t,
            x: v.x,
            y: v.y,
        }
    }

    /// Lifts `(x, y)` to the sheet.
    pub fn from_xy(x: f64, y: f64) -> Self {
        HyperboloidPoint {
            t: sqrt(1.0 + x * x + y * y),
            x,
            y,
        }
    }

    pub fn from_semigeodesic(c: SemigeodesicCoords) -> Self {
        let (cu, su) = (cosh(c.u), sinh(c.u));
        HyperboloidPoint {
            t: cu * cosh(c.v),
            x: su,
            y: cu * sinh(c.v),
        }
    }

    pub fn t(&self) -> f64 {
        self.t
    }
    pub fn x(&self) -> f64 {
        self.x
    }
    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_vector(self) -> MinkVector {
        MinkVector::new(self.t, self.x, self.y)
    }

    /// `|{p, p} + 1|`.
    pub fn constraint_deviation(&self) -> f64 {
        abs(pseudo_product(self.to_vector(), self.to_vector()) + 1.0)
    }
}

/// Hyperbolic distance `arccosh(-{p, q})`.
///
/// Nearby points go through `2·arsinh(|p - q|/2)`, the same function without
/// the loss of precision of `arccosh` near 1.
pub fn hyp_distance(p: &HyperboloidPoint, q: &HyperboloidPoint) -> Result<f64> {
    let arg = -pseudo_product(p.to_vector(), q.to_vector());
    if !(arg >= 1.0 - ACOSH_SLACK) {
        return Err(Error::InvalidDistanceArgument(arg));
    }
    if arg > 2.0 {
        return Ok(acosh(arg));
    }
    let d = p.to_vector() - q.to_vector();
    let chord2 = pseudo_product(d, d).max(0.0);
    Ok(2.0 * asinh(0.5 * sqrt(chord2)))
}

/// Semigeodesic coordinates: `u` is the signed distance to the geodesic
/// `x = 0`, `v` the arclength along it. The length element is
/// `ds² = du² + cosh²(u)·dv²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SemigeodesicCoords {
    pub u: f64,
    pub v: f64,
}

/// Chart `(t, x, y) ↦ (u, v)`.
///
/// `u = sgn(x)·arccosh√(t² - y²)` and `v = sgn(y)·arccosh(t/√(t² - y²))`.
/// On the sheet `t² - y² = 1 + x²`, so these are `arsinh x` and
/// `arsinh(y/√(1 + x²))`, which is how they are evaluated.
pub fn to_semigeodesic(p: &HyperboloidPoint) -> SemigeodesicCoords {
    SemigeodesicCoords {
        u: asinh(p.x),
        v: asinh(p.y / sqrt(1.0 + p.x * p.x)),
    }
}

/// Inverse chart.
pub fn from_semigeodesic(c: SemigeodesicCoords) -> HyperboloidPoint {
    HyperboloidPoint::from_semigeodesic(c)
}

/// The chart evaluated literally through the `arccosh` formulas.
pub fn to_semigeodesic_acosh(p: &HyperboloidPoint) -> SemigeodesicCoords {
    let w = sqrt((p.t * p.t - p.y * p.y).max(1.0));
    SemigeodesicCoords {
        u: sgn(p.x) * acosh(w),
        v: sgn(p.y) * acosh((p.t / w).max(1.0)),
    }
}

fn check_circle_args(r: f64, alpha: f64) -> Result<()> {
    if !(r >= 0.0) {
        return Err(Error::NegativeRadius(r));
    }
    if !(0.0..=TAU).contains(&alpha) {
        return Err(Error::AngleOutOfRange(alpha));
    }
    Ok(())
}

/// Length `α·sinh r` of a circular arc of radius `r` and central angle `α`.
pub fn circle_arc_length(r: f64, alpha: f64) -> Result<f64> {
    check_circle_args(r, alpha)?;
    Ok(alpha * sinh(r))
}

/// Area `α(cosh r - 1)` of a circular sector.
pub fn sector_area(r: f64, alpha: f64) -> Result<f64> {
    check_circle_args(r, alpha)?;
    let s = sinh(0.5 * r);
    Ok(2.0 * alpha * s * s)
}

/// Type of curve a geodesic projects to, by `β` = its geodesic curvature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionClass {
    Geodesic,
    Equidistant,
    Horocycle,
    Circle,
}

/// Below this `|β|` the projection is treated as a geodesic.
pub const GEODESIC_BAND: f64 = 1e-12;

pub fn classify_projection(beta: f64) -> ProjectionClass {
    let b = abs(beta);
    if b < GEODESIC_BAND {
        ProjectionClass::Geodesic
    } else if abs(b - 1.0) < PARABOLIC_BAND {
        ProjectionClass::Horocycle
    } else if b < 1.0 {
        ProjectionClass::Equidistant
    } else {
        ProjectionClass::Circle
    }
}

/// Centre and radius `arcoth|β|` of the circle traced by the projection when
/// `β² > 1`.
pub fn projected_circle(params: GeodesicParams) -> Option<(HyperboloidPoint, f64)> {
    let beta = params.beta();
    if classify_projection(beta) != ProjectionClass::Circle {
        return None;
    }
    let k = sqrt(beta * beta - 1.0);
    let (ch, sh) = (abs(beta) / k, 1.0 / k);
    // at φ₀ = 0 the centre lies along -sgn(β)·e_y; rotate by φ₀
    let (s, c) = (sin(params.phi0()), cos(params.phi0()));
    let off = -sgn(beta) * sh;
    let centre = HyperboloidPoint {
        t: ch,
        x: -s * off,
        y: c * off,
    };
    Some((centre, crate::math::atanh(1.0 / abs(beta))))
}

/// First time `2π/√(β² - 1)` at which a circular projection returns to `w₀`;
/// `None` when `β² ≤ 1`.
pub fn closing_time(beta: f64) -> Option<f64> {
    if classify_projection(beta) == ProjectionClass::Circle {
        Some(TAU / sqrt(beta * beta - 1.0))
    } else {
        None
    }
}

/// Angle `ψ` of the digon cut off by the chord at time `t`; in `[0, π)` before
/// a circular projection closes and exactly `π` (up to rounding) when it does.
///
/// `cos ψ = m/√(n(n+2))`; in half-angle form, with `τ = t/2` and
/// `q = (1 - β²)τ²`, `ψ = atan2(|β|·τ·shc(q), chq(q))`. Past the closing
/// time the angle continues into `[π, 2π)` instead of wrapping.
pub fn digon_angle(beta: f64, t: f64) -> f64 {
    let tau = 0.5 * t;
    let q = (1.0 - beta * beta) * tau * tau;
    if q > 1.0 {
        // cosh(kτ) overflows long before tanh(kτ) saturates
        let k = sqrt(1.0 - beta * beta);
        atan2(abs(beta) * tanh(k * tau), k)
    } else {
        let psi = atan2(abs(beta) * tau * shc(q), chq(q));
        // at the closing time the sine is zero and may round below it
        if psi < 0.0 {
            psi + TAU
        } else {
            psi
        }
    }
}

/// Area `|β|t - 2ψ` of the digon at time `t`, without domain checks.
pub fn digon_area(beta: f64, t: f64) -> f64 {
    abs(beta) * t - 2.0 * digon_angle(beta, t)
}

/// Digon bounded by the projection of `γ_{(0,β)}([0, t1])` and its chord.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DigonData {
    pub beta: f64,
    pub t1: f64,
    /// Chord length `arccosh(1 + n(t1))`.
    pub r: f64,
    /// Digon angle, in `(0, π)`.
    pub psi: f64,
    /// `|β|t1 - 2ψ`.
    pub area: f64,
}

fn check_digon_domain(beta: f64, t1: f64) -> Result<()> {
    if classify_projection(beta) == ProjectionClass::Geodesic {
        return Err(Error::DegenerateBeta);
    }
    if !(t1 > 0.0) {
        return Err(Error::NonPositiveTime(t1));
    }
    if let Some(period) = closing_time(beta) {
        if t1 >= period {
            return Err(Error::SelfIntersection { beta, t1, period });
        }
    }
    Ok(())
}

/// Chord length `r = arccosh(1 + n)`, via `2·arsinh√(n/2)`.
fn chord_length(beta: f64, t: f64, n: f64) -> f64 {
    if n.is_finite() {
        2.0 * asinh(sqrt(0.5 * n))
    } else {
        // 1 + n ≈ e^{kt}/(2k²) once cosh(kt) overflows
        let k = sqrt(1.0 - beta * beta);
        k * t - 2.0 * ln(k)
    }
}

pub fn digon_data(beta: f64, t1: f64) -> Result<DigonData> {
    check_digon_domain(beta, t1)?;
    let MNCoefficients { n, .. } = mn_coefficients(beta, t1);
    let psi = digon_angle(beta, t1);
    Ok(DigonData {
        beta,
        t1,
        r: chord_length(beta, t1, n),
        psi,
        area: abs(beta) * t1 - 2.0 * psi,
    })
}

/// `(S'(t1), ψ'(t1)) = (|β|n/(n+2), |β|/(n+2))`.
pub fn digon_rates(beta: f64, t1: f64) -> Result<(f64, f64)> {
    check_digon_domain(beta, t1)?;
    let MNCoefficients { n, .. } = mn_coefficients(beta, t1);
    let b = abs(beta);
    if !n.is_finite() {
        return Ok((b, 0.0));
    }
    Ok((b * n / (n + 2.0), b / (n + 2.0)))
}

/// Signed geodesic curvature at `curve[index]` from its two neighbours.
///
/// Samples must be equally spaced in a common parameter; the estimate
/// `-det(x, V, A)/|V|³` with central differences `V`, `A` does not depend on
/// the spacing. Positive curvature turns clockwise as seen from `+t`, the
/// orientation in which the projection of a geodesic has curvature `β`.
pub fn numeric_geodesic_curvature(curve: &[HyperboloidPoint], index: usize) -> Result<f64> {
    if curve.len() < 3 {
        return Err(Error::TooFewSamples {
            needed: 3,
            got: curve.len(),
        });
    }
    if index == 0 || index + 1 >= curve.len() {
        return Err(Error::TooFewSamples {
            needed: index + 2,
            got: curve.len(),
        });
    }
    let prev = curve[index - 1].to_vector();
    let here = curve[index].to_vector();
    let next = curve[index + 1].to_vector();
    let vel = (next - prev).scale(0.5);
    let acc = (next - here) - (here - prev);
    let speed2 = pseudo_product(vel, vel);
    let speed = sqrt(speed2);
    Ok(-acc.dot(here.cross(vel)) / (speed2 * speed))
}
