//! Cut times, cut points and conjugate points of geodesics from the identity.
//!
//! A geodesic `γ_{(0,β)}` stops minimising at `t1(β)`:
//!
//! - `β = 0` (regime I): never, `t1 = ∞`.
//! - `|β| ≥ 3/√5` (IVa): when the projected circle closes, `t1 = 2π/√(β²-1)`.
//!   Its disc has area at most `π` and the endpoint lies in `SO(2)`.
//! - otherwise (II, III, IVb, IVc): when the digon between the projection and
//!   its chord reaches area `π`. `S(t) = |β|t - 2ψ(t)` increases strictly, so
//!   the root is unique and bisection finds it.
//!
//! Cut loci at other points are left translates: `C(g) = g·C(e)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geodesic::{geodesic_matrix, GeodesicParams, PARABOLIC_BAND};
use crate::hyperbolic::{digon_angle, digon_area, GEODESIC_BAND};
use crate::lie::{is_in_so2, SO21Element};
use crate::math::{abs, sqrt, wrap_two_pi, PI, TAU};
use crate::roots::bisect;

/// `3/√5`: from here on the cut point is the first return of the circle.
pub fn closing_threshold() -> f64 {
    3.0 / sqrt(5.0)
}

/// `2/√3`: the closed circle bounds area `2π`; separates IVb from IVc.
pub fn obtuse_threshold() -> f64 {
    2.0 / sqrt(3.0)
}

/// Tolerance for flagging a cut point as a conjugate point (`SO(2)` member).
pub const CONJUGATE_TOL: f64 = 1e-10;

/// Gate on `|S(t1) - π|` for solved cut times.
pub const AREA_RESIDUAL_GATE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutRegime {
    /// `β = 0`.
    I,
    /// `0 < β² < 1`.
    II,
    /// `β² = 1`.
    III,
    /// `|β| ≥ 3/√5`.
    IVa,
    /// `1 < |β| ≤ 2/√3`.
    IVb,
    /// `2/√3 < |β| < 3/√5`.
    IVc,
}

impl CutRegime {
    pub fn of(beta: f64) -> Self {
        let b = abs(beta);
        if b < GEODESIC_BAND {
            CutRegime::I
        } else if abs(b - 1.0) < PARABOLIC_BAND {
            CutRegime::III
        } else if b < 1.0 {
            CutRegime::II
        } else if b >= closing_threshold() {
            CutRegime::IVa
        } else if b <= obtuse_threshold() {
            CutRegime::IVb
        } else {
            CutRegime::IVc
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CutRegime::I => "I",
            CutRegime::II => "II",
            CutRegime::III => "III",
            CutRegime::IVa => "IVa",
            CutRegime::IVb => "IVb",
            CutRegime::IVc => "IVc",
        }
    }
}

impl core::fmt::Display for CutRegime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The noncontinuable shortest arc with vertical constant `β`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutTimeResult {
    pub beta: f64,
    pub regime: CutRegime,
    /// `+∞` in regime I.
    pub t1: f64,
    /// Digon angle at `t1`; `None` when there is no digon (I, IVa).
    pub psi: Option<f64>,
    /// `|S(t1) - π|`; zero for the closed forms.
    pub area_residual: f64,
}

/// `t1(β)`. Depends on `|β|` only.
pub fn cut_time(beta: f64) -> CutTimeResult {
    let b = abs(beta);
    let regime = CutRegime::of(beta);
    let closed = |t1| CutTimeResult {
        beta,
        regime,
        t1,
        psi: None,
        area_residual: 0.0,
    };
    let (lo, hi) = match regime {
        CutRegime::I => return closed(f64::INFINITY),
        CutRegime::IVa => return closed(TAU / sqrt(b * b - 1.0)),
        CutRegime::II | CutRegime::III => (PI / b, TAU / b),
        CutRegime::IVb | CutRegime::IVc => (0.0, TAU / sqrt(b * b - 1.0)),
    };
    let root = bisect(|t| digon_area(b, t) - PI, lo, hi, 0.0)
        .expect("area minus pi changes sign on the cut-time bracket");
    let t1 = root.root;
    CutTimeResult {
        beta,
        regime,
        t1,
        psi: Some(digon_angle(b, t1)),
        area_residual: abs(digon_area(b, t1) - PI),
    }
}

/// `γ_{(0,β)}(t1(β))`.
pub fn cut_point(beta: f64) -> Result<SO21Element> {
    let r = cut_time(beta);
    if r.regime == CutRegime::I {
        return Err(Error::DegenerateBeta);
    }
    Ok(geodesic_matrix(GeodesicParams::new(0.0, beta), r.t1))
}

/// Cut point of `γ_{(φ₀,β)}`; the whole cut locus is swept by `φ₀` and `β`.
pub fn cut_point_with_direction(params: GeodesicParams) -> Result<SO21Element> {
    let r = cut_time(params.beta());
    if r.regime == CutRegime::I {
        return Err(Error::DegenerateBeta);
    }
    Ok(geodesic_matrix(params, r.t1))
}

/// Cut point from `g`: `g·γ_{(φ₀,β)}(t1(β))`.
pub fn cut_point_from(g: &SO21Element, params: GeodesicParams) -> Result<SO21Element> {
    cut_point_with_direction(params).map(|c| *g * c)
}

/// Rotation angle `2πβ/√(β²-1) mod 2π` of the conjugate point for `|β| ≥ 3/√5`.
pub fn conjugate_angle(beta: f64) -> Option<f64> {
    if CutRegime::of(beta) == CutRegime::IVa {
        Some(wrap_two_pi(TAU * beta / sqrt(beta * beta - 1.0)))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutSample {
    pub beta: f64,
    pub t1: f64,
    pub point: SO21Element,
    /// Rotation angle when the cut point lies in `SO(2)`, i.e. is conjugate.
    pub so2_angle: Option<f64>,
}

/// Tabulates cut points over `beta_grid`, flagging conjugate points.
pub fn sample_cut_locus(beta_grid: &[f64]) -> Result<Vec<CutSample>> {
    beta_grid
        .iter()
        .map(|&beta| {
            let point = cut_point(beta)?;
            Ok(CutSample {
                beta,
                t1: cut_time(beta).t1,
                point,
                so2_angle: is_in_so2(&point, CONJUGATE_TOL),
            })
        })
        .collect()
}

/// `t1` over a uniform grid and the adjacent pairs where it fails to decrease.
#[derive(Clone, Debug, PartialEq)]
pub struct CutTimeProfile {
    pub rows: Vec<CutTimeResult>,
    /// Index pairs `(i, i + 1)` with `t1[i + 1] ≥ t1[i]`.
    pub violations: Vec<(usize, usize)>,
}

impl CutTimeProfile {
    pub fn is_strictly_decreasing(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sweeps `t1` over `steps` evenly spaced `β` in `[beta_min, beta_max]`.
///
/// The report only describes the sweep. On `(2/√3, 3/√5)` the area criterion
/// makes `t1` rise again, and those rises show up as violations.
pub fn cut_time_profile(beta_min: f64, beta_max: f64, steps: usize) -> Result<CutTimeProfile> {
    if !(beta_min > 0.0 && beta_min < beta_max) || !beta_max.is_finite() {
        return Err(Error::InvalidRange("need 0 < beta_min < beta_max"));
    }
    if steps < 2 {
        return Err(Error::InvalidRange("need at least 2 steps"));
    }
    let step = (beta_max - beta_min) / (steps - 1) as f64;
    let rows: Vec<_> = (0..steps)
        .map(|i| {
            let beta = if i + 1 == steps {
                beta_max
            } else {
                beta_min + step * i as f64
            };
            cut_time(beta)
        })
        .collect();
    let violations = rows
        .windows(2)
        .enumerate()
        .filter(|(_, w)| !(w[1].t1 < w[0].t1))
        .map(|(i, _)| (i, i + 1))
        .collect();
    Ok(CutTimeProfile { rows, violations })
}
