//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use so21::lie::{Mat2, Mat3, Sl2Vector};
use std::f64::consts::{PI, TAU};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// `exp(m)` by scaling and squaring a 30-term Taylor polynomial.
pub fn expm_taylor(m: &Mat3) -> Mat3 {
    let norm = m.max_abs() * 3.0;
    let mut s = 0;
    while norm / f64::powi(2.0, s) > 0.5 {
        s += 1;
    }
    let a = m.scale(f64::powi(2.0, -s));
    let mut sum = Mat3::IDENTITY;
    let mut term = Mat3::IDENTITY;
    for k in 1..30 {
        term = (term * a).scale(1.0 / k as f64);
        sum = sum + term;
    }
    for _ in 0..s {
        sum = sum * sum;
    }
    sum
}

fn inverse2(g: &Mat2) -> Mat2 {
    let [[a, b], [c, d]] = g.0;
    Mat2([[d, -b], [-c, a]]).scale(1.0 / g.det())
}

/// The covering `SL(2) → SO₀(2,1)` as the adjoint action.
///
/// `(t, x, y)` is identified with `sl(2)` by `t ↦ c′`, `x ↦ -b′`, `y ↦ a′`,
/// which turns `Ad_g` into the column action on `(t, x, y)`.
pub fn covering_adjoint(g: &Mat2) -> Mat3 {
    let gi = inverse2(g);
    let basis = [
        Sl2Vector::new(0.0, 0.0, 1.0),
        Sl2Vector::new(0.0, -1.0, 0.0),
        Sl2Vector::new(1.0, 0.0, 0.0),
    ];
    let mut out = [[0.0; 3]; 3];
    for (j, w) in basis.iter().enumerate() {
        let img = Sl2Vector::from_matrix(&(*g * w.to_matrix() * gi));
        let col = [img.pc, -img.pb, img.pa];
        for i in 0..3 {
            out[i][j] = col[i];
        }
    }
    Mat3(out)
}

/// Digon area from circle geometry: the projection of `γ_{(0,β)}` with
/// `|β| > 1` runs on a circle of radius `ρ = arcoth|β|` and sweeps central
/// angle `θ = √(β² - 1)·t`. The digon is a circular segment, i.e. a sector
/// minus an isosceles triangle, or the disc minus the opposite segment once
/// `θ > π`.
pub fn disc_segment_area(beta: f64, t: f64) -> f64 {
    let b = beta.abs();
    let k = (b * b - 1.0).sqrt();
    let ch = b / k;
    let theta = k * t;
    let segment = |phi: f64| {
        let base = if phi > 0.0 {
            (1.0 / (ch * (phi / 2.0).tan())).atan()
        } else {
            PI / 2.0
        };
        phi * (ch - 1.0) - (PI - phi - 2.0 * base)
    };
    if theta <= PI {
        segment(theta)
    } else {
        TAU * (ch - 1.0) - segment((TAU - theta).max(0.0))
    }
}

/// Digon area `|β|t - 2 arccos(m/√(n(n+2)))` for `β² ≤ 1` from the explicit
/// hyperbolic functions.
pub fn digon_area_acos(beta: f64, t: f64) -> f64 {
    let b = beta.abs();
    let (m, n) = if (b - 1.0).abs() < 1e-15 {
        (t, 0.5 * t * t)
    } else {
        let k = (1.0 - b * b).sqrt();
        ((k * t).sinh() / k, ((k * t).cosh() - 1.0) / (k * k))
    };
    b * t - 2.0 * (m / (n * (n + 2.0)).sqrt()).clamp(-1.0, 1.0).acos()
}

/// Plain bisection for an increasing function.
pub fn bisect_increasing(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Cut time for `0 < |β| ≤ 1` from the `arccos` area formula.
pub fn cut_time_oracle(beta: f64) -> f64 {
    let b = beta.abs();
    bisect_increasing(|t| digon_area_acos(b, t) - PI, PI / b, TAU / b)
}

pub fn wrapped_angle_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d).abs()
}
