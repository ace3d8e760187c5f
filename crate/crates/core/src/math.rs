//! Scalar helpers for `no_std` builds.
//!
//! Thin wrappers over `libm` plus the analytic coefficient functions shared by
//! the closed-form exponentials and the geodesic coefficients `m`, `n`.

pub use core::f64::consts::{FRAC_PI_2, PI, TAU};

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}
#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}
#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}
#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}
#[inline]
pub fn tanh(x: f64) -> f64 {
    libm::tanh(x)
}
#[inline]
pub fn asinh(x: f64) -> f64 {
    libm::asinh(x)
}
#[inline]
pub fn acosh(x: f64) -> f64 {
    libm::acosh(x)
}
#[inline]
pub fn atanh(x: f64) -> f64 {
    libm::atanh(x)
}
#[inline]
pub fn asin(x: f64) -> f64 {
    libm::asin(x)
}
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}
#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}
#[inline]
pub fn log1p(x: f64) -> f64 {
    libm::log1p(x)
}
#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// Sign with `sgn(0) = 0`.
#[inline]
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_two_pi(angle: f64) -> f64 {
    let r = angle - TAU * libm::floor(angle / TAU);
    // floor can leave r == TAU after rounding
    if !(0.0..TAU).contains(&r) {
        0.0
    } else {
        r
    }
}

/// Reduces an angle to `(-π, π]`.
pub fn wrap_pi(angle: f64) -> f64 {
    let r = wrap_two_pi(angle);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// `arccosh` that absorbs rounding just below 1.
///
/// Returns `None` when the argument falls below `1 - slack`.
pub fn acosh_clamped(x: f64, slack: f64) -> Option<f64> {
    if x >= 1.0 {
        Some(acosh(x))
    } else if x >= 1.0 - slack {
        Some(0.0)
    } else {
        None
    }
}

/// Below this magnitude of `q` the coefficient functions switch to their
/// power series.
pub const SERIES_THRESHOLD: f64 = 1e-8;

/// `Σ qᵏ/(2k+1)!`: `sinh(√q)/√q` for `q > 0`, `sin(√-q)/√-q` for `q < 0`.
pub fn shc(q: f64) -> f64 {
    if abs(q) < SERIES_THRESHOLD {
        1.0 + q / 6.0 * (1.0 + q / 20.0 * (1.0 + q / 42.0))
    } else if q > 0.0 {
        let a = sqrt(q);
        sinh(a) / a
    } else {
        let a = sqrt(-q);
        sin(a) / a
    }
}

/// `Σ qᵏ/(2k+2)!`: `(cosh √q - 1)/q` for `q > 0`, `(1 - cos √-q)/(-q)` for `q < 0`.
///
/// Evaluated through half angles, `2 sinh²(α/2)/α²`, so there is no
/// cancellation for moderate `q`.
pub fn chc(q: f64) -> f64 {
    if abs(q) < SERIES_THRESHOLD {
        0.5 * (1.0 + q / 12.0 * (1.0 + q / 30.0 * (1.0 + q / 56.0)))
    } else {
        let half = shc(q / 4.0);
        0.5 * half * half
    }
}

/// `Σ qᵏ/(2k)!`: `cosh √q` for `q ≥ 0`, `cos √-q` for `q < 0`.
pub fn chq(q: f64) -> f64 {
    if q >= 0.0 {
        cosh(sqrt(q))
    } else {
        cos(sqrt(-q))
    }
}
