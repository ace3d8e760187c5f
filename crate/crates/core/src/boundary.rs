//! Inverse problem: the shortest geodesics from `e` to a target element and
//! the sub-Riemannian distance.
//!
//! The search exploits the structure of the geodesic family. Write the target's
//! projection as `(T, X, Y)`. Any geodesic ending there has `n(t) = T - 1`,
//! which for fixed `β` pins `t` to one value (`β² ≤ 1`) or two values
//! (`β² > 1`, before and after the projected circle's far point). The
//! projection's polar angle then fixes `φ₀`, because conjugating by `SO(2)`
//! rotates the family. What remains is a scalar equation in `β`: the rotation
//! left over in `g⁻¹·γ(t)` about `w₀` must vanish. It is bracketed on a grid,
//! bisected, and the result is polished by damped Gauss–Newton on the full
//! 3×3 residual. Candidates beyond their cut time are discarded.
//!
//! Targets in `SO(2)` are conjugate points and are inverted directly from the
//! rotation angle.

use alloc::vec::Vec;

use crate::cut_locus::{closing_threshold, cut_time};
use crate::error::{Error, Result};
use crate::geodesic::{geodesic_matrix, mn_coefficients, GeodesicParams};
use crate::lie::{Mat3, SO21Element};
use crate::math::{abs, asin, atan2, log1p, sqrt, wrap_pi, wrap_two_pi, PI, TAU};
use crate::roots::bisect;

/// Solver settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    /// Largest accepted entrywise endpoint error.
    pub gate: f64,
    /// Uniform `β` samples over `[-beta_span, beta_span]`.
    pub beta_samples: usize,
    pub beta_span: f64,
    /// Geometric samples per sign beyond `beta_span`, when the target allows
    /// larger `|β|`.
    pub tail_samples: usize,
    /// Stop Gauss–Newton once the residual is below this.
    pub newton_tol: f64,
    /// Targets whose projection is this close to `w₀` go through the
    /// conjugate-point inversion.
    pub so2_band: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            gate: 1e-8,
            beta_samples: 400,
            beta_span: 4.0,
            tail_samples: 120,
            newton_tol: 1e-12,
            so2_band: 1e-7,
        }
    }
}

/// A geodesic from `e` reaching the target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathSolution {
    pub params: GeodesicParams,
    /// Arclength, the sub-Riemannian length of the arc.
    pub t: f64,
    /// `‖γ(t) - g‖∞`.
    pub endpoint_error: f64,
    /// Number of distinct minimisers found for this target.
    pub multiplicity_hint: usize,
}

impl PathSolution {
    pub fn phi0(&self) -> f64 {
        self.params.phi0()
    }
    pub fn beta(&self) -> f64 {
        self.params.beta()
    }
}

/// Minimising geodesics from `e` to `g`, shortest first. All returned
/// solutions share the minimal length within `1e-7`.
pub fn sr_log(g: &SO21Element, config: &SolverConfig) -> Result<Vec<PathSolution>> {
    if g.max_abs_diff(&SO21Element::IDENTITY) <= config.gate {
        return Ok(alloc::vec![PathSolution {
            params: GeodesicParams::new(0.0, 0.0),
            t: 0.0,
            endpoint_error: g.max_abs_diff(&SO21Element::IDENTITY),
            multiplicity_hint: 1,
        }]);
    }

    let mut candidates = Vec::new();
    let x = g.base_point();
    let planar = x.x * x.x + x.y * x.y;
    if sqrt(planar) <= config.so2_band {
        candidates.extend(conjugate_candidates(g));
    }
    if planar > 0.0 {
        candidates.extend(shooting_candidates(g, config));
    }

    let mut best_residual = f64::INFINITY;
    let mut accepted: Vec<PathSolution> = Vec::new();
    for c in candidates {
        best_residual = best_residual.min(c.endpoint_error);
        if c.endpoint_error > config.gate || c.t > cut_time(c.beta()).t1 + 1e-9 {
            continue;
        }
        let duplicate = accepted.iter().any(|a| {
            abs(a.t - c.t) < 1e-7
                && abs(a.beta() - c.beta()) < 1e-6
                && abs(wrap_pi(a.phi0() - c.phi0())) < 1e-6
        });
        if !duplicate {
            accepted.push(c);
        }
    }
    let Some(shortest) = accepted.iter().map(|c| c.t).reduce(f64::min) else {
        return Err(Error::SolverFailure { best_residual });
    };
    accepted.retain(|c| c.t <= shortest + 1e-7);
    accepted.sort_by(|a, b| a.t.total_cmp(&b.t).then(a.beta().total_cmp(&b.beta())));
    let count = accepted.len();
    accepted
        .iter_mut()
        .for_each(|c| c.multiplicity_hint = count);
    Ok(accepted)
}

/// Sub-Riemannian distance from `e` to `g`.
pub fn sr_distance(g: &SO21Element, config: &SolverConfig) -> Result<f64> {
    sr_log(g, config).map(|s| s[0].t)
}

/// Distance between two elements, by left invariance `d(g, h) = d(e, g⁻¹h)`.
pub fn sr_distance_between(g: &SO21Element, h: &SO21Element, config: &SolverConfig) -> Result<f64> {
    sr_distance(&(g.inverse() * *h), config)
}

fn solution(g: &SO21Element, params: GeodesicParams, t: f64) -> PathSolution {
    PathSolution {
        params,
        t,
        endpoint_error: geodesic_matrix(params, t).max_abs_diff(g),
        multiplicity_hint: 1,
    }
}

/// Conjugate points: `g = rotation(θ)` is reached at the closing time of the
/// circle with `2πβ/√(β²-1) ≡ θ (mod 2π)`, `|β| ≥ 3/√5`. Positive `β` covers
/// `θ ∈ (0, π]`, negative `β` covers `[π, 2π)`.
fn conjugate_candidates(g: &SO21Element) -> Vec<PathSolution> {
    let m = g.matrix();
    let theta = wrap_two_pi(atan2(m[(2, 1)], m[(1, 1)]));
    let folded = theta.min(TAU - theta);
    let mut out = Vec::new();
    if folded <= 0.0 {
        return out;
    }
    // total turning 2π + folded over the closing time
    let ratio = 1.0 + folded / TAU;
    let excess = sqrt((ratio - 1.0) * (ratio + 1.0));
    let b = (ratio / excess).max(closing_threshold());
    let t = TAU * excess;
    for sign in [1.0, -1.0] {
        let beta = sign * b;
        if (sign > 0.0 && theta <= PI + 1e-12) || (sign < 0.0 && theta >= PI - 1e-12) {
            out.push(solution(g, GeodesicParams::new(0.0, beta), t));
        }
    }
    out
}

/// Arclengths at which `n(t) = target_n` for the given `β`, in increasing order.
fn times_for(beta: f64, target_n: f64) -> ([f64; 2], usize) {
    let s = 1.0 - beta * beta;
    if s > 0.0 {
        let k = sqrt(s);
        let eps = s * target_n;
        // arccosh(1 + ε)/k, written to stay accurate as k → 0
        ([log1p(eps + sqrt(eps * (2.0 + eps))) / k, 0.0], 1)
    } else if s == 0.0 {
        ([sqrt(2.0 * target_n), 0.0], 1)
    } else {
        let k = sqrt(-s);
        let half = 0.5 * (-s) * target_n;
        if half > 1.0 + 1e-12 {
            return ([0.0; 2], 0);
        }
        let theta = 2.0 * asin(sqrt(half.min(1.0)));
        ([theta / k, (TAU - theta) / k], 2)
    }
}

/// Which of the `times_for` solutions a branch follows.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Branch {
    Near,
    Far,
}

struct Shooter<'a> {
    target: &'a SO21Element,
    target_inv: SO21Element,
    target_n: f64,
    polar: f64,
}

impl<'a> Shooter<'a> {
    fn new(target: &'a SO21Element) -> Self {
        let x = target.base_point();
        let planar = x.x * x.x + x.y * x.y;
        Shooter {
            target,
            target_inv: target.inverse(),
            // n = T - 1 = (X² + Y²)/(T + 1) without cancellation
            target_n: planar / (x.t + 1.0),
            polar: atan2(x.y, x.x),
        }
    }

    /// Geodesic parameters whose projection hits the target's projection.
    fn params(&self, beta: f64, branch: Branch) -> Option<(GeodesicParams, f64)> {
        let (times, count) = times_for(beta, self.target_n);
        let t = match (branch, count) {
            (_, 0) => return None,
            (Branch::Near, _) => times[0],
            (Branch::Far, 2) => times[1],
            (Branch::Far, _) => return None,
        };
        let c = mn_coefficients(beta, t);
        let phi0 = self.polar - atan2(-beta * c.n, c.m);
        Some((GeodesicParams::new(phi0, beta), t))
    }

    /// Residual rotation of `g⁻¹·γ` about `w₀`, in `(-π, π]`.
    fn fibre_error(&self, beta: f64, branch: Branch) -> Option<f64> {
        let (params, t) = self.params(beta, branch)?;
        let h = (self.target_inv * geodesic_matrix(params, t)).matrix().0;
        Some(atan2(h[2][1], h[1][1]))
    }
}

fn beta_grid(config: &SolverConfig, beta_limit: f64) -> Vec<f64> {
    let span = config.beta_span.min(beta_limit);
    let count = config.beta_samples.max(2);
    let mut grid: Vec<f64> = (0..count)
        .map(|i| -span + 2.0 * span * i as f64 / (count - 1) as f64)
        .collect();
    if beta_limit > config.beta_span {
        let top = beta_limit.min(1e4);
        let ratio = top / config.beta_span;
        for i in 1..=config.tail_samples {
            let b = config.beta_span * libm::pow(ratio, i as f64 / config.tail_samples as f64);
            grid.push(b);
            grid.push(-b);
        }
    }
    // where the two branches meet
    if beta_limit.is_finite() && beta_limit <= 1e4 {
        grid.push(beta_limit);
        grid.push(-beta_limit);
    }
    for b in [1.0, -1.0, closing_threshold(), -closing_threshold(), 0.0] {
        grid.push(b);
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

fn shooting_candidates(g: &SO21Element, config: &SolverConfig) -> Vec<PathSolution> {
    let shooter = Shooter::new(g);
    // far branch exists while β² - 1 ≤ 2/n
    let beta_limit = sqrt(1.0 + 2.0 / shooter.target_n);
    let grid = beta_grid(config, beta_limit);
    let mut out = Vec::new();
    for branch in [Branch::Near, Branch::Far] {
        let samples: Vec<(f64, Option<f64>)> = grid
            .iter()
            .map(|&b| (b, shooter.fibre_error(b, branch)))
            .collect();
        for w in samples.windows(2) {
            let ((b0, Some(e0)), (b1, Some(e1))) = (w[0], w[1]) else {
                continue;
            };
            let crosses = e0 == 0.0 || (e0.signum() != e1.signum() && abs(e0 - e1) < PI);
            if !crosses {
                continue;
            }
            let f = |b: f64| shooter.fibre_error(b, branch).unwrap_or(f64::NAN);
            let Some(root) = bisect(f, b0, b1, 0.0) else {
                continue;
            };
            if let Some((params, t)) = shooter.params(root.root, branch) {
                out.push(polish(shooter.target, solution(g, params, t), config));
            }
        }
    }
    // a target at the far point of a circle has its root exactly where the
    // branches meet, at the end of the domain, so no sign change shows it
    if beta_limit.is_finite() {
        for b in [beta_limit, -beta_limit] {
            let near_zero = shooter
                .fibre_error(b, Branch::Near)
                .is_some_and(|e| abs(e) < 1e-4);
            if let (true, Some((params, t))) = (near_zero, shooter.params(b, Branch::Near)) {
                out.push(polish(shooter.target, solution(g, params, t), config));
            }
        }
    }
    out
}

/// Damped Gauss–Newton on the nine endpoint residuals over `(φ₀, β, t)`.
/// Only ever improves the endpoint error.
fn polish(g: &SO21Element, start: PathSolution, config: &SolverConfig) -> PathSolution {
    let residual = |p: [f64; 3]| -> [f64; 9] {
        let m = geodesic_matrix(GeodesicParams::new(p[0], p[1]), p[2])
            .matrix()
            .to_row_major();
        let target = g.matrix().to_row_major();
        core::array::from_fn(|i| m[i] - target[i])
    };
    let norm2 = |r: &[f64; 9]| r.iter().map(|v| v * v).sum::<f64>();
    let mut best = start;
    let mut p = [start.phi0(), start.beta(), start.t];
    let mut r = residual(p);
    for _ in 0..20 {
        if best.endpoint_error <= config.newton_tol {
            break;
        }
        let mut jac = [[0.0; 3]; 9];
        for j in 0..3 {
            let h = 1e-7 * p[j].abs().max(1.0);
            let (mut hi, mut lo) = (p, p);
            hi[j] += h;
            lo[j] -= h;
            let (rh, rl) = (residual(hi), residual(lo));
            for i in 0..9 {
                jac[i][j] = (rh[i] - rl[i]) / (2.0 * h);
            }
        }
        let mut normal = Mat3::ZERO;
        let mut rhs = [0.0; 3];
        for i in 0..9 {
            for a in 0..3 {
                rhs[a] -= jac[i][a] * r[i];
                for b in 0..3 {
                    normal[(a, b)] += jac[i][a] * jac[i][b];
                }
            }
        }
        let Some(step) = solve3(&normal, rhs) else {
            break;
        };
        let current = norm2(&r);
        let mut scale = 1.0;
        let mut improved = false;
        while scale > 1e-4 {
            let trial = [
                p[0] + scale * step[0],
                p[1] + scale * step[1],
                p[2] + scale * step[2],
            ];
            let rt = residual(trial);
            if norm2(&rt) < current {
                p = trial;
                r = rt;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if !improved {
            break;
        }
        let candidate = solution(g, GeodesicParams::new(p[0], p[1]), p[2]);
        if candidate.endpoint_error < best.endpoint_error && candidate.t >= 0.0 {
            best = candidate;
        }
    }
    best
}

/// Solves a 3×3 system by Cramer's rule.
fn solve3(a: &Mat3, b: [f64; 3]) -> Option<[f64; 3]> {
    let det = a.det();
    if !(abs(det) > 1e-300) {
        return None;
    }
    let mut out = [0.0; 3];
    for (j, slot) in out.iter_mut().enumerate() {
        let mut m = *a;
        for i in 0..3 {
            m[(i, j)] = b[i];
        }
        *slot = m.det() / det;
    }
    Some(out)
}
