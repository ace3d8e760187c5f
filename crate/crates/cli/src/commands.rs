//! The computations behind each subcommand, returning rows ready to write.

use so21::boundary::{sr_log, SolverConfig};
use so21::cut_locus::{cut_point_with_direction, cut_time, cut_time_profile, CONJUGATE_TOL};
use so21::geodesic::{geodesic_matrix, project_to_l2, GeodesicParams};
use so21::hyperbolic::to_semigeodesic;
use so21::lie::{exp_so21, is_in_so2};
use so21::{SO21Element, So21Vector};

use crate::output::{
    CutPointRow, CutTable, CutTableRow, DistanceRow, ExpRow, LogRow, TrajectoryRow, Violation,
};
use crate::CliError;

fn entries(g: &SO21Element) -> [f64; 9] {
    g.matrix().to_row_major()
}

fn finite(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Input(format!("{name} must be finite, got {v}")))
    }
}

/// `samples` rows at uniform `t` in `[0, t_max]`.
pub fn geodesic(
    phi0: f64,
    beta: f64,
    t_max: f64,
    samples: usize,
) -> Result<Vec<TrajectoryRow>, CliError> {
    let params = GeodesicParams::new(finite("phi0", phi0)?, finite("beta", beta)?);
    if finite("t-max", t_max)? <= 0.0 {
        return Err(CliError::Input(format!(
            "t-max must be positive, got {t_max}"
        )));
    }
    if samples < 2 {
        return Err(CliError::Input(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let step = t_max / (samples - 1) as f64;
    let rows = (0..samples)
        .map(|i| {
            let t = if i + 1 == samples {
                t_max
            } else {
                step * i as f64
            };
            let g = geodesic_matrix(params, t);
            let p = project_to_l2(&g);
            let c = to_semigeodesic(&p);
            let [m11, m12, m13, m21, m22, m23, m31, m32, m33] = entries(&g);
            TrajectoryRow {
                t,
                m11,
                m12,
                m13,
                m21,
                m22,
                m23,
                m31,
                m32,
                m33,
                px: p.t(),
                py: p.x(),
                pz: p.y(),
                u: c.u,
                v: c.v,
            }
        })
        .collect();
    Ok(rows)
}

pub fn cuttable(beta_min: f64, beta_max: f64, steps: usize) -> Result<CutTable, CliError> {
    let profile = cut_time_profile(beta_min, beta_max, steps)?;
    let rows = profile
        .rows
        .iter()
        .map(|r| CutTableRow {
            beta: r.beta,
            regime: r.regime.to_string(),
            t1: Some(r.t1).filter(|t| t.is_finite()),
            psi: r.psi,
            area_residual: r.area_residual,
        })
        .collect();
    let violations = profile
        .violations
        .iter()
        .map(|&(i, j)| Violation {
            i,
            j,
            beta_i: profile.rows[i].beta,
            beta_j: profile.rows[j].beta,
            t1_i: profile.rows[i].t1,
            t1_j: profile.rows[j].t1,
        })
        .collect();
    Ok(CutTable { rows, violations })
}

pub fn log(g: &SO21Element, config: &SolverConfig) -> Result<Vec<LogRow>, CliError> {
    let solutions = sr_log(g, config)?;
    Ok(solutions
        .iter()
        .map(|s| LogRow {
            phi0: s.phi0(),
            beta: s.beta(),
            t: s.t,
            endpoint_error: s.endpoint_error,
            multiplicity_hint: s.multiplicity_hint,
        })
        .collect())
}

pub fn dist(g: &SO21Element, config: &SolverConfig) -> Result<Vec<DistanceRow>, CliError> {
    let solutions = sr_log(g, config)?;
    let distance = solutions[0].t;
    Ok(solutions
        .iter()
        .map(|s| DistanceRow {
            distance,
            minimizers: solutions.len(),
            phi0: s.phi0(),
            beta: s.beta(),
            endpoint_error: s.endpoint_error,
        })
        .collect())
}

pub fn cutpoint(phi0: f64, beta: f64) -> Result<CutPointRow, CliError> {
    let params = GeodesicParams::new(finite("phi0", phi0)?, finite("beta", beta)?);
    let g = cut_point_with_direction(params)?;
    let r = cut_time(beta);
    let [m11, m12, m13, m21, m22, m23, m31, m32, m33] = entries(&g);
    Ok(CutPointRow {
        phi0: params.phi0(),
        beta,
        regime: r.regime.to_string(),
        t1: r.t1,
        m11,
        m12,
        m13,
        m21,
        m22,
        m23,
        m31,
        m32,
        m33,
        so2_angle: is_in_so2(&g, CONJUGATE_TOL),
    })
}

pub fn expmap(a: f64, b: f64, c: f64) -> Result<ExpRow, CliError> {
    let x = So21Vector::new(finite("a", a)?, finite("b", b)?, finite("c", c)?);
    let [m11, m12, m13, m21, m22, m23, m31, m32, m33] = entries(&exp_so21(x));
    Ok(ExpRow {
        a,
        b,
        c,
        m11,
        m12,
        m13,
        m21,
        m22,
        m23,
        m31,
        m32,
        m33,
    })
}
