//! Velocity sweeps of the open-loop phase and the one-fringe threshold.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::InterferometerConfig;
use crate::phase::open_loop_phase;
use crate::vector::Vec3;

use super::fringe::fringe_reading;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    /// m/s
    pub velocity: f64,
    /// rad
    pub phase: f64,
    pub fringe_count: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Speed giving exactly one fringe, vλ / (D |cosθ|), m/s. Absent when
    /// the motion is perpendicular to the opening.
    pub v_full_fringe: Option<f64>,
    /// Adjacent rows whose |fringe_count| straddles 1, when the grid reaches it.
    pub full_fringe_bracket: Option<(usize, usize)>,
    /// Opening magnitude D, m.
    pub opening: f64,
    pub cos_theta: f64,
}

/// Least-squares line `phase = slope · V + intercept` through the rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// max |residual| / max |phase|
    pub max_relative_residual: f64,
}

impl SweepResult {
    pub fn linear_fit(&self) -> LinearFit {
        let n = self.rows.len() as f64;
        let mean_v = self.rows.iter().map(|r| r.velocity).sum::<f64>() / n;
        let mean_p = self.rows.iter().map(|r| r.phase).sum::<f64>() / n;
        let (sxy, sxx) = self.rows.iter().fold((0.0, 0.0), |(sxy, sxx), r| {
            let dv = r.velocity - mean_v;
            (sxy + dv * (r.phase - mean_p), sxx + dv * dv)
        });
        let slope = sxy / sxx;
        let intercept = mean_p - slope * mean_v;
        let scale = self.rows.iter().map(|r| r.phase.abs()).fold(0.0, f64::max);
        let worst = self
            .rows
            .iter()
            .map(|r| (r.phase - (slope * r.velocity + intercept)).abs())
            .fold(0.0, f64::max);
        LinearFit {
            slope,
            intercept,
            max_relative_residual: if scale > 0.0 { worst / scale } else { worst },
        }
    }
}

/// Evaluates the open-loop phase of `template` for speeds on an even grid
/// from `v_min` to `v_max`.
///
/// The motion direction is that of the template's translation; a template
/// at rest is swept along its opening vector.
pub fn sensitivity_sweep(
    template: &InterferometerConfig,
    v_min: f64,
    v_max: f64,
    steps: usize,
) -> Result<SweepResult> {
    if !v_min.is_finite() || !v_max.is_finite() {
        return Err(Error::NonFinite("sweep bounds"));
    }
    if v_min < 0.0 {
        return Err(Error::Negative {
            name: "v_min",
            value: v_min,
        });
    }
    if v_max <= v_min {
        return Err(Error::NonPositive {
            name: "v_max - v_min",
            value: v_max - v_min,
        });
    }
    if steps < 2 {
        return Err(Error::NonPositive {
            name: "steps - 1",
            value: steps as f64 - 1.0,
        });
    }
    let opening = template.opening_vector()?;
    let direction = template
        .motion()
        .translation
        .normalized()
        .or_else(|| opening.normalized())
        .unwrap_or(Vec3::X);
    let gap = opening.norm();
    let cos_theta = direction.dot(opening) / gap;
    let wave = template.wave();

    let rows = (0..steps)
        .map(|k| {
            let velocity = v_min + (v_max - v_min) * k as f64 / (steps - 1) as f64;
            let phase = open_loop_phase(wave, opening, direction * velocity)?;
            Ok(SweepRow {
                velocity,
                phase,
                fringe_count: fringe_reading(phase).fringe_count,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let v_full_fringe = (cos_theta != 0.0).then(|| wave.v_lambda() / (gap * cos_theta.abs()));
    let full_fringe_bracket = v_full_fringe.and_then(|_| {
        let hi = rows.iter().position(|r| r.fringe_count.abs() >= 1.0)?;
        match hi {
            0 if rows[0].fringe_count.abs() == 1.0 => Some((0, 0)),
            0 => None,
            hi => Some((hi - 1, hi)),
        }
    });

    Ok(SweepResult {
        rows,
        v_full_fringe,
        full_fringe_bracket,
        opening: gap,
        cos_theta,
    })
}
