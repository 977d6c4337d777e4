use std::f64::consts::PI;

use serde::Serialize;

/// Ideal unit-contrast two-beam interference readout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FringeReading {
    /// rad
    pub phase: f64,
    /// (1 + cos phase) / 2, in [0, 1].
    pub normalized_intensity: f64,
    /// phase / 2π
    pub fringe_count: f64,
}

pub fn fringe_reading(phase: f64) -> FringeReading {
    FringeReading {
        phase,
        normalized_intensity: (1.0 + phase.cos()) / 2.0,
        fringe_count: phase / (2.0 * PI),
    }
}

/// Readings at `base_phase + offset` for `steps` offsets evenly spaced over
/// one full fringe [0, 2π].
pub fn fringe_scan(base_phase: f64, steps: usize) -> Vec<(f64, FringeReading)> {
    let steps = steps.max(2);
    (0..steps)
        .map(|k| {
            let offset = 2.0 * PI * k as f64 / (steps - 1) as f64;
            (offset, fringe_reading(base_phase + offset))
        })
        .collect()
}
