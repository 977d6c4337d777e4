//! Segment phase law and its loop, Sagnac and open-loop consequences.
//!
//! A straight segment ΔL moving with velocity V shifts the matter-wave phase
//! by `(2π/vλ) V·ΔL` relative to the same segment at rest. Summing over the
//! segments of a path gives `(2π/vλ) ∫V·dl`, and the difference between two
//! paths is the interferometer output. All phases are unwrapped radians.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::geometry::{BeamPath, Segment};
use crate::kinematics::{enclosed_area_vector, DEFAULT_SAMPLES_PER_SEGMENT};
use crate::model::{
    InterferometerConfig, MotionField, ParticleWave, PathId, PhaseResult, SegmentContribution,
};
use crate::vector::Vec3;

/// Phase of one segment at rest and moving, and their difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SegmentPhase {
    /// rad
    pub rest_phase: f64,
    /// rad
    pub moving_phase: f64,
    /// rad
    pub increment: f64,
}

/// 2π · length / λ.
pub fn rest_phase(wave: &ParticleWave, length: f64) -> Result<f64> {
    if !length.is_finite() {
        return Err(Error::NonFinite("length"));
    }
    if length < 0.0 {
        return Err(Error::Negative {
            name: "length",
            value: length,
        });
    }
    Ok(2.0 * PI * length / wave.wavelength())
}

fn boost_factor(wave: &ParticleWave, speed: f64, cos_theta: f64) -> Result<f64> {
    if !speed.is_finite() || !cos_theta.is_finite() {
        return Err(Error::NonFinite("boost"));
    }
    if cos_theta.abs() > 1.0 {
        return Err(Error::CosineOutOfRange(cos_theta));
    }
    let factor = 1.0 + speed * cos_theta / wave.speed();
    if factor <= 0.0 {
        return Err(Error::BoostDomain(factor));
    }
    Ok(factor)
}

/// Galilean-boosted wavelength λ / (1 + V cosθ / v).
pub fn boosted_wavelength(wave: &ParticleWave, speed: f64, cos_theta: f64) -> Result<f64> {
    Ok(wave.wavelength() / boost_factor(wave, speed, cos_theta)?)
}

/// Phase across a moving segment, 2π (ΔL/λ)(1 + V cosθ / v).
pub fn moving_phase(wave: &ParticleWave, length: f64, speed: f64, cos_theta: f64) -> Result<f64> {
    let factor = boost_factor(wave, speed, cos_theta)?;
    Ok(rest_phase(wave, length)? * factor)
}

/// Phase increment of `segment` under `field`, with the velocity taken at
/// the segment midpoint (exact for rigid fields).
pub fn segment_phase_increment(
    wave: &ParticleWave,
    segment: &Segment,
    field: &MotionField,
) -> Result<SegmentPhase> {
    let velocity = field.velocity_at(segment.midpoint());
    let delta = segment.delta();
    let length = segment.length();
    // V cosθ, the velocity component along the propagation direction
    let along = velocity.dot(delta) / length;
    let speed = velocity.norm();
    let cos_theta = if speed > 0.0 {
        (along / speed).clamp(-1.0, 1.0)
    } else {
        0.0
    };
    let rest = rest_phase(wave, length)?;
    let moving = moving_phase(wave, length, speed, cos_theta)?;
    Ok(SegmentPhase {
        rest_phase: rest,
        moving_phase: moving,
        increment: wave.phase_per_circulation() * velocity.dot(delta),
    })
}

fn accumulate(
    wave: &ParticleWave,
    path: &BeamPath,
    field: &MotionField,
    id: PathId,
    sign: f64,
    out: &mut Vec<SegmentContribution>,
) -> Result<()> {
    for (index, segment) in path.segments().enumerate() {
        let phase = segment_phase_increment(wave, &segment, field)?;
        out.push(SegmentContribution {
            index,
            path: id,
            contribution: sign * phase.increment,
        });
    }
    Ok(())
}

fn finish(wave: &ParticleWave, per_segment: Vec<SegmentContribution>) -> PhaseResult {
    PhaseResult {
        total_phase: per_segment.iter().map(|c| c.contribution).sum(),
        per_segment,
        v_lambda: wave.v_lambda(),
        samples_per_segment: DEFAULT_SAMPLES_PER_SEGMENT,
    }
}

/// Phase accumulated along one path relative to the path at rest.
pub fn path_phase(
    wave: &ParticleWave,
    path: &BeamPath,
    field: &MotionField,
) -> Result<PhaseResult> {
    let mut per_segment = Vec::with_capacity(path.segment_count());
    accumulate(wave, path, field, PathId::I, 1.0, &mut per_segment)?;
    Ok(finish(wave, per_segment))
}

/// `phase(path_II) − phase(path_I)`; path I contributions enter negated.
pub fn two_path_difference(config: &InterferometerConfig) -> Result<PhaseResult> {
    let wave = config.wave();
    let field = config.motion();
    let mut per_segment =
        Vec::with_capacity(config.path_i().segment_count() + config.path_ii().segment_count());
    accumulate(
        wave,
        config.path_ii(),
        field,
        PathId::II,
        1.0,
        &mut per_segment,
    )?;
    accumulate(
        wave,
        config.path_i(),
        field,
        PathId::I,
        -1.0,
        &mut per_segment,
    )?;
    Ok(finish(wave, per_segment))
}

/// Sagnac phase from the enclosed area, (4π/vλ) Ω·A. Any translation in
/// `field` is ignored since it contributes nothing around a closed loop.
pub fn sagnac_area_phase(
    wave: &ParticleWave,
    loop_path: &BeamPath,
    field: &MotionField,
) -> Result<f64> {
    let area = enclosed_area_vector(loop_path)?;
    Ok(wave.sagnac_factor() * field.rotation.dot(area))
}

/// Open-loop translational phase (2π/vλ) V·D.
pub fn open_loop_phase(wave: &ParticleWave, opening: Vec3, velocity: Vec3) -> Result<f64> {
    if opening.norm() == 0.0 {
        return Err(Error::ZeroOpening);
    }
    Ok(wave.phase_per_circulation() * velocity.dot(opening))
}

/// Light-wave counter-propagating analogue (4π/(cλ)) V·ΔL, for comparison.
pub fn gse_light_phase(wavelength: f64, velocity: Vec3, delta_l: Vec3) -> Result<f64> {
    if !wavelength.is_finite() {
        return Err(Error::NonFinite("wavelength"));
    }
    if wavelength <= 0.0 {
        return Err(Error::NonPositive {
            name: "wavelength",
            value: wavelength,
        });
    }
    Ok(4.0 * PI / (SPEED_OF_LIGHT * wavelength) * velocity.dot(delta_l))
}
