//! Builders for the standard interferometer archetypes.
//!
//! Closed archetypes are `width × height` rectangles in the z = 0 plane with
//! corners A = origin, B = (w, 0), C = (w, h), D = (0, h). Path II runs
//! A → B → C and path I runs A → D → C, so the phase difference is the
//! counter-clockwise circulation around ABCD.
//!
//! Open archetypes use two straight parallel arms of length `arm_length`
//! whose start points are separated by the opening vector, each followed by
//! a 45° merge segment onto a common end point. For uniform motion the arm
//! length cancels and only the opening survives.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::BeamPath;
use crate::model::{ConfigKind, InterferometerConfig, MotionField, ParticleWave};
use crate::vector::Vec3;

/// Arm length used when a scene does not give one, m.
pub const DEFAULT_ARM_LENGTH: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Figure {
    /// Rotating rectangular loop, rotation about the rectangle centre.
    Fig2Rotation {
        width: f64,
        height: f64,
        omega: Vec3,
    },
    /// Closed Mach-Zehnder rectangle under uniform translation.
    Fig3aClosed {
        width: f64,
        height: f64,
        velocity: Vec3,
    },
    /// Loop with an opening between the two start points.
    Fig3bOpen {
        opening: Vec3,
        arm_length: f64,
        velocity: Vec3,
    },
    /// Open geometry fed by two independent beams.
    Fig3cIndependent {
        opening: Vec3,
        arm_length: f64,
        velocity: Vec3,
    },
    /// Open geometry fed by two beams extracted from one wide beam.
    Fig3dExtracted {
        opening: Vec3,
        arm_length: f64,
        velocity: Vec3,
    },
}

impl Figure {
    pub fn name(&self) -> &'static str {
        match self {
            Figure::Fig2Rotation { .. } => "Fig2Rotation",
            Figure::Fig3aClosed { .. } => "Fig3aClosed",
            Figure::Fig3bOpen { .. } => "Fig3bOpen",
            Figure::Fig3cIndependent { .. } => "Fig3cIndependent",
            Figure::Fig3dExtracted { .. } => "Fig3dExtracted",
        }
    }

    pub fn kind(&self) -> ConfigKind {
        match self {
            Figure::Fig2Rotation { .. } | Figure::Fig3aClosed { .. } => ConfigKind::ClosedLoop,
            Figure::Fig3bOpen { .. } => ConfigKind::OpenLoop,
            Figure::Fig3cIndependent { .. } => ConfigKind::IndependentBeams,
            Figure::Fig3dExtracted { .. } => ConfigKind::ExtractedBeams,
        }
    }
}

fn positive_dimension(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        Err(Error::NonFinite(name))
    } else if value <= 0.0 {
        Err(Error::NonPositive { name, value })
    } else {
        Ok(value)
    }
}

fn rectangle_paths(width: f64, height: f64) -> Result<(BeamPath, BeamPath)> {
    let w = positive_dimension("width", width)?;
    let h = positive_dimension("height", height)?;
    let a = Vec3::ZERO;
    let b = Vec3::new(w, 0.0, 0.0);
    let c = Vec3::new(w, h, 0.0);
    let d = Vec3::new(0.0, h, 0.0);
    Ok((BeamPath::new(vec![a, d, c])?, BeamPath::new(vec![a, b, c])?))
}

/// Unit vector perpendicular to `opening`, in the z = 0 plane when possible.
fn arm_direction(opening: Vec3) -> Vec3 {
    Vec3::Z.cross(opening).normalized().unwrap_or(Vec3::X)
}

fn open_paths(opening: Vec3, arm_length: f64) -> Result<(BeamPath, BeamPath)> {
    let arm_length = positive_dimension("arm length", arm_length)?;
    let gap = opening.norm();
    if gap == 0.0 {
        return Err(Error::ZeroOpening);
    }
    let u = arm_direction(opening);
    let start_i = opening * 0.5;
    let start_ii = -start_i;
    let common = u * (arm_length + 0.5 * gap);
    let path_i = BeamPath::new(vec![start_i, start_i + u * arm_length, common])?;
    let path_ii = BeamPath::new(vec![start_ii, start_ii + u * arm_length, common])?;
    Ok((path_i, path_ii))
}

/// Builds the configuration of `figure` for the particle wave `wave`.
pub fn build_config(figure: &Figure, wave: ParticleWave) -> Result<InterferometerConfig> {
    let kind = figure.kind();
    let (path_i, path_ii, motion) = match *figure {
        Figure::Fig2Rotation {
            width,
            height,
            omega,
        } => {
            let (i, ii) = rectangle_paths(width, height)?;
            let centre = Vec3::new(width / 2.0, height / 2.0, 0.0);
            (i, ii, MotionField::rotation(omega, centre))
        }
        Figure::Fig3aClosed {
            width,
            height,
            velocity,
        } => {
            let (i, ii) = rectangle_paths(width, height)?;
            (i, ii, MotionField::translation(velocity))
        }
        Figure::Fig3bOpen {
            opening,
            arm_length,
            velocity,
        }
        | Figure::Fig3cIndependent {
            opening,
            arm_length,
            velocity,
        }
        | Figure::Fig3dExtracted {
            opening,
            arm_length,
            velocity,
        } => {
            let (i, ii) = open_paths(opening, arm_length)?;
            (i, ii, MotionField::translation(velocity))
        }
    };
    InterferometerConfig::new(kind, path_i, path_ii, wave, motion)
}
