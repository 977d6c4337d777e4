//! Velocity fields, finite-difference curl, circulation and vector area.
//!
//! These are the geometric counterparts of the phase formulas: the loop
//! phase is `2π/vλ` times [`circulation`], and Stokes turns that into
//! `2 Ω · A` with `A` from [`enclosed_area_vector`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::BeamPath;
use crate::model::MotionField;
use crate::vector::Vec3;

/// Default central-difference step, m.
pub const DEFAULT_FD_STEP: f64 = 1e-6;

/// Default trapezoid sub-intervals per straight segment.
pub const DEFAULT_SAMPLES_PER_SEGMENT: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurlEstimate {
    /// 1/s
    pub curl: Vec3,
    /// m
    pub fd_step: f64,
}

pub fn velocity_at(field: &MotionField, r: Vec3) -> Vec3 {
    field.velocity_at(r)
}

/// ∇×V at `r` by central differences of step `fd_step`.
pub fn curl_fd(field: &MotionField, r: Vec3, fd_step: f64) -> Result<CurlEstimate> {
    if !fd_step.is_finite() {
        return Err(Error::NonFinite("finite-difference step"));
    }
    if fd_step <= 0.0 {
        return Err(Error::NonPositive {
            name: "finite-difference step",
            value: fd_step,
        });
    }
    // partial(axis) = ∂V/∂axis
    let partial = |axis: Vec3| {
        let forward = field.velocity_at(r + axis * fd_step);
        let backward = field.velocity_at(r - axis * fd_step);
        (forward - backward) / (2.0 * fd_step)
    };
    let dx = partial(Vec3::X);
    let dy = partial(Vec3::Y);
    let dz = partial(Vec3::Z);
    let curl = Vec3 {
        x: dy.z - dz.y,
        y: dz.x - dx.z,
        z: dx.y - dy.x,
    };
    Ok(CurlEstimate { curl, fd_step })
}

/// ∫V·dl along any path by the trapezoid rule with `samples_per_segment`
/// sub-intervals on each straight segment. Exact for rigid fields.
pub fn line_integral(field: &MotionField, path: &BeamPath, samples_per_segment: usize) -> f64 {
    let n = samples_per_segment.max(1);
    path.segments()
        .map(|seg| {
            let step = seg.delta() / n as f64;
            (0..n)
                .map(|k| {
                    let a = seg.point_at(k as f64 / n as f64);
                    let b = seg.point_at((k + 1) as f64 / n as f64);
                    0.5 * (field.velocity_at(a) + field.velocity_at(b)).dot(step)
                })
                .sum::<f64>()
        })
        .sum()
}

/// ∮V·dl around a closed loop, m²/s.
pub fn circulation(
    field: &MotionField,
    loop_path: &BeamPath,
    samples_per_segment: usize,
) -> Result<f64> {
    if !loop_path.is_closed() {
        return Err(Error::OpenPath);
    }
    if samples_per_segment == 0 {
        return Err(Error::NonPositive {
            name: "samples per segment",
            value: 0.0,
        });
    }
    Ok(line_integral(field, loop_path, samples_per_segment))
}

/// Signed vector area ½ Σ rᵢ × rᵢ₊₁ of a closed loop, m², oriented by the
/// right-hand rule.
///
/// For non-planar loops this is the standard vector area, the quantity that
/// Stokes pairs with a uniform curl. Self-intersecting loops get the
/// winding-weighted algebraic area, so a path retracing itself has zero
/// area however long it is.
pub fn enclosed_area_vector(loop_path: &BeamPath) -> Result<Vec3> {
    if !loop_path.is_closed() {
        return Err(Error::OpenPath);
    }
    let vertices = loop_path.vertices();
    let origin = vertices[0];
    let twice = vertices
        .windows(2)
        .map(|w| (w[0] - origin).cross(w[1] - origin))
        .fold(Vec3::ZERO, |acc, v| acc + v);
    Ok(twice * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square_ccw() -> BeamPath {
        BeamPath::polygon(&[Vec3::ZERO, Vec3::X, Vec3::new(1.0, 1.0, 0.0), Vec3::Y]).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn velocity_examples() {
        let f = MotionField::translation(Vec3::X);
        assert_eq!(velocity_at(&f, Vec3::new(-4.0, 2.0, 9.0)), Vec3::X);
        let f = MotionField::rotation(Vec3::Z, Vec3::ZERO);
        assert_eq!(velocity_at(&f, Vec3::X), Vec3::Y);
        let f = MotionField::rotation(Vec3::Z, Vec3::X);
        assert_eq!(velocity_at(&f, Vec3::X), Vec3::ZERO);
    }

    #[test]
    fn curl_examples() {
        let f = MotionField::rotation(Vec3::Z, Vec3::ZERO);
        let c = curl_fd(&f, Vec3::new(0.3, -0.2, 0.7), DEFAULT_FD_STEP).unwrap();
        assert!((c.curl - Vec3::new(0.0, 0.0, 2.0)).max_abs() < 2e-6);

        let f = MotionField::translation(Vec3::new(1.0, 2.0, 3.0));
        let c = curl_fd(&f, Vec3::new(5.0, 1.0, 0.0), DEFAULT_FD_STEP).unwrap();
        assert_eq!(c.curl, Vec3::ZERO);

        let earth = 7.292_115_9e-5;
        let f = MotionField::rotation(Vec3::new(0.0, 0.0, earth), Vec3::ZERO);
        let c = curl_fd(&f, Vec3::new(0.1, 0.2, 0.0), DEFAULT_FD_STEP).unwrap();
        assert!(rel(c.curl.z, 1.458_423_18e-4) < 1e-6);
        assert!(c.curl.x.abs() < 1e-12 && c.curl.y.abs() < 1e-12);
    }

    #[test]
    fn curl_rejects_bad_step() {
        let f = MotionField::at_rest();
        assert!(curl_fd(&f, Vec3::ZERO, 0.0).is_err());
        assert!(curl_fd(&f, Vec3::ZERO, -1e-6).is_err());
        assert!(curl_fd(&f, Vec3::ZERO, f64::NAN).is_err());
    }

    #[test]
    fn circulation_examples() {
        let rot = MotionField::rotation(Vec3::Z, Vec3::ZERO);
        let sq = unit_square_ccw();
        assert!(rel(circulation(&rot, &sq, 1).unwrap(), 2.0) < 1e-15);
        assert!(rel(circulation(&rot, &sq.reversed(), 1).unwrap(), -2.0) < 1e-15);

        let tr = MotionField::translation(Vec3::new(0.3, -1.0, 0.2));
        assert!(circulation(&tr, &sq, 1).unwrap().abs() < 1e-15);
    }

    #[test]
    fn circulation_independent_of_samples() {
        let f = MotionField::new(
            Vec3::new(0.1, 0.2, -0.3),
            Vec3::new(0.4, -0.5, 1.1),
            Vec3::new(0.2, 0.9, -0.1),
        );
        let sq = unit_square_ccw();
        let base = circulation(&f, &sq, 1).unwrap();
        for n in [2, 3, 7, 50] {
            assert!(rel(circulation(&f, &sq, n).unwrap(), base) < 1e-12);
        }
    }

    #[test]
    fn circulation_rejects_open_path() {
        let open = BeamPath::new(vec![Vec3::ZERO, Vec3::X]).unwrap();
        assert_eq!(
            circulation(&MotionField::at_rest(), &open, 1),
            Err(Error::OpenPath)
        );
        assert_eq!(enclosed_area_vector(&open), Err(Error::OpenPath));
    }

    #[test]
    fn area_examples() {
        let sq = unit_square_ccw();
        assert_eq!(enclosed_area_vector(&sq).unwrap(), Vec3::Z);
        assert_eq!(enclosed_area_vector(&sq.reversed()).unwrap(), -Vec3::Z);

        let back_and_forth = BeamPath::new(vec![Vec3::ZERO, Vec3::X, Vec3::ZERO]).unwrap();
        assert_eq!(enclosed_area_vector(&back_and_forth).unwrap(), Vec3::ZERO);
    }

    #[test]
    fn area_of_tilted_square() {
        // unit square in the x = 0 plane, normal +x
        let sq =
            BeamPath::polygon(&[Vec3::ZERO, Vec3::Y, Vec3::new(0.0, 1.0, 1.0), Vec3::Z]).unwrap();
        assert_eq!(enclosed_area_vector(&sq).unwrap(), Vec3::X);
    }

    #[test]
    fn figure_eight_area_cancels() {
        // two equal lobes traversed with opposite orientation
        let eight = BeamPath::polygon(&[
            Vec3::ZERO,
            Vec3::new(1.0, 1.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
        ])
        .unwrap();
        assert!(enclosed_area_vector(&eight).unwrap().max_abs() < 1e-15);
    }
}
