//! Seeded randomized cross-checks between independent evaluation routes.
//!
//! Each property draws its instances from its own ChaCha stream derived from
//! the suite seed, so a given seed always reproduces the same report.
//! Instances the engine rejects as outside its domain (boost factor ≤ 0) are
//! counted as rejected rather than as violations.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::constants::{ELECTRON_MASS, HBAR, NEUTRON_MASS, PROTON_MASS};
use crate::error::{Error, Result};
use crate::geometry::BeamPath;
use crate::kinematics::{circulation, curl_fd, enclosed_area_vector, DEFAULT_FD_STEP};
use crate::model::{ConfigKind, InterferometerConfig, MotionField, ParticleWave};
use crate::phase::{
    moving_phase, open_loop_phase, path_phase, rest_phase, sagnac_area_phase,
    segment_phase_increment, two_path_difference,
};
use crate::vector::Vec3;

use super::figures::{build_config, Figure};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub samples: usize,
    pub rejected: usize,
    /// Largest observed value of the property's violation measure.
    pub max_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// JSON of the worst instance, present only when the property failed.
    pub offending: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub properties: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyOutcome> {
        self.properties.iter().find(|p| p.name == name)
    }
}

struct Tracker {
    name: &'static str,
    tolerance: f64,
    samples: usize,
    rejected: usize,
    max_violation: f64,
    worst: Option<serde_json::Value>,
    failed: bool,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            samples: 0,
            rejected: 0,
            max_violation: 0.0,
            worst: None,
            failed: false,
        }
    }

    fn record(&mut self, violation: f64, instance: impl FnOnce() -> serde_json::Value) {
        self.samples += 1;
        let bad = violation.is_nan() || violation > self.tolerance;
        if violation > self.max_violation || violation.is_nan() {
            self.max_violation = violation;
            if bad {
                self.worst = Some(instance());
            }
        }
        self.failed |= bad;
    }

    /// Folds one sample's outcome in. Boost-domain errors count as rejected
    /// inputs, any other error is a violation.
    fn check(&mut self, outcome: Result<f64>, instance: impl FnOnce() -> serde_json::Value) {
        match outcome {
            Ok(v) => self.record(v, instance),
            Err(Error::BoostDomain(_)) => {
                self.samples += 1;
                self.rejected += 1;
            }
            Err(e) => {
                let mut value = instance();
                value["error"] = json!(e.to_string());
                self.samples += 1;
                self.failed = true;
                self.max_violation = f64::INFINITY;
                self.worst = Some(value);
            }
        }
    }

    fn finish(self) -> PropertyOutcome {
        PropertyOutcome {
            name: self.name.to_string(),
            samples: self.samples,
            rejected: self.rejected,
            max_violation: self.max_violation,
            tolerance: self.tolerance,
            passed: !self.failed,
            offending: if self.failed {
                self.worst.map(|w| w.to_string())
            } else {
                None
            },
        }
    }
}

fn uniform_vec(rng: &mut ChaCha8Rng, scale: f64) -> Vec3 {
    Vec3::new(
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
    )
}

fn unit_vec(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = uniform_vec(rng, 1.0);
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Orthonormal pair spanning the plane with unit normal `n`.
fn plane_basis(n: Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() < 0.9 { Vec3::X } else { Vec3::Y };
    let e1 = n
        .cross(helper)
        .normalized()
        .expect("helper not parallel to normal");
    (e1, n.cross(e1))
}

/// Star-shaped polygon in a random plane, counter-clockwise about `normal`.
fn planar_polygon(rng: &mut ChaCha8Rng, normal: Vec3, scale: f64) -> BeamPath {
    let (e1, e2) = plane_basis(normal);
    let n = rng.random_range(3..=12usize);
    let centre = uniform_vec(rng, 0.3 * scale);
    let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..2.0 * PI)).collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup();
    let corners: Vec<Vec3> = angles
        .iter()
        .map(|&a| {
            let r = rng.random_range(0.2 * scale..=0.6 * scale);
            centre + e1 * (r * a.cos()) + e2 * (r * a.sin())
        })
        .collect();
    BeamPath::polygon(&corners).unwrap_or_else(|_| {
        BeamPath::polygon(&[centre, centre + e1 * scale, centre + e2 * scale]).expect("triangle")
    })
}

/// Arbitrary (generally non-planar, self-intersecting) closed polygon with
/// 3 to 12 vertices in the cube [−scale, scale]³.
fn random_polygon(rng: &mut ChaCha8Rng, scale: f64) -> BeamPath {
    let n = rng.random_range(3..=12usize);
    let corners: Vec<Vec3> = (0..n).map(|_| uniform_vec(rng, scale)).collect();
    BeamPath::polygon(&corners).expect("random corners are distinct")
}

fn random_open_path(rng: &mut ChaCha8Rng, scale: f64) -> BeamPath {
    let n = rng.random_range(2..=10usize);
    BeamPath::new((0..n).map(|_| uniform_vec(rng, scale)).collect())
        .expect("random vertices are distinct")
}

/// Splits a closed polygon at a random vertex into two arms sharing both
/// end points, so that the config's closed contour is the polygon itself.
fn closed_config_from(
    rng: &mut ChaCha8Rng,
    polygon: &BeamPath,
    wave: ParticleWave,
    motion: MotionField,
) -> InterferometerConfig {
    let vertices = polygon.vertices();
    let corners = vertices.len() - 1;
    let split = rng.random_range(1..corners);
    let path_ii = BeamPath::new(vertices[..=split].to_vec()).expect("arm II");
    let mut back = vertices[split..].to_vec();
    back.reverse();
    let path_i = BeamPath::new(back).expect("arm I");
    InterferometerConfig::new(ConfigKind::ClosedLoop, path_i, path_ii, wave, motion)
        .expect("arms share their end points")
}

fn random_wave(rng: &mut ChaCha8Rng) -> ParticleWave {
    wave_in_decades(rng, -9.0, -6.0)
}

/// Speed in [10, 1000) m/s and vλ log-uniform in [10^lo, 10^hi) m²/s.
fn wave_in_decades(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> ParticleWave {
    let speed = rng.random_range(10.0..1000.0);
    let v_lambda = 10f64.powf(rng.random_range(lo..hi));
    ParticleWave::from_wavelength(speed, v_lambda / speed).expect("positive wave parameters")
}

fn mass_wave(rng: &mut ChaCha8Rng) -> ParticleWave {
    let mass = match rng.random_range(0..4) {
        0 => NEUTRON_MASS,
        1 => PROTON_MASS,
        2 => ELECTRON_MASS,
        _ => 10f64.powf(rng.random_range(-30.0..-24.0)),
    };
    ParticleWave::from_mass(mass, rng.random_range(0.1..5000.0)).expect("positive mass and speed")
}

fn relative(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn stream(seed: u64, property: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(property);
    rng
}

/// Loop-integral phase against the area formula on planar polygons.
fn sagnac_agreement(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("sagnac_agreement", 1e-10);
    let mut rng = stream(seed, 1);
    for _ in 0..samples {
        let normal = unit_vec(&mut rng);
        let polygon = planar_polygon(&mut rng, normal, 1.0);
        let along = rng.random_range(0.2..=1.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let omega = normal * along + uniform_vec(&mut rng, 0.5);
        let pivot = uniform_vec(&mut rng, 1.0);
        let wave = random_wave(&mut rng);
        let motion = MotionField::rotation(omega, pivot);
        let config = closed_config_from(&mut rng, &polygon, wave, motion);
        let outcome = (|| {
            let loop_phase = two_path_difference(&config)?.total_phase;
            let area_phase = sagnac_area_phase(&wave, &config.closed_contour()?, &motion)?;
            Ok(relative(loop_phase, area_phase))
        })();
        t.check(outcome, || json!({ "config": config }));
    }
    t.finish()
}

/// Circulation against 2Ω·A at the kinematic level.
fn stokes_circulation(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("stokes_circulation", 1e-10);
    let mut rng = stream(seed, 2);
    for _ in 0..samples {
        let normal = unit_vec(&mut rng);
        let polygon = planar_polygon(&mut rng, normal, 1.0);
        let omega = normal * rng.random_range(0.2..=1.0) + uniform_vec(&mut rng, 0.5);
        let field = MotionField::new(
            uniform_vec(&mut rng, 1.0),
            omega,
            uniform_vec(&mut rng, 1.0),
        );
        let samples_per_segment = rng.random_range(1..=4usize);
        let outcome = (|| {
            let c = circulation(&field, &polygon, samples_per_segment)?;
            let a = 2.0 * omega.dot(enclosed_area_vector(&polygon)?);
            Ok(relative(c, a))
        })();
        t.check(outcome, || json!({ "field": field, "loop": polygon }));
    }
    t.finish()
}

/// Closed configs under uniform translation: |Δφ| / Σ|contributions|.
fn translational_null(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("translational_null", 1e-9);
    let mut rng = stream(seed, 3);
    for _ in 0..samples {
        let polygon = random_polygon(&mut rng, 1.0);
        let velocity = uniform_vec(&mut rng, 1.0);
        let velocity = if velocity.norm() > 1.0 {
            velocity / velocity.norm()
        } else {
            velocity
        };
        let wave = random_wave(&mut rng);
        let config =
            closed_config_from(&mut rng, &polygon, wave, MotionField::translation(velocity));
        let outcome = two_path_difference(&config).map(|r| {
            let scale = r.magnitude_sum();
            if scale == 0.0 {
                r.total_phase.abs()
            } else {
                r.total_phase.abs() / scale
            }
        });
        t.check(outcome, || json!({ "config": config }));
    }
    t.finish()
}

/// Central-difference curl of rigid fields against 2Ω.
fn curl_identity(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("curl_identity", 1e-6);
    let mut rng = stream(seed, 4);
    for _ in 0..samples {
        let omega = unit_vec(&mut rng) * rng.random_range(1e-5..=10.0);
        let field = MotionField::new(
            uniform_vec(&mut rng, 1.0),
            omega,
            uniform_vec(&mut rng, 1.0),
        );
        let r = uniform_vec(&mut rng, 1.0);
        let outcome = curl_fd(&field, r, DEFAULT_FD_STEP)
            .map(|c| (c.curl - omega * 2.0).norm() / (omega * 2.0).norm());
        t.check(outcome, || json!({ "field": field, "point": r }));
    }
    t.finish()
}

fn random_field(rng: &mut ChaCha8Rng) -> MotionField {
    MotionField::new(
        uniform_vec(rng, 1.0),
        uniform_vec(rng, 1.0),
        uniform_vec(rng, 1.0),
    )
}

/// Reversing every path negates every phase.
fn sign_antisymmetry(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("sign_antisymmetry", 1e-12);
    let mut rng = stream(seed, 5);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let field = random_field(&mut rng);
        let path = random_open_path(&mut rng, 1.0);
        let polygon = random_polygon(&mut rng, 1.0);
        let config = closed_config_from(&mut rng, &polygon, wave, field);
        let outcome = (|| {
            let fwd = path_phase(&wave, &path, &field)?;
            let back = path_phase(&wave, &path.reversed(), &field)?;
            let open = (fwd.total_phase + back.total_phase).abs()
                / fwd.magnitude_sum().max(f64::MIN_POSITIVE);
            let fwd = two_path_difference(&config)?;
            let back = two_path_difference(&config.reversed()?)?;
            let closed = (fwd.total_phase + back.total_phase).abs()
                / fwd.magnitude_sum().max(f64::MIN_POSITIVE);
            Ok(open.max(closed))
        })();
        t.check(
            outcome,
            || json!({ "wave": wave, "field": field, "path": path, "config": config }),
        );
    }
    t.finish()
}

/// Splitting a segment at an interior point leaves the path phase unchanged,
/// measured relative to Σ|contributions|.
fn split_additivity(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("split_additivity", 1e-12);
    let mut rng = stream(seed, 6);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let field = random_field(&mut rng);
        let path = random_open_path(&mut rng, 1.0);
        let index = rng.random_range(0..path.segment_count());
        let at = rng.random_range(0.05..0.95);
        let outcome = (|| {
            let whole = path_phase(&wave, &path, &field)?;
            let split = path_phase(&wave, &path.split_segment(index, at)?, &field)?;
            Ok((whole.total_phase - split.total_phase).abs()
                / whole.magnitude_sum().max(f64::MIN_POSITIVE))
        })();
        t.check(
            outcome,
            || json!({ "wave": wave, "field": field, "path": path, "split": [index, at] }),
        );
    }
    t.finish()
}

/// Closed-loop phase does not depend on the rotation pivot, in radians.
/// Instances are laboratory scale: loops within ±0.1 m, |Ω| ≤ 1e-3 rad/s,
/// vλ ≥ 1e-8 m²/s.
fn pivot_invariance(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("pivot_invariance_closed", 1e-9);
    let mut rng = stream(seed, 7);
    for _ in 0..samples {
        let wave = wave_in_decades(&mut rng, -8.0, -6.0);
        let polygon = random_polygon(&mut rng, 0.1);
        let field = MotionField::new(
            uniform_vec(&mut rng, 1e-3),
            uniform_vec(&mut rng, 1e-3),
            uniform_vec(&mut rng, 0.1),
        );
        let moved = field.with_pivot(uniform_vec(&mut rng, 0.1));
        let config = closed_config_from(&mut rng, &polygon, wave, field);
        let outcome = (|| {
            let a = two_path_difference(&config)?.total_phase;
            let b = two_path_difference(&config.with_motion(moved))?.total_phase;
            Ok((a - b).abs())
        })();
        t.check(
            outcome,
            || json!({ "config": config, "moved_pivot": moved.pivot }),
        );
    }
    t.finish()
}

/// φ(a·f + b·g) = a·φ(f) + b·φ(g) on open and closed configurations.
fn joint_linearity(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("joint_linearity", 1e-10);
    let mut rng = stream(seed, 8);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let f = random_field(&mut rng);
        let g = random_field(&mut rng);
        let a = rng.random_range(-2.0..2.0);
        let b = rng.random_range(-2.0..2.0);
        let polygon = random_polygon(&mut rng, 1.0);
        let closed = closed_config_from(&mut rng, &polygon, wave, f);
        let open = build_config(
            &Figure::Fig3bOpen {
                opening: uniform_vec(&mut rng, 1e-3),
                arm_length: rng.random_range(1e-3..0.5),
                velocity: Vec3::ZERO,
            },
            wave,
        );
        let outcome = (|| {
            let mut worst: f64 = 0.0;
            for config in [closed.clone(), open?] {
                let pf = two_path_difference(&config.with_motion(f))?;
                let pg = two_path_difference(&config.with_motion(g))?;
                let combined = two_path_difference(&config.with_motion(f.scaled(a) + g.scaled(b)))?;
                let expected = a * pf.total_phase + b * pg.total_phase;
                let scale = a.abs() * pf.magnitude_sum() + b.abs() * pg.magnitude_sum();
                worst = worst
                    .max((combined.total_phase - expected).abs() / scale.max(f64::MIN_POSITIVE));
            }
            Ok(worst)
        })();
        t.check(
            outcome,
            || json!({ "config": closed, "f": f, "g": g, "a": a, "b": b }),
        );
    }
    t.finish()
}

/// The open-loop phase under uniform motion is the same for every arm
/// length, and equals (2π/vλ) V·D. Measured relative to Σ|contributions|.
fn arm_length_invariance(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("arm_length_invariance", 1e-12);
    let mut rng = stream(seed, 9);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let opening = uniform_vec(&mut rng, 1e-3);
        let velocity = uniform_vec(&mut rng, 1e-2);
        let lengths = [rng.random_range(1e-4..1.0), rng.random_range(1e-4..1.0)];
        let outcome = (|| {
            let expected = open_loop_phase(&wave, opening, velocity)?;
            let mut worst: f64 = 0.0;
            for arm_length in lengths {
                let r = two_path_difference(&build_config(
                    &Figure::Fig3bOpen {
                        opening,
                        arm_length,
                        velocity,
                    },
                    wave,
                )?)?;
                let scale = r.magnitude_sum().max(expected.abs());
                worst = worst.max((r.total_phase - expected).abs() / scale.max(f64::MIN_POSITIVE));
            }
            Ok(worst)
        })();
        t.check(outcome, || json!({ "wave": wave, "opening": opening, "velocity": velocity, "arm_lengths": lengths }));
    }
    t.finish()
}

/// moving − rest equals the first-order increment.
fn consistency_chain(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("consistency_chain", 1e-12);
    let mut rng = stream(seed, 10);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let length = rng.random_range(1e-6..1.0);
        let speed = rng.random_range(0.0..0.5) * wave.speed();
        let cos_theta = rng.random_range(-1.0..=1.0);
        let outcome = (|| {
            let rest = rest_phase(&wave, length)?;
            let moving = moving_phase(&wave, length, speed, cos_theta)?;
            let increment = wave.phase_per_circulation() * speed * cos_theta * length;
            Ok((moving - rest - increment).abs() / rest.abs().max(moving.abs()))
        })();
        t.check(
            outcome,
            || json!({ "wave": wave, "length": length, "speed": speed, "cos_theta": cos_theta }),
        );
    }
    t.finish()
}

/// 4π/vλ = 2m/ħ and 2π/vλ = m/ħ whenever the mass is known.
fn factor_identity(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("factor_identity", 1e-12);
    let mut rng = stream(seed, 11);
    for _ in 0..samples {
        let wave = mass_wave(&mut rng);
        let m = wave.mass().expect("built from mass");
        let v = relative(wave.sagnac_factor(), 2.0 * m / HBAR)
            .max(relative(wave.phase_per_circulation(), m / HBAR));
        t.record(v, || json!({ "wave": wave }));
    }
    t.finish()
}

/// Configurations at rest produce exactly zero everywhere.
fn zero_motion(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("zero_motion", 0.0);
    let mut rng = stream(seed, 12);
    let rest = MotionField::at_rest();
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let polygon = random_polygon(&mut rng, 1.0);
        let closed = closed_config_from(&mut rng, &polygon, wave, rest);
        let opening = uniform_vec(&mut rng, 1e-3);
        let outcome = (|| {
            let open = build_config(
                &Figure::Fig3bOpen {
                    opening,
                    arm_length: 0.1,
                    velocity: Vec3::ZERO,
                },
                wave,
            )?;
            let mut worst: f64 = 0.0;
            for config in [&closed, &open] {
                let r = two_path_difference(config)?;
                worst = worst.max(r.total_phase.abs());
                for c in &r.per_segment {
                    worst = worst.max(c.contribution.abs());
                }
            }
            worst = worst.max(sagnac_area_phase(&wave, &polygon, &rest)?.abs());
            worst = worst.max(open_loop_phase(&wave, opening, Vec3::ZERO)?.abs());
            Ok(worst)
        })();
        t.check(outcome, || json!({ "config": closed, "opening": opening }));
    }
    t.finish()
}

/// Motion fast enough to stop or reverse the particles must be rejected.
fn boost_domain_rejection(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("boost_domain_rejection", 0.0);
    let mut rng = stream(seed, 13);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let path = random_open_path(&mut rng, 1.0);
        let segment = path.segments().next().expect("at least one segment");
        let factor = rng.random_range(1.0..10.0);
        let field = MotionField::translation(-segment.direction() * (wave.speed() * factor));
        match segment_phase_increment(&wave, &segment, &field) {
            Err(Error::BoostDomain(_)) => {
                t.samples += 1;
                t.rejected += 1;
            }
            other => t.record(1.0, || {
                json!({ "wave": wave, "segment": segment, "field": field, "result": format!("{other:?}") })
            }),
        }
    }
    t.finish()
}

/// Independent-beam and extracted-beam builders give identical phases.
fn beam_preparation_equivalence(seed: u64, samples: usize) -> PropertyOutcome {
    let mut t = Tracker::new("beam_preparation_equivalence", 0.0);
    let mut rng = stream(seed, 14);
    for _ in 0..samples {
        let wave = random_wave(&mut rng);
        let opening = uniform_vec(&mut rng, 1e-3);
        let velocity = uniform_vec(&mut rng, 1e-2);
        let arm_length = rng.random_range(1e-3..1.0);
        let outcome = (|| {
            let c = two_path_difference(&build_config(
                &Figure::Fig3cIndependent {
                    opening,
                    arm_length,
                    velocity,
                },
                wave,
            )?)?;
            let d = two_path_difference(&build_config(
                &Figure::Fig3dExtracted {
                    opening,
                    arm_length,
                    velocity,
                },
                wave,
            )?)?;
            Ok(if c == d {
                0.0
            } else {
                (c.total_phase - d.total_phase).abs().max(f64::MIN_POSITIVE)
            })
        })();
        t.check(outcome, || json!({ "wave": wave, "opening": opening, "velocity": velocity, "arm_length": arm_length }));
    }
    t.finish()
}

/// Runs every property with its default sample count.
pub fn verify_suite(seed: u64) -> VerifyReport {
    VerifyReport {
        seed,
        properties: vec![
            sagnac_agreement(seed, 200),
            stokes_circulation(seed, 200),
            translational_null(seed, 100),
            curl_identity(seed, 200),
            sign_antisymmetry(seed, 100),
            split_additivity(seed, 200),
            pivot_invariance(seed, 100),
            joint_linearity(seed, 100),
            arm_length_invariance(seed, 100),
            consistency_chain(seed, 500),
            factor_identity(seed, 100),
            zero_motion(seed, 50),
            boost_domain_rejection(seed, 50),
            beam_preparation_equivalence(seed, 50),
        ],
    }
}
