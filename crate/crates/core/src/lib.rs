//! Interferometric phase differences for matter-wave interferometers whose
//! segments move.
//!
//! A segment ΔL moving with velocity V contributes `(2π/vλ) V·ΔL` to the
//! phase difference, where `v` is the particle speed and `λ` the de Broglie
//! wavelength. Rotation gives the Sagnac phase `(4π/vλ) Ω·A`; uniform
//! translation cancels on closed loops and survives as `(2π/vλ) V·D` on
//! loops with an opening `D`.

pub mod constants;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod io;
pub mod kinematics;
pub mod model;
pub mod phase;
pub mod vector;

pub use error::{Error, Result};
pub use geometry::{BeamPath, Segment};
pub use model::{
    ConfigKind, InterferometerConfig, MotionField, ParticleWave, PathId, PhaseResult,
    SegmentContribution,
};
pub use vector::Vec3;
