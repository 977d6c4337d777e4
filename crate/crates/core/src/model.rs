//! Domain types shared by every module: particle waves, motion fields,
//! interferometer configurations and phase results.

use std::f64::consts::PI;
use std::ops::Add;

use serde::Serialize;

use crate::constants::{ENDPOINT_TOLERANCE, HBAR, PLANCK};
use crate::error::{Error, Result};
use crate::geometry::BeamPath;
use crate::vector::Vec3;

/// Relative tolerance on λ = h/(m v) when both mass and wavelength are given.
pub const WAVELENGTH_CONSISTENCY: f64 = 1e-9;

/// Wave parameters of the interfering particles.
///
/// `v_lambda` is the product `speed_v * wavelength_lambda`, the only
/// combination entering the phase formulas. When a mass is known it equals
/// h / m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParticleWave {
    mass: Option<f64>,
    speed_v: f64,
    wavelength_lambda: f64,
    v_lambda: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        Err(Error::NonFinite(name))
    } else if value <= 0.0 {
        Err(Error::NonPositive { name, value })
    } else {
        Ok(value)
    }
}

impl ParticleWave {
    /// Builds a wave from a speed and at least one of mass or wavelength.
    ///
    /// A missing wavelength is computed from the de Broglie relation. When
    /// both are given they must agree to 1e-9 relative, and the stored
    /// wavelength is the one implied by the mass.
    pub fn new(mass: Option<f64>, speed_v: f64, wavelength: Option<f64>) -> Result<Self> {
        let speed_v = positive("speed", speed_v)?;
        let mass = mass.map(|m| positive("mass", m)).transpose()?;
        let wavelength = wavelength.map(|l| positive("wavelength", l)).transpose()?;

        let wavelength_lambda = match (mass, wavelength) {
            (None, None) => return Err(Error::Underdetermined),
            (None, Some(l)) => l,
            (Some(m), None) => PLANCK / (m * speed_v),
            (Some(m), Some(l)) => {
                let expected = PLANCK / (m * speed_v);
                let relative = (l - expected).abs() / expected;
                if relative > WAVELENGTH_CONSISTENCY {
                    return Err(Error::InconsistentWavelength {
                        given: l,
                        expected,
                        relative,
                    });
                }
                expected
            }
        };
        Ok(Self {
            mass,
            speed_v,
            wavelength_lambda,
            v_lambda: speed_v * wavelength_lambda,
        })
    }

    pub fn from_mass(mass: f64, speed_v: f64) -> Result<Self> {
        Self::new(Some(mass), speed_v, None)
    }

    pub fn from_wavelength(speed_v: f64, wavelength: f64) -> Result<Self> {
        Self::new(None, speed_v, Some(wavelength))
    }

    pub fn mass(&self) -> Option<f64> {
        self.mass
    }

    pub fn speed(&self) -> f64 {
        self.speed_v
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength_lambda
    }

    pub fn v_lambda(&self) -> f64 {
        self.v_lambda
    }

    /// 2π / (v λ): phase per unit of ∫V·dl, rad s/m².
    pub fn phase_per_circulation(&self) -> f64 {
        2.0 * PI / self.v_lambda
    }

    /// 4π / (v λ): phase per unit of Ω·A, rad s/m².
    pub fn sagnac_factor(&self) -> f64 {
        4.0 * PI / self.v_lambda
    }

    /// The mass form of [`Self::sagnac_factor`], 2m/ħ.
    pub fn sagnac_factor_from_mass(&self) -> Option<f64> {
        self.mass.map(|m| 2.0 * m / HBAR)
    }

    /// The mass form of [`Self::phase_per_circulation`], m/ħ = 2π m/h.
    pub fn phase_per_circulation_from_mass(&self) -> Option<f64> {
        self.mass.map(|m| m / HBAR)
    }
}

/// Rigid-motion velocity field `V(r) = translation + omega × (r − pivot)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct MotionField {
    pub translation: Vec3,
    pub rotation: Vec3,
    pub pivot: Vec3,
}

impl MotionField {
    pub fn new(translation: Vec3, rotation: Vec3, pivot: Vec3) -> Self {
        Self {
            translation,
            rotation,
            pivot,
        }
    }

    pub fn at_rest() -> Self {
        Self::default()
    }

    pub fn translation(velocity: Vec3) -> Self {
        Self::new(velocity, Vec3::ZERO, Vec3::ZERO)
    }

    pub fn rotation(omega: Vec3, pivot: Vec3) -> Self {
        Self::new(Vec3::ZERO, omega, pivot)
    }

    pub fn velocity_at(&self, r: Vec3) -> Vec3 {
        self.translation + self.rotation.cross(r - self.pivot)
    }

    pub fn is_at_rest(&self) -> bool {
        self.translation == Vec3::ZERO && self.rotation == Vec3::ZERO
    }

    /// Same translation and rotation about a different pivot. This is a
    /// different field unless the rotation is zero.
    pub fn with_pivot(&self, pivot: Vec3) -> Self {
        Self { pivot, ..*self }
    }

    /// The same field expressed about another pivot.
    pub fn rebased(&self, pivot: Vec3) -> Self {
        Self {
            translation: self.translation + self.rotation.cross(pivot - self.pivot),
            rotation: self.rotation,
            pivot,
        }
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            translation: self.translation * k,
            rotation: self.rotation * k,
            pivot: self.pivot,
        }
    }
}

/// Pointwise sum of two rigid fields, expressed about the left pivot.
impl Add for MotionField {
    type Output = MotionField;

    fn add(self, rhs: MotionField) -> MotionField {
        let rhs = rhs.rebased(self.pivot);
        MotionField {
            translation: self.translation + rhs.translation,
            rotation: self.rotation + rhs.rotation,
            pivot: self.pivot,
        }
    }
}

/// Interferometer archetype.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigKind {
    /// Both paths share start and end points (Sagnac loop, closed Mach-Zehnder).
    ClosedLoop,
    /// Two paths from separated start points to a common end point.
    OpenLoop,
    /// Open geometry realised with two independent sources.
    IndependentBeams,
    /// Open geometry realised by extracting two narrow beams from a wide one.
    ExtractedBeams,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 4] = [
        ConfigKind::ClosedLoop,
        ConfigKind::OpenLoop,
        ConfigKind::IndependentBeams,
        ConfigKind::ExtractedBeams,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::ClosedLoop => "ClosedLoop",
            ConfigKind::OpenLoop => "OpenLoop",
            ConfigKind::IndependentBeams => "IndependentBeams",
            ConfigKind::ExtractedBeams => "ExtractedBeams",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn is_open(self) -> bool {
        self != ConfigKind::ClosedLoop
    }
}

/// Which arm of a two-path interferometer a contribution came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PathId {
    I,
    II,
}

/// Two beam paths, the particle wave and the motion of the apparatus.
///
/// The measured phase difference is `phase(path_II) − phase(path_I)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterferometerConfig {
    kind: ConfigKind,
    path_i: BeamPath,
    path_ii: BeamPath,
    wave: ParticleWave,
    motion: MotionField,
}

fn coincide(a: Vec3, b: Vec3) -> bool {
    a.distance(b) <= ENDPOINT_TOLERANCE
}

impl InterferometerConfig {
    pub fn new(
        kind: ConfigKind,
        path_i: BeamPath,
        path_ii: BeamPath,
        wave: ParticleWave,
        motion: MotionField,
    ) -> Result<Self> {
        if !coincide(path_i.end(), path_ii.end()) {
            return Err(Error::InvalidConfig(format!(
                "paths must end at a common point, got {} and {}",
                path_i.end(),
                path_ii.end()
            )));
        }
        let starts_coincide = coincide(path_i.start(), path_ii.start());
        match kind {
            ConfigKind::ClosedLoop if !starts_coincide => {
                return Err(Error::InvalidConfig(format!(
                    "closed loop paths must share a start point, got {} and {}",
                    path_i.start(),
                    path_ii.start()
                )));
            }
            k if k.is_open() && path_i.start() == path_ii.start() => {
                return Err(Error::ZeroOpening);
            }
            _ => {}
        }
        Ok(Self {
            kind,
            path_i,
            path_ii,
            wave,
            motion,
        })
    }

    pub fn kind(&self) -> ConfigKind {
        self.kind
    }

    pub fn path_i(&self) -> &BeamPath {
        &self.path_i
    }

    pub fn path_ii(&self) -> &BeamPath {
        &self.path_ii
    }

    pub fn path(&self, id: PathId) -> &BeamPath {
        match id {
            PathId::I => &self.path_i,
            PathId::II => &self.path_ii,
        }
    }

    pub fn wave(&self) -> &ParticleWave {
        &self.wave
    }

    pub fn motion(&self) -> &MotionField {
        &self.motion
    }

    pub fn with_motion(&self, motion: MotionField) -> Self {
        Self {
            motion,
            ..self.clone()
        }
    }

    pub fn with_wave(&self, wave: ParticleWave) -> Self {
        Self {
            wave,
            ..self.clone()
        }
    }

    /// Opening vector D between the two start points, pointing from the
    /// start of path II to the start of path I.
    ///
    /// With this orientation a uniform velocity V produces
    /// `phase(II) − phase(I) = (2π/vλ) V·D`.
    pub fn opening_vector(&self) -> Result<Vec3> {
        if !self.kind.is_open() {
            return Err(Error::NoOpening);
        }
        let d = self.path_i.start() - self.path_ii.start();
        if d.norm() > 0.0 {
            Ok(d)
        } else {
            Err(Error::ZeroOpening)
        }
    }

    /// For a closed loop: path II followed by path I reversed, so that the
    /// circulation around it times 2π/vλ is the phase difference.
    pub fn closed_contour(&self) -> Result<BeamPath> {
        if self.kind.is_open() {
            return Err(Error::OpenPath);
        }
        let back = self.path_i.reversed();
        // Snap the shared end point so tolerance-level mismatches don't
        // break concatenation.
        let mut vertices = back.vertices().to_vec();
        vertices[0] = self.path_ii.end();
        let n = vertices.len();
        vertices[n - 1] = self.path_ii.start();
        self.path_ii.concat(&BeamPath::new(vertices)?)
    }

    /// Both paths with every orientation reversed. For open configurations
    /// the reversed paths no longer share an end point, so this only exists
    /// for closed loops where it swaps start and end.
    pub fn reversed(&self) -> Result<Self> {
        Self::new(
            self.kind,
            self.path_i.reversed(),
            self.path_ii.reversed(),
            self.wave,
            self.motion,
        )
    }
}

/// Signed contribution of one segment to a phase difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SegmentContribution {
    pub index: usize,
    pub path: PathId,
    /// rad; already carries the sign with which it enters `total_phase`.
    pub contribution: f64,
}

/// Phase difference with its per-segment breakdown.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseResult {
    /// rad, unwrapped.
    pub total_phase: f64,
    pub per_segment: Vec<SegmentContribution>,
    /// m²/s
    pub v_lambda: f64,
    pub samples_per_segment: usize,
}

impl PhaseResult {
    /// Σ|contribution|, the natural scale for cancellation tolerances.
    pub fn magnitude_sum(&self) -> f64 {
        self.per_segment.iter().map(|c| c.contribution.abs()).sum()
    }

    pub fn contribution_sum(&self) -> f64 {
        self.per_segment.iter().map(|c| c.contribution).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::NEUTRON_MASS;

    #[test]
    fn neutron_de_broglie_wavelength() {
        let w = ParticleWave::from_mass(NEUTRON_MASS, 2200.0).unwrap();
        // hand calculation: 6.62607015e-34 / (1.67492749804e-27 * 2200)
        let oracle = 6.62607015e-34 / 3.684840495688e-24;
        assert!((w.wavelength() - oracle).abs() / oracle < 1e-12);
        assert!((w.wavelength() - 1.798e-10).abs() / 1.798e-10 < 1e-3);
        assert!((w.v_lambda() * NEUTRON_MASS - PLANCK).abs() / PLANCK < 1e-12);
    }

    #[test]
    fn wavelength_only() {
        let w = ParticleWave::new(None, 1.0, Some(1e-8)).unwrap();
        assert_eq!(w.v_lambda(), 1e-8);
        assert_eq!(w.mass(), None);
    }

    #[test]
    fn unit_mass_and_speed() {
        let w = ParticleWave::new(Some(1.0), 1.0, Some(PLANCK)).unwrap();
        assert_eq!(w.v_lambda(), PLANCK);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            ParticleWave::new(None, 1.0, None),
            Err(Error::Underdetermined)
        );
        assert!(matches!(
            ParticleWave::new(None, 0.0, Some(1.0)),
            Err(Error::NonPositive { name: "speed", .. })
        ));
        assert!(matches!(
            ParticleWave::new(Some(-1.0), 1.0, None),
            Err(Error::NonPositive { name: "mass", .. })
        ));
        assert!(matches!(
            ParticleWave::new(None, f64::NAN, Some(1.0)),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            ParticleWave::new(Some(1.0), 1.0, Some(PLANCK * (1.0 + 1e-6))),
            Err(Error::InconsistentWavelength { .. })
        ));
        assert!(ParticleWave::new(Some(1.0), 1.0, Some(PLANCK * (1.0 + 1e-10))).is_ok());
    }

    #[test]
    fn factor_identities() {
        let w = ParticleWave::from_mass(NEUTRON_MASS, 2200.0).unwrap();
        let a = w.sagnac_factor();
        let b = w.sagnac_factor_from_mass().unwrap();
        assert!((a - b).abs() / b < 1e-12);
        let a = w.phase_per_circulation();
        let b = w.phase_per_circulation_from_mass().unwrap();
        assert!((a - b).abs() / b < 1e-12);
    }

    #[test]
    fn velocity_field_examples() {
        let f = MotionField::translation(Vec3::X);
        assert_eq!(f.velocity_at(Vec3::new(3.0, -7.0, 2.0)), Vec3::X);
        let f = MotionField::rotation(Vec3::Z, Vec3::ZERO);
        assert_eq!(f.velocity_at(Vec3::X), Vec3::Y);
        let f = MotionField::rotation(Vec3::Z, Vec3::X);
        assert_eq!(f.velocity_at(Vec3::X), Vec3::ZERO);
    }

    #[test]
    fn rebased_field_is_same_field() {
        let f = MotionField::new(Vec3::new(0.1, 0.2, 0.3), Vec3::new(-1.0, 0.5, 2.0), Vec3::Y);
        let g = f.rebased(Vec3::new(4.0, -2.0, 1.0));
        for r in [Vec3::ZERO, Vec3::X, Vec3::new(0.3, -0.7, 5.0)] {
            assert!((f.velocity_at(r) - g.velocity_at(r)).max_abs() < 1e-14);
        }
    }

    #[test]
    fn field_sum_is_pointwise() {
        let a = MotionField::new(Vec3::X, Vec3::Z, Vec3::Y);
        let b = MotionField::new(Vec3::Y * 0.5, Vec3::X * 2.0, Vec3::new(-1.0, 3.0, 0.5));
        let s = a + b;
        for r in [
            Vec3::ZERO,
            Vec3::new(1.0, 2.0, 3.0),
            Vec3::new(-0.4, 0.1, 9.0),
        ] {
            let want = a.velocity_at(r) + b.velocity_at(r);
            assert!((s.velocity_at(r) - want).max_abs() < 1e-13);
        }
    }

    fn wave() -> ParticleWave {
        ParticleWave::from_wavelength(1.0, 1e-8).unwrap()
    }

    fn path(points: &[[f64; 3]]) -> BeamPath {
        BeamPath::new(points.iter().map(|&p| Vec3::try_from(p).unwrap()).collect()).unwrap()
    }

    #[test]
    fn closed_loop_validation() {
        let i = path(&[[0.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]]);
        let ii = path(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0]]);
        let cfg = InterferometerConfig::new(
            ConfigKind::ClosedLoop,
            i.clone(),
            ii.clone(),
            wave(),
            MotionField::at_rest(),
        )
        .unwrap();
        assert_eq!(cfg.opening_vector(), Err(Error::NoOpening));
        let contour = cfg.closed_contour().unwrap();
        assert!(contour.is_closed());
        assert_eq!(contour.segment_count(), 4);

        // symmetric in path order
        assert!(InterferometerConfig::new(
            ConfigKind::ClosedLoop,
            ii,
            i,
            wave(),
            MotionField::at_rest()
        )
        .is_ok());

        let shifted = path(&[[0.0, 1e-6, 0.0], [1.0, 1.0, 0.0]]);
        let other = path(&[[0.0, 0.0, 0.0], [1.0, 1.0, 0.0]]);
        assert!(InterferometerConfig::new(
            ConfigKind::ClosedLoop,
            shifted.clone(),
            other.clone(),
            wave(),
            MotionField::at_rest()
        )
        .is_err());
        assert!(InterferometerConfig::new(
            ConfigKind::ClosedLoop,
            other,
            shifted,
            wave(),
            MotionField::at_rest()
        )
        .is_err());
    }

    #[test]
    fn opening_vector_points_from_second_start_to_first() {
        let i = path(&[[1e-4, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        let ii = path(&[[0.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        let cfg =
            InterferometerConfig::new(ConfigKind::OpenLoop, i, ii, wave(), MotionField::at_rest())
                .unwrap();
        assert_eq!(cfg.opening_vector().unwrap(), Vec3::new(1e-4, 0.0, 0.0));

        let i = path(&[[0.0, 1e-4, 0.0], [0.0, 1.0, 0.0]]);
        let ii = path(&[[0.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        let cfg = InterferometerConfig::new(
            ConfigKind::ExtractedBeams,
            i,
            ii,
            wave(),
            MotionField::at_rest(),
        )
        .unwrap();
        let d = cfg.opening_vector().unwrap();
        assert_eq!(d, Vec3::new(0.0, 1e-4, 0.0));
        assert_eq!(d.norm(), 1e-4);
    }

    #[test]
    fn open_kinds_reject_identical_starts() {
        let i = path(&[[0.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        let ii = path(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        for kind in [
            ConfigKind::OpenLoop,
            ConfigKind::IndependentBeams,
            ConfigKind::ExtractedBeams,
        ] {
            assert_eq!(
                InterferometerConfig::new(
                    kind,
                    i.clone(),
                    ii.clone(),
                    wave(),
                    MotionField::at_rest()
                ),
                Err(Error::ZeroOpening)
            );
        }
    }

    #[test]
    fn open_paths_must_share_end() {
        let i = path(&[[0.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        let ii = path(&[[1.0, 0.0, 0.0], [1.0, 1.0, 0.0]]);
        assert!(matches!(
            InterferometerConfig::new(ConfigKind::OpenLoop, i, ii, wave(), MotionField::at_rest()),
            Err(Error::InvalidConfig(_))
        ));
    }
}
