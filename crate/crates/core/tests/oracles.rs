//! Frozen values checked against independent brute-force evaluations.

use std::f64::consts::PI;

use matterwave::constants::{NEUTRON_MASS, PLANCK};
use matterwave::experiment::{build_config, Figure};
use matterwave::phase::{gse_light_phase, sagnac_area_phase, two_path_difference};
use matterwave::{BeamPath, MotionField, ParticleWave, Vec3};

/// Composite Simpson rule of V·dl along each straight segment, evaluating
/// the field from its defining formula rather than through the library.
fn brute_force_line_integral(path: &BeamPath, omega: Vec3, pivot: Vec3, translation: Vec3) -> f64 {
    const N: usize = 2000;
    let mut total = 0.0;
    for w in path.vertices().windows(2) {
        let (a, b) = (w[0], w[1]);
        let d = b - a;
        let f = |t: f64| {
            let r = a + d * t - pivot;
            let v = Vec3::new(
                translation.x + omega.y * r.z - omega.z * r.y,
                translation.y + omega.z * r.x - omega.x * r.z,
                translation.z + omega.x * r.y - omega.y * r.x,
            );
            v.x * d.x + v.y * d.y + v.z * d.z
        };
        let h = 1.0 / N as f64;
        let mut s = f(0.0) + f(1.0);
        for k in 1..N {
            s += f(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
        }
        total += s * h / 3.0;
    }
    total
}

fn typical_wave() -> ParticleWave {
    ParticleWave::from_wavelength(1.0, 1e-8).unwrap()
}

#[test]
fn open_loop_phase_depends_on_pivot() {
    // arbitrary-precision quadrature of the same contours
    const AT_ORIGIN: f64 = -1.259_778_654_089_507;
    const SHIFTED: f64 = -13.826_149_268_448_68;

    let cfg = build_config(
        &Figure::Fig3bOpen {
            opening: Vec3::new(1e-4, 0.0, 0.0),
            arm_length: 0.01,
            velocity: Vec3::ZERO,
        },
        typical_wave(),
    )
    .unwrap();
    let omega = Vec3::new(0.0, 0.0, 1e-3);
    let k = 2.0 * PI / 1e-8;
    for (pivot, frozen) in [
        (Vec3::ZERO, AT_ORIGIN),
        (Vec3::new(0.0, -0.2, 0.0), SHIFTED),
    ] {
        let rotating = cfg.with_motion(MotionField::rotation(omega, pivot));
        let got = two_path_difference(&rotating).unwrap().total_phase;
        let brute = k
            * (brute_force_line_integral(cfg.path_ii(), omega, pivot, Vec3::ZERO)
                - brute_force_line_integral(cfg.path_i(), omega, pivot, Vec3::ZERO));
        assert!(
            (brute - frozen).abs() < 1e-9,
            "brute {brute} vs frozen {frozen}"
        );
        assert!(
            (got - frozen).abs() < 1e-9,
            "engine {got} vs frozen {frozen}"
        );
    }
}

#[test]
fn pivot_shift_parallel_to_rotation_axis_cross_opening_is_invisible() {
    // shifting the pivot along D adds a velocity perpendicular to D
    let cfg = build_config(
        &Figure::Fig3bOpen {
            opening: Vec3::new(1e-4, 0.0, 0.0),
            arm_length: 0.01,
            velocity: Vec3::ZERO,
        },
        typical_wave(),
    )
    .unwrap();
    let omega = Vec3::new(0.0, 0.0, 1e-3);
    let a = two_path_difference(&cfg.with_motion(MotionField::rotation(omega, Vec3::ZERO)))
        .unwrap()
        .total_phase;
    let b = two_path_difference(
        &cfg.with_motion(MotionField::rotation(omega, Vec3::new(0.05, 0.0, 0.0))),
    )
    .unwrap()
    .total_phase;
    assert!((a - b).abs() < 1e-12);
}

#[test]
fn closed_loop_under_mixed_motion_matches_brute_force() {
    let loop_path = BeamPath::polygon(&[
        Vec3::new(0.0, 0.0, 0.0),
        Vec3::new(0.3, 0.05, 0.0),
        Vec3::new(0.25, 0.4, 0.1),
        Vec3::new(-0.1, 0.2, 0.05),
    ])
    .unwrap();
    let field = MotionField::new(
        Vec3::new(0.2, -0.1, 0.3),
        Vec3::new(0.1, -0.2, 0.7),
        Vec3::new(0.5, 0.5, -0.2),
    );
    let wave = typical_wave();
    let engine = matterwave::phase::path_phase(&wave, &loop_path, &field)
        .unwrap()
        .total_phase;
    let brute = 2.0 * PI / 1e-8
        * brute_force_line_integral(&loop_path, field.rotation, field.pivot, field.translation);
    assert!(
        (engine - brute).abs() / brute.abs() < 1e-10,
        "{engine} vs {brute}"
    );
    let area = sagnac_area_phase(&wave, &loop_path, &field).unwrap();
    assert!((engine - area).abs() / area.abs() < 1e-10);
}

#[test]
fn neutron_wavelength_hand_calculation() {
    let wave = ParticleWave::from_mass(NEUTRON_MASS, 2200.0).unwrap();
    let hand = 6.626_070_15e-34 / (1.674_927_498_04e-27 * 2200.0);
    assert_eq!(PLANCK, 6.626_070_15e-34);
    assert!((wave.wavelength() - hand).abs() / hand < 1e-15);
    assert!((wave.wavelength() - 1.798e-10).abs() / 1.798e-10 < 1e-3);
}

#[test]
fn earth_rate_sagnac_value() {
    let sq = BeamPath::polygon(&[
        Vec3::ZERO,
        Vec3::new(0.1, 0.0, 0.0),
        Vec3::new(0.1, 0.1, 0.0),
        Vec3::new(0.0, 0.1, 0.0),
    ])
    .unwrap();
    let field = MotionField::rotation(Vec3::new(0.0, 0.0, 7.292_115_9e-5), Vec3::ZERO);
    let got = sagnac_area_phase(&typical_wave(), &sq, &field).unwrap();
    // 4π / 1e-8 * 7.2921159e-5 * 0.01
    assert!((got - 916.354_309_622_613).abs() < 1e-9);
    let brute =
        2.0 * PI / 1e-8 * brute_force_line_integral(&sq, field.rotation, Vec3::ZERO, Vec3::ZERO);
    assert!((got - brute).abs() / got < 1e-10);
}

#[test]
fn light_comparison_value() {
    let got = gse_light_phase(1.55e-6, Vec3::X, Vec3::X).unwrap();
    assert!((got - 0.027_043_161_573_570_087).abs() < 1e-15);
}
