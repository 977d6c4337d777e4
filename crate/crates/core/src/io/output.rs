//! CSV and JSON rendering of results.
//!
//! CSV uses a header row, `.` as decimal separator and LF line endings.
//! Floats are written in shortest round-trip form so that re-parsing gives
//! back the exact values.

use serde::Serialize;
use serde_json::{json, Value};

use crate::experiment::{FringeReading, SweepResult, VerifyReport};
use crate::model::{PathId, PhaseResult};
use crate::vector::Vec3;

use super::scene::OutputFormat;

/// Loop-integral and area-formula Sagnac phases side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SagnacComparison {
    pub loop_integral_rad: f64,
    pub area_formula_rad: f64,
    pub relative_difference: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TranslationResult {
    pub phase_rad: f64,
    pub fringe_count: f64,
    pub opening_m: Vec3,
    pub velocity_mps: Vec3,
    pub v_lambda_m2ps: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FringeScan {
    pub base_phase_rad: f64,
    pub readings: Vec<(f64, FringeReading)>,
}

/// Anything the CLI can print.
#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Phase(&'a PhaseResult),
    Sweep(&'a SweepResult),
    Verify(&'a VerifyReport),
    Sagnac(&'a SagnacComparison),
    Translation(&'a TranslationResult),
    Fringes(&'a FringeScan),
}

/// Shortest decimal representation that parses back to exactly `v`.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-4..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn path_name(id: PathId) -> &'static str {
    match id {
        PathId::I => "I",
        PathId::II => "II",
    }
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn to_csv(report: Report<'_>, breakdown: bool) -> String {
    let f = format_float;
    match report {
        Report::Phase(r) => {
            let segments = r.per_segment.iter().filter(|_| breakdown).map(|c| {
                vec![
                    path_name(c.path).to_string(),
                    c.index.to_string(),
                    f(c.contribution),
                ]
            });
            let total = std::iter::once(vec!["total".to_string(), String::new(), f(r.total_phase)]);
            csv(
                &["path", "segment_index", "contribution_rad"],
                segments.chain(total),
            )
        }
        Report::Sweep(s) => csv(
            &["V_mps", "phase_rad", "fringe_count"],
            s.rows
                .iter()
                .map(|r| vec![f(r.velocity), f(r.phase), f(r.fringe_count)]),
        ),
        Report::Verify(v) => csv(
            &[
                "property",
                "samples",
                "rejected",
                "max_violation",
                "tolerance",
                "passed",
            ],
            v.properties.iter().map(|p| {
                vec![
                    p.name.clone(),
                    p.samples.to_string(),
                    p.rejected.to_string(),
                    f(p.max_violation),
                    f(p.tolerance),
                    p.passed.to_string(),
                ]
            }),
        ),
        Report::Sagnac(s) => csv(
            &[
                "loop_integral_rad",
                "area_formula_rad",
                "relative_difference",
            ],
            [vec![
                f(s.loop_integral_rad),
                f(s.area_formula_rad),
                f(s.relative_difference),
            ]],
        ),
        Report::Translation(t) => csv(
            &[
                "phase_rad",
                "fringe_count",
                "opening_m",
                "V_mps",
                "v_lambda_m2ps",
            ],
            [vec![
                f(t.phase_rad),
                f(t.fringe_count),
                f(t.opening_m.norm()),
                f(t.velocity_mps.norm()),
                f(t.v_lambda_m2ps),
            ]],
        ),
        Report::Fringes(s) => csv(
            &[
                "offset_rad",
                "phase_rad",
                "normalized_intensity",
                "fringe_count",
            ],
            s.readings.iter().map(|(offset, r)| {
                vec![
                    f(*offset),
                    f(r.phase),
                    f(r.normalized_intensity),
                    f(r.fringe_count),
                ]
            }),
        ),
    }
}

fn to_json(report: Report<'_>, breakdown: bool) -> Value {
    match report {
        Report::Phase(r) => {
            let mut v = serde_json::to_value(r).expect("phase result serializes");
            if !breakdown {
                v.as_object_mut().expect("object").remove("per_segment");
            }
            v
        }
        Report::Sweep(s) => json!({
            "rows": s.rows.iter().map(|r| json!({
                "V_mps": r.velocity,
                "phase_rad": r.phase,
                "fringe_count": r.fringe_count,
            })).collect::<Vec<_>>(),
            "v_full_fringe_mps": s.v_full_fringe,
            "full_fringe_bracket": s.full_fringe_bracket,
            "opening_m": s.opening,
            "cos_theta": s.cos_theta,
        }),
        Report::Verify(v) => json!({
            "seed": v.seed,
            "passed": v.passed(),
            "properties": v.properties,
        }),
        Report::Sagnac(s) => serde_json::to_value(s).expect("serializes"),
        Report::Translation(t) => serde_json::to_value(t).expect("serializes"),
        Report::Fringes(s) => json!({
            "base_phase_rad": s.base_phase_rad,
            "readings": s.readings.iter().map(|(offset, r)| json!({
                "offset_rad": offset,
                "phase_rad": r.phase,
                "normalized_intensity": r.normalized_intensity,
                "fringe_count": r.fringe_count,
            })).collect::<Vec<_>>(),
        }),
    }
}

/// Renders `report` in `format`. `breakdown` adds per-segment detail to
/// phase results and is ignored elsewhere.
pub fn emit_results(report: Report<'_>, format: OutputFormat, breakdown: bool) -> Vec<u8> {
    match format {
        OutputFormat::Csv => to_csv(report, breakdown).into_bytes(),
        OutputFormat::Json => {
            let mut s =
                serde_json::to_string_pretty(&to_json(report, breakdown)).expect("json serializes");
            s.push('\n');
            s.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{sensitivity_sweep, SweepRow};
    use crate::model::SegmentContribution;
    use std::f64::consts::PI;

    fn sweep(rows: &[(f64, f64)]) -> SweepResult {
        SweepResult {
            rows: rows
                .iter()
                .map(|&(velocity, phase)| SweepRow {
                    velocity,
                    phase,
                    fringe_count: phase / (2.0 * PI),
                })
                .collect(),
            v_full_fringe: Some(1e-4),
            full_fringe_bracket: Some((1, 2)),
            opening: 1e-4,
            cos_theta: 1.0,
        }
    }

    #[test]
    fn sweep_csv_structure() {
        let s = sweep(&[(0.0, 0.0), (5e-5, PI), (1e-4, 2.0 * PI)]);
        let text =
            String::from_utf8(emit_results(Report::Sweep(&s), OutputFormat::Csv, false)).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "V_mps,phase_rad,fringe_count");
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
        let last: Vec<f64> = lines[3].split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(last, vec![1e-4, 2.0 * PI, 1.0]);
    }

    #[test]
    fn phase_json_breakdown() {
        let r = PhaseResult {
            total_phase: 1.5,
            per_segment: vec![
                SegmentContribution {
                    index: 0,
                    path: PathId::II,
                    contribution: 2.0,
                },
                SegmentContribution {
                    index: 0,
                    path: PathId::I,
                    contribution: -0.5,
                },
            ],
            v_lambda: 1e-8,
            samples_per_segment: 1,
        };
        let v: Value =
            serde_json::from_slice(&emit_results(Report::Phase(&r), OutputFormat::Json, true))
                .unwrap();
        assert_eq!(v["per_segment"].as_array().unwrap().len(), 2);
        assert_eq!(v["per_segment"][1]["path"], "I");
        let v: Value =
            serde_json::from_slice(&emit_results(Report::Phase(&r), OutputFormat::Json, false))
                .unwrap();
        assert!(v.get("per_segment").is_none());
        assert_eq!(v["total_phase"], 1.5);

        let text =
            String::from_utf8(emit_results(Report::Phase(&r), OutputFormat::Csv, true)).unwrap();
        assert_eq!(
            text,
            "path,segment_index,contribution_rad\nII,0,2\nI,0,-0.5\ntotal,,1.5\n"
        );
    }

    #[test]
    fn full_fringe_row() {
        let s = sweep(&[(1e-4, 2.0 * PI)]);
        let v: Value =
            serde_json::from_slice(&emit_results(Report::Sweep(&s), OutputFormat::Json, false))
                .unwrap();
        assert_eq!(v["rows"][0]["fringe_count"], 1.0);
    }

    #[test]
    fn float_format_round_trips() {
        for v in [
            0.0,
            -0.0,
            1.0,
            1e-8,
            std::f64::consts::TAU,
            1.2566370614359172e9,
            5e-324,
            1e300,
            -3.3e-5,
            123456.789,
        ] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(1e-8), "1e-8");
        assert_eq!(format_float(0.5), "0.5");
    }

    #[test]
    fn real_sweep_emits() {
        let cfg = crate::experiment::build_config(
            &crate::experiment::Figure::Fig3bOpen {
                opening: Vec3::new(1e-4, 0.0, 0.0),
                arm_length: 0.01,
                velocity: Vec3::X,
            },
            crate::ParticleWave::from_wavelength(1.0, 1e-8).unwrap(),
        )
        .unwrap();
        let s = sensitivity_sweep(&cfg, 0.0, 2e-4, 3).unwrap();
        let text =
            String::from_utf8(emit_results(Report::Sweep(&s), OutputFormat::Csv, false)).unwrap();
        assert_eq!(text.lines().count(), 4);
    }
}
