//! Scene documents: JSON with unit-suffixed keys.
//!
//! ```json
//! {
//!   "particle": { "speed_mps": 1.0, "wavelength_m": 1e-8 },
//!   "motion": { "translation_mps": [1e-4, 0.0, 0.0] },
//!   "geometry": { "kind": "Fig3bOpen", "opening_m": [1e-4, 0.0, 0.0] },
//!   "output": { "format": "csv", "breakdown": false }
//! }
//! ```
//!
//! `geometry` names a figure archetype with its dimensions; alternatively
//! `explicit` supplies the two vertex lists `path_I` and `path_II` directly.
//! Exactly one of the two must be present. Unknown keys are rejected.

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::error::Error;
use crate::experiment::figures::{build_config, Figure, DEFAULT_ARM_LENGTH};
use crate::geometry::BeamPath;
use crate::model::{ConfigKind, InterferometerConfig, MotionField, ParticleWave};
use crate::vector::Vec3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing required field `{0}`")]
    Missing(String),
    #[error("field `{path}` must be {expected}")]
    Type {
        path: String,
        expected: &'static str,
    },
    #[error("unknown field `{0}`")]
    UnknownKey(String),
    #[error("field `{found}` has the wrong unit suffix, expected `{expected}`")]
    UnitSuffix { found: String, expected: String },
    #[error("unknown geometry kind `{kind}` at `{path}`")]
    UnknownKind { path: String, kind: String },
    #[error("exactly one of `geometry` or `explicit` is required")]
    GeometryChoice,
    #[error("invalid scene at `{path}`: {source}")]
    Invalid {
        path: String,
        #[source]
        source: Error,
    },
}

type SceneResult<T> = std::result::Result<T, SceneError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FigureKind {
    Fig2Rotation,
    Fig3aClosed,
    Fig3bOpen,
    Fig3cIndependent,
    Fig3dExtracted,
}

impl FigureKind {
    const ALL: [FigureKind; 5] = [
        FigureKind::Fig2Rotation,
        FigureKind::Fig3aClosed,
        FigureKind::Fig3bOpen,
        FigureKind::Fig3cIndependent,
        FigureKind::Fig3dExtracted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::Fig2Rotation => "Fig2Rotation",
            FigureKind::Fig3aClosed => "Fig3aClosed",
            FigureKind::Fig3bOpen => "Fig3bOpen",
            FigureKind::Fig3cIndependent => "Fig3cIndependent",
            FigureKind::Fig3dExtracted => "Fig3dExtracted",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn is_rectangle(self) -> bool {
        matches!(self, FigureKind::Fig2Rotation | FigureKind::Fig3aClosed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParticleSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_kg: Option<f64>,
    pub speed_mps: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wavelength_m: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct MotionSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translation_mps: Option<Vec3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_radps: Option<Vec3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivot_m: Option<Vec3>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometrySpec {
    pub kind: FigureKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opening_m: Option<Vec3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arm_length_m: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplicitSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<ConfigKind>,
    #[serde(rename = "path_I")]
    pub path_i: Vec<Vec3>,
    #[serde(rename = "path_II")]
    pub path_ii: Vec<Vec3>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct OutputSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<OutputFormat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<bool>,
}

/// A validated scene. Optional fields keep their presence so serializing
/// reproduces the parsed document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SceneDocument {
    pub particle: ParticleSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub motion: Option<MotionSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometrySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSpec>,
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn as_object<'a>(value: &'a Value, path: &str) -> SceneResult<&'a Map<String, Value>> {
    value.as_object().ok_or_else(|| SceneError::Type {
        path: path.to_string(),
        expected: "an object",
    })
}

/// Rejects keys outside `known`. A key sharing a known key's name stem but
/// with a different unit suffix is reported as a unit mismatch.
fn check_keys(map: &Map<String, Value>, path: &str, known: &[&str]) -> SceneResult<()> {
    for key in map.keys() {
        if known.contains(&key.as_str()) {
            continue;
        }
        let suffixed = known.iter().find(|k| {
            let stem = k.rsplit_once('_').map_or(**k, |(stem, _)| stem);
            k.contains('_') && (key == stem || key.starts_with(&format!("{stem}_")))
        });
        return Err(match suffixed {
            Some(expected) => SceneError::UnitSuffix {
                found: join(path, key),
                expected: join(path, expected),
            },
            None => SceneError::UnknownKey(join(path, key)),
        });
    }
    Ok(())
}

fn number(value: &Value, path: String) -> SceneResult<f64> {
    value
        .as_f64()
        .filter(|v| v.is_finite())
        .ok_or(SceneError::Type {
            path,
            expected: "a finite number",
        })
}

fn opt_number(map: &Map<String, Value>, path: &str, key: &str) -> SceneResult<Option<f64>> {
    map.get(key).map(|v| number(v, join(path, key))).transpose()
}

fn req_number(map: &Map<String, Value>, path: &str, key: &str) -> SceneResult<f64> {
    opt_number(map, path, key)?.ok_or_else(|| SceneError::Missing(join(path, key)))
}

fn vector(value: &Value, path: String) -> SceneResult<Vec3> {
    let items = value
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or(SceneError::Type {
            path: path.clone(),
            expected: "an array of 3 numbers",
        })?;
    let mut xyz = [0.0; 3];
    for (i, item) in items.iter().enumerate() {
        xyz[i] = number(item, format!("{path}[{i}]"))?;
    }
    Ok(Vec3::try_from(xyz).expect("finite components checked"))
}

fn opt_vector(map: &Map<String, Value>, path: &str, key: &str) -> SceneResult<Option<Vec3>> {
    map.get(key).map(|v| vector(v, join(path, key))).transpose()
}

fn vertex_list(map: &Map<String, Value>, path: &str, key: &str) -> SceneResult<Vec<Vec3>> {
    let full = join(path, key);
    let items = map
        .get(key)
        .ok_or_else(|| SceneError::Missing(full.clone()))?
        .as_array()
        .ok_or(SceneError::Type {
            path: full.clone(),
            expected: "an array of [x, y, z] vertices",
        })?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| vector(v, format!("{full}[{i}]")))
        .collect()
}

fn invalid(path: &str) -> impl FnOnce(Error) -> SceneError + '_ {
    move |source| SceneError::Invalid {
        path: path.to_string(),
        source,
    }
}

fn parse_particle(value: &Value) -> SceneResult<ParticleSpec> {
    let path = "particle";
    let map = as_object(value, path)?;
    check_keys(map, path, &["mass_kg", "speed_mps", "wavelength_m"])?;
    Ok(ParticleSpec {
        mass_kg: opt_number(map, path, "mass_kg")?,
        speed_mps: req_number(map, path, "speed_mps")?,
        wavelength_m: opt_number(map, path, "wavelength_m")?,
    })
}

fn parse_motion(value: &Value) -> SceneResult<MotionSpec> {
    let path = "motion";
    let map = as_object(value, path)?;
    check_keys(map, path, &["translation_mps", "omega_radps", "pivot_m"])?;
    Ok(MotionSpec {
        translation_mps: opt_vector(map, path, "translation_mps")?,
        omega_radps: opt_vector(map, path, "omega_radps")?,
        pivot_m: opt_vector(map, path, "pivot_m")?,
    })
}

fn parse_geometry(value: &Value) -> SceneResult<GeometrySpec> {
    let path = "geometry";
    let map = as_object(value, path)?;
    let kind_path = join(path, "kind");
    let kind_name = map
        .get("kind")
        .ok_or_else(|| SceneError::Missing(kind_path.clone()))?
        .as_str()
        .ok_or(SceneError::Type {
            path: kind_path.clone(),
            expected: "a string",
        })?;
    let kind = FigureKind::from_name(kind_name).ok_or_else(|| SceneError::UnknownKind {
        path: kind_path,
        kind: kind_name.to_string(),
    })?;
    if kind.is_rectangle() {
        check_keys(map, path, &["kind", "side_m", "width_m", "height_m"])?;
    } else {
        check_keys(map, path, &["kind", "opening_m", "arm_length_m"])?;
    }
    let spec = GeometrySpec {
        kind,
        side_m: opt_number(map, path, "side_m")?,
        width_m: opt_number(map, path, "width_m")?,
        height_m: opt_number(map, path, "height_m")?,
        opening_m: opt_vector(map, path, "opening_m")?,
        arm_length_m: opt_number(map, path, "arm_length_m")?,
    };
    if kind.is_rectangle() {
        match (spec.side_m, spec.width_m, spec.height_m) {
            (Some(_), None, None) | (None, Some(_), Some(_)) => {}
            (Some(_), _, _) => {
                return Err(SceneError::Type {
                    path: join(path, "side_m"),
                    expected: "given alone, without width_m/height_m",
                })
            }
            (None, None, _) => return Err(SceneError::Missing(join(path, "width_m"))),
            (None, Some(_), None) => return Err(SceneError::Missing(join(path, "height_m"))),
        }
    } else if spec.opening_m.is_none() {
        return Err(SceneError::Missing(join(path, "opening_m")));
    }
    Ok(spec)
}

fn parse_explicit(value: &Value) -> SceneResult<ExplicitSpec> {
    let path = "explicit";
    let map = as_object(value, path)?;
    check_keys(map, path, &["kind", "path_I", "path_II"])?;
    let kind = match map.get("kind") {
        None => None,
        Some(v) => {
            let kind_path = join(path, "kind");
            let name = v.as_str().ok_or(SceneError::Type {
                path: kind_path.clone(),
                expected: "a string",
            })?;
            Some(
                ConfigKind::from_name(name).ok_or_else(|| SceneError::UnknownKind {
                    path: kind_path,
                    kind: name.to_string(),
                })?,
            )
        }
    };
    Ok(ExplicitSpec {
        kind,
        path_i: vertex_list(map, path, "path_I")?,
        path_ii: vertex_list(map, path, "path_II")?,
    })
}

fn parse_output(value: &Value) -> SceneResult<OutputSpec> {
    let path = "output";
    let map = as_object(value, path)?;
    check_keys(map, path, &["format", "breakdown"])?;
    let format =
        match map.get("format") {
            None => None,
            Some(v) => Some(v.as_str().and_then(OutputFormat::from_name).ok_or(
                SceneError::Type {
                    path: join(path, "format"),
                    expected: "\"csv\" or \"json\"",
                },
            )?),
        };
    let breakdown = match map.get("breakdown") {
        None => None,
        Some(v) => Some(v.as_bool().ok_or(SceneError::Type {
            path: join(path, "breakdown"),
            expected: "a boolean",
        })?),
    };
    Ok(OutputSpec { format, breakdown })
}

/// Parses and validates a scene.
pub fn parse_scene(text: &str) -> SceneResult<SceneDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| SceneError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let root = as_object(&value, "")?;
    check_keys(
        root,
        "",
        &["particle", "motion", "geometry", "explicit", "output"],
    )?;

    let doc = SceneDocument {
        particle: parse_particle(
            root.get("particle")
                .ok_or_else(|| SceneError::Missing("particle".into()))?,
        )?,
        motion: root.get("motion").map(parse_motion).transpose()?,
        geometry: root.get("geometry").map(parse_geometry).transpose()?,
        explicit: root.get("explicit").map(parse_explicit).transpose()?,
        output: root.get("output").map(parse_output).transpose()?,
    };
    if doc.geometry.is_some() == doc.explicit.is_some() {
        return Err(SceneError::GeometryChoice);
    }

    doc.wave()?;
    match &doc.explicit {
        Some(_) => {
            doc.beam_paths()?;
        }
        None => {
            doc.config()?;
        }
    }
    Ok(doc)
}

impl SceneDocument {
    pub fn wave(&self) -> SceneResult<ParticleWave> {
        let p = &self.particle;
        ParticleWave::new(p.mass_kg, p.speed_mps, p.wavelength_m).map_err(invalid("particle"))
    }

    /// The motion section as a field; absent entries are zero.
    pub fn motion_field(&self) -> MotionField {
        let m = self.motion.clone().unwrap_or_default();
        MotionField::new(
            m.translation_mps.unwrap_or(Vec3::ZERO),
            m.omega_radps.unwrap_or(Vec3::ZERO),
            m.pivot_m.unwrap_or(Vec3::ZERO),
        )
    }

    /// The figure archetype described by `geometry`, if any.
    pub fn figure(&self) -> Option<Figure> {
        let g = self.geometry.as_ref()?;
        let motion = self.motion_field();
        let (width, height) = match g.side_m {
            Some(side) => (side, side),
            None => (g.width_m.unwrap_or(0.0), g.height_m.unwrap_or(0.0)),
        };
        let opening = g.opening_m.unwrap_or(Vec3::ZERO);
        let arm_length = g.arm_length_m.unwrap_or(DEFAULT_ARM_LENGTH);
        let velocity = motion.translation;
        Some(match g.kind {
            FigureKind::Fig2Rotation => Figure::Fig2Rotation {
                width,
                height,
                omega: motion.rotation,
            },
            FigureKind::Fig3aClosed => Figure::Fig3aClosed {
                width,
                height,
                velocity,
            },
            FigureKind::Fig3bOpen => Figure::Fig3bOpen {
                opening,
                arm_length,
                velocity,
            },
            FigureKind::Fig3cIndependent => Figure::Fig3cIndependent {
                opening,
                arm_length,
                velocity,
            },
            FigureKind::Fig3dExtracted => Figure::Fig3dExtracted {
                opening,
                arm_length,
                velocity,
            },
        })
    }

    /// The raw beam paths `[path_I, path_II]`.
    pub fn beam_paths(&self) -> SceneResult<Vec<BeamPath>> {
        if let Some(e) = &self.explicit {
            let i = BeamPath::new(e.path_i.clone()).map_err(invalid("explicit.path_I"))?;
            let ii = BeamPath::new(e.path_ii.clone()).map_err(invalid("explicit.path_II"))?;
            Ok(vec![i, ii])
        } else {
            let c = self.config()?;
            Ok(vec![c.path_i().clone(), c.path_ii().clone()])
        }
    }

    /// The interferometer the scene describes. The scene's motion section
    /// is used verbatim; figure builders only provide the geometry.
    /// Explicit paths without a kind are a closed loop when their start
    /// points coincide and an open loop otherwise.
    pub fn config(&self) -> SceneResult<InterferometerConfig> {
        let wave = self.wave()?;
        let motion = self.motion_field();
        if let Some(figure) = self.figure() {
            return build_config(&figure, wave)
                .map(|c| c.with_motion(motion))
                .map_err(invalid("geometry"));
        }
        let e = self.explicit.as_ref().ok_or(SceneError::GeometryChoice)?;
        let paths = self.beam_paths()?;
        let [i, ii]: [BeamPath; 2] = paths.try_into().expect("two paths");
        let kind = e.kind.unwrap_or({
            if i.start().distance(ii.start()) <= crate::constants::ENDPOINT_TOLERANCE {
                ConfigKind::ClosedLoop
            } else {
                ConfigKind::OpenLoop
            }
        });
        InterferometerConfig::new(kind, i, ii, wave, motion).map_err(invalid("explicit"))
    }

    pub fn output_format(&self) -> Option<OutputFormat> {
        self.output.as_ref().and_then(|o| o.format)
    }

    pub fn breakdown(&self) -> bool {
        self.output
            .as_ref()
            .and_then(|o| o.breakdown)
            .unwrap_or(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "particle": { "speed_mps": 1.0, "wavelength_m": 1e-8 },
        "geometry": { "kind": "Fig3bOpen", "opening_m": [1e-4, 0.0, 0.0] }
    }"#;

    #[test]
    fn minimal_scene() {
        let doc = parse_scene(MINIMAL).unwrap();
        assert_eq!(doc.wave().unwrap().v_lambda(), 1e-8);
        let cfg = doc.config().unwrap();
        assert_eq!(cfg.kind(), ConfigKind::OpenLoop);
        assert_eq!(cfg.opening_vector().unwrap(), Vec3::new(1e-4, 0.0, 0.0));
        assert_eq!(parse_scene(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn missing_speed_names_field() {
        let err = parse_scene(
            r#"{"particle": {"wavelength_m": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert_eq!(err, SceneError::Missing("particle.speed_mps".into()));
        assert!(err.to_string().contains("particle.speed_mps"));
    }

    #[test]
    fn unknown_kind() {
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig9"}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::UnknownKind { ref kind, .. } if kind == "Fig9"));
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_scene("{\n  \"particle\": {\n    \"speed_mps\": 1,,\n").unwrap_err();
        match err {
            SceneError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unit_suffix_mismatch() {
        let err = parse_scene(
            r#"{"particle": {"speed_cmps": 100, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert_eq!(
            err,
            SceneError::UnitSuffix {
                found: "particle.speed_cmps".into(),
                expected: "particle.speed_mps".into()
            }
        );
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::UnitSuffix { .. }));
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8, "spin": 0.5},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert_eq!(err, SceneError::UnknownKey("particle.spin".into()));
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0], "side_m": 1}}"#,
        )
        .unwrap_err();
        assert_eq!(err, SceneError::UnknownKey("geometry.side_m".into()));
    }

    #[test]
    fn geometry_choice_is_exclusive() {
        let err =
            parse_scene(r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8}}"#).unwrap_err();
        assert_eq!(err, SceneError::GeometryChoice);
    }

    #[test]
    fn invalid_physics_is_reported_with_path() {
        let err = parse_scene(
            r#"{"particle": {"speed_mps": -1, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::Invalid { ref path, .. } if path == "particle"));
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig2Rotation", "side_m": 0}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::Invalid { ref path, .. } if path == "geometry"));
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig2Rotation", "width_m": 1}}"#,
        )
        .unwrap_err();
        assert_eq!(err, SceneError::Missing("geometry.height_m".into()));
    }

    #[test]
    fn explicit_paths_infer_kind() {
        let doc = parse_scene(r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "explicit": {"path_I": [[0,0,0],[0,1,0],[1,1,0]], "path_II": [[0,0,0],[1,0,0],[1,1,0]]}}"#)
        .unwrap();
        assert_eq!(doc.config().unwrap().kind(), ConfigKind::ClosedLoop);
        assert_eq!(doc.beam_paths().unwrap().len(), 2);

        let doc = parse_scene(r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "explicit": {"kind": "IndependentBeams", "path_I": [[1e-4,0,0],[0,1,0]], "path_II": [[0,0,0],[0,1,0]]}}"#)
        .unwrap();
        assert_eq!(doc.config().unwrap().kind(), ConfigKind::IndependentBeams);

        // paths that do not meet are still usable as raw paths
        let doc = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "explicit": {"path_I": [[0,0,0],[0,1,0]], "path_II": [[1,0,0],[1,1,0]]}}"#,
        )
        .unwrap();
        assert!(doc.config().is_err());
        assert_eq!(doc.beam_paths().unwrap().len(), 2);

        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "explicit": {"path_I": [[0,0,0]], "path_II": [[1,0,0],[1,1,0]]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::Invalid { ref path, .. } if path == "explicit.path_I"));
    }

    #[test]
    fn vector_type_errors() {
        let err = parse_scene(
            r#"{"particle": {"speed_mps": 1, "wavelength_m": 1e-8},
            "motion": {"translation_mps": [1, 2]},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert!(
            matches!(err, SceneError::Type { ref path, .. } if path == "motion.translation_mps")
        );
        let err = parse_scene(
            r#"{"particle": {"speed_mps": "fast", "wavelength_m": 1e-8},
            "geometry": {"kind": "Fig3bOpen", "opening_m": [1e-4, 0, 0]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SceneError::Type { ref path, .. } if path == "particle.speed_mps"));
    }
}
