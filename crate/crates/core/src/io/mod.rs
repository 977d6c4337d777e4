//! Scene files, result serialization and the command line.

pub mod cli;
pub mod output;
pub mod scene;

pub use output::{emit_results, format_float, Report};
pub use scene::{parse_scene, OutputFormat, SceneDocument, SceneError};
