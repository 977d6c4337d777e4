//! Command-line surface.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 property violation
//! reported by `verify`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::experiment::{
    fringe_reading, fringe_scan, sensitivity_sweep, verify_suite, DEFAULT_SEED,
};
use crate::phase::{open_loop_phase, sagnac_area_phase, two_path_difference};

use super::output::{emit_results, FringeScan, Report, SagnacComparison, TranslationResult};
use super::scene::{parse_scene, OutputFormat, SceneDocument};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "matterwave",
    version,
    about = "Phase differences of interferometers with moving segments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Two-path phase difference of the scene
    Phase(SceneArgs),
    /// Sagnac phase by loop integral and by enclosed area
    Sagnac(SceneArgs),
    /// Open-loop translational phase (2π/vλ) V·D
    Translate(SceneArgs),
    /// Open-loop phase over a grid of speeds
    Sweep(SweepArgs),
    /// Fringe readings over one fringe of phase offsets
    Fringes(FringeArgs),
    /// Seeded randomized cross-check suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output file; `-` or `stdout` for standard output
    #[arg(long, default_value = "stdout")]
    out: String,
    /// Output format; defaults to the scene's `output.format`, then json
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Debug, Args)]
struct SceneArgs {
    /// Scene file (JSON)
    #[arg(long)]
    scene: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
    /// Include per-segment contributions
    #[arg(long)]
    breakdown: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    scene: SceneArgs,
    /// Number of grid points
    #[arg(long, default_value_t = 21)]
    steps: usize,
    /// Lowest speed, m/s
    #[arg(long, default_value_t = 0.0)]
    vmin: f64,
    /// Highest speed, m/s; defaults to twice the one-fringe speed
    #[arg(long)]
    vmax: Option<f64>,
}

#[derive(Debug, Args)]
struct FringeArgs {
    #[command(flatten)]
    scene: SceneArgs,
    /// Number of phase offsets across one fringe
    #[arg(long, default_value_t = 9)]
    steps: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

fn load_scene(args: &SceneArgs) -> Result<SceneDocument, Failure> {
    let text = std::fs::read_to_string(&args.scene)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", args.scene.display())))?;
    parse_scene(&text).map_err(|e| Failure::input(format!("{}: {e}", args.scene.display())))
}

fn resolve_format(output: &OutputArgs, scene: Option<&SceneDocument>) -> OutputFormat {
    output
        .format
        .map(OutputFormat::from)
        .or_else(|| scene.and_then(SceneDocument::output_format))
        .unwrap_or(OutputFormat::Json)
}

fn write_output(output: &OutputArgs, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match output.out.as_str() {
        "-" | "stdout" => stdout
            .write_all(bytes)
            .map_err(|e| Failure::input(format!("cannot write output: {e}"))),
        path => std::fs::write(path, bytes)
            .map_err(|e| Failure::input(format!("cannot write {path}: {e}"))),
    }
}

/// Evaluates a scene subcommand and renders it.
fn run_scene(
    args: &SceneArgs,
    stdout: &mut dyn Write,
    evaluate: impl FnOnce(
        &SceneDocument,
        &mut dyn FnMut(Report<'_>) -> Vec<u8>,
    ) -> Result<Vec<u8>, Failure>,
) -> Result<u8, Failure> {
    let doc = load_scene(args)?;
    let format = resolve_format(&args.output, Some(&doc));
    let breakdown = args.breakdown || doc.breakdown();
    let mut render = |report: Report<'_>| emit_results(report, format, breakdown);
    let bytes = evaluate(&doc, &mut render)?;
    write_output(&args.output, &bytes, stdout)?;
    Ok(EXIT_OK)
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Phase(args) => run_scene(&args, stdout, |doc, render| {
            let config = doc.config().map_err(Failure::input)?;
            let result = two_path_difference(&config).map_err(Failure::input)?;
            Ok(render(Report::Phase(&result)))
        }),
        Command::Sagnac(args) => run_scene(&args, stdout, |doc, render| {
            let config = doc.config().map_err(Failure::input)?;
            let contour = config.closed_contour().map_err(|_| {
                Failure::input("sagnac needs a closed-loop scene (paths sharing both end points)")
            })?;
            let loop_integral = two_path_difference(&config)
                .map_err(Failure::input)?
                .total_phase;
            let area = sagnac_area_phase(config.wave(), &contour, config.motion())
                .map_err(Failure::input)?;
            let scale = loop_integral.abs().max(area.abs());
            let comparison = SagnacComparison {
                loop_integral_rad: loop_integral,
                area_formula_rad: area,
                relative_difference: if scale == 0.0 {
                    0.0
                } else {
                    (loop_integral - area).abs() / scale
                },
            };
            Ok(render(Report::Sagnac(&comparison)))
        }),
        Command::Translate(args) => run_scene(&args, stdout, |doc, render| {
            let config = doc.config().map_err(Failure::input)?;
            let opening = config.opening_vector().map_err(|_| {
                Failure::input("translate needs an open-loop scene with a non-zero opening")
            })?;
            let velocity = config.motion().translation;
            let phase =
                open_loop_phase(config.wave(), opening, velocity).map_err(Failure::input)?;
            let result = TranslationResult {
                phase_rad: phase,
                fringe_count: fringe_reading(phase).fringe_count,
                opening_m: opening,
                velocity_mps: velocity,
                v_lambda_m2ps: config.wave().v_lambda(),
            };
            Ok(render(Report::Translation(&result)))
        }),
        Command::Sweep(args) => run_scene(&args.scene, stdout, |doc, render| {
            let config = doc.config().map_err(Failure::input)?;
            let vmax = match args.vmax {
                Some(v) => v,
                None => {
                    let probe = sensitivity_sweep(&config, 0.0, 1.0, 2).map_err(Failure::input)?;
                    probe.v_full_fringe.map_or(1.0, |v| 2.0 * v)
                }
            };
            let result =
                sensitivity_sweep(&config, args.vmin, vmax, args.steps).map_err(Failure::input)?;
            Ok(render(Report::Sweep(&result)))
        }),
        Command::Fringes(args) => run_scene(&args.scene, stdout, |doc, render| {
            let config = doc.config().map_err(Failure::input)?;
            let base = two_path_difference(&config)
                .map_err(Failure::input)?
                .total_phase;
            let scan = FringeScan {
                base_phase_rad: base,
                readings: fringe_scan(base, args.steps),
            };
            Ok(render(Report::Fringes(&scan)))
        }),
        Command::Verify(args) => {
            let report = verify_suite(args.seed);
            let format = resolve_format(&args.output, None);
            write_output(
                &args.output,
                &emit_results(Report::Verify(&report), format, false),
                stdout,
            )?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run_command(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
