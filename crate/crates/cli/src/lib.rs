//! `kolam` command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid kolam parameters,
//! 64 usage error, 74 I/O failure.

pub mod config;
pub mod gallery;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use kolam_core::checks::{all_passed, swap_first_radii, verify_parts};
use kolam_core::table::{grouping_mismatches, render_table};
use kolam_core::{
    build_closed_path, build_graph, build_matrix, generate_sequence, make_spec, make_strokes,
    render_dot_grid, render_svg, ConnectionStyle, FillMode, KolamError, KolamSpec,
};

use crate::config::RenderSettings;
use crate::gallery::Preset;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Validation(#[from] KolamError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Validation(_) => EXIT_VALIDATION,
            Self::Usage(_) => EXIT_USAGE,
            Self::Io { .. } => EXIT_IO,
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "kolam",
    version,
    about = "Generate radial single-stroke kolam patterns"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the generator cycle for (m, n).
    Seq(DotsArms),
    /// Print the m×n dot matrix.
    Matrix {
        #[command(flatten)]
        dims: DotsArms,
        /// Emit JSON instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Render a kolam to SVG.
    Gen(GenArgs),
    /// Run the structural checks and print PASS/FAIL per check.
    Verify {
        #[command(flatten)]
        dims: DotsArms,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Regenerate the reference table of generator cycles.
    Table,
    /// Render a preset family of kolams into a directory.
    Gallery(GalleryArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct DotsArms {
    /// Dots per arm (m).
    #[arg(short = 'm', long = "dots", allow_negative_numbers = true)]
    pub dots: i64,
    /// Number of arms (n).
    #[arg(short = 'n', long = "arms", allow_negative_numbers = true)]
    pub arms: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    ShufflePath,
}

#[derive(Debug, Clone, Args)]
pub struct StyleArgs {
    /// straight, convex or concave.
    #[arg(long)]
    pub style: Option<String>,
    /// Arc sagitta as a fraction of the chord, in (0, 1).
    #[arg(long, allow_negative_numbers = true)]
    pub bulge: Option<f64>,
    /// Square canvas edge in pixels.
    #[arg(long)]
    pub canvas: Option<u32>,
    /// Margin as a fraction of the canvas, in [0, 0.5).
    #[arg(long)]
    pub margin: Option<f64>,
    #[arg(long)]
    pub stroke_width: Option<f64>,
    /// none or evenodd.
    #[arg(long)]
    pub fill: Option<String>,
    /// Comma-separated hex colors: stroke, then fill.
    #[arg(long)]
    pub palette: Option<String>,
    /// Draw the radial arm guides.
    #[arg(long)]
    pub show_arms: bool,
    /// Omit the dots.
    #[arg(long)]
    pub hide_dots: bool,
    /// key = value file with render defaults; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub dims: DotsArms,
    #[command(flatten)]
    pub style: StyleArgs,
    /// Output SVG file.
    #[arg(short = 'o', long = "out")]
    pub out: PathBuf,
    /// Render only the dot grid.
    #[arg(long)]
    pub grid_only: bool,
    /// Write the directed graph as JSON.
    #[arg(long)]
    pub emit_graph: Option<PathBuf>,
    /// Write the dot matrix as JSON.
    #[arg(long)]
    pub emit_matrix: Option<PathBuf>,
    /// Write the closed path as JSON.
    #[arg(long)]
    pub emit_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GalleryArgs {
    /// Output directory, created if missing.
    #[arg(short = 'o', long = "out-dir")]
    pub out_dir: PathBuf,
    #[arg(long, value_enum, default_value = "paper-even")]
    pub preset: Preset,
    #[command(flatten)]
    pub style: StyleArgs,
    /// Worker threads (defaults to the available parallelism, at most 8).
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl StyleArgs {
    /// Built-in defaults, then the config file, then flags.
    pub fn resolve(&self) -> CliResult<RenderSettings> {
        let mut settings = RenderSettings::default();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            settings.apply_file(&text)?;
        }
        if let Some(s) = &self.style {
            settings.style = s.parse().map_err(CliError::Usage)?;
        }
        if let Some(b) = self.bulge {
            settings.bulge = Some(b);
        }
        if let Some(c) = self.canvas {
            settings.render.canvas_px = c;
        }
        if let Some(m) = self.margin {
            settings.render.margin_ratio = m;
        }
        if let Some(w) = self.stroke_width {
            settings.render.stroke_width_px = w;
        }
        if let Some(f) = &self.fill {
            settings.render.fill_mode = f.parse::<FillMode>().map_err(CliError::Usage)?;
        }
        if let Some(p) = &self.palette {
            settings.render.palette = p.split(',').map(|c| c.trim().to_owned()).collect();
        }
        if self.show_arms {
            settings.render.show_arms = true;
        }
        if self.hide_dots {
            settings.render.show_dots = false;
        }
        settings.render.validate()?;
        Ok(settings)
    }
}

fn spec_for(dims: DotsArms, style: ConnectionStyle, bulge: Option<f64>) -> CliResult<KolamSpec> {
    Ok(make_spec(dims.dots, dims.arms, style, bulge)?)
}

pub(crate) fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

pub fn cmd_seq(dims: DotsArms, out: &mut dyn Write) -> CliResult<i32> {
    let spec = spec_for(dims, ConnectionStyle::Straight, None)?;
    let _ = writeln!(out, "{}", generate_sequence(&spec).cycle_string());
    Ok(EXIT_OK)
}

pub fn cmd_matrix(dims: DotsArms, json: bool, out: &mut dyn Write) -> CliResult<i32> {
    let spec = spec_for(dims, ConnectionStyle::Straight, None)?;
    let matrix = build_matrix(&generate_sequence(&spec), spec.n());
    if json {
        let _ = writeln!(out, "{}", matrix.to_json());
    } else {
        let _ = write!(out, "{}", matrix.to_text());
    }
    Ok(EXIT_OK)
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult<i32> {
    let settings = args.style.resolve()?;
    let spec = spec_for(args.dims, settings.style, settings.bulge)?;
    let matrix = build_matrix(&generate_sequence(&spec), spec.n());
    let path = build_closed_path(&spec);

    let svg = if args.grid_only {
        render_dot_grid(&spec, &settings.render)?
    } else {
        let strokes = make_strokes(&path, spec.style(), spec.bulge())?;
        render_svg(&spec, &strokes, &matrix, &settings.render)?
    };
    write_file(&args.out, &svg)?;
    if let Some(p) = &args.emit_matrix {
        write_file(p, format!("{}\n", matrix.to_json()).as_bytes())?;
    }
    if let Some(p) = &args.emit_path {
        write_file(p, format!("{}\n", path.to_json()).as_bytes())?;
    }
    if let Some(p) = &args.emit_graph {
        write_file(p, format!("{}\n", build_graph(&path).to_json()).as_bytes())?;
    }
    let _ = writeln!(out, "wrote {}", args.out.display());
    Ok(EXIT_OK)
}

pub fn cmd_verify(dims: DotsArms, fault: Option<Fault>, out: &mut dyn Write) -> CliResult<i32> {
    let spec = spec_for(dims, ConnectionStyle::Straight, None)?;
    let matrix = build_matrix(&generate_sequence(&spec), spec.n());
    let mut path = build_closed_path(&spec);
    if fault == Some(Fault::ShufflePath) {
        path = swap_first_radii(&path);
    }
    let checks = verify_parts(&spec, &matrix, &path);
    for c in &checks {
        let _ = writeln!(out, "{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    if all_passed(&checks) {
        let _ = writeln!(
            out,
            "m={} n={}: all {} checks passed",
            spec.m(),
            spec.n(),
            checks.len()
        );
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(
            out,
            "m={} n={}: {failed} of {} checks failed",
            spec.m(),
            spec.n(),
            checks.len()
        );
        Ok(EXIT_CHECK_FAILED)
    }
}

pub fn cmd_table(out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let _ = write!(out, "{}", render_table());
    for g in grouping_mismatches() {
        let _ = writeln!(
            err,
            "note: m={} n={} is listed under {} but generates {}",
            g.m, g.n, g.listed_cycle, g.actual_cycle
        );
    }
    Ok(EXIT_OK)
}

pub fn cmd_gallery(args: &GalleryArgs, out: &mut dyn Write) -> CliResult<i32> {
    let settings = args.style.resolve()?;
    let manifest = gallery::write_gallery(&args.out_dir, args.preset, &settings, args.jobs)?;
    let _ = writeln!(
        out,
        "wrote {} files and manifest.json to {}",
        manifest.files.len(),
        args.out_dir.display()
    );
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Seq(dims) => cmd_seq(*dims, out),
        Command::Matrix { dims, json } => cmd_matrix(*dims, *json, out),
        Command::Gen(args) => cmd_gen(args, out),
        Command::Verify { dims, inject_fault } => cmd_verify(*dims, *inject_fault, out),
        Command::Table => cmd_table(out, err),
        Command::Gallery(args) => cmd_gallery(args, out),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
