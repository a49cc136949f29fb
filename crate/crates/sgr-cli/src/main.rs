//! Command line front end for the cell-graph toolkit.
//!
//! Exit codes: 0 on success, 1 for data errors (unreadable or law-breaking
//! inputs, failed moves, mismatched replay digests), 2 for usage errors,
//! and 3 when a resource guard refuses to start an oversized run.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use sgr_braid::{even_action_sq, ActionLog, Step};
use sgr_core::{canonical_text, from_text, validate, CellGraph, CenterTag, SectorFrame};
use sgr_normalize::{reduce, to_ivy, ComponentInvariant};
use sgr_orbit::{enumerate, orbit_partition};
use sgr_spectral::{parse_job, render_report, run_job, SpectralError};

/// Highest repeat count `act` will perform in one invocation.
const MAX_REPEAT: usize = 10_000;
/// Highest vertex budget `orbit` will enumerate; corpora grow steeply.
const MAX_ORBIT_VERTICES: usize = 10;
/// Highest mode count `spectrum` will converge in one job.
const MAX_MODES: usize = 64;

#[derive(Parser)]
#[command(
    name = "sgr",
    version,
    about = "Validate, rewrite, normalize, classify, render, and spectrally cross-check cell graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the labeling laws and report central symmetry
    Validate {
        /// Graph file in .sgr form
        file: PathBuf,
    },
    /// Apply the squared even move at a dominant label
    Act {
        /// Graph file in .sgr form
        file: PathBuf,
        /// Dominant label to act at
        #[arg(short = 'j', long)]
        label: usize,
        /// Apply the inverse move
        #[arg(long)]
        inverse: bool,
        /// Apply the move this many times
        #[arg(short = 'r', long, default_value_t = 1)]
        repeat: usize,
    },
    /// Gather the graph into ivy form, logging every move
    Normalize {
        /// Graph file in .sgr form
        file: PathBuf,
    },
    /// Reduce the graph to its class representative, logging every move
    Reduce {
        /// Graph file in .sgr form
        file: PathBuf,
    },
    /// Enumerate the symmetric corpus and partition it into move classes
    Orbit {
        /// Number of sectors (even, at least 4)
        #[arg(short = 'n', long = "sectors")]
        n: usize,
        /// Subdominant sectors, comma separated
        #[arg(short = 'J', long = "subdominant", value_delimiter = ',')]
        subdominant: Vec<usize>,
        /// Largest vertex count to enumerate
        #[arg(long = "max-vertices")]
        max_vertices: usize,
    },
    /// Run a plain-text spectrum job and print the mode table
    Spectrum {
        /// Job file; see the job format notes in the library docs
        jobfile: PathBuf,
    },
    /// Draw the graph as a DOT tree view or a radial SVG sketch
    Render {
        /// Graph file in .sgr form
        file: PathBuf,
        /// Output format
        #[arg(long, value_enum)]
        format: RenderFormat,
        /// Write here instead of stdout
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Re-run a recorded action log against a starting graph
    Replay {
        /// Starting graph file in .sgr form
        file: PathBuf,
        /// Action log file
        logfile: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Dot,
    Svg,
}

/// An error paired with the process exit code it should produce.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn data(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 1,
            error: error.into(),
        }
    }

    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }

    fn guard(message: String) -> Self {
        Failure {
            code: 3,
            error: anyhow!(message),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Act {
            file,
            label,
            inverse,
            repeat,
        } => cmd_act(&file, label, inverse, repeat),
        Command::Normalize { file } => cmd_normalize(&file),
        Command::Reduce { file } => cmd_reduce(&file),
        Command::Orbit {
            n,
            subdominant,
            max_vertices,
        } => cmd_orbit(n, &subdominant, max_vertices),
        Command::Spectrum { jobfile } => cmd_spectrum(&jobfile),
        Command::Render { file, format, out } => cmd_render(&file, format, out.as_deref()),
        Command::Replay { file, logfile } => cmd_replay(&file, &logfile),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::data)
}

fn load_graph(path: &Path) -> Result<CellGraph, Failure> {
    let text = read_file(path)?;
    from_text(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::data)
}

/// Loads a graph and insists that it satisfies the labeling laws, printing
/// each violation before failing.
fn load_valid_graph(path: &Path) -> Result<CellGraph, Failure> {
    let g = load_graph(path)?;
    let report = validate(&g);
    if report.ok() {
        return Ok(g);
    }
    for violation in &report.violations {
        eprintln!("{violation}");
    }
    Err(Failure::data(anyhow!(
        "{} is not a standard graph ({} violation(s))",
        path.display(),
        report.violations.len()
    )))
}

/// Sibling path `<stem>.<tag>.<ext>` next to `input`.
fn derived_path(input: &Path, tag: &str, ext: &str) -> PathBuf {
    let stem = input
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("graph");
    input.with_file_name(format!("{stem}.{tag}.{ext}"))
}

/// Writes the result of a move-producing command: the canonical graph text
/// to `<stem>.<tag>.sgr` and the action log to `<stem>.<tag>.log`.
fn emit_derived(input: &Path, tag: &str, graph_text: &str, log: &ActionLog) -> Result<(), Failure> {
    let graph_path = derived_path(input, tag, "sgr");
    fs::write(&graph_path, graph_text)
        .with_context(|| format!("writing {}", graph_path.display()))
        .map_err(Failure::data)?;
    let log_path = derived_path(input, tag, "log");
    fs::write(&log_path, log.to_text())
        .with_context(|| format!("writing {}", log_path.display()))
        .map_err(Failure::data)?;
    Ok(())
}

fn cmd_validate(file: &Path) -> Result<(), Failure> {
    let g = load_graph(file)?;
    let report = validate(&g);
    for violation in &report.violations {
        println!("{violation}");
    }
    if !report.ok() {
        return Err(Failure::data(anyhow!(
            "{}: {} violation(s)",
            file.display(),
            report.violations.len()
        )));
    }
    println!("ok");
    println!("n {}", g.frame().n());
    println!("vertices {}", g.vertex_count());
    println!("edges {}", g.edge_count());
    if let Some(symmetric) = report.symmetric {
        println!("symmetric {symmetric}");
    }
    Ok(())
}

fn cmd_act(file: &Path, label: usize, inverse: bool, repeat: usize) -> Result<(), Failure> {
    if repeat > MAX_REPEAT {
        return Err(Failure::guard(format!(
            "repeat {repeat} exceeds the limit of {MAX_REPEAT}"
        )));
    }
    let mut g = load_valid_graph(file)?;
    let mut log = ActionLog::new();
    for _ in 0..repeat {
        g = even_action_sq(&g, label, inverse).map_err(Failure::data)?;
        log.record(Step::Even { j: label, inverse }, &g)
            .map_err(Failure::data)?;
    }
    let text = canonical_text(&g).map_err(Failure::data)?;
    emit_derived(file, "act", &text, &log)?;
    print!("{text}");
    Ok(())
}

fn cmd_normalize(file: &Path) -> Result<(), Failure> {
    let g = load_valid_graph(file)?;
    let (ivy, log) = to_ivy(&g).map_err(Failure::data)?;
    let text = canonical_text(&ivy).map_err(Failure::data)?;
    emit_derived(file, "ivy", &text, &log)?;
    print!("{text}");
    Ok(())
}

fn cmd_reduce(file: &Path) -> Result<(), Failure> {
    let g = load_valid_graph(file)?;
    let (reduced, log) = reduce(&g).map_err(Failure::data)?;
    let text = canonical_text(&reduced).map_err(Failure::data)?;
    emit_derived(file, "red", &text, &log)?;
    print!("{text}");
    Ok(())
}

fn cmd_orbit(n: usize, subdominant: &[usize], max_vertices: usize) -> Result<(), Failure> {
    if max_vertices > MAX_ORBIT_VERTICES {
        return Err(Failure::guard(format!(
            "max-vertices {max_vertices} exceeds the limit of {MAX_ORBIT_VERTICES}"
        )));
    }
    let frame = SectorFrame::new(n, subdominant).map_err(Failure::usage)?;
    let corpus = enumerate(&frame, max_vertices).map_err(Failure::data)?;
    let report = orbit_partition(&corpus).map_err(Failure::data)?;
    let joined = subdominant
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    println!("orbit n {n} subdominant {joined} max-vertices {max_vertices}");
    println!("corpus {}", corpus.len());
    for (vertices, count) in corpus.census() {
        println!("census {vertices} {count}");
    }
    for (index, class) in report.classes.iter().enumerate() {
        println!(
            "class {index} invariant {} members {}",
            describe_invariant(&class.invariant),
            class.members.len()
        );
    }
    println!(
        "moves interior {} boundary {}",
        report.interior_moves, report.boundary_moves
    );
    Ok(())
}

fn describe_invariant(invariant: &ComponentInvariant) -> String {
    match invariant {
        ComponentInvariant::Center(CenterTag::Vertex) => "center vertex".to_string(),
        ComponentInvariant::Center(CenterTag::DoubleEdge) => "center double-edge".to_string(),
        ComponentInvariant::ZeroCount(k) => format!("zeros {k}"),
    }
}

fn cmd_spectrum(jobfile: &Path) -> Result<(), Failure> {
    let text = read_file(jobfile)?;
    let job = parse_job(&text)
        .with_context(|| format!("parsing {}", jobfile.display()))
        .map_err(Failure::data)?;
    if job.count > MAX_MODES {
        return Err(Failure::guard(format!(
            "count {} exceeds the limit of {MAX_MODES}",
            job.count
        )));
    }
    let report = run_job(&job).map_err(|e| match e {
        SpectralError::NoRefinementConvergence { .. } => Failure::guard(format!("{e:#}")),
        other => Failure::data(other),
    })?;
    print!("{}", render_report(&report));
    Ok(())
}

fn cmd_render(file: &Path, format: RenderFormat, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_valid_graph(file)?;
    let drawn = match format {
        RenderFormat::Dot => render::dot_tree(&g),
        RenderFormat::Svg => render::radial_svg(&g),
    }
    .map_err(Failure::data)?;
    match out {
        Some(path) => fs::write(path, &drawn)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::data)?,
        None => print!("{drawn}"),
    }
    Ok(())
}

fn cmd_replay(file: &Path, logfile: &Path) -> Result<(), Failure> {
    let start = load_valid_graph(file)?;
    let log_text = read_file(logfile)?;
    let log = ActionLog::from_text(&log_text)
        .with_context(|| format!("parsing {}", logfile.display()))
        .map_err(Failure::data)?;
    let end = log.replay(&start).map_err(Failure::data)?;
    print!("{}", canonical_text(&end).map_err(Failure::data)?);
    Ok(())
}
