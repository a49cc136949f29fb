//! Plain-text spectrum jobs.
//!
//! A job file is line-oriented; blank lines and lines starting with `#`
//! are skipped. The header is `spectrum 1`, then:
//!
//! ```text
//! degree 4
//! alpha 2 1.0 0.0
//! count 8
//! loop 2
//! step 0.25
//! track 0 1 2 3
//! waypoint 1.0 0.0
//! waypoint 1.1 0.1
//! waypoint 1.0 0.0
//! ```
//!
//! `degree` is required; `alpha <power> <re> <im>` sets one coefficient
//! (unset coefficients are zero); `count` picks the table length. The
//! optional `loop <power>` block walks the closed waypoint polygon in that
//! coefficient, following the `track`ed eigenvalue indices.
//!
//! The report is a table line per mode, `track` lines with the final
//! eigenvalues when a loop ran, and a `permutation` line mapping each
//! tracked index to the start index it returned to.

use num_complex::Complex64;
use thiserror::Error;

use crate::continuation::{continue_eigenvalue, ContinuationOutcome, ContinuationPath};
use crate::potential::PotentialSpec;
use crate::problem::SpectralProblem;
use crate::real::{converged_modes, EigenMode};
use crate::SpectralError;

/// A parsed job: the potential, how many modes to report, and an
/// optional coefficient loop to walk.
#[derive(Debug, Clone)]
pub struct SpectrumJob {
    pub potential: PotentialSpec,
    pub count: usize,
    pub path: Option<ContinuationPath>,
}

/// Everything a job produced.
#[derive(Debug, Clone)]
pub struct JobReport {
    pub modes: Vec<EigenMode>,
    pub problem: SpectralProblem,
    pub outcome: Option<ContinuationOutcome>,
    tracked: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum JobError {
    #[error("line {line}: {detail}")]
    Syntax { line: usize, detail: String },
    #[error("missing required line: {0}")]
    Missing(&'static str),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

fn syntax(line: usize, detail: impl Into<String>) -> JobError {
    JobError::Syntax {
        line,
        detail: detail.into(),
    }
}

fn parse_number<T: std::str::FromStr>(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<T, JobError> {
    let token = token.ok_or_else(|| syntax(line, format!("expected {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad {what}: {token}")))
}

/// Parses a job file.
pub fn parse_job(text: &str) -> Result<SpectrumJob, JobError> {
    let mut degree = None;
    let mut alphas: Vec<(usize, Complex64)> = Vec::new();
    let mut count = 6usize;
    let mut loop_power = None;
    let mut step = None;
    let mut tracked: Vec<usize> = Vec::new();
    let mut waypoints: Vec<Complex64> = Vec::new();
    let mut saw_header = false;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let key = words.next().expect("nonempty line has a first word");
        if !saw_header {
            if key != "spectrum" || words.next() != Some("1") {
                return Err(syntax(line, "expected header: spectrum 1"));
            }
            saw_header = true;
            continue;
        }
        match key {
            "degree" => degree = Some(parse_number::<usize>(line, words.next(), "degree")?),
            "alpha" => {
                let power = parse_number::<usize>(line, words.next(), "power")?;
                let re = parse_number::<f64>(line, words.next(), "real part")?;
                let im = parse_number::<f64>(line, words.next(), "imaginary part")?;
                alphas.push((power, Complex64::new(re, im)));
            }
            "count" => count = parse_number::<usize>(line, words.next(), "count")?,
            "loop" => loop_power = Some(parse_number::<usize>(line, words.next(), "power")?),
            "step" => step = Some(parse_number::<f64>(line, words.next(), "step")?),
            "track" => {
                for word in words.by_ref() {
                    tracked.push(parse_number::<usize>(line, Some(word), "tracked index")?);
                }
                continue;
            }
            "waypoint" => {
                let re = parse_number::<f64>(line, words.next(), "real part")?;
                let im = parse_number::<f64>(line, words.next(), "imaginary part")?;
                waypoints.push(Complex64::new(re, im));
            }
            other => return Err(syntax(line, format!("unknown key: {other}"))),
        }
        if let Some(extra) = words.next() {
            return Err(syntax(line, format!("trailing token: {extra}")));
        }
    }

    if !saw_header {
        return Err(JobError::Missing("spectrum 1"));
    }
    let degree = degree.ok_or(JobError::Missing("degree"))?;
    let mut potential = PotentialSpec::pure(degree)?;
    for (power, value) in alphas {
        potential = potential.with_coefficient(power, value)?;
    }

    let path = match loop_power {
        None => {
            if !tracked.is_empty() || !waypoints.is_empty() || step.is_some() {
                return Err(JobError::Missing("loop"));
            }
            None
        }
        Some(power) => {
            let mut path = ContinuationPath::new(power, waypoints, tracked)?;
            if let Some(step) = step {
                path = path.with_initial_step(step)?;
            }
            Some(path)
        }
    };

    Ok(SpectrumJob {
        potential,
        count,
        path,
    })
}

/// Runs a job: converged real table first, then the loop if present.
pub fn run_job(job: &SpectrumJob) -> Result<JobReport, SpectralError> {
    let seed = SpectralProblem::new(job.potential.clone(), 2.0, 512)?;
    let (modes, problem) = converged_modes(&seed, job.count, 1e-6)?;
    let (outcome, tracked) = match &job.path {
        Some(path) => (
            Some(continue_eigenvalue(&problem, path)?),
            path.tracked().to_vec(),
        ),
        None => (None, Vec::new()),
    };
    Ok(JobReport {
        modes,
        problem,
        outcome,
        tracked,
    })
}

/// Renders the report as the plain-text table and permutation line.
#[must_use]
pub fn render_report(report: &JobReport) -> String {
    let mut out = String::new();
    for (k, mode) in report.modes.iter().enumerate() {
        out.push_str(&format!(
            "mode {k} parity {} lambda {:.9} {:.9} zeros {}\n",
            mode.parity.word(),
            mode.lambda,
            0.0,
            mode.zeros
        ));
    }
    if let Some(outcome) = &report.outcome {
        for (i, value) in outcome.end.iter().enumerate() {
            out.push_str(&format!(
                "track {} lambda {:.9} {:.9}\n",
                report.tracked[i], value.re, value.im
            ));
        }
        out.push_str("permutation");
        for &image in &outcome.permutation {
            out.push_str(&format!(" {}", report.tracked[image]));
        }
        out.push('\n');
    }
    out
}
