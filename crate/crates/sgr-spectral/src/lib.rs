//! Numerical cross-checks on the real line for even polynomial
//! potentials `p(x) = x^d + α_{d−2} x^{d−2} + ⋯ + α₂ x²`.
//!
//! Dirichlet walls at `±L` stand in for decay along the two real
//! directions. The central-difference operator of an even potential
//! splits exactly into even and odd half-grid parity blocks, giving:
//!
//! * [`eigs_real`]: the lowest eigenvalues with parity and eigenfunction
//!   zero counts (Sturm-count bisection plus inverse iteration),
//! * [`converged_modes`]: the same with the wall grown and the grid
//!   refined until two resolutions agree,
//! * [`continue_eigenvalue`]: eigenvalue tracking around closed loops in
//!   one complex coefficient, returning the loop's monodromy permutation
//!   (always parity-preserving, because the blocks never couple),
//! * [`parse_job`] / [`run_job`] / [`render_report`]: a plain-text job
//!   front end for the command line.

mod continuation;
mod job;
mod potential;
mod problem;
mod real;

pub use continuation::{continue_eigenvalue, ContinuationOutcome, ContinuationPath};
pub use job::{parse_job, render_report, run_job, JobError, JobReport, SpectrumJob};
pub use potential::PotentialSpec;
pub use problem::SpectralProblem;
pub use real::{converged_modes, eigs_real, EigenMode, Parity};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("degree {degree} is not an even number at least two")]
    OddDegree { degree: usize },
    #[error("degree {degree} takes {} coefficients, got {got}", degree / 2 - 1)]
    CoefficientCount { degree: usize, got: usize },
    #[error("x^{power} is not an interior even power for degree {degree}")]
    BadPower { power: usize, degree: usize },
    #[error("operation needs real coefficients")]
    ComplexCoefficients,
    #[error("half width {half_width} is not a positive finite length")]
    BadHalfWidth { half_width: f64 },
    #[error("grid count {grid_points} is not an even number at least eight")]
    BadGrid { grid_points: usize },
    #[error("cannot resolve {count} modes with {grid_points} grid points")]
    CountTooLarge { count: usize, grid_points: usize },
    #[error("eigenvalue {lambda} reaches the wall height {wall}: widen the domain")]
    Unresolved { lambda: f64, wall: f64 },
    #[error("parity families out of order at index {index}")]
    ParityOrder { index: usize },
    #[error("no two-resolution agreement up to {grid_points} grid points")]
    NoRefinementConvergence { grid_points: usize },
    #[error("continuation must start from real coefficients")]
    ComplexStart,
    #[error("loop does not start at the problem's coefficient of x^{power}")]
    PathMismatch { power: usize },
    #[error("waypoints do not form a closed loop")]
    OpenLoop,
    #[error("no eigenvalue indices to track")]
    EmptyTrack,
    #[error("tracked index {index} repeats")]
    DuplicateTrack { index: usize },
    #[error("step fraction {step} is not usable")]
    BadStep { step: f64 },
    #[error("step control underflowed near coefficient {re}+{im}i")]
    StepUnderflow { re: f64, im: f64 },
    #[error("tracked eigenvalues {a} and {b} collide near coefficient {re}+{im}i")]
    Collision {
        re: f64,
        im: f64,
        a: usize,
        b: usize,
    },
    #[error("endpoint matching is ambiguous")]
    MatchAmbiguous,
}
