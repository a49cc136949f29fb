//! Eigenvalue continuation along loops in one complex coefficient.
//!
//! An even potential keeps the parity blocks decoupled for complex
//! coefficients, so each tracked eigenvalue is followed inside its own
//! block: at every substep a Newton iteration on the block's scaled
//! characteristic determinant moves the eigenvalue from its previous
//! position, a relative jump beyond the threshold halves the substep, and
//! two tracked eigenvalues approaching each other is reported as a
//! collision with its location. Closing the loop matches the final
//! eigenvalues to the starting ones block by block, so the returned
//! permutation can never mix the parity families.

use num_complex::Complex64;

use crate::potential::PotentialSpec;
use crate::problem::SpectralProblem;
use crate::real::{eigs_real, Parity};
use crate::SpectralError;

/// A closed piecewise-linear loop in one coefficient of the potential,
/// with the eigenvalue indices to follow around it.
#[derive(Debug, Clone)]
pub struct ContinuationPath {
    power: usize,
    waypoints: Vec<Complex64>,
    tracked: Vec<usize>,
    initial_step: f64,
    max_jump: f64,
}

impl ContinuationPath {
    /// Builds a path moving the coefficient of `x^{power}` through the
    /// waypoints; the first and last waypoint must coincide.
    pub fn new(
        power: usize,
        waypoints: Vec<Complex64>,
        tracked: Vec<usize>,
    ) -> Result<Self, SpectralError> {
        if waypoints.len() < 2 || waypoints.first() != waypoints.last() {
            return Err(SpectralError::OpenLoop);
        }
        if tracked.is_empty() {
            return Err(SpectralError::EmptyTrack);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &index in &tracked {
            if !seen.insert(index) {
                return Err(SpectralError::DuplicateTrack { index });
            }
        }
        Ok(ContinuationPath {
            power,
            waypoints,
            tracked,
            initial_step: 0.25,
            max_jump: 0.2,
        })
    }

    /// Replaces the initial substep fraction (of each segment).
    pub fn with_initial_step(mut self, step: f64) -> Result<Self, SpectralError> {
        if !(step.is_finite() && step > 0.0 && step <= 1.0) {
            return Err(SpectralError::BadStep { step });
        }
        self.initial_step = step;
        Ok(self)
    }

    /// Replaces the maximum relative eigenvalue jump per substep.
    pub fn with_max_jump(mut self, jump: f64) -> Result<Self, SpectralError> {
        if !(jump.is_finite() && jump > 0.0 && jump < 1.0) {
            return Err(SpectralError::BadStep { step: jump });
        }
        self.max_jump = jump;
        Ok(self)
    }

    /// The same loop walked backwards.
    #[must_use]
    pub fn reversed(&self) -> ContinuationPath {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        ContinuationPath {
            power: self.power,
            waypoints,
            tracked: self.tracked.clone(),
            initial_step: self.initial_step,
            max_jump: self.max_jump,
        }
    }

    #[must_use]
    pub fn power(&self) -> usize {
        self.power
    }

    #[must_use]
    pub fn waypoints(&self) -> &[Complex64] {
        &self.waypoints
    }

    #[must_use]
    pub fn tracked(&self) -> &[usize] {
        &self.tracked
    }
}

/// Result of walking a loop: starting and final eigenvalues per tracked
/// index, and the loop monodromy as `permutation[i] = j`, meaning the
/// `i`-th tracked eigenvalue ends where the `j`-th one started.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuationOutcome {
    pub start: Vec<Complex64>,
    pub end: Vec<Complex64>,
    pub permutation: Vec<usize>,
}

/// Complex symmetric tridiagonal parity block; the couplings stay real.
struct ComplexTri {
    diag: Vec<Complex64>,
    off: Vec<f64>,
}

fn complex_block(prob: &SpectralProblem, potential: &PotentialSpec, parity: Parity) -> ComplexTri {
    let h = prob.spacing();
    let inv_h2 = 1.0 / (h * h);
    let half = prob.grid_points() / 2;
    let base = Complex64::new(2.0 * inv_h2, 0.0);
    match parity {
        Parity::Even => {
            let diag = (0..half)
                .map(|j| base + potential.eval(j as f64 * h))
                .collect();
            let off = (0..half - 1)
                .map(|j| {
                    if j == 0 {
                        -std::f64::consts::SQRT_2 * inv_h2
                    } else {
                        -inv_h2
                    }
                })
                .collect();
            ComplexTri { diag, off }
        }
        Parity::Odd => {
            let diag = (1..half)
                .map(|j| base + potential.eval(j as f64 * h))
                .collect();
            let off = vec![-inv_h2; half.saturating_sub(2)];
            ComplexTri { diag, off }
        }
    }
}

/// One Newton correction `f(λ)/f'(λ)` for the block determinant, with
/// joint rescaling of the recurrence to avoid overflow.
fn determinant_ratio(t: &ComplexTri, lambda: Complex64) -> Complex64 {
    let mut f_prev = Complex64::new(0.0, 0.0);
    let mut f = Complex64::new(1.0, 0.0);
    let mut fp_prev = Complex64::new(0.0, 0.0);
    let mut fp = Complex64::new(0.0, 0.0);
    for i in 0..t.diag.len() {
        let b2 = if i == 0 {
            0.0
        } else {
            t.off[i - 1] * t.off[i - 1]
        };
        let shifted = t.diag[i] - lambda;
        let f_next = shifted * f - b2 * f_prev;
        let fp_next = -f + shifted * fp - b2 * fp_prev;
        f_prev = f;
        f = f_next;
        fp_prev = fp;
        fp = fp_next;
        let scale = f.norm().max(fp.norm());
        if scale > 1e100 || (scale < 1e-100 && scale > 0.0) {
            let inv = 1.0 / scale;
            f_prev *= inv;
            f *= inv;
            fp_prev *= inv;
            fp *= inv;
        }
    }
    f / fp
}

fn newton_eigenvalue(t: &ComplexTri, seed: Complex64) -> Option<Complex64> {
    let mut lambda = seed;
    let mut last_progress = f64::INFINITY;
    for _ in 0..60 {
        let step = determinant_ratio(t, lambda);
        if !step.re.is_finite() || !step.im.is_finite() {
            return None;
        }
        lambda -= step;
        let moved = step.norm();
        let scale = 1.0 + lambda.norm();
        if moved <= 1e-12 * scale {
            return Some(lambda);
        }
        // The determinant recurrence has a rounding floor of roughly the
        // block length times machine epsilon; once steps stop shrinking
        // inside that floor the iteration has landed.
        if moved <= 1e-8 * scale && moved >= 0.5 * last_progress {
            return Some(lambda);
        }
        last_progress = moved;
    }
    None
}

fn advance(
    prob: &SpectralProblem,
    potential: &PotentialSpec,
    parities: &[Parity],
    lambdas: &[Complex64],
    max_jump: f64,
) -> Option<Vec<Complex64>> {
    let even = parities
        .contains(&Parity::Even)
        .then(|| complex_block(prob, potential, Parity::Even));
    let odd = parities
        .contains(&Parity::Odd)
        .then(|| complex_block(prob, potential, Parity::Odd));
    let mut out = Vec::with_capacity(lambdas.len());
    for (parity, &lambda) in parities.iter().zip(lambdas) {
        let block = match parity {
            Parity::Even => even.as_ref().unwrap(),
            Parity::Odd => odd.as_ref().unwrap(),
        };
        let next = newton_eigenvalue(block, lambda)?;
        let jump = (next - lambda).norm() / lambda.norm().max(1e-12);
        if jump > max_jump {
            return None;
        }
        out.push(next);
    }
    Some(out)
}

fn collision(parities: &[Parity], lambdas: &[Complex64]) -> Option<(usize, usize)> {
    for i in 0..lambdas.len() {
        for j in i + 1..lambdas.len() {
            if parities[i] != parities[j] {
                continue;
            }
            let scale = lambdas[i].norm().max(lambdas[j].norm()).max(1.0);
            if (lambdas[i] - lambdas[j]).norm() <= 1e-9 * scale {
                return Some((i, j));
            }
        }
    }
    None
}

/// Walks the loop and returns the final eigenvalues with the monodromy
/// permutation of the tracked indices. The problem's coefficients must be
/// real (the loop starts and ends there) and the loop's first waypoint
/// must equal the problem's current coefficient.
pub fn continue_eigenvalue(
    prob: &SpectralProblem,
    path: &ContinuationPath,
) -> Result<ContinuationOutcome, SpectralError> {
    let potential = &prob.potential;
    if !potential.is_real() {
        return Err(SpectralError::ComplexStart);
    }
    let at = potential.coefficient(path.power)?;
    if (at - path.waypoints[0]).norm() > 1e-12 {
        return Err(SpectralError::PathMismatch { power: path.power });
    }

    let count = path.tracked.iter().max().copied().unwrap_or(0) + 1;
    let modes = eigs_real(prob, count)?;
    let parities: Vec<Parity> = path.tracked.iter().map(|&g| modes[g].parity).collect();
    let start: Vec<Complex64> = path
        .tracked
        .iter()
        .map(|&g| Complex64::new(modes[g].lambda, 0.0))
        .collect();
    let mut lambdas = start.clone();

    for segment in path.waypoints.windows(2) {
        let (from, to) = (segment[0], segment[1]);
        if from == to {
            continue;
        }
        let mut walked = 0.0f64;
        let mut step = path.initial_step;
        while walked < 1.0 {
            let target = (walked + step).min(1.0);
            let alpha = from + (to - from) * target;
            let moved = potential.with_coefficient(path.power, alpha)?;
            let next = advance(prob, &moved, &parities, &lambdas, path.max_jump);
            let accepted = match next {
                Some(next) => match collision(&parities, &next) {
                    Some((a, b)) => {
                        if step < 2e-6 {
                            return Err(SpectralError::Collision {
                                re: alpha.re,
                                im: alpha.im,
                                a: path.tracked[a],
                                b: path.tracked[b],
                            });
                        }
                        None
                    }
                    None => Some(next),
                },
                None => None,
            };
            match accepted {
                Some(next) => {
                    lambdas = next;
                    walked = target;
                    step = (step * 1.6).min(path.initial_step);
                }
                None => {
                    step *= 0.5;
                    if step < 1e-6 {
                        return Err(SpectralError::StepUnderflow {
                            re: alpha.re,
                            im: alpha.im,
                        });
                    }
                }
            }
        }
    }

    let mut permutation = vec![0usize; lambdas.len()];
    let mut taken = vec![false; lambdas.len()];
    for i in 0..lambdas.len() {
        let mut best = None;
        let mut best_distance = f64::INFINITY;
        for (j, &origin) in start.iter().enumerate() {
            if parities[j] != parities[i] {
                continue;
            }
            let distance = (lambdas[i] - origin).norm();
            if distance < best_distance {
                best_distance = distance;
                best = Some(j);
            }
        }
        let j = best.expect("every tracked index has a same-parity origin");
        if taken[j] {
            return Err(SpectralError::MatchAmbiguous);
        }
        taken[j] = true;
        permutation[i] = j;
    }

    Ok(ContinuationOutcome {
        start,
        end: lambdas,
        permutation,
    })
}
