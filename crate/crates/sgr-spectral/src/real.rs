//! Real-line eigenvalues by parity blocks.
//!
//! The grid has a node at the origin, so an even potential decouples the
//! central-difference operator into an even half-grid block (origin node
//! scaled by `1/√2` to keep the block symmetric) and an odd block with a
//! Dirichlet node at the origin. Eigenvalues come from Sturm-count
//! bisection on each block, eigenvectors from shifted inverse iteration,
//! and zero counts from the sign changes of the full-line eigenfunction.

use crate::problem::SpectralProblem;
use crate::SpectralError;

/// Parity family of an eigenfunction of an even potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[must_use]
    pub fn word(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// One computed eigenvalue with its parity family and the zero count of
/// its eigenfunction on the open interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenMode {
    pub lambda: f64,
    pub parity: Parity,
    pub zeros: usize,
}

/// Symmetric tridiagonal block; `off[i]` couples rows `i` and `i + 1`.
#[derive(Debug, Clone)]
pub(crate) struct SymTri {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTri {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin bounds on the spectrum.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut radius = 0.0;
            if i > 0 {
                radius += self.off[i - 1].abs();
            }
            if i + 1 < n {
                radius += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        (lo, hi)
    }
}

/// Number of eigenvalues strictly below `x`, by the Sturm sequence of the
/// shifted LDLᵀ factorization.
pub(crate) fn negcount(t: &SymTri, x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0f64;
    for i in 0..t.len() {
        let b2 = if i == 0 {
            0.0
        } else {
            t.off[i - 1] * t.off[i - 1]
        };
        d = (t.diag[i] - x) - b2 / d;
        if d < 0.0 {
            count += 1;
        } else if d == 0.0 {
            d = -f64::MIN_POSITIVE;
            count += 1;
        }
    }
    count
}

/// The `k`-th smallest eigenvalue (zero-based) by bisection, driven to
/// the last representable interval.
pub(crate) fn bisect_eigenvalue(t: &SymTri, k: usize) -> f64 {
    let (mut lo, mut hi) = t.bounds();
    while hi - lo > f64::EPSILON * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if negcount(t, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `(T - shift) w = rhs` by tridiagonal elimination with partial
/// pivoting (one extra superdiagonal of fill).
pub(crate) fn solve_shifted(t: &SymTri, shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = t.len();
    let mut m: Vec<f64> = t.diag.iter().map(|a| a - shift).collect();
    let mut u1 = vec![0.0f64; n];
    let mut u2 = vec![0.0f64; n];
    let mut sub = vec![0.0f64; n];
    for i in 0..n.saturating_sub(1) {
        u1[i] = t.off[i];
        sub[i] = t.off[i];
    }
    let mut x = rhs.to_vec();
    let tiny = f64::EPSILON * (1.0 + shift.abs());
    for i in 0..n.saturating_sub(1) {
        if sub[i].abs() > m[i].abs() {
            let held = m[i];
            m[i] = sub[i];
            sub[i] = held;
            let held = u1[i];
            u1[i] = m[i + 1];
            m[i + 1] = held;
            let held = u2[i];
            u2[i] = u1[i + 1];
            u1[i + 1] = held;
            x.swap(i, i + 1);
        }
        if m[i] == 0.0 {
            m[i] = tiny;
        }
        let f = sub[i] / m[i];
        m[i + 1] -= f * u1[i];
        u1[i + 1] -= f * u2[i];
        x[i + 1] -= f * x[i];
    }
    if m[n - 1] == 0.0 {
        m[n - 1] = tiny;
    }
    x[n - 1] /= m[n - 1];
    if n >= 2 {
        x[n - 2] = (x[n - 2] - u1[n - 2] * x[n - 1]) / m[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (x[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / m[i];
    }
    x
}

/// Eigenvector for an isolated eigenvalue by inverse iteration from a
/// fixed deterministic start.
pub(crate) fn inverse_iteration(t: &SymTri, lambda: f64) -> Vec<f64> {
    let n = t.len();
    let mut v: Vec<f64> = (0..n)
        .map(|j| 1.0 + (j.wrapping_mul(2_654_435_761) % 1000) as f64 / 1000.0)
        .collect();
    for _ in 0..3 {
        let w = solve_shifted(t, lambda, &v);
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
    }
    v
}

/// Sign alternations along a vector, ignoring entries tiny relative to
/// the largest.
pub(crate) fn sign_changes(v: &[f64]) -> usize {
    let vmax = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let threshold = vmax * 1e-10;
    let mut count = 0;
    let mut last = 0.0f64;
    for &x in v {
        if x.abs() <= threshold {
            continue;
        }
        if last != 0.0 && (x < 0.0) != (last < 0.0) {
            count += 1;
        }
        last = x;
    }
    count
}

/// Builds the even and odd half-grid blocks of the central-difference
/// operator `-y'' + p(x) y` for a real potential.
pub(crate) fn parity_blocks(prob: &SpectralProblem) -> Result<(SymTri, SymTri), SpectralError> {
    if !prob.potential.is_real() {
        return Err(SpectralError::ComplexCoefficients);
    }
    let h = prob.spacing();
    let inv_h2 = 1.0 / (h * h);
    let half = prob.grid_points() / 2;

    let mut even = SymTri {
        diag: Vec::with_capacity(half),
        off: Vec::with_capacity(half - 1),
    };
    for j in 0..half {
        let x = j as f64 * h;
        even.diag.push(2.0 * inv_h2 + prob.potential.eval(x).re);
        if j + 1 < half {
            let coupling = if j == 0 {
                std::f64::consts::SQRT_2 * inv_h2
            } else {
                inv_h2
            };
            even.off.push(-coupling);
        }
    }

    let mut odd = SymTri {
        diag: Vec::with_capacity(half - 1),
        off: Vec::with_capacity(half.saturating_sub(2)),
    };
    for j in 1..half {
        let x = j as f64 * h;
        odd.diag.push(2.0 * inv_h2 + prob.potential.eval(x).re);
        if j + 1 < half {
            odd.off.push(-inv_h2);
        }
    }
    Ok((even, odd))
}

fn zeros_of_mode(block: &SymTri, lambda: f64, parity: Parity) -> usize {
    let v = inverse_iteration(block, lambda);
    match parity {
        Parity::Even => 2 * sign_changes(&v),
        Parity::Odd => 2 * sign_changes(&v) + 1,
    }
}

/// Lowest `count` eigenvalues of the truncated problem, one parity at a
/// time: eigenvalues strictly increase and parity alternates starting
/// even; each mode carries the zero count of its eigenfunction.
pub fn eigs_real(prob: &SpectralProblem, count: usize) -> Result<Vec<EigenMode>, SpectralError> {
    let (even, odd) = parity_blocks(prob)?;
    let even_needed = count.div_ceil(2);
    let odd_needed = count / 2;
    if even_needed > even.len() || odd_needed > odd.len() {
        return Err(SpectralError::CountTooLarge {
            count,
            grid_points: prob.grid_points(),
        });
    }

    let mut modes = Vec::with_capacity(count);
    for k in 0..even_needed {
        let lambda = bisect_eigenvalue(&even, k);
        modes.push(EigenMode {
            lambda,
            parity: Parity::Even,
            zeros: zeros_of_mode(&even, lambda, Parity::Even),
        });
    }
    for k in 0..odd_needed {
        let lambda = bisect_eigenvalue(&odd, k);
        modes.push(EigenMode {
            lambda,
            parity: Parity::Odd,
            zeros: zeros_of_mode(&odd, lambda, Parity::Odd),
        });
    }
    modes.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    modes.truncate(count);

    for (i, mode) in modes.iter().enumerate() {
        let expected = if i % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        if mode.parity != expected {
            return Err(SpectralError::ParityOrder { index: i });
        }
        if i + 1 < modes.len() && modes[i + 1].lambda <= mode.lambda {
            return Err(SpectralError::ParityOrder { index: i + 1 });
        }
    }

    if let Some(top) = modes.last() {
        let wall = prob.potential.eval(prob.half_width()).re;
        let margin = (0.25 * top.lambda.abs()).max(1.0);
        if wall < top.lambda + margin {
            return Err(SpectralError::Unresolved {
                lambda: top.lambda,
                wall,
            });
        }
    }
    Ok(modes)
}

/// Solves with an automatically grown wall and a grid refined until two
/// successive resolutions agree to `rel_tol` on every reported
/// eigenvalue. Returns the finer solve and its problem.
pub fn converged_modes(
    prob_seed: &SpectralProblem,
    count: usize,
    rel_tol: f64,
) -> Result<(Vec<EigenMode>, SpectralProblem), SpectralError> {
    let potential = prob_seed.potential.clone();
    let mut half_width = prob_seed.half_width();
    let coarse_grid = prob_seed.grid_points();
    let mut grown = None;
    for _ in 0..60 {
        let prob = SpectralProblem::new(potential.clone(), half_width, coarse_grid)?;
        match eigs_real(&prob, count) {
            Ok(_) => {
                grown = Some(prob);
                break;
            }
            Err(SpectralError::Unresolved { .. }) => half_width *= 1.4,
            Err(e) => return Err(e),
        }
    }
    let Some(grown) = grown else {
        return Err(SpectralError::BadHalfWidth { half_width });
    };

    let mut prob = SpectralProblem::new(potential.clone(), grown.half_width() * 1.5, coarse_grid)?;
    let mut modes = eigs_real(&prob, count)?;
    loop {
        let next_prob = prob.refined()?;
        let next = eigs_real(&next_prob, count)?;
        let worst = modes
            .iter()
            .zip(&next)
            .map(|(a, b)| (a.lambda - b.lambda).abs() / b.lambda.abs().max(f64::MIN_POSITIVE))
            .fold(0.0f64, f64::max);
        if worst < rel_tol {
            return Ok((next, next_prob));
        }
        if next_prob.grid_points() >= 1 << 17 {
            return Err(SpectralError::NoRefinementConvergence {
                grid_points: next_prob.grid_points(),
            });
        }
        modes = next;
        prob = next_prob;
    }
}
