//! Even polynomial potentials with leading coefficient one.

use num_complex::Complex64;

use crate::SpectralError;

/// Even polynomial potential `p(x) = x^d + Σ α_{2i} x^{2i}` for
/// `i = 1 .. d/2 - 1`, with complex coefficients and unit leading term.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSpec {
    degree: usize,
    /// `alpha[i]` is the coefficient of `x^{2(i+1)}`, so the list reads
    /// `(α₂, α₄, …, α_{d−2})`.
    alpha: Vec<Complex64>,
}

impl PotentialSpec {
    /// Builds the potential, checking that the degree is even, at least
    /// two, and matches the coefficient count.
    pub fn new(degree: usize, alpha: Vec<Complex64>) -> Result<Self, SpectralError> {
        if degree < 2 || degree % 2 != 0 {
            return Err(SpectralError::OddDegree { degree });
        }
        if alpha.len() != degree / 2 - 1 {
            return Err(SpectralError::CoefficientCount {
                degree,
                got: alpha.len(),
            });
        }
        Ok(PotentialSpec { degree, alpha })
    }

    /// Real potential `x^d` with every lower coefficient zero.
    pub fn pure(degree: usize) -> Result<Self, SpectralError> {
        let count = degree.checked_div(2).unwrap_or(0).saturating_sub(1);
        PotentialSpec::new(degree, vec![Complex64::new(0.0, 0.0); count])
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn coefficients(&self) -> &[Complex64] {
        &self.alpha
    }

    /// Coefficient of `x^{power}`; `power` must be even and lie strictly
    /// between 0 and the degree.
    pub fn coefficient(&self, power: usize) -> Result<Complex64, SpectralError> {
        self.slot(power).map(|i| self.alpha[i])
    }

    /// Returns a copy with the coefficient of `x^{power}` replaced.
    pub fn with_coefficient(
        &self,
        power: usize,
        value: Complex64,
    ) -> Result<PotentialSpec, SpectralError> {
        let slot = self.slot(power)?;
        let mut alpha = self.alpha.clone();
        alpha[slot] = value;
        Ok(PotentialSpec {
            degree: self.degree,
            alpha,
        })
    }

    fn slot(&self, power: usize) -> Result<usize, SpectralError> {
        if power == 0 || power % 2 != 0 || power >= self.degree {
            return Err(SpectralError::BadPower {
                power,
                degree: self.degree,
            });
        }
        Ok(power / 2 - 1)
    }

    /// True when every coefficient is real.
    #[must_use]
    pub fn is_real(&self) -> bool {
        self.alpha.iter().all(|c| c.im == 0.0)
    }

    /// Evaluates the potential at a real point.
    #[must_use]
    pub fn eval(&self, x: f64) -> Complex64 {
        let x2 = x * x;
        let mut acc = Complex64::new(1.0, 0.0);
        for c in self.alpha.iter().rev() {
            acc = acc * x2 + *c;
        }
        acc * x2
    }

    /// Evaluates a real-coefficient potential at a real point.
    pub fn eval_real(&self, x: f64) -> Result<f64, SpectralError> {
        if !self.is_real() {
            return Err(SpectralError::ComplexCoefficients);
        }
        Ok(self.eval(x).re)
    }
}
