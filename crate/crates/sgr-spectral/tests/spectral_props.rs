//! Properties over random real coefficients: parity interlacing, zero
//! counts matching the mode index, and agreement under refinement.

use num_complex::Complex64;
use proptest::prelude::*;
use sgr_spectral::{converged_modes, eigs_real, Parity, PotentialSpec, SpectralProblem};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn parity_interlacing_and_zero_counts_hold(
        degree_pick in 0usize..2,
        raw in prop::collection::vec(-3.0f64..3.0, 2),
    ) {
        let degree = [4usize, 6][degree_pick];
        let alpha: Vec<Complex64> = raw
            .iter()
            .take(degree / 2 - 1)
            .map(|&a| Complex64::new(a, 0.0))
            .collect();
        let potential = PotentialSpec::new(degree, alpha).unwrap();
        let seed = SpectralProblem::new(potential, 2.0, 512).unwrap();
        let (modes, prob) = converged_modes(&seed, 6, 1e-5).unwrap();

        for (k, mode) in modes.iter().enumerate() {
            let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
            prop_assert_eq!(mode.parity, parity);
            prop_assert_eq!(mode.zeros, k);
            if k + 1 < modes.len() {
                prop_assert!(mode.lambda < modes[k + 1].lambda);
            }
        }

        let finer = eigs_real(&prob.refined().unwrap(), 6).unwrap();
        for (a, b) in modes.iter().zip(&finer) {
            let relative = (a.lambda - b.lambda).abs() / b.lambda.abs().max(1e-12);
            prop_assert!(relative < 1e-5);
        }
    }
}
