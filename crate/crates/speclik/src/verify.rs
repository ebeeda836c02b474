//! Randomized check of the exact finite-sample identities over causal AR(p)
//! models: dense matrix oracles against the closed forms used for fitting.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::dft::dft_values;
use crate::error::{invalid, Result};
use crate::grid::omega;
use crate::models::{poly_value, SpectralModel};
use crate::series::TimeSeriesSample;
use crate::toeplitz::{
    biorthogonality_residual, corner_formula_residual, gaussian_ar_closed_form, gaussian_likelihood_freq,
    gaussian_quadratic_and_logdet, inverse_identity_residual,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    InverseToeplitz,
    Biorthogonality,
    CornerFormula,
    FrequencyGaussian,
    Ar1Difference,
    ArClosedForm,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::InverseToeplitz,
        Identity::Biorthogonality,
        Identity::CornerFormula,
        Identity::FrequencyGaussian,
        Identity::Ar1Difference,
        Identity::ArClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::InverseToeplitz => "inverse-toeplitz",
            Identity::Biorthogonality => "biorthogonality",
            Identity::CornerFormula => "corner-formula",
            Identity::FrequencyGaussian => "frequency-gaussian",
            Identity::Ar1Difference => "ar1-difference",
            Identity::ArClosedForm => "ar-closed-form",
        }
    }

    /// Absolute bound, except the frequency-domain Gaussian which is relative.
    pub fn threshold(self) -> f64 {
        match self {
            Identity::InverseToeplitz => 1e-8,
            Identity::Biorthogonality => 1e-9,
            Identity::CornerFormula => 1e-8,
            Identity::FrequencyGaussian => 1e-9,
            Identity::Ar1Difference => 1e-12,
            Identity::ArClosedForm => 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub cases: usize,
    pub max_residual: f64,
    /// (p, n) of the worst case.
    pub worst_case: (usize, usize),
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.max_residual < self.identity.threshold()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// AR coefficients from reflection coefficients (Levinson step-up).
pub fn ar_from_reflection(kappa: &[f64]) -> Vec<f64> {
    let mut phi: Vec<f64> = Vec::with_capacity(kappa.len());
    for &k in kappa {
        let old = phi.clone();
        let m = old.len();
        for j in 0..m {
            phi[j] = old[j] - k * old[m - 1 - j];
        }
        phi.push(k);
    }
    phi
}

/// Runs every identity on `cases` random (p ≤ max_p, n ≤ max_n) draws.
pub fn run_identity_suite(cases: usize, max_p: usize, max_n: usize, seed: u64) -> Result<IdentityReport> {
    if cases == 0 || max_p == 0 || max_n < 2 * max_p {
        return invalid("need cases ≥ 1, p ≥ 1 and n ≥ 2p");
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks: Vec<IdentityCheck> = Identity::ALL
        .iter()
        .map(|&identity| IdentityCheck { identity, cases: 0, max_residual: 0.0, worst_case: (0, 0) })
        .collect();
    for _ in 0..cases {
        let p = rng.gen_range(1..=max_p);
        let n = rng.gen_range((2 * p).max(4)..=max_n);
        let kappa: Vec<f64> = (0..p).map(|_| rng.gen_range(-0.9..0.9)).collect();
        let phi = ar_from_reflection(&kappa);
        let x: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let phi1: f64 = rng.gen_range(-0.95..0.95);
        let sample = TimeSeriesSample::new(x.clone())?;
        let model = SpectralModel::ar(&phi)?;
        let (q, _) = gaussian_quadratic_and_logdet(&sample, &model)?;

        let freq = gaussian_likelihood_freq(&sample, &model, &phi)?;
        let residuals = [
            inverse_identity_residual(&phi, n)?,
            biorthogonality_residual(&phi, n)?,
            corner_formula_residual(&phi, n)?,
            (freq - q).abs() / q.abs(),
            ar1_difference_residual(&sample, phi1)?,
            (gaussian_ar_closed_form(&x, &phi) - q).abs(),
        ];
        for (c, r) in checks.iter_mut().zip(residuals) {
            c.cases += 1;
            if !(r <= c.max_residual) {
                c.max_residual = if r.is_nan() { f64::INFINITY } else { r };
                c.worst_case = (p, n);
            }
        }
    }
    Ok(IdentityReport { seed, checks, elapsed: start.elapsed() })
}

/// |(L − K) − n⁻¹[2φX₁Xₙ − φ²(X₁² + Xₙ²)]| with L the Gaussian and K the
/// Whittle quadratic term of an AR(1) model.
fn ar1_difference_residual(x: &TimeSeriesSample, phi: f64) -> Result<f64> {
    let v = x.values();
    let n = v.len();
    let model = SpectralModel::ar(&[phi])?;
    let (l, _) = gaussian_quadratic_and_logdet(x, &model)?;
    let j = dft_values(v);
    let k: f64 = (1..=n)
        .map(|k| j.values[k - 1].norm_sqr() * poly_value(&[phi], -1.0, omega(k, n)).norm_sqr())
        .sum::<f64>()
        / n as f64;
    let (x1, xn) = (v[0], v[n - 1]);
    let closed = (2.0 * phi * x1 * xn - phi * phi * (x1 * x1 + xn * xn)) / n as f64;
    Ok(((l - k) - closed).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_up_matches_durbin_levinson() {
        let phi = ar_from_reflection(&[0.5, -0.3, 0.2]);
        let model = SpectralModel::ar(&phi).unwrap();
        let acvf = model.autocovariances(3).unwrap();
        let dl = crate::prefit::durbin_levinson(&acvf).unwrap();
        for (a, b) in dl.partials.iter().zip([0.5, -0.3, 0.2]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn small_suite_passes() {
        let r = run_identity_suite(20, 4, 24, 1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.cases == 20));
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(run_identity_suite(10, 6, 8, 0).is_err());
        assert!(run_identity_suite(0, 1, 8, 0).is_err());
    }
}
