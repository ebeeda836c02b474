//! Gaussian and chi-squared-innovation ARMA and ARFIMA samples.
//!
//! Every stream is a ChaCha8 generator seeded with `mix_seed(base, i)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{invalid, Error, Result};
use crate::models::SpectralModel;
use crate::series::TimeSeriesSample;
use crate::toeplitz::innovations_filter;

pub const BURN_IN: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InnovationKind {
    Gaussian,
    /// (χ²(2) − 2)/2, i.e. Exp(1) − 1.
    ChiSquared,
}

impl fmt::Display for InnovationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnovationKind::Gaussian => "gaussian",
            InnovationKind::ChiSquared => "chisq",
        })
    }
}

impl FromStr for InnovationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "normal" => Ok(InnovationKind::Gaussian),
            "chisq" | "chi-squared" | "chi2" => Ok(InnovationKind::ChiSquared),
            _ => invalid(format!("unknown innovation kind '{s}'")),
        }
    }
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// seed_i = splitmix64(base + (i + 1)·γ) with γ the odd golden-ratio constant,
/// so distinct i give distinct seeds.
pub fn mix_seed(base: u64, i: u64) -> u64 {
    splitmix64(base.wrapping_add(i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngPlan {
    pub base_seed: u64,
}

impl RngPlan {
    pub fn new(base_seed: u64) -> Self {
        RngPlan { base_seed }
    }

    pub fn seed(&self, i: u64) -> u64 {
        mix_seed(self.base_seed, i)
    }

    pub fn rng(&self, i: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed(i))
    }
}

fn draw(rng: &mut ChaCha8Rng, kind: InnovationKind) -> f64 {
    match kind {
        InnovationKind::Gaussian => rng.sample(StandardNormal),
        InnovationKind::ChiSquared => {
            let e: f64 = rng.sample(Exp1);
            e - 1.0
        }
    }
}

pub fn innovations_sequence(n: usize, kind: InnovationKind, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| draw(&mut rng, kind)).collect()
}

pub fn simulate_arma(
    phi: &[f64],
    psi: &[f64],
    n: usize,
    kind: InnovationKind,
    seed: u64,
) -> Result<TimeSeriesSample> {
    let model = SpectralModel::arma(phi, psi)?;
    simulate_model(&model, n, kind, seed)
}

pub fn simulate_arfima(d: f64, n: usize, kind: InnovationKind, seed: u64) -> Result<TimeSeriesSample> {
    let model = SpectralModel::arfima(d)?;
    simulate_model(&model, n, kind, seed)
}

/// Gaussian: exact stationary draw through the innovations filter.
/// Chi-squared: ARMA recursion with burn-in from a zero state; ARFIMA through
/// the innovations filter.
pub fn simulate_model(model: &SpectralModel, n: usize, kind: InnovationKind, seed: u64) -> Result<TimeSeriesSample> {
    Sampler::new(model, n)?.draw(kind, seed)
}

/// Draws repeated samples of one length from one model; the autocovariances
/// are computed once.
#[derive(Debug, Clone)]
pub struct Sampler {
    model: SpectralModel,
    n: usize,
    acvf: Vec<f64>,
}

impl Sampler {
    pub fn new(model: &SpectralModel, n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("n must be positive");
        }
        let validity = model.validate();
        if !validity.valid {
            return Err(Error::InvalidParams(validity.diagnostic.unwrap_or_default()));
        }
        let lags = if pure_ar(model) { model.ar_coeffs().len().min(n - 1) } else { n - 1 };
        Ok(Sampler { model: model.clone(), n, acvf: model.autocovariances(lags)? })
    }

    pub fn draw(&self, kind: InnovationKind, seed: u64) -> Result<TimeSeriesSample> {
        let n = self.n;
        let values = if kind == InnovationKind::ChiSquared && !self.model.family().is_long_memory() {
            let eps = innovations_sequence(n + BURN_IN, kind, seed);
            let mut x = arma_recursion(self.model.ar_coeffs(), self.model.ma_coeffs(), &eps);
            x.drain(..BURN_IN);
            x
        } else {
            let eps = innovations_sequence(n, kind, seed);
            self.exact_draw(&eps)?
        };
        TimeSeriesSample::new(values)
    }

    /// Maps unit-variance white noise to a draw with the model's covariance.
    /// Pure AR switches to the recursion once the predictor reaches order p,
    /// where the finite-past predictor is already exact.
    fn exact_draw(&self, eps: &[f64]) -> Result<Vec<f64>> {
        let phi = self.model.ar_coeffs();
        if pure_ar(&self.model) && phi.len() < eps.len() {
            let p = phi.len();
            let mut x = innovations_filter(&self.acvf, &eps[..p])?;
            for t in p..eps.len() {
                let v: f64 = phi.iter().enumerate().map(|(j, a)| a * x[t - 1 - j]).sum();
                x.push(v + eps[t]);
            }
            return Ok(x);
        }
        innovations_filter(&self.acvf, eps)
    }
}

fn pure_ar(model: &SpectralModel) -> bool {
    model.ma_coeffs().is_empty() && !model.family().is_long_memory()
}

/// x_t = Σ φ_j x_{t−j} + ε_t + Σ ψ_j ε_{t−j}, zero initial state.
pub fn arma_recursion(phi: &[f64], psi: &[f64], eps: &[f64]) -> Vec<f64> {
    let mut x = Vec::with_capacity(eps.len());
    for t in 0..eps.len() {
        let mut v = eps[t];
        for (j, a) in phi.iter().enumerate() {
            if t > j {
                v += a * x[t - 1 - j];
            }
        }
        for (j, b) in psi.iter().enumerate() {
            if t > j {
                v += b * eps[t - 1 - j];
            }
        }
        x.push(v);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::sample_autocovariance;

    fn mean_var(v: &[f64]) -> (f64, f64) {
        let m = v.iter().sum::<f64>() / v.len() as f64;
        (m, v.iter().map(|a| (a - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64)
    }

    #[test]
    fn white_noise_moments() {
        let x = simulate_arma(&[], &[], 100_000, InnovationKind::Gaussian, 3).unwrap();
        let (m, v) = mean_var(x.values());
        let n = 1e5f64;
        assert!(m.abs() < 3.0 / n.sqrt());
        // var of s² for N(0,1) is 2/n
        assert!((v - 1.0).abs() < 3.0 * (2.0 / n).sqrt());
    }

    #[test]
    fn chisq_innovation_moments() {
        let e = innovations_sequence(1_000_000, InnovationKind::ChiSquared, 11);
        let (m, v) = mean_var(&e);
        let n = 1e6f64;
        assert!(m.abs() < 3.0 / n.sqrt());
        // Exp(1) − 1 has fourth central moment 9
        assert!((v - 1.0).abs() < 3.0 * (8.0 / n).sqrt());
    }

    #[test]
    fn ar1_lag_one_correlation() {
        let mut num = 0.0;
        let mut den = 0.0;
        for r in 0..100 {
            let x = simulate_arma(&[0.7], &[], 1000, InnovationKind::Gaussian, mix_seed(5, r)).unwrap();
            let v = x.values();
            for t in 1..v.len() {
                num += v[t] * v[t - 1];
            }
            den += v.iter().map(|a| a * a).sum::<f64>();
        }
        let rho = num / den * 100_000.0 / 99_900.0;
        // lag-one sample autocorrelation of AR(1): asymptotic variance (1 − ρ²)/N
        let se = ((1.0 - 0.49) / 1e5f64).sqrt();
        assert!((rho - 0.7).abs() < 3.0 * se, "{rho}");
    }

    #[test]
    fn deterministic_streams() {
        let a = simulate_arma(&[0.3], &[0.2], 40, InnovationKind::ChiSquared, 9).unwrap();
        let b = simulate_arma(&[0.3], &[0.2], 40, InnovationKind::ChiSquared, 9).unwrap();
        assert_eq!(a, b);
        let c = simulate_arfima(0.3, 40, InnovationKind::Gaussian, 9).unwrap();
        assert_eq!(c, simulate_arfima(0.3, 40, InnovationKind::Gaussian, 9).unwrap());
        let plan = RngPlan::new(1);
        let seeds: std::collections::HashSet<u64> = (0..10_000).map(|i| plan.seed(i)).collect();
        assert_eq!(seeds.len(), 10_000);
    }

    #[test]
    fn arfima_zero_is_innovations() {
        let x = simulate_arfima(0.0, 50, InnovationKind::ChiSquared, 4).unwrap();
        let e = innovations_sequence(50, InnovationKind::ChiSquared, 4);
        for (a, b) in x.values().iter().zip(&e) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn arfima_variance() {
        // c(0) = Γ(1 − 2d)/Γ(1 − d)²
        let d = 0.4;
        let truth = statrs::function::gamma::gamma(1.0 - 2.0 * d) / statrs::function::gamma::gamma(1.0 - d).powi(2);
        let vals: Vec<f64> = (0..20_000)
            .map(|r| simulate_arfima(d, 4, InnovationKind::Gaussian, mix_seed(8, r)).unwrap().values()[0])
            .collect();
        let (_, v) = mean_var(&vals);
        let se = truth * (2.0 / 20_000f64).sqrt();
        assert!((v - truth).abs() < 3.0 * se, "{v} {truth}");
    }

    #[test]
    fn exact_gram_matrix() {
        let model = SpectralModel::arma(&[0.5, -0.2], &[0.4]).unwrap();
        let acvf = model.autocovariances(7).unwrap();
        let reps = 20_000;
        let mut g = vec![0.0; 64];
        let mut g2 = vec![0.0; 64];
        let sampler = Sampler::new(&model, 8).unwrap();
        for r in 0..reps {
            let x = sampler.draw(InnovationKind::Gaussian, mix_seed(21, r)).unwrap();
            let v = x.values();
            for i in 0..8 {
                for j in 0..8 {
                    let p = v[i] * v[j];
                    g[i * 8 + j] += p;
                    g2[i * 8 + j] += p * p;
                }
            }
        }
        for i in 0..8 {
            for j in 0..8 {
                let m = g[i * 8 + j] / reps as f64;
                let sd = (g2[i * 8 + j] / reps as f64 - m * m).sqrt();
                let target = acvf[i.abs_diff(j)];
                assert!((m - target).abs() < 4.0 * sd / (reps as f64).sqrt(), "({i},{j}) {m} {target}");
            }
        }
    }

    #[test]
    fn ar_fast_path_matches_filter() {
        let model = SpectralModel::ar(&[0.5, -0.3, 0.1]).unwrap();
        let eps = innovations_sequence(30, InnovationKind::Gaussian, 2);
        let fast = Sampler::new(&model, 30).unwrap().exact_draw(&eps).unwrap();
        let acvf = model.autocovariances(29).unwrap();
        let slow = innovations_filter(&acvf, &eps).unwrap();
        for (a, b) in fast.iter().zip(&slow) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn chisq_arma_stationary_variance() {
        let x = simulate_arma(&[0.7], &[], 200_000, InnovationKind::ChiSquared, 13).unwrap();
        let c = sample_autocovariance(&x, 0).unwrap();
        assert!((c[0] - 1.0 / 0.51).abs() < 0.05);
    }
}
