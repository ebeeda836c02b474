//! Regular, tapered, predictive and complete DFTs.

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::grid::{fft_raw, grid_sum_real, FourierGrid, Sign};
use crate::models::SpectralModel;
use crate::prefit::{CepstralFit, Prefit};
use crate::series::TimeSeriesSample;
use crate::taper::Taper;

/// Default truncation of the AR(∞) expansion.
pub const DEFAULT_TRUNCATION: usize = 200;
/// Default floor applied to the complete periodogram.
pub const DEFAULT_THRESHOLD: f64 = 1e-3;

/// Values at ω_1..ω_n; slot k-1 holds ω_k.
#[derive(Debug, Clone, PartialEq)]
pub struct DftVector {
    pub values: Vec<Complex64>,
}

impl DftVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn periodogram(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictiveSource {
    AnalyticAr,
    InfinityTruncation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PredictiveDft {
    pub values: Vec<Complex64>,
    pub ar_coeffs: Vec<f64>,
    pub source: PredictiveSource,
}

/// J(ω_k) = n^{-1/2} Σ_t x_t e^{itω_k}.
pub fn dft(x: &TimeSeriesSample) -> DftVector {
    dft_values(x.values())
}

pub(crate) fn dft_values(x: &[f64]) -> DftVector {
    let n = x.len();
    let s = 1.0 / (n as f64).sqrt();
    let values = grid_sum_real(x, 1, Sign::Plus, n).into_iter().map(|v| v * s).collect();
    DftVector { values }
}

/// J_h(ω_k) = n^{-1/2} Σ_t h_{t,n} x_t e^{itω_k} with normalized weights.
pub fn tapered_dft(x: &TimeSeriesSample, taper: &Taper) -> Result<DftVector> {
    if taper.len() != x.len() {
        return invalid(format!("taper length {} differs from n = {}", taper.len(), x.len()));
    }
    let hx: Vec<f64> = x.values().iter().zip(taper.normalized()).map(|(v, h)| v * h).collect();
    Ok(dft_values(&hx))
}

/// Predictive DFT for an AR(p) model evaluated on the Fourier grid.
pub fn predictive_dft_ar(
    x: &TimeSeriesSample,
    phi: &[f64],
    grid: &FourierGrid,
) -> Result<PredictiveDft> {
    let n = x.len();
    if grid.n() != n {
        return invalid(format!("grid size {} differs from n = {n}", grid.n()));
    }
    if phi.len() > n {
        return invalid(format!("AR order {} exceeds n = {n}", phi.len()));
    }
    let values = boundary_transform(x.values(), phi)?;
    Ok(PredictiveDft { values, ar_coeffs: phi.to_vec(), source: PredictiveSource::AnalyticAr })
}

/// Predictive DFT from the AR(∞) coefficients of `model` truncated at `m`.
pub fn predictive_dft_infty(
    x: &TimeSeriesSample,
    model: &SpectralModel,
    m: usize,
    grid: &FourierGrid,
) -> Result<PredictiveDft> {
    if grid.n() != x.len() {
        return invalid(format!("grid size {} differs from n = {}", grid.n(), x.len()));
    }
    let coeffs = model.ar_infinity_coefficients(m)?;
    let values = boundary_transform(x.values(), &coeffs)?;
    Ok(PredictiveDft { values, ar_coeffs: coeffs, source: PredictiveSource::InfinityTruncation })
}

/// Direct evaluation at arbitrary frequencies, keeping the e^{inω} factor.
pub fn predictive_dft_ar_at(x: &[f64], phi: &[f64], omegas: &[f64]) -> Result<Vec<Complex64>> {
    let n = x.len();
    let p = phi.len();
    let scale = 1.0 / (n as f64).sqrt();
    let lim = p.min(n);
    omegas
        .iter()
        .map(|&w| {
            let phw = crate::models::poly_value(phi, -1.0, w);
            if phw.norm() < 1e-14 {
                return Err(Error::SingularFilter(w));
            }
            let mut left = Complex64::new(0.0, 0.0);
            let mut right = Complex64::new(0.0, 0.0);
            for l in 1..=lim {
                for s in 0..=(p - l) {
                    let c = phi[l + s - 1];
                    left += x[l - 1] * c * Complex64::from_polar(1.0, -(s as f64) * w);
                    right += x[n - l] * c * Complex64::from_polar(1.0, (s + 1) as f64 * w);
                }
            }
            let rot = Complex64::from_polar(1.0, n as f64 * w);
            Ok(scale * (left / phw + rot * right / phw.conj()))
        })
        .collect()
}

/// Y_s = Σ_ℓ a_ℓ b_{ℓ+s} for s = 0..len(b)-1, zero beyond either sequence.
fn boundary_correlation(a: &[f64], b: &[f64]) -> Vec<f64> {
    let p = b.len();
    let la = a.len().min(p);
    if p <= 32 {
        return (0..p).map(|s| (0..la.min(p - s)).map(|l| a[l] * b[l + s]).sum()).collect();
    }
    let len = (2 * p).next_power_of_two();
    let mut fa = vec![Complex64::new(0.0, 0.0); len];
    let mut fb = vec![Complex64::new(0.0, 0.0); len];
    for l in 0..la {
        fa[l].re = a[l];
    }
    for (j, v) in b.iter().enumerate() {
        fb[j].re = *v;
    }
    fft_raw(&mut fa, Sign::Minus);
    fft_raw(&mut fb, Sign::Minus);
    for (u, v) in fa.iter_mut().zip(&fb) {
        *u = u.conj() * v;
    }
    fft_raw(&mut fa, Sign::Plus);
    fa[..p].iter().map(|c| c.re / len as f64).collect()
}

/// Grid evaluation of the AR predictive DFT: boundary correlations followed
/// by length-n transforms of the filter and of both boundary sums.
fn boundary_transform(x: &[f64], phi: &[f64]) -> Result<Vec<Complex64>> {
    boundary_transform_with(x, phi, None)
}

/// As [`boundary_transform`]; `transfer` replaces 1/φ(ω_k) when given.
fn boundary_transform_with(
    x: &[f64],
    phi: &[f64],
    transfer: Option<&[Complex64]>,
) -> Result<Vec<Complex64>> {
    let n = x.len();
    if phi.iter().all(|&v| v == 0.0) {
        return Ok(vec![Complex64::new(0.0, 0.0); n]);
    }
    let head = &x[..phi.len().min(n)];
    let tail: Vec<f64> = x.iter().rev().take(phi.len()).copied().collect();
    let y = boundary_correlation(head, phi);
    let z = boundary_correlation(&tail, phi);
    let mut filt = Vec::with_capacity(phi.len() + 1);
    filt.push(1.0);
    filt.extend(phi.iter().map(|v| -v));
    let phw = grid_sum_real(&filt, 0, Sign::Minus, n);
    let left = grid_sum_real(&y, 0, Sign::Minus, n);
    let right = grid_sum_real(&z, 1, Sign::Plus, n);
    let scale = 1.0 / (n as f64).sqrt();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let psi = match transfer {
            Some(t) => t[k],
            None => {
                let f = phw[k];
                if f.norm() < 1e-14 {
                    return Err(Error::SingularFilter(crate::grid::omega(k + 1, n)));
                }
                f.inv()
            }
        };
        out.push(scale * (psi * left[k] + psi.conj() * right[k]));
    }
    Ok(out)
}

/// Nonparametric predictive DFT: ψ̂(ω) = exp(Σ_j α̂_j e^{-ijω}) takes the
/// place of 1/φ(ω) and the cepstral φ̂ drive the boundary sums.
pub fn predictive_dft_cepstral(x: &TimeSeriesSample, fit: &CepstralFit) -> Result<PredictiveDft> {
    let n = x.len();
    let log_psi = grid_sum_real(&fit.alpha, 1, Sign::Minus, n);
    let transfer: Vec<Complex64> = log_psi.iter().map(|v| v.exp()).collect();
    let values = boundary_transform_with(x.values(), &fit.phi, Some(&transfer))?;
    Ok(PredictiveDft {
        values,
        ar_coeffs: fit.phi.clone(),
        source: PredictiveSource::InfinityTruncation,
    })
}

/// Predictive DFT for any prefit: cepstral fits use their own transfer
/// function, the others the analytic AR form.
pub fn predictive_dft_prefit(x: &TimeSeriesSample, fit: &Prefit) -> Result<PredictiveDft> {
    match &fit.cepstral {
        Some(c) => predictive_dft_cepstral(x, c),
        None => {
            let grid = crate::grid::fourier_grid(x.len())?;
            predictive_dft_ar(x, &fit.phi, &grid)
        }
    }
}

/// Re[(J + Ĵ)(ω_k) · conj(J_h(ω_k))] before thresholding, as complex values.
pub fn complete_cross(
    x: &TimeSeriesSample,
    phi: &[f64],
    taper: Option<&Taper>,
) -> Result<Vec<Complex64>> {
    let n = x.len();
    let grid = crate::grid::fourier_grid(n)?;
    let j = dft(x);
    let jh = match taper {
        Some(t) => tapered_dft(x, t)?,
        None => j.clone(),
    };
    let pred = predictive_dft_ar(x, phi, &grid)?;
    Ok(cross_values(&j, &pred.values, &jh))
}

pub(crate) fn cross_values(j: &DftVector, pred: &[Complex64], jh: &DftVector) -> Vec<Complex64> {
    j.values
        .iter()
        .zip(pred)
        .zip(&jh.values)
        .map(|((a, b), c)| (a + b) * c.conj())
        .collect()
}

/// max(Re[J̃(ω_k) conj(J or J_h)(ω_k)], threshold); pass `f64::NEG_INFINITY`
/// to disable the floor.
pub fn complete_periodogram(
    x: &TimeSeriesSample,
    phi: &[f64],
    taper: Option<&Taper>,
    threshold: f64,
) -> Result<Vec<f64>> {
    Ok(apply_threshold(&complete_cross(x, phi, taper)?, threshold))
}

pub(crate) fn apply_threshold(cross: &[Complex64], threshold: f64) -> Vec<f64> {
    cross.iter().map(|c| c.re.max(threshold)).collect()
}
