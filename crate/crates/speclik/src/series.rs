//! Observed series and sample autocovariances.

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::grid::{fft_raw, Sign};

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesSample {
    values: Vec<f64>,
    mean_removed: bool,
    original_mean: f64,
}

impl TimeSeriesSample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return invalid("series must have at least one observation");
        }
        if values.iter().any(|v| !v.is_finite()) {
            return invalid("series contains non-finite values");
        }
        let original_mean = mean(&values);
        Ok(TimeSeriesSample { values, mean_removed: false, original_mean })
    }

    /// Copy with the sample mean subtracted.
    pub fn demeaned(&self) -> Self {
        if self.mean_removed {
            return self.clone();
        }
        let m = mean(&self.values);
        let values = self.values.iter().map(|v| v - m).collect();
        TimeSeriesSample { values, mean_removed: true, original_mean: self.original_mean }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean_removed(&self) -> bool {
        self.mean_removed
    }

    pub fn original_mean(&self) -> f64 {
        self.original_mean
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// ĉ(r) = n⁻¹ Σ_{t=1}^{n-r} (x_t − x̄)(x_{t+r} − x̄) for r = 0..=max_lag.
pub fn sample_autocovariance(x: &TimeSeriesSample, max_lag: usize) -> Result<Vec<f64>> {
    let n = x.len();
    if max_lag >= n {
        return invalid(format!("max_lag {max_lag} must be below n = {n}"));
    }
    let m = mean(x.values());
    let y: Vec<f64> = x.values().iter().map(|v| v - m).collect();
    Ok(lagged_products(&y, max_lag, n as f64))
}

/// Σ_t z_t z_{t+r} / denom for r = 0..=max_lag, by zero-padded FFT.
pub(crate) fn lagged_products(z: &[f64], max_lag: usize, denom: f64) -> Vec<f64> {
    let n = z.len();
    let len = (2 * n).next_power_of_two();
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for (b, &v) in buf.iter_mut().zip(z) {
        b.re = v;
    }
    fft_raw(&mut buf, Sign::Minus);
    for b in buf.iter_mut() {
        *b = Complex64::new(b.norm_sqr(), 0.0);
    }
    fft_raw(&mut buf, Sign::Plus);
    let scale = 1.0 / (len as f64 * denom);
    buf[..=max_lag].iter().map(|c| c.re * scale).collect()
}
