//! AR prefits feeding the predictive DFT: Yule-Walker by Durbin-Levinson,
//! AIC order selection, tapered Yule-Walker and the cepstral AR(∞) estimate.

use num_complex::Complex64;

use crate::dft::dft;
use crate::error::{invalid, Error, Result};
use crate::grid::{fft_raw, Sign};
use crate::series::{lagged_products, mean, sample_autocovariance, TimeSeriesSample};
use crate::taper::{default_edge, tukey_taper, Taper};

#[derive(Debug, Clone, PartialEq)]
pub struct DurbinLevinsonState {
    /// phis[k-1] holds φ_{k,1..k}.
    pub phis: Vec<Vec<f64>>,
    /// σ²_0..σ²_p.
    pub sigma2s: Vec<f64>,
    pub partials: Vec<f64>,
}

impl DurbinLevinsonState {
    pub fn order(&self) -> usize {
        self.partials.len()
    }

    /// Coefficients of order k (empty for k = 0).
    pub fn coeffs(&self, k: usize) -> &[f64] {
        if k == 0 {
            &[]
        } else {
            &self.phis[k - 1]
        }
    }
}

pub fn durbin_levinson(acvf: &[f64]) -> Result<DurbinLevinsonState> {
    let c0 = *acvf.first().ok_or_else(|| Error::InvalidArgument("empty autocovariance".into()))?;
    if !(c0 > 0.0) {
        return Err(Error::Degenerate(format!("c(0) = {c0} is not positive")));
    }
    let p = acvf.len() - 1;
    let mut phis: Vec<Vec<f64>> = Vec::with_capacity(p);
    let mut sigma2s = Vec::with_capacity(p + 1);
    let mut partials = Vec::with_capacity(p);
    sigma2s.push(c0);
    let mut prev: Vec<f64> = Vec::new();
    for k in 1..=p {
        let s = prev.iter().enumerate().map(|(j, a)| a * acvf[k - 1 - j]).sum::<f64>();
        let kappa = (acvf[k] - s) / sigma2s[k - 1];
        if !(kappa.abs() < 1.0) {
            return Err(Error::Degenerate(format!("reflection coefficient {kappa} at order {k}")));
        }
        let mut next = Vec::with_capacity(k);
        for j in 0..k - 1 {
            next.push(prev[j] - kappa * prev[k - 2 - j]);
        }
        next.push(kappa);
        sigma2s.push(sigma2s[k - 1] * (1.0 - kappa * kappa));
        partials.push(kappa);
        phis.push(next.clone());
        prev = next;
    }
    Ok(DurbinLevinsonState { phis, sigma2s, partials })
}

/// Yule-Walker estimate of order p.
pub fn yule_walker(x: &TimeSeriesSample, p: usize) -> Result<Vec<f64>> {
    let c = sample_autocovariance(x, p)?;
    Ok(durbin_levinson(&c)?.coeffs(p).to_vec())
}

/// min(⌊10 log10 n⌋, ⌊n/4⌋).
pub fn default_max_order(n: usize) -> usize {
    ((10.0 * (n as f64).log10()).floor() as usize).min(n / 4)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AicSelection {
    pub order: usize,
    /// AIC(p) for p = 0..=max_order.
    pub aic: Vec<f64>,
    pub phi: Vec<f64>,
}

/// argmin_p log σ̂²_p + 2p/n over p = 0..=max_order.
pub fn aic_select(x: &TimeSeriesSample, max_order: usize) -> Result<AicSelection> {
    let c = sample_autocovariance(x, check_max_order(x.len(), max_order)?)?;
    aic_from_acvf(&c, x.len())
}

fn check_max_order(n: usize, max_order: usize) -> Result<usize> {
    if 2 * max_order >= n && max_order > 0 {
        return invalid(format!("max_order {max_order} must be below n/2 with n = {n}"));
    }
    Ok(max_order)
}

fn aic_from_acvf(c: &[f64], n: usize) -> Result<AicSelection> {
    let dl = durbin_levinson(c)?;
    let aic: Vec<f64> = dl
        .sigma2s
        .iter()
        .enumerate()
        .map(|(p, s)| s.ln() + 2.0 * p as f64 / n as f64)
        .collect();
    let mut order = 0;
    for (p, v) in aic.iter().enumerate() {
        if *v < aic[order] {
            order = p;
        }
    }
    Ok(AicSelection { order, phi: dl.coeffs(order).to_vec(), aic })
}

/// ĉ_h(r) = H_2⁻¹ Σ h_t h_{t+r} (x_t − x̄)(x_{t+r} − x̄) with raw weights.
pub fn tapered_autocovariance(x: &TimeSeriesSample, taper: &Taper, max_lag: usize) -> Result<Vec<f64>> {
    let n = x.len();
    if taper.len() != n {
        return invalid(format!("taper length {} differs from n = {n}", taper.len()));
    }
    if max_lag >= n {
        return invalid(format!("max_lag {max_lag} must be below n = {n}"));
    }
    if !(taper.h2() > 0.0) {
        return invalid("degenerate taper: all weights are zero");
    }
    let m = mean(x.values());
    let z: Vec<f64> = x.values().iter().zip(taper.raw()).map(|(v, h)| h * (v - m)).collect();
    Ok(lagged_products(&z, max_lag, taper.h2()))
}

pub fn tapered_yule_walker(x: &TimeSeriesSample, taper: &Taper, p: usize) -> Result<Vec<f64>> {
    let c = tapered_autocovariance(x, taper, p)?;
    Ok(durbin_levinson(&c)?.coeffs(p).to_vec())
}

/// Log-spectrum Fourier coefficients and the AR(∞) coefficients they imply.
#[derive(Debug, Clone, PartialEq)]
pub struct CepstralFit {
    /// α̂_1..α̂_M.
    pub alpha: Vec<f64>,
    /// φ̂_1..φ̂_M.
    pub phi: Vec<f64>,
}

/// φ̂_{k+1} = −Σ_{j=0}^{k} (1 − j/(k+1)) α̂_{k+1−j} φ̂_j with φ̂_0 = −1.
pub fn cepstral_recursion(alpha: &[f64]) -> Vec<f64> {
    let m = alpha.len();
    let mut phi = Vec::with_capacity(m + 1);
    phi.push(-1.0);
    for k in 0..m {
        let kp = (k + 1) as f64;
        let v: f64 = (0..=k).map(|j| (1.0 - j as f64 / kp) * alpha[k - j] * phi[j]).sum();
        phi.push(-v);
    }
    phi.remove(0);
    phi
}

/// Modified Daniell smoother applied circularly: half-width m = max(1, ⌊span/2⌋),
/// weights 1/(2m) inside and 1/(4m) at the two ends.
pub fn modified_daniell(values: &[f64], span: usize) -> Vec<f64> {
    let n = values.len() as i64;
    let m = (span / 2).max(1) as i64;
    let w_in = 1.0 / (2 * m) as f64;
    (0..n)
        .map(|k| {
            (-m..=m)
                .map(|o| {
                    let w = if o.abs() == m { 0.5 * w_in } else { w_in };
                    w * values[(k + o).rem_euclid(n) as usize]
                })
                .sum()
        })
        .collect()
}

pub fn cepstral_ar(x: &TimeSeriesSample, m: usize, bandwidth: f64) -> Result<CepstralFit> {
    cepstral_fit(x, m, bandwidth)
}

fn cepstral_fit(x: &TimeSeriesSample, m: usize, bandwidth: f64) -> Result<CepstralFit> {
    let n = x.len();
    if m > n {
        return invalid(format!("cepstral order {m} exceeds n = {n}"));
    }
    if !(bandwidth > 0.0) {
        return invalid("smoother bandwidth must be positive");
    }
    let per = dft(&x.demeaned()).periodogram();
    let span = (bandwidth * n as f64).floor() as usize;
    let smooth = modified_daniell(&per, span);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for (k, v) in smooth.iter().enumerate() {
        if !(*v > 0.0) {
            return Err(Error::InvalidSmoother(k + 1));
        }
        // slot k holds ω_{k+1}; rustfft index is the frequency index mod n
        buf[(k + 1) % n].re = v.ln();
    }
    fft_raw(&mut buf, Sign::Minus);
    let alpha: Vec<f64> = (1..=m).map(|k| buf[k % n].re / n as f64).collect();
    let phi = cepstral_recursion(&alpha);
    Ok(CepstralFit { alpha, phi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefitMethod {
    Yw,
    TaperedYw,
    Cepstral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRule {
    Aic,
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrefitConfig {
    pub method: PrefitMethod,
    pub order: OrderRule,
    /// Cap for the AIC search; `None` uses [`default_max_order`].
    pub max_order: Option<usize>,
    /// Tukey edge for the tapered prefit; `None` uses ⌊n/10⌋.
    pub taper_edge: Option<usize>,
    /// Truncation M of the cepstral prefit.
    pub cepstral_order: usize,
    pub bandwidth: f64,
}

impl Default for PrefitConfig {
    fn default() -> Self {
        PrefitConfig {
            method: PrefitMethod::Yw,
            order: OrderRule::Aic,
            max_order: None,
            taper_edge: None,
            cepstral_order: 30,
            bandwidth: 0.05,
        }
    }
}

impl PrefitConfig {
    pub fn with_method(method: PrefitMethod) -> Self {
        PrefitConfig { method, ..Default::default() }
    }

    pub fn fixed(p: usize) -> Self {
        PrefitConfig { order: OrderRule::Fixed(p), ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prefit {
    pub phi: Vec<f64>,
    pub order: usize,
    pub cepstral: Option<CepstralFit>,
}

impl Prefit {
    pub fn none() -> Self {
        Prefit { phi: Vec::new(), order: 0, cepstral: None }
    }

    pub fn from_coeffs(phi: Vec<f64>) -> Self {
        Prefit { order: phi.len(), phi, cepstral: None }
    }
}

pub fn prefit(x: &TimeSeriesSample, cfg: &PrefitConfig) -> Result<Prefit> {
    let n = x.len();
    match cfg.method {
        PrefitMethod::Cepstral => {
            let m = match cfg.order {
                OrderRule::Fixed(p) => p,
                OrderRule::Aic => cfg.cepstral_order.min(n),
            };
            let fit = cepstral_fit(x, m, cfg.bandwidth)?;
            Ok(Prefit { phi: fit.phi.clone(), order: m, cepstral: Some(fit) })
        }
        PrefitMethod::Yw | PrefitMethod::TaperedYw => {
            let max = match cfg.order {
                OrderRule::Fixed(p) => p,
                OrderRule::Aic => check_max_order(n, cfg.max_order.unwrap_or(default_max_order(n)))?,
            };
            let c = if cfg.method == PrefitMethod::TaperedYw {
                let taper = tukey_taper(n, cfg.taper_edge.unwrap_or(default_edge(n)))?;
                tapered_autocovariance(x, &taper, max)?
            } else {
                sample_autocovariance(x, max)?
            };
            match cfg.order {
                OrderRule::Fixed(p) => {
                    let phi = durbin_levinson(&c)?.coeffs(p).to_vec();
                    Ok(Prefit { phi, order: p, cepstral: None })
                }
                OrderRule::Aic => {
                    let sel = aic_from_acvf(&c, n)?;
                    Ok(Prefit { phi: sel.phi, order: sel.order, cepstral: None })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn white_acvf() {
        let dl = durbin_levinson(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(dl.phis.iter().flatten().all(|&v| v == 0.0));
        assert!(dl.sigma2s.iter().all(|&s| s == 1.0));
    }

    #[test]
    fn ar1_exact_acvf() {
        let phi = 0.7f64;
        let c: Vec<f64> = (0..5).map(|r| phi.powi(r) / (1.0 - phi * phi)).collect();
        let dl = durbin_levinson(&c).unwrap();
        let top = dl.coeffs(4);
        assert!((top[0] - 0.7).abs() < 1e-13);
        assert!(top[1..].iter().all(|v| v.abs() < 1e-13));
        assert!((dl.sigma2s[4] - 1.0).abs() < 1e-13);
        assert!((dl.coeffs(1)[0] - c[1] / c[0]).abs() < 1e-15);
    }

    #[test]
    fn matches_normal_equations() {
        // dense Gaussian elimination on the Yule-Walker system
        let c = [2.0, 1.1, 0.3, -0.2, -0.4];
        let p = 4;
        let mut a = vec![vec![0.0f64; p + 1]; p];
        for i in 0..p {
            for j in 0..p {
                a[i][j] = c[(i as i64 - j as i64).unsigned_abs() as usize];
            }
            a[i][p] = c[i + 1];
        }
        for col in 0..p {
            let piv = (col..p).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs())).unwrap();
            a.swap(col, piv);
            for r in 0..p {
                if r != col {
                    let f = a[r][col] / a[col][col];
                    for k in col..=p {
                        a[r][k] -= f * a[col][k];
                    }
                }
            }
        }
        let sol: Vec<f64> = (0..p).map(|i| a[i][p] / a[i][i]).collect();
        let dl = durbin_levinson(&c).unwrap();
        for (u, v) in dl.coeffs(p).iter().zip(&sol) {
            assert!((u - v).abs() < 1e-12);
        }
        assert!(dl.sigma2s.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(durbin_levinson(&[0.0, 0.0]), Err(Error::Degenerate(_))));
        assert!(matches!(durbin_levinson(&[1.0, 1.0]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn aic_zero_order() {
        let x = TimeSeriesSample::new((0..20).map(|i| (i as f64 * 1.7).sin()).collect()).unwrap();
        let s = aic_select(&x, 0).unwrap();
        assert_eq!(s.order, 0);
        assert!(s.phi.is_empty());
        assert!(aic_select(&x, 10).is_err());
    }

    #[test]
    fn rectangular_tapered_yw_is_bit_identical() {
        let x = TimeSeriesSample::new((0..57).map(|i| ((i * i) as f64 * 0.37).sin()).collect()).unwrap();
        let t = Taper::rectangular(57).unwrap();
        assert_eq!(tapered_yule_walker(&x, &t, 6).unwrap(), yule_walker(&x, 6).unwrap());
        let zero = Taper::from_raw(vec![0.0; 57]);
        assert!(zero.is_err());
    }

    #[test]
    fn cepstral_recursion_examples() {
        assert!(cepstral_recursion(&[0.0; 6]).iter().all(|&v| v == 0.0));
        let phi = 0.6f64;
        let alpha: Vec<f64> = (1..=8).map(|k| phi.powi(k) / k as f64).collect();
        let out = cepstral_recursion(&alpha);
        assert!((out[0] - phi).abs() < 1e-15);
        assert!(out[1..].iter().all(|v| v.abs() < 1e-14), "{out:?}");
        assert_eq!(cepstral_recursion(&[0.3])[0], 0.3);
    }

    #[test]
    fn daniell_weights_sum_to_one() {
        let v = vec![2.0; 11];
        for s in [0, 1, 2, 5, 6] {
            assert!(modified_daniell(&v, s).iter().all(|x| (x - 2.0).abs() < 1e-14));
        }
    }

    #[test]
    fn default_order_cap() {
        assert_eq!(default_max_order(50), 12);
        assert_eq!(default_max_order(300), 24);
        assert_eq!(default_max_order(8), 2);
    }
}
