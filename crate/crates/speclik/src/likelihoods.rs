//! Fitting criteria, spectral divergence, the orthogonal-sample variance
//! estimator and the AR(1) closed-form biases.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dft::{
    apply_threshold, cross_values, dft, predictive_dft_ar, predictive_dft_infty, predictive_dft_prefit,
    tapered_dft, DftVector, DEFAULT_THRESHOLD, DEFAULT_TRUNCATION,
};
use crate::error::{invalid, Error, Result};
use crate::grid::{fourier_grid, grid_sum_real, Sign};
use crate::models::{Family, ParamBounds, SpectralModel};
use crate::prefit::{prefit, Prefit, PrefitConfig};
use crate::series::TimeSeriesSample;
use crate::taper::{default_edge, tukey_taper, Taper};
use crate::toeplitz::quadratic_and_logdet_from_acvf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    Gaussian,
    Whittle,
    Boundary,
    Hybrid,
    Tapered,
    Debiased,
    InfeasibleBoundary,
    InfeasibleHybrid,
}

impl CriterionKind {
    pub const FEASIBLE: [CriterionKind; 6] = [
        CriterionKind::Gaussian,
        CriterionKind::Whittle,
        CriterionKind::Boundary,
        CriterionKind::Hybrid,
        CriterionKind::Tapered,
        CriterionKind::Debiased,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CriterionKind::Gaussian => "gaussian",
            CriterionKind::Whittle => "whittle",
            CriterionKind::Boundary => "boundary",
            CriterionKind::Hybrid => "hybrid",
            CriterionKind::Tapered => "tapered",
            CriterionKind::Debiased => "debiased",
            CriterionKind::InfeasibleBoundary => "infeasible-boundary",
            CriterionKind::InfeasibleHybrid => "infeasible-hybrid",
        }
    }

    pub fn uses_taper(&self) -> bool {
        matches!(self, CriterionKind::Hybrid | CriterionKind::Tapered | CriterionKind::InfeasibleHybrid)
    }

    pub fn uses_prefit(&self) -> bool {
        matches!(self, CriterionKind::Boundary | CriterionKind::Hybrid)
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, CriterionKind::InfeasibleBoundary | CriterionKind::InfeasibleHybrid)
    }
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CriterionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            CriterionKind::Gaussian,
            CriterionKind::Whittle,
            CriterionKind::Boundary,
            CriterionKind::Hybrid,
            CriterionKind::Tapered,
            CriterionKind::Debiased,
            CriterionKind::InfeasibleBoundary,
            CriterionKind::InfeasibleHybrid,
        ];
        all.into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown criterion '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionSpec {
    pub kind: CriterionKind,
    /// Tukey edge d; `None` uses ⌊n/10⌋.
    pub taper_edge: Option<usize>,
    pub threshold: f64,
    pub prefit: PrefitConfig,
    pub include_log_term: bool,
    /// `None` drops ω_n exactly when the fitted family is ARFIMA.
    pub exclude_zero_frequency: Option<bool>,
    /// Required by the infeasible kinds.
    pub true_model: Option<SpectralModel>,
    /// AR(∞) truncation for infeasible kinds with non-AR truth.
    pub truncation: usize,
    /// Subtract the sample mean before anything else.
    pub demean: bool,
    /// Search region; `None` uses the family's default box.
    pub bounds: Option<ParamBounds>,
}

impl CriterionSpec {
    pub fn new(kind: CriterionKind) -> Self {
        CriterionSpec {
            kind,
            taper_edge: None,
            threshold: DEFAULT_THRESHOLD,
            prefit: PrefitConfig::default(),
            include_log_term: true,
            exclude_zero_frequency: None,
            true_model: None,
            truncation: DEFAULT_TRUNCATION,
            demean: true,
            bounds: None,
        }
    }

    pub fn with_prefit(mut self, prefit: PrefitConfig) -> Self {
        self.prefit = prefit;
        self
    }

    pub fn with_true_model(mut self, model: SpectralModel) -> Self {
        self.true_model = Some(model);
        self
    }

    fn taper(&self, n: usize) -> Result<Taper> {
        tukey_taper(n, self.taper_edge.unwrap_or(default_edge(n)))
    }
}

/// A criterion with every data-dependent quantity precomputed, ready to be
/// evaluated at many candidate models.
#[derive(Debug, Clone)]
pub struct PreparedCriterion {
    kind: CriterionKind,
    n: usize,
    include_log_term: bool,
    exclude_zero: bool,
    /// Pseudo-periodogram for the frequency-domain kinds.
    weights: Vec<f64>,
    data: Vec<f64>,
    prefit_order: usize,
}

impl PreparedCriterion {
    pub fn new(x: &TimeSeriesSample, spec: &CriterionSpec, family: Family) -> Result<Self> {
        let n = x.len();
        let exclude_zero = spec.exclude_zero_frequency.unwrap_or(family.is_long_memory());
        let mut prefit_order = 0;
        let weights = match spec.kind {
            CriterionKind::Gaussian => Vec::new(),
            CriterionKind::Whittle | CriterionKind::Debiased => dft(x).periodogram(),
            CriterionKind::Tapered => tapered_periodogram(x, &spec.taper(n)?)?,
            CriterionKind::Boundary | CriterionKind::Hybrid => {
                let fit = prefit(x, &spec.prefit)?;
                prefit_order = fit.order;
                let taper = if spec.kind == CriterionKind::Hybrid { Some(spec.taper(n)?) } else { None };
                let cross = complete_cross_with(x, &fit, taper.as_ref())?;
                apply_threshold(&cross, spec.threshold)
            }
            CriterionKind::InfeasibleBoundary | CriterionKind::InfeasibleHybrid => {
                let truth = spec
                    .true_model
                    .as_ref()
                    .ok_or_else(|| Error::InvalidArgument("infeasible criterion needs the true model".into()))?;
                let taper =
                    if spec.kind == CriterionKind::InfeasibleHybrid { Some(spec.taper(n)?) } else { None };
                let cross = infeasible_cross(x, truth, spec.truncation, taper.as_ref())?;
                apply_threshold(&cross, spec.threshold)
            }
        };
        Ok(PreparedCriterion {
            kind: spec.kind,
            n,
            include_log_term: spec.include_log_term,
            exclude_zero,
            weights,
            data: x.values().to_vec(),
            prefit_order,
        })
    }

    pub fn kind(&self) -> CriterionKind {
        self.kind
    }

    pub fn prefit_order(&self) -> usize {
        self.prefit_order
    }

    /// Pseudo-periodogram the frequency-domain kinds divide by f_θ.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn evaluate(&self, model: &SpectralModel) -> Result<f64> {
        match self.kind {
            CriterionKind::Gaussian => {
                let acvf = model.autocovariances(self.n - 1)?;
                let (q, ld) = quadratic_and_logdet_from_acvf(&acvf, &self.data)?;
                Ok(if self.include_log_term { q + ld } else { q })
            }
            CriterionKind::Debiased => {
                let fbar = expected_periodogram(model, self.n)?;
                frequency_average(&self.weights, &fbar, self.exclude_zero, self.include_log_term)
            }
            _ => {
                let f = model.density_on_grid(self.n, self.exclude_zero)?;
                frequency_average(&self.weights, &f, self.exclude_zero, self.include_log_term)
            }
        }
    }
}

/// mean over included k of w_k / f_k (+ log f_k).
fn frequency_average(w: &[f64], f: &[f64], exclude_zero: bool, log_term: bool) -> Result<f64> {
    let n = w.len();
    let last = if exclude_zero { n - 1 } else { n };
    if last == 0 {
        return invalid("no frequencies left after excluding zero");
    }
    let mut s = 0.0;
    for k in 0..last {
        let fk = f[k];
        if !(fk > 0.0) || !fk.is_finite() {
            return Err(Error::Degenerate(format!("density {fk} at frequency index {}", k + 1)));
        }
        s += w[k] / fk;
        if log_term {
            s += fk.ln();
        }
    }
    Ok(s / last as f64)
}

fn complete_cross_with(x: &TimeSeriesSample, fit: &Prefit, taper: Option<&Taper>) -> Result<Vec<Complex64>> {
    let j = dft(x);
    let jh = conj_side(x, &j, taper)?;
    let pred = predictive_dft_prefit(x, fit)?;
    Ok(cross_values(&j, &pred.values, &jh))
}

fn conj_side(x: &TimeSeriesSample, j: &DftVector, taper: Option<&Taper>) -> Result<DftVector> {
    match taper {
        Some(t) => tapered_dft(x, t),
        None => Ok(j.clone()),
    }
}

fn infeasible_cross(
    x: &TimeSeriesSample,
    truth: &SpectralModel,
    truncation: usize,
    taper: Option<&Taper>,
) -> Result<Vec<Complex64>> {
    let n = x.len();
    let grid = fourier_grid(n)?;
    let j = dft(x);
    let jh = conj_side(x, &j, taper)?;
    let pred = match truth.family() {
        Family::Ar(p) if p <= n => predictive_dft_ar(x, truth.ar_coeffs(), &grid)?,
        _ => predictive_dft_infty(x, truth, truncation, &grid)?,
    };
    Ok(cross_values(&j, &pred.values, &jh))
}

/// I_h(ω_k) = |Σ_t h_t x_t e^{itω_k}|² / H_2 with raw weights.
pub fn tapered_periodogram(x: &TimeSeriesSample, taper: &Taper) -> Result<Vec<f64>> {
    if taper.len() != x.len() {
        return invalid(format!("taper length {} differs from n = {}", taper.len(), x.len()));
    }
    let hx: Vec<f64> = x.values().iter().zip(taper.raw()).map(|(v, h)| v * h).collect();
    let s = grid_sum_real(&hx, 1, Sign::Plus, x.len());
    Ok(s.iter().map(|c| c.norm_sqr() / taper.h2()).collect())
}

/// f̄(ω_k) = Σ_{|r|<n} (1 − |r|/n) c(r) e^{irω_k}.
pub fn expected_periodogram(model: &SpectralModel, n: usize) -> Result<Vec<f64>> {
    let c = model.autocovariances(n - 1)?;
    let mut a = Vec::with_capacity(n);
    a.push(c[0]);
    for (r, v) in c.iter().enumerate().skip(1) {
        a.push(2.0 * (1.0 - r as f64 / n as f64) * v);
    }
    Ok(grid_sum_real(&a, 0, Sign::Plus, n).iter().map(|z| z.re).collect())
}

fn default_exclude(model: &SpectralModel) -> bool {
    model.family().is_long_memory()
}

/// n⁻¹ Σ_k [I(ω_k)/f_θ(ω_k) + log f_θ(ω_k)].
pub fn whittle(x: &TimeSeriesSample, model: &SpectralModel) -> Result<f64> {
    let f = model.density_on_grid(x.len(), default_exclude(model))?;
    frequency_average(&dft(x).periodogram(), &f, default_exclude(model), true)
}

/// Whittle criterion on the thresholded complete periodogram.
pub fn boundary_corrected_whittle(x: &TimeSeriesSample, model: &SpectralModel, prefit_phi: &[f64]) -> Result<f64> {
    let cross = complete_cross_with(x, &Prefit::from_coeffs(prefit_phi.to_vec()), None)?;
    let f = model.density_on_grid(x.len(), default_exclude(model))?;
    frequency_average(&apply_threshold(&cross, DEFAULT_THRESHOLD), &f, default_exclude(model), true)
}

/// Complete DFT against the tapered DFT, thresholded.
pub fn hybrid_whittle(x: &TimeSeriesSample, model: &SpectralModel, prefit_phi: &[f64], taper: &Taper) -> Result<f64> {
    let cross = complete_cross_with(x, &Prefit::from_coeffs(prefit_phi.to_vec()), Some(taper))?;
    let f = model.density_on_grid(x.len(), default_exclude(model))?;
    frequency_average(&apply_threshold(&cross, DEFAULT_THRESHOLD), &f, default_exclude(model), true)
}

pub fn tapered_whittle(x: &TimeSeriesSample, model: &SpectralModel, taper: &Taper) -> Result<f64> {
    let f = model.density_on_grid(x.len(), default_exclude(model))?;
    frequency_average(&tapered_periodogram(x, taper)?, &f, default_exclude(model), true)
}

pub fn debiased_whittle(x: &TimeSeriesSample, model: &SpectralModel) -> Result<f64> {
    let fbar = expected_periodogram(model, x.len())?;
    frequency_average(&dft(x).periodogram(), &fbar, default_exclude(model), true)
}

/// n⁻¹ x'Γ⁻¹x + n⁻¹ log|Γ|.
pub fn gaussian(x: &TimeSeriesSample, model: &SpectralModel) -> Result<f64> {
    let (q, ld) = crate::toeplitz::gaussian_quadratic_and_logdet(x, model)?;
    Ok(q + ld)
}

/// n⁻¹ Σ_k Im[J̃(ω_k) conj(J or J_h)(ω_k)] / f_θ(ω_k) before thresholding.
pub fn imaginary_aggregate(
    x: &TimeSeriesSample,
    model: &SpectralModel,
    prefit_phi: &[f64],
    taper: Option<&Taper>,
) -> Result<f64> {
    let cross = complete_cross_with(x, &Prefit::from_coeffs(prefit_phi.to_vec()), taper)?;
    let f = model.density_on_grid(x.len(), false)?;
    Ok(cross.iter().zip(&f).map(|(c, d)| c.im / d).sum::<f64>() / x.len() as f64)
}

/// I_n(f; f_θ) = mean_k [f(ω_k)/f_θ(ω_k) + log f_θ(ω_k)], skipping ω_n when
/// either density is long-memory.
pub fn spectral_divergence(truth: &SpectralModel, candidate: &SpectralModel, n: usize) -> Result<f64> {
    let skip = default_exclude(truth) || default_exclude(candidate);
    let f = truth.density_on_grid(n, skip)?;
    let g = candidate.density_on_grid(n, skip)?;
    frequency_average(&f, &g, skip, true)
}

/// V̂_M(g1, g2) = (n/M) Σ_{r=1}^{M} h_r(g1) conj(h_r(g2)), real part, where
/// h_r(g) = n⁻¹ Σ_k g(ω_k) J̃(ω_{k+r}) conj(J(ω_k)) with k + r taken mod n.
pub fn orthogonal_sample_variance(
    x: &TimeSeriesSample,
    g1: &[f64],
    g2: &[f64],
    prefit_phi: &[f64],
    m: usize,
) -> Result<f64> {
    let n = x.len();
    if m == 0 || m >= n {
        return invalid(format!("M = {m} must lie in 1..n with n = {n}"));
    }
    if g1.len() != n || g2.len() != n {
        return invalid("g1 and g2 must be given on the Fourier grid");
    }
    let grid = fourier_grid(n)?;
    let j = dft(x);
    let pred = predictive_dft_ar(x, prefit_phi, &grid)?;
    let full: Vec<Complex64> = j.values.iter().zip(&pred.values).map(|(a, b)| a + b).collect();
    let h = |g: &[f64], r: usize| -> Complex64 {
        (0..n).map(|k| g[k] * full[(k + r) % n] * j.values[k].conj()).sum::<Complex64>() / n as f64
    };
    let s: Complex64 = (1..=m).map(|r| h(g1, r) * h(g2, r).conj()).sum();
    Ok(n as f64 / m as f64 * s.re)
}

/// Leading-order AR(1) biases of the estimators of θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiasTerms {
    pub gaussian: f64,
    pub whittle: f64,
    pub boundary: f64,
    pub hybrid: f64,
    pub gaussian_with_det: f64,
    /// H_2 / H_1² of the taper used for the hybrid term.
    pub taper_ratio: f64,
}

/// `taper = None` means the rectangular taper.
pub fn ar1_theoretical_bias(theta: f64, n: usize, taper: Option<&Taper>) -> Result<BiasTerms> {
    if !(theta.abs() < 1.0) {
        return invalid(format!("|θ| = {} must be below one", theta.abs()));
    }
    let nf = n as f64;
    let ratio = match taper {
        Some(t) => t.h2() / (t.h1() * t.h1()),
        None => 1.0 / nf,
    };
    Ok(BiasTerms {
        gaussian: -theta / nf,
        whittle: -3.0 * theta / nf + theta.powi(n as i32 - 1) / nf,
        boundary: -2.0 * theta / nf,
        hybrid: -2.0 * ratio * theta,
        gaussian_with_det: -2.0 * theta / nf,
        taper_ratio: ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::SpectralModel;
    use std::f64::consts::PI;

    fn xs(n: usize) -> TimeSeriesSample {
        TimeSeriesSample::new((0..n).map(|i| ((i * 5 + 1) as f64 * 0.73).sin() + 0.2 * (i as f64).cos()).collect())
            .unwrap()
    }

    #[test]
    fn whittle_parseval_without_log() {
        let x = xs(33);
        let spec = CriterionSpec { include_log_term: false, ..CriterionSpec::new(CriterionKind::Whittle) };
        let c = PreparedCriterion::new(&x, &spec, Family::Ar(1)).unwrap();
        let v = c.evaluate(&SpectralModel::ar(&[0.0]).unwrap()).unwrap();
        let ss: f64 = x.values().iter().map(|a| a * a).sum::<f64>() / 33.0;
        assert!((v - ss).abs() < 1e-12);
        let zero = TimeSeriesSample::new(vec![0.0; 10]).unwrap();
        let c = PreparedCriterion::new(&zero, &spec, Family::Ar(1)).unwrap();
        assert_eq!(c.evaluate(&SpectralModel::ar(&[0.4]).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_lattice() {
        let x = TimeSeriesSample::new(xs(40).values().iter().map(|v| 10.0 * v).collect()).unwrap();
        let m = SpectralModel::ar(&[0.45]).unwrap();
        let rect = Taper::rectangular(40).unwrap();
        let w = whittle(&x, &m).unwrap();
        // thresholding leaves |J|² untouched whenever it exceeds the floor
        let per = dft(&x).periodogram();
        assert!(per.iter().all(|p| *p > DEFAULT_THRESHOLD));
        assert_eq!(boundary_corrected_whittle(&x, &m, &[]).unwrap(), w);
        assert_eq!(hybrid_whittle(&x, &m, &[], &rect).unwrap(), w);
        assert!((tapered_whittle(&x, &m, &rect).unwrap() - w).abs() < 1e-14);
        let phi = [0.3, 0.1];
        assert_eq!(
            hybrid_whittle(&x, &m, &phi, &rect).unwrap(),
            boundary_corrected_whittle(&x, &m, &phi).unwrap()
        );
    }

    #[test]
    fn debiased_white_noise_equals_whittle() {
        let x = xs(25);
        let m = SpectralModel::ar(&[0.0]).unwrap();
        assert!((debiased_whittle(&x, &m).unwrap() - whittle(&x, &m).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn expected_periodogram_matches_fejer_quadrature() {
        let m = SpectralModel::ar(&[0.6, -0.3]).unwrap();
        let n = 16;
        let fbar = expected_periodogram(&m, n).unwrap();
        // Fejér kernel F_n(λ) = |Σ_t e^{itλ}|²/n on a fine grid
        let big = 1 << 14;
        for k in 1..=n {
            let w = 2.0 * PI * k as f64 / n as f64;
            let mut s = 0.0;
            for j in 0..big {
                let lam = 2.0 * PI * j as f64 / big as f64;
                let u = w - lam;
                let fejer = if (u / 2.0).sin().abs() < 1e-12 {
                    n as f64
                } else {
                    ((n as f64 * u / 2.0).sin() / (u / 2.0).sin()).powi(2) / n as f64
                };
                s += fejer * m.spectral_density(lam).unwrap();
            }
            s /= big as f64;
            assert!((s - fbar[k - 1]).abs() < 1e-8, "k={k} {s} {}", fbar[k - 1]);
        }
    }

    #[test]
    fn gaussian_matches_frequency_form_plus_logdet() {
        let x = xs(30);
        let m = SpectralModel::ar(&[0.5, -0.25]).unwrap();
        let g = gaussian(&x, &m).unwrap();
        let (_, ld) = crate::toeplitz::gaussian_quadratic_and_logdet(&x, &m).unwrap();
        let f = crate::toeplitz::gaussian_likelihood_freq(&x, &m, &[0.5, -0.25]).unwrap();
        assert!((g - (f + ld)).abs() < 1e-10);
        let wn = SpectralModel::white_noise();
        let ss = x.values().iter().map(|a| a * a).sum::<f64>() / 30.0;
        assert!((gaussian(&x, &wn).unwrap() - ss).abs() < 1e-14);
    }

    #[test]
    fn imaginary_part_cancels() {
        let x = xs(41);
        let m = SpectralModel::arma(&[0.5], &[0.2]).unwrap();
        let t = tukey_taper(41, 4).unwrap();
        assert!(imaginary_aggregate(&x, &m, &[0.6, -0.1], None).unwrap().abs() < 1e-9);
        assert!(imaginary_aggregate(&x, &m, &[0.6, -0.1], Some(&t)).unwrap().abs() < 1e-9);
    }

    #[test]
    fn divergence_examples() {
        let wn = SpectralModel::white_noise();
        assert!((spectral_divergence(&wn, &wn, 20).unwrap() - 1.0).abs() < 1e-15);
        let truth = SpectralModel::ar(&[0.6]).unwrap();
        let grid: Vec<f64> = (-90..=90).map(|i| i as f64 / 100.0).collect();
        let vals: Vec<f64> = grid
            .iter()
            .map(|&p| spectral_divergence(&truth, &SpectralModel::ar(&[p]).unwrap(), 50).unwrap())
            .collect();
        let best = (0..vals.len()).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap();
        assert!((grid[best] - 0.6).abs() <= 0.01 + 1e-12);
    }

    #[test]
    fn ar1_bias_examples() {
        let b = ar1_theoretical_bias(0.5, 50, None).unwrap();
        assert!((b.gaussian + 0.01).abs() < 1e-15);
        assert!((b.hybrid - b.boundary).abs() < 1e-15);
        assert!((b.boundary - 2.0 * b.gaussian).abs() < 1e-15);
        let b = ar1_theoretical_bias(0.9, 50, None).unwrap();
        let expect = -3.0 * 0.9 / 50.0 + 0.9f64.powi(49) / 50.0;
        assert!((b.whittle - expect).abs() < 1e-15);
        assert!((b.whittle + 0.05388).abs() < 1e-5);
        assert!(ar1_theoretical_bias(1.0, 50, None).is_err());
    }

    #[test]
    fn orthogonal_variance_basics() {
        let x = xs(64);
        let g = vec![1.0; 64];
        let v = orthogonal_sample_variance(&x, &g, &g, &[0.4], 5).unwrap();
        assert!(v >= 0.0);
        let v1 = orthogonal_sample_variance(&x, &g, &g, &[0.4], 1).unwrap();
        let n = 64.0;
        let grid = fourier_grid(64).unwrap();
        let j = dft(&x);
        let p = predictive_dft_ar(&x, &[0.4], &grid).unwrap();
        let h1: Complex64 = (0..64)
            .map(|k| (j.values[(k + 1) % 64] + p.values[(k + 1) % 64]) * j.values[k].conj())
            .sum::<Complex64>()
            / n;
        assert!((v1 - n * h1.norm_sqr()).abs() < 1e-12);
        assert!(orthogonal_sample_variance(&x, &g, &g, &[0.4], 64).is_err());
    }

    #[test]
    fn criterion_names_round_trip() {
        for k in CriterionKind::FEASIBLE {
            assert_eq!(k.name().parse::<CriterionKind>().unwrap(), k);
        }
        assert!("bogus".parse::<CriterionKind>().is_err());
    }

    #[test]
    fn infeasible_requires_truth() {
        let x = xs(20);
        let spec = CriterionSpec::new(CriterionKind::InfeasibleBoundary);
        assert!(PreparedCriterion::new(&x, &spec, Family::Ar(1)).is_err());
        let truth = SpectralModel::ar(&[0.5]).unwrap();
        let spec = spec.with_true_model(truth.clone());
        let c = PreparedCriterion::new(&x, &spec, Family::Ar(1)).unwrap();
        let direct = boundary_corrected_whittle(&x, &truth, &[0.5]).unwrap();
        assert_eq!(c.evaluate(&truth).unwrap(), direct);
    }
}
