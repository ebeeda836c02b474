//! Local Whittle estimation of the memory parameter d: plain, tapered,
//! boundary-corrected and hybrid.

use std::fmt;
use std::str::FromStr;

use crate::dft::{apply_threshold, complete_cross, dft, DEFAULT_THRESHOLD};
use crate::error::{invalid, Error, Result};
use crate::estimate::EstimateResult;
use crate::grid::omega;
use crate::likelihoods::tapered_periodogram;
use crate::optim::golden_section;
use crate::prefit::{prefit, PrefitConfig};
use crate::series::TimeSeriesSample;
use crate::taper::{default_edge, tukey_taper, Taper};

pub const D_BOUND: f64 = 0.49;
pub const D_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LwVariant {
    Plain,
    Tapered,
    Boundary,
    Hybrid,
}

impl LwVariant {
    pub const ALL: [LwVariant; 4] = [LwVariant::Plain, LwVariant::Tapered, LwVariant::Boundary, LwVariant::Hybrid];

    pub fn name(self) -> &'static str {
        match self {
            LwVariant::Plain => "lw",
            LwVariant::Tapered => "tapered-lw",
            LwVariant::Boundary => "boundary-lw",
            LwVariant::Hybrid => "hybrid-lw",
        }
    }

    fn uses_taper(self) -> bool {
        matches!(self, LwVariant::Tapered | LwVariant::Hybrid)
    }

    fn uses_prefit(self) -> bool {
        matches!(self, LwVariant::Boundary | LwVariant::Hybrid)
    }
}

impl fmt::Display for LwVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LwVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" | "lw" | "whittle" => Ok(LwVariant::Plain),
            "tapered" | "tapered-lw" => Ok(LwVariant::Tapered),
            "boundary" | "boundary-lw" => Ok(LwVariant::Boundary),
            "hybrid" | "hybrid-lw" => Ok(LwVariant::Hybrid),
            _ => invalid(format!("unknown local Whittle variant '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LwConfig {
    pub variant: LwVariant,
    /// Number of frequencies used; None means ⌊n^0.65⌋.
    pub bandwidth: Option<usize>,
    /// Tukey edge length; None means n/10.
    pub taper_edge: Option<usize>,
    pub prefit: PrefitConfig,
    pub threshold: f64,
    pub demean: bool,
}

impl LwConfig {
    pub fn new(variant: LwVariant) -> Self {
        LwConfig {
            variant,
            bandwidth: None,
            taper_edge: None,
            prefit: PrefitConfig::default(),
            threshold: DEFAULT_THRESHOLD,
            demean: true,
        }
    }
}

pub fn default_bandwidth(n: usize) -> usize {
    (n as f64).powf(0.65).floor() as usize
}

/// R(d) = log(M⁻¹ Σ_{k≤M} I_k ω_k^{2d}) − (2d/M) Σ_{k≤M} log ω_k.
pub fn lw_objective(x: &TimeSeriesSample, d: f64, m: usize) -> Result<f64> {
    check_band(x.len(), m)?;
    let i = dft(x).periodogram();
    local_objective(&i[..m], d, x.len())
}

/// R(d) with |J|² replaced by the thresholded complete cross periodogram.
pub fn hybrid_lw_objective(
    x: &TimeSeriesSample,
    d: f64,
    m: usize,
    prefit_phi: &[f64],
    taper: Option<&Taper>,
) -> Result<f64> {
    check_band(x.len(), m)?;
    let w = apply_threshold(&complete_cross(x, prefit_phi, taper)?, DEFAULT_THRESHOLD);
    local_objective(&w[..m], d, x.len())
}

fn check_band(n: usize, m: usize) -> Result<()> {
    if m == 0 || m >= n {
        return invalid(format!("bandwidth M = {m} must satisfy 1 ≤ M < n = {n}"));
    }
    Ok(())
}

/// Objective over the first M ordinates of a pseudo-periodogram (slot k−1 ↔ ω_k).
fn local_objective(w: &[f64], d: f64, n: usize) -> Result<f64> {
    if !(d.abs() < 0.5) {
        return invalid(format!("d = {d} outside (-1/2, 1/2)"));
    }
    let m = w.len() as f64;
    let mut s = 0.0;
    let mut logs = 0.0;
    for (k, wk) in w.iter().enumerate() {
        let lw = omega(k + 1, n).ln();
        s += wk * (2.0 * d * lw).exp();
        logs += lw;
    }
    if !(s > 0.0) {
        return Err(Error::Degenerate("local periodogram mean is not positive".into()));
    }
    Ok((s / m).ln() - 2.0 * d * logs / m)
}

/// Pseudo-periodogram ordinates 1..=M for the chosen variant, plus the
/// prefit order.
pub fn local_ordinates(x: &TimeSeriesSample, cfg: &LwConfig) -> Result<(Vec<f64>, usize)> {
    let n = x.len();
    let m = cfg.bandwidth.unwrap_or(default_bandwidth(n));
    check_band(n, m)?;
    let taper = if cfg.variant.uses_taper() {
        Some(tukey_taper(n, cfg.taper_edge.unwrap_or(default_edge(n)))?)
    } else {
        None
    };
    let (mut w, order) = if cfg.variant.uses_prefit() {
        let fit = prefit(x, &cfg.prefit)?;
        (apply_threshold(&complete_cross(x, &fit.phi, taper.as_ref())?, cfg.threshold), fit.order)
    } else {
        match &taper {
            Some(t) => (tapered_periodogram(x, t)?, 0),
            None => (dft(x).periodogram(), 0),
        }
    };
    w.truncate(m);
    Ok((w, order))
}

/// Golden-section minimization of the variant's objective over (−0.49, 0.49).
pub fn estimate_d(x: &TimeSeriesSample, cfg: &LwConfig) -> Result<EstimateResult> {
    let n = x.len();
    if n < 16 {
        return invalid(format!("local Whittle needs n ≥ 16, got {n}"));
    }
    let x = if cfg.demean { x.demeaned() } else { x.clone() };
    let (w, order) = local_ordinates(&x, cfg)?;
    let mut evals = 0;
    let (d, fd, iterations) = golden_section(
        |d| {
            evals += 1;
            local_objective(&w, d, n).unwrap_or(f64::INFINITY)
        },
        -D_BOUND,
        D_BOUND,
        D_TOL,
    );
    if !fd.is_finite() {
        return Err(Error::Degenerate("local Whittle objective is not finite".into()));
    }
    Ok(EstimateResult {
        theta_hat: vec![d],
        objective: fd,
        prefit_order: order,
        iterations,
        evaluations: evals + 1,
        converged: true,
        seed: None,
    })
}
