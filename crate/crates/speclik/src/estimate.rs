//! Fit orchestration: demean, prefit, criterion, Nelder-Mead.

use crate::error::{invalid, Error, Result};
use crate::likelihoods::{spectral_divergence, CriterionSpec, PreparedCriterion};
use crate::models::{Family, ParamBounds, SpectralModel};
use crate::optim::{nelder_mead, NelderMeadOptions};
use crate::prefit::{durbin_levinson, yule_walker};
use crate::series::{sample_autocovariance, TimeSeriesSample};

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateResult {
    pub theta_hat: Vec<f64>,
    pub objective: f64,
    pub prefit_order: usize,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BestFitTarget {
    pub theta_n: Vec<f64>,
    pub divergence: f64,
}

/// Minimizes `objective` over the valid region of `bounds`; points outside
/// the box or failing the root conditions score +∞.
pub fn minimize(
    mut objective: impl FnMut(&[f64]) -> f64,
    theta0: &[f64],
    bounds: &ParamBounds,
) -> Result<EstimateResult> {
    minimize_with(&mut objective, theta0, bounds, &NelderMeadOptions::default())
}

pub fn minimize_with(
    objective: &mut impl FnMut(&[f64]) -> f64,
    theta0: &[f64],
    bounds: &ParamBounds,
    opts: &NelderMeadOptions,
) -> Result<EstimateResult> {
    if !bounds.contains(theta0) {
        return Err(Error::Initialization(format!("starting point {theta0:?} is not valid")));
    }
    let r = nelder_mead(
        |t| if bounds.contains(t) { objective(t) } else { f64::INFINITY },
        theta0,
        opts,
    )?;
    Ok(EstimateResult {
        theta_hat: r.x,
        objective: r.fx,
        prefit_order: 0,
        iterations: r.iterations,
        evaluations: r.evaluations,
        converged: r.converged,
        seed: None,
    })
}

/// Default start: Yule-Walker for the AR part, the invertible moment root
/// for MA(1), zeros for other MA parts, d = 0 for ARFIMA.
pub fn default_start(x: &TimeSeriesSample, family: Family) -> Result<Vec<f64>> {
    default_start_in(x, family, &ParamBounds::for_family(family))
}

/// As [`default_start`], clipped into `bounds`; falls back to zeros when the
/// clipped point is still invalid.
pub fn default_start_in(x: &TimeSeriesSample, family: Family, bounds: &ParamBounds) -> Result<Vec<f64>> {
    let mut theta = match family {
        Family::Arfima => vec![0.0],
        Family::Ma(1) => vec![ma1_moment_root(x)?],
        _ => {
            let p = family.ar_order();
            let mut t = if p > 0 && p < x.len() { yule_walker(x, p)? } else { vec![0.0; p] };
            t.extend(std::iter::repeat(0.0).take(family.ma_order()));
            t
        }
    };
    for (t, (lo, hi)) in theta.iter_mut().zip(bounds.lower.iter().zip(&bounds.upper)) {
        *t = t.clamp(*lo, *hi);
    }
    if !bounds.contains(&theta) {
        theta = vec![0.0; family.n_params()];
    }
    Ok(theta)
}

/// Invertible root of ρ(1) = ψ/(1 + ψ²); |ρ(1)| ≥ 1/2 maps to ±0.95.
fn ma1_moment_root(x: &TimeSeriesSample) -> Result<f64> {
    if x.len() < 2 {
        return Ok(0.0);
    }
    let c = sample_autocovariance(x, 1)?;
    if !(c[0] > 0.0) {
        return Ok(0.0);
    }
    let rho = c[1] / c[0];
    Ok(if rho.abs() < 1e-12 {
        0.0
    } else if rho.abs() < 0.5 {
        (1.0 - (1.0 - 4.0 * rho * rho).sqrt()) / (2.0 * rho)
    } else {
        0.95 * rho.signum()
    })
}

/// Demean (per spec), build the criterion, minimize.
pub fn fit(
    x: &TimeSeriesSample,
    family: Family,
    spec: &CriterionSpec,
    theta0: Option<&[f64]>,
) -> Result<EstimateResult> {
    let x = if spec.demean { x.demeaned() } else { x.clone() };
    let bounds = match &spec.bounds {
        Some(b) if b.family == family => b.clone(),
        Some(_) => return invalid("bounds were built for a different family"),
        None => ParamBounds::for_family(family),
    };
    let crit = PreparedCriterion::new(&x, spec, family)?;
    let start = match theta0 {
        Some(t) => t.to_vec(),
        None => default_start_in(&x, family, &bounds)?,
    };
    if !bounds.contains(&start) {
        return Err(Error::Initialization(format!("starting point {start:?} lies outside the search region")));
    }
    let mut obj = |t: &[f64]| match SpectralModel::new(family, t.to_vec()) {
        Ok(m) => crit.evaluate(&m).unwrap_or(f64::INFINITY),
        Err(_) => f64::INFINITY,
    };
    let mut res = minimize_with(&mut obj, &start, &bounds, &NelderMeadOptions::default())?;
    res.prefit_order = crit.prefit_order();
    Ok(res)
}

/// θ_n = argmin over the family of I_n(f; f_θ).
pub fn best_fit_params(
    truth: &SpectralModel,
    family: Family,
    n: usize,
    theta0: Option<&[f64]>,
) -> Result<BestFitTarget> {
    let start = match theta0 {
        Some(t) => t.to_vec(),
        None => population_start(truth, family)?,
    };
    let bounds = ParamBounds::for_family(family);
    let r = minimize(
        |t| match SpectralModel::new(family, t.to_vec()) {
            Ok(m) => spectral_divergence(truth, &m, n).unwrap_or(f64::INFINITY),
            Err(_) => f64::INFINITY,
        },
        &start,
        &bounds,
    )?;
    Ok(BestFitTarget { theta_n: r.theta_hat, divergence: r.objective })
}

/// Start from the population Yule-Walker coefficients of the truth.
fn population_start(truth: &SpectralModel, family: Family) -> Result<Vec<f64>> {
    let bounds = ParamBounds::for_family(family);
    let p = family.ar_order();
    let mut t = if p > 0 && !truth.family().is_long_memory() {
        let c = truth.autocovariances(p)?;
        durbin_levinson(&c)?.coeffs(p).to_vec()
    } else {
        vec![0.0; p]
    };
    if family == Family::Arfima {
        t = vec![0.0];
    }
    t.extend(std::iter::repeat(0.0).take(family.ma_order()));
    if !bounds.contains(&t) {
        t = vec![0.0; family.n_params()];
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::likelihoods::CriterionKind;
    use crate::prefit::PrefitConfig;

    fn ar1_series(phi: f64, n: usize) -> TimeSeriesSample {
        let mut s = 12345u64;
        let mut x = 0.0;
        let mut out = Vec::with_capacity(n);
        for t in 0..(n + 200) {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let u = (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
            x = phi * x + u;
            if t >= 200 {
                out.push(x);
            }
        }
        TimeSeriesSample::new(out).unwrap()
    }

    #[test]
    fn minimize_quadratic() {
        let b = ParamBounds { family: Family::Ar(1), lower: vec![-5.0], upper: vec![5.0] };
        let b = ParamBounds { family: Family::Arfima, ..b };
        let r = minimize(|t| (t[0] - 0.3).powi(2), &[0.0], &b).unwrap();
        assert!((r.theta_hat[0] - 0.3).abs() < 1e-6);
        assert!(minimize(|t| t[0], &[0.7], &b).is_err());
    }

    #[test]
    fn whittle_fit_recovers_ar1() {
        let x = ar1_series(0.6, 2000);
        let r = fit(&x, Family::Ar(1), &CriterionSpec::new(CriterionKind::Whittle), None).unwrap();
        assert!(r.converged);
        assert!((r.theta_hat[0] - 0.6).abs() < 0.05, "{r:?}");
    }

    #[test]
    fn zero_prefit_boundary_equals_whittle() {
        let x = ar1_series(0.5, 120);
        let w = fit(&x, Family::Ar(1), &CriterionSpec::new(CriterionKind::Whittle), None).unwrap();
        let mut spec = CriterionSpec::new(CriterionKind::Boundary).with_prefit(PrefitConfig::fixed(0));
        // the periodogram clip is the only other difference
        spec.threshold = f64::NEG_INFINITY;
        let b = fit(&x, Family::Ar(1), &spec, None).unwrap();
        assert_eq!(w.theta_hat, b.theta_hat);
        assert_eq!(b.prefit_order, 0);
    }

    #[test]
    fn fit_is_deterministic() {
        let x = ar1_series(0.7, 80);
        let spec = CriterionSpec::new(CriterionKind::Hybrid);
        let a = fit(&x, Family::Arma(1, 1), &spec, None).unwrap();
        let b = fit(&x, Family::Arma(1, 1), &spec, None).unwrap();
        assert_eq!(a, b);
        assert!(ParamBounds::for_family(Family::Arma(1, 1)).contains(&a.theta_hat));
    }

    #[test]
    fn best_fit_correct_family_is_truth() {
        let truth = SpectralModel::ar(&[0.5, -0.3]).unwrap();
        let b = best_fit_params(&truth, Family::Ar(2), 64, Some(&[0.0, 0.0])).unwrap();
        assert!((b.theta_n[0] - 0.5).abs() < 1e-5 && (b.theta_n[1] + 0.3).abs() < 1e-5);
    }

    #[test]
    fn ma1_start() {
        let x = TimeSeriesSample::new((0..50).map(|i| ((i * 3) as f64).sin()).collect()).unwrap();
        let t = default_start(&x, Family::Ma(1)).unwrap();
        assert!(t[0].abs() < 1.0);
        assert_eq!(default_start(&x, Family::Arfima).unwrap(), vec![0.0]);
    }
}
