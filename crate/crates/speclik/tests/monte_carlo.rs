use speclik::benchmark::{arma32_truth, mean_sd, run_benchmark, BenchCriterion, BenchmarkSpec, Scenario};
use speclik::dft::complete_periodogram;
use speclik::estimate::{best_fit_params, fit};
use speclik::likelihoods::{CriterionKind, CriterionSpec};
use speclik::models::{Family, SpectralModel};
use speclik::prefit::yule_walker;
use speclik::simulate::{innovations_sequence, mix_seed, simulate_arma, InnovationKind};
use speclik::taper::tukey_taper;

/// Zero-mean data, so no demeaning: it would zero I(ω_n) while log f(0) stays
/// in the sum.
fn whittle_ar1_estimates(phi: f64, n: usize, reps: usize, base: u64) -> Vec<f64> {
    let mut spec = CriterionSpec::new(CriterionKind::Whittle);
    spec.demean = false;
    (0..reps)
        .map(|r| {
            let x = simulate_arma(&[phi], &[], n, InnovationKind::Gaussian, mix_seed(base, r as u64)).unwrap();
            fit(&x, Family::Ar(1), &spec, None).unwrap().theta_hat[0]
        })
        .collect()
}

#[test]
fn whittle_ar1_bias_matches_leading_term() {
    let (phi, n, reps) = (0.7, 300, 500);
    let est = whittle_ar1_estimates(phi, n, reps, 11);
    let (m, sd) = mean_sd(&est);
    let target = phi - 3.0 * phi / n as f64;
    assert!((m - target).abs() < 3.0 * sd / (reps as f64).sqrt(), "mean {m} target {target} sd {sd}");
}

#[test]
fn whittle_white_noise_is_centered() {
    let (n, reps) = (1000, 300);
    let est = whittle_ar1_estimates(0.0, n, reps, 12);
    let (m, sd) = mean_sd(&est);
    assert!(m.abs() < 3.0 * sd / (reps as f64).sqrt(), "mean {m} sd {sd}");
}

#[test]
fn yule_walker_white_noise_is_centered() {
    let (n, reps) = (300, 500);
    let est: Vec<f64> = (0..reps)
        .map(|r| {
            let x = simulate_arma(&[], &[], n, InnovationKind::Gaussian, mix_seed(13, r as u64)).unwrap();
            yule_walker(&x, 1).unwrap()[0]
        })
        .collect();
    let (m, sd) = mean_sd(&est);
    // E φ̂ ≈ −1/n for the biased sample autocovariance
    assert!((m + 1.0 / n as f64).abs() < 3.0 * sd / (reps as f64).sqrt(), "mean {m} sd {sd}");
}

#[test]
fn best_fit_ar2_to_arma32() {
    let truth = arma32_truth().unwrap();
    let b = best_fit_params(&truth, Family::Ar(2), 50, None).unwrap();
    assert!((b.theta_n[0] - 1.364).abs() < 1e-2 && (b.theta_n[1] + 0.803).abs() < 1e-2, "{:?}", b.theta_n);
}

#[test]
fn tapered_complete_periodogram_is_unbiased() {
    let (n, reps) = (64, 5000);
    let phi = [0.9, -0.5];
    let f = SpectralModel::ar(&phi).unwrap().density_on_grid(n, false).unwrap();
    let taper = tukey_taper(n, n / 10).unwrap();
    let mut s = vec![0.0; n];
    let mut s2 = vec![0.0; n];
    for r in 0..reps {
        let x = simulate_arma(&phi, &[], n, InnovationKind::Gaussian, mix_seed(14, r as u64)).unwrap();
        let w = complete_periodogram(&x, &phi, Some(&taper), f64::NEG_INFINITY).unwrap();
        for k in 0..n {
            s[k] += w[k];
            s2[k] += w[k] * w[k];
        }
    }
    // mean |z| over all frequencies is ≈ 0.8 when unbiased; a bias of a few SE
    // anywhere would show up here as well as in the worst case
    let rf = reps as f64;
    let z: Vec<f64> = (0..n)
        .map(|k| {
            let m = s[k] / rf;
            (m - f[k]) / ((s2[k] / rf - m * m) / (rf - 1.0)).sqrt()
        })
        .collect();
    let mean_abs = z.iter().map(|v| v.abs()).sum::<f64>() / n as f64;
    assert!(mean_abs < 1.1, "{z:?}");
    assert!(z.iter().all(|v| v.abs() < 4.0), "{z:?}");
}

#[test]
fn whittle_bias_exceeds_boundary_bias_ar1_09() {
    let mut spec = BenchmarkSpec::new(Scenario::Ar1Table);
    spec.seed = 15;
    spec.truth_params = Some(vec![0.9]);
    spec.criteria = vec![
        BenchCriterion::Likelihood(CriterionKind::Whittle),
        BenchCriterion::Likelihood(CriterionKind::Boundary),
    ];
    spec.keep_replications = true;
    let r = run_benchmark(&spec).unwrap();
    let w = r.estimates(spec.criteria[0], 0);
    let b = r.estimates(spec.criteria[1], 0);
    // paired difference |bias_W| − |bias_B| = (mean b − mean w) when both are negative
    let d: Vec<f64> = w.iter().zip(&b).map(|(a, c)| c - a).collect();
    let (m, sd) = mean_sd(&d);
    assert!(r.row(spec.criteria[0], "phi").unwrap().bias < 0.0);
    assert!(m > 3.0 * sd / (d.len() as f64).sqrt(), "mean diff {m} sd {sd}");
}

#[test]
fn ar_infinity_reconstruction_improves_with_order() {
    let model = SpectralModel::arma(&[0.5], &[0.9]).unwrap();
    let err = |m: usize| {
        let phi = model.ar_infinity_coefficients(m).unwrap();
        (0..200)
            .map(|i| {
                let w = std::f64::consts::PI * i as f64 / 199.0;
                let mut re = 1.0;
                let mut im = 0.0;
                for (j, c) in phi.iter().enumerate() {
                    re -= c * ((j + 1) as f64 * w).cos();
                    im += c * ((j + 1) as f64 * w).sin();
                }
                (1.0 / (re * re + im * im) - model.spectral_density(w).unwrap()).abs()
            })
            .fold(0.0, f64::max)
    };
    let (e10, e20, e40) = (err(10), err(20), err(40));
    assert!(e10 > e20 && e20 > e40, "{e10} {e20} {e40}");
}

#[test]
fn chisq_innovations_million_draws() {
    let e = innovations_sequence(1_000_000, InnovationKind::ChiSquared, 16);
    let (m, sd) = mean_sd(&e);
    let var = sd * sd;
    let n = e.len() as f64;
    // Exp(1) − 1 has fourth central moment 9, so var(s²) ≈ 8/n
    assert!(m.abs() < 3.0 / n.sqrt(), "mean {m}");
    assert!((var - 1.0).abs() < 3.0 * (8.0 / n).sqrt(), "var {var}");
}
