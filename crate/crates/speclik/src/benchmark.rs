//! Monte-Carlo harness: simulate a scenario, fit every requested criterion
//! on each replication, summarize bias / sd / RMSE.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::estimate::{best_fit_params, fit, EstimateResult};
use crate::likelihoods::{spectral_divergence, CriterionKind, CriterionSpec};
use crate::local_whittle::{estimate_d, LwConfig, LwVariant};
use crate::models::{Family, ParamBounds, SpectralModel};
use crate::prefit::{PrefitConfig, PrefitMethod};
use crate::simulate::{InnovationKind, RngPlan, Sampler};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Ar1Table,
    Ma1Table,
    Arma32Misspec,
    ArfimaParametric,
    ArfimaLw,
    Ar8Peaked,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::Ar1Table,
        Scenario::Ma1Table,
        Scenario::Arma32Misspec,
        Scenario::ArfimaParametric,
        Scenario::ArfimaLw,
        Scenario::Ar8Peaked,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::Ar1Table => "ar1-table",
            Scenario::Ma1Table => "ma1-table",
            Scenario::Arma32Misspec => "arma32-misspec",
            Scenario::ArfimaParametric => "arfima-parametric",
            Scenario::ArfimaLw => "arfima-lw",
            Scenario::Ar8Peaked => "ar8-peaked",
        }
    }

    /// Zero-mean scenarios fit without subtracting the sample mean.
    pub fn demeans(self) -> bool {
        matches!(self, Scenario::ArfimaParametric | Scenario::ArfimaLw)
    }

    pub fn default_n(self) -> usize {
        match self {
            Scenario::ArfimaLw => 300,
            Scenario::Ar8Peaked => 100,
            _ => 50,
        }
    }

    pub fn default_fit_family(self) -> Option<Family> {
        match self {
            Scenario::Ar1Table => Some(Family::Ar(1)),
            Scenario::Ma1Table => Some(Family::Ma(1)),
            Scenario::Arma32Misspec => Some(Family::Arma(1, 1)),
            Scenario::ArfimaParametric => Some(Family::Arfima),
            Scenario::ArfimaLw => None,
            Scenario::Ar8Peaked => Some(Family::Ar(8)),
        }
    }

    /// Without the box, near-unit MA roots send f_θ(π) to zero and the
    /// divergence mean is dominated by a few replications.
    pub fn default_box_radius(self) -> Option<f64> {
        match self {
            Scenario::Arma32Misspec => Some(0.95),
            _ => None,
        }
    }

    pub fn default_criteria(self) -> Vec<BenchCriterion> {
        let mut c: Vec<BenchCriterion> = CriterionKind::FEASIBLE.into_iter().map(BenchCriterion::Likelihood).collect();
        match self {
            Scenario::ArfimaLw => LwVariant::ALL.into_iter().map(BenchCriterion::Lw).collect(),
            Scenario::Ar8Peaked => {
                c.push(BenchCriterion::BcTyw);
                c.push(BenchCriterion::BcNp);
                c
            }
            _ => c,
        }
    }

    /// The generating model; `params` overrides θ for the one-parameter
    /// scenarios and is rejected for the fixed ones.
    pub fn truth(self, params: Option<&[f64]>) -> Result<SpectralModel> {
        let one = |default: f64| -> Result<f64> {
            match params {
                None => Ok(default),
                Some([v]) => Ok(*v),
                Some(p) => invalid(format!("scenario {} takes one parameter, got {}", self.name(), p.len())),
            }
        };
        let fixed = || -> Result<()> {
            if params.is_some() {
                return invalid(format!("scenario {} has a fixed generating model", self.name()));
            }
            Ok(())
        };
        match self {
            Scenario::Ar1Table => SpectralModel::ar(&[one(0.7)?]),
            Scenario::Ma1Table => SpectralModel::ma(&[one(0.7)?]),
            Scenario::ArfimaParametric | Scenario::ArfimaLw => SpectralModel::arfima(one(0.2)?),
            Scenario::Arma32Misspec => {
                fixed()?;
                arma32_truth()
            }
            Scenario::Ar8Peaked => {
                fixed()?;
                SpectralModel::ar(&ar8_peaked_coefficients())
            }
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|c| c.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scenario '{s}'")))
    }
}

/// Coefficients of Π (1 − r e^{iλ}z)(1 − r e^{−iλ}z) = 1 − Σ φ_j z^j.
pub fn ar_from_conjugate_roots(pairs: &[(f64, f64)]) -> Vec<f64> {
    let mut poly = vec![1.0];
    for &(r, lambda) in pairs {
        let quad = [1.0, -2.0 * r * lambda.cos(), r * r];
        let mut next = vec![0.0; poly.len() + 2];
        for (i, a) in poly.iter().enumerate() {
            for (j, b) in quad.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        poly = next;
    }
    poly[1..].iter().map(|c| -c).collect()
}

/// Four root pairs of modulus 0.95 at angles 0.5, 1, 2, 2.5.
pub fn ar8_peaked_coefficients() -> Vec<f64> {
    ar_from_conjugate_roots(&[(0.95, 0.5), (0.95, 1.0), (0.95, 2.0), (0.95, 2.5)])
}

/// AR part (1 − 0.7z)(1 − 1.8cos(1)z + 0.81z²), MA part 1 + 0.5z + 0.5z².
pub fn arma32_truth() -> Result<SpectralModel> {
    let quad = ar_from_conjugate_roots(&[(0.9, 1.0)]);
    let (a, b1, b2) = (0.7, quad[0], quad[1]);
    SpectralModel::arma(&[a + b1, b2 - a * b1, -a * b2], &[0.5, 0.5])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchCriterion {
    Likelihood(CriterionKind),
    /// Boundary-corrected Whittle with a tapered Yule-Walker prefit.
    BcTyw,
    /// Boundary-corrected Whittle with the cepstral nonparametric prefit.
    BcNp,
    Lw(LwVariant),
}

impl BenchCriterion {
    pub fn name(self) -> &'static str {
        match self {
            BenchCriterion::Likelihood(k) => k.name(),
            BenchCriterion::BcTyw => "bc-tyw",
            BenchCriterion::BcNp => "bc-np",
            BenchCriterion::Lw(v) => v.name(),
        }
    }

    fn is_local(self) -> bool {
        matches!(self, BenchCriterion::Lw(_))
    }
}

impl fmt::Display for BenchCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchCriterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "bc-tyw" => return Ok(BenchCriterion::BcTyw),
            "bc-np" => return Ok(BenchCriterion::BcNp),
            _ => {}
        }
        if let Ok(k) = t.parse::<CriterionKind>() {
            return Ok(BenchCriterion::Likelihood(k));
        }
        LwVariant::ALL
            .into_iter()
            .find(|v| v.name() == t)
            .map(BenchCriterion::Lw)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown criterion '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub scenario: Scenario,
    pub n: usize,
    pub reps: usize,
    pub innovation: InnovationKind,
    pub seed: u64,
    pub criteria: Vec<BenchCriterion>,
    /// Overrides the scenario's generating parameter.
    pub truth_params: Option<Vec<f64>>,
    /// Overrides the scenario's fitted family.
    pub fit_family: Option<Family>,
    pub keep_replications: bool,
    /// Box radius r restricting every fitted coefficient to [−r, r]; the
    /// ARMA(1,1) misspecification scenario defaults to 0.95.
    pub box_radius: Option<f64>,
    /// Worker threads; None uses the global pool.
    pub jobs: Option<usize>,
}

impl BenchmarkSpec {
    pub fn new(scenario: Scenario) -> Self {
        BenchmarkSpec {
            scenario,
            n: scenario.default_n(),
            reps: 1000,
            innovation: InnovationKind::Gaussian,
            seed: 0,
            criteria: scenario.default_criteria(),
            truth_params: None,
            fit_family: scenario.default_fit_family(),
            keep_replications: false,
            box_radius: scenario.default_box_radius(),
            jobs: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            return invalid("reps must be at least 1");
        }
        if self.criteria.is_empty() {
            return invalid("no criteria requested");
        }
        let local = self.scenario == Scenario::ArfimaLw;
        if let Some(c) = self.criteria.iter().find(|c| c.is_local() != local) {
            return invalid(format!("criterion {c} does not apply to scenario {}", self.scenario));
        }
        if !local && self.fit_family.is_none() {
            return invalid("a fitted family is required");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicationRow {
    pub rep: usize,
    pub seed: u64,
    pub criterion: BenchCriterion,
    pub estimate: std::result::Result<EstimateResult, String>,
    /// I_n(f; f_θ̂) for misspecified fits.
    pub divergence: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub criterion: BenchCriterion,
    pub param: String,
    pub best_fit: f64,
    pub bias: f64,
    pub sd: f64,
    pub rmse: f64,
    /// Mean of I_n(f; f_θ̂) − I_n(f; f_θn) over replications.
    pub divergence_mean: Option<f64>,
    pub divergence_sd: Option<f64>,
    /// Replications that produced an estimate.
    pub successes: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub spec: BenchmarkSpec,
    pub truth: SpectralModel,
    pub param_names: Vec<String>,
    /// θ_n: the truth when correctly specified, else the divergence minimizer.
    pub best_fit: Vec<f64>,
    pub best_divergence: Option<f64>,
    pub misspecified: bool,
    pub summary: Vec<SummaryRow>,
    /// n·‖mean(θ̂) − θ_n‖₂ per criterion.
    pub aggregate: Vec<(BenchCriterion, f64)>,
    pub replications: Vec<ReplicationRow>,
}

impl BenchmarkReport {
    pub fn row(&self, criterion: BenchCriterion, param: &str) -> Option<&SummaryRow> {
        self.summary.iter().find(|r| r.criterion == criterion && r.param == param)
    }

    pub fn aggregate_of(&self, criterion: BenchCriterion) -> Option<f64> {
        self.aggregate.iter().find(|(c, _)| *c == criterion).map(|(_, v)| *v)
    }

    /// Estimates of one parameter across successful replications, in order.
    pub fn estimates(&self, criterion: BenchCriterion, index: usize) -> Vec<f64> {
        self.replications
            .iter()
            .filter(|r| r.criterion == criterion)
            .filter_map(|r| r.estimate.as_ref().ok().map(|e| e.theta_hat[index]))
            .collect()
    }
}

pub fn param_names(family: Family) -> Vec<String> {
    let seq = |prefix: &str, k: usize| -> Vec<String> {
        if k == 1 {
            vec![prefix.to_string()]
        } else {
            (1..=k).map(|j| format!("{prefix}{j}")).collect()
        }
    };
    match family {
        Family::Arfima => vec!["d".into()],
        f => {
            let mut v = seq("phi", f.ar_order());
            v.extend(seq("psi", f.ma_order()));
            v
        }
    }
}

fn criterion_spec(c: BenchCriterion, truth: &SpectralModel, demean: bool) -> CriterionSpec {
    let mut spec = match c {
        BenchCriterion::Likelihood(k) => {
            let s = CriterionSpec::new(k);
            if k.is_infeasible() {
                s.with_true_model(truth.clone())
            } else {
                s
            }
        }
        BenchCriterion::BcTyw => {
            CriterionSpec::new(CriterionKind::Boundary).with_prefit(PrefitConfig::with_method(PrefitMethod::TaperedYw))
        }
        BenchCriterion::BcNp => {
            CriterionSpec::new(CriterionKind::Boundary).with_prefit(PrefitConfig::with_method(PrefitMethod::Cepstral))
        }
        BenchCriterion::Lw(_) => CriterionSpec::new(CriterionKind::Whittle),
    };
    spec.demean = demean;
    spec
}

pub fn run_benchmark(spec: &BenchmarkSpec) -> Result<BenchmarkReport> {
    spec.validate()?;
    let truth = spec.scenario.truth(spec.truth_params.as_deref())?;
    let n = spec.n;
    let demean = spec.scenario.demeans();
    let (family, names, best_fit, best_divergence, misspecified) = match spec.fit_family {
        None => (None, vec!["d".to_string()], vec![truth.memory().unwrap_or(0.0)], None, false),
        Some(f) => {
            if f == truth.family() {
                (Some(f), param_names(f), truth.theta().to_vec(), None, false)
            } else {
                let b = best_fit_params(&truth, f, n, None)?;
                (Some(f), param_names(f), b.theta_n, Some(b.divergence), true)
            }
        }
    };
    let sampler = Sampler::new(&truth, n)?;
    let mut specs: Vec<CriterionSpec> = spec.criteria.iter().map(|&c| criterion_spec(c, &truth, demean)).collect();
    if let (Some(r), Some(f)) = (spec.box_radius, family) {
        for s in &mut specs {
            s.bounds = Some(ParamBounds::symmetric(f, r));
        }
    }
    let plan = RngPlan::new(spec.seed);

    let one_rep = |rep: usize| -> Result<Vec<ReplicationRow>> {
        let seed = plan.seed(rep as u64);
        let x = sampler.draw(spec.innovation, seed)?;
        let mut rows = Vec::with_capacity(spec.criteria.len());
        for (&c, cs) in spec.criteria.iter().zip(&specs) {
            let est = match (c, family) {
                (BenchCriterion::Lw(v), _) => {
                    let mut cfg = LwConfig::new(v);
                    cfg.demean = demean;
                    estimate_d(&x, &cfg)
                }
                (_, Some(f)) => fit(&x, f, cs, None),
                (_, None) => unreachable!("validated above"),
            };
            let divergence = match (&est, family) {
                (Ok(e), Some(f)) if misspecified => SpectralModel::new(f, e.theta_hat.clone())
                    .and_then(|m| spectral_divergence(&truth, &m, n))
                    .ok(),
                _ => None,
            };
            rows.push(ReplicationRow {
                rep,
                seed,
                criterion: c,
                estimate: est
                    .map(|mut e| {
                        e.seed = Some(seed);
                        e
                    })
                    .map_err(|e| e.to_string()),
                divergence,
            });
        }
        Ok(rows)
    };

    let run = || -> Result<Vec<Vec<ReplicationRow>>> { (0..spec.reps).into_par_iter().map(one_rep).collect() };
    let per_rep = match spec.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let replications: Vec<ReplicationRow> = per_rep.into_iter().flatten().collect();

    let mut summary = Vec::new();
    let mut aggregate = Vec::new();
    for &c in &spec.criteria {
        let rows: Vec<&ReplicationRow> = replications.iter().filter(|r| r.criterion == c).collect();
        let ok: Vec<&EstimateResult> = rows.iter().filter_map(|r| r.estimate.as_ref().ok()).collect();
        let div: Vec<f64> = rows.iter().filter_map(|r| r.divergence).collect();
        let (dm, dsd) = if misspecified && !div.is_empty() {
            let (m, s) = mean_sd(&div);
            (Some(m - best_divergence.unwrap_or(0.0)), Some(s))
        } else {
            (None, None)
        };
        let mut sq = 0.0;
        for (i, name) in names.iter().enumerate() {
            let vals: Vec<f64> = ok.iter().map(|e| e.theta_hat[i]).collect();
            let (bias, sd, rmse) = if vals.is_empty() {
                (f64::NAN, f64::NAN, f64::NAN)
            } else {
                let (m, sd) = mean_sd(&vals);
                let mse = vals.iter().map(|v| (v - best_fit[i]).powi(2)).sum::<f64>() / vals.len() as f64;
                (m - best_fit[i], sd, mse.sqrt())
            };
            sq += bias * bias;
            summary.push(SummaryRow {
                criterion: c,
                param: name.clone(),
                best_fit: best_fit[i],
                bias,
                sd,
                rmse,
                divergence_mean: dm,
                divergence_sd: dsd,
                successes: ok.len(),
            });
        }
        aggregate.push((c, n as f64 * sq.sqrt()));
    }

    Ok(BenchmarkReport {
        spec: spec.clone(),
        truth,
        param_names: names,
        best_fit,
        best_divergence,
        misspecified,
        summary,
        aggregate,
        replications: if spec.keep_replications { replications } else { Vec::new() },
    })
}

/// Mean and sample standard deviation; sd is 0 for a single value.
pub fn mean_sd(v: &[f64]) -> (f64, f64) {
    let m = v.iter().sum::<f64>() / v.len() as f64;
    if v.len() < 2 {
        return (m, 0.0);
    }
    let var = v.iter().map(|a| (a - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64;
    (m, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ar8_coefficients() {
        let phi = ar8_peaked_coefficients();
        let expect = [0.381, -0.294, 0.315, -0.963, 0.285, -0.240, 0.280, -0.663];
        for (a, b) in phi.iter().zip(expect) {
            assert!((a - b).abs() < 5e-4, "{phi:?}");
        }
        assert!(SpectralModel::ar(&phi).unwrap().is_valid());
    }

    #[test]
    fn arma32_coefficients() {
        let m = arma32_truth().unwrap();
        let c = 1f64.cos();
        let phi = m.ar_coeffs();
        assert!((phi[0] - (0.7 + 1.8 * c)).abs() < 1e-14);
        assert!((phi[1] - (-0.81 - 0.7 * 1.8 * c)).abs() < 1e-14);
        assert!((phi[2] - 0.7 * 0.81).abs() < 1e-14);
    }

    #[test]
    fn single_rep_summary_is_fit_error() {
        let mut spec = BenchmarkSpec::new(Scenario::Ar1Table);
        spec.reps = 1;
        spec.seed = 9;
        spec.criteria = vec![BenchCriterion::Likelihood(CriterionKind::Whittle)];
        spec.keep_replications = true;
        let r = run_benchmark(&spec).unwrap();
        let e = r.replications[0].estimate.as_ref().unwrap();
        let row = &r.summary[0];
        assert_eq!(row.bias, e.theta_hat[0] - 0.7);
        assert_eq!(row.rmse, row.bias.abs());
        assert_eq!(row.sd, 0.0);
    }

    #[test]
    fn deterministic_across_jobs() {
        let mut spec = BenchmarkSpec::new(Scenario::Ma1Table);
        spec.reps = 12;
        spec.seed = 4;
        spec.criteria = vec![
            BenchCriterion::Likelihood(CriterionKind::Boundary),
            BenchCriterion::Likelihood(CriterionKind::Gaussian),
        ];
        spec.jobs = Some(1);
        let a = run_benchmark(&spec).unwrap();
        spec.jobs = Some(3);
        let b = run_benchmark(&spec).unwrap();
        assert_eq!(a.summary, b.summary);
    }

    #[test]
    fn scenario_compatibility() {
        let mut spec = BenchmarkSpec::new(Scenario::ArfimaLw);
        spec.criteria = vec![BenchCriterion::Likelihood(CriterionKind::Whittle)];
        assert!(run_benchmark(&spec).is_err());
        let mut spec = BenchmarkSpec::new(Scenario::Ar1Table);
        spec.reps = 0;
        assert!(run_benchmark(&spec).is_err());
        assert!(Scenario::Arma32Misspec.truth(Some(&[0.1])).is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(s.name().parse::<Scenario>().unwrap(), s);
            for c in s.default_criteria() {
                assert_eq!(c.name().parse::<BenchCriterion>().unwrap(), c);
            }
        }
        assert_eq!(param_names(Family::Arma(1, 1)), vec!["phi", "psi"]);
        assert_eq!(param_names(Family::Ar(2)), vec!["phi1", "phi2"]);
    }
}
